// Copyright 2026 The dwarfbench Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <sstream>

#include "dwarfs/kernels.hpp"

namespace dwarfs::kernels {

namespace {

void require_sorted_distinct(std::span<const std::int64_t> s,
                             const char* side) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] <= s[i - 1]) {
      std::ostringstream os;
      os << "set operand " << side << " is not sorted-distinct at position "
         << i;
      throw StructuralError(os.str());
    }
  }
}

}  // namespace

std::vector<std::int64_t> set_binary(SetBinaryOp op,
                                     std::span<const std::int64_t> a,
                                     std::span<const std::int64_t> b) {
  require_sorted_distinct(a, "a");
  require_sorted_distinct(b, "b");
  std::vector<std::int64_t> out;
  switch (op) {
    case SetBinaryOp::Union:
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(out));
      break;
    case SetBinaryOp::Intersection:
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
      break;
    case SetBinaryOp::Difference:
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
      break;
  }
  return out;
}

double jaccard(std::span<const std::int64_t> a,
               std::span<const std::int64_t> b) {
  if (a.empty() && b.empty()) {
    throw ArgumentError("jaccard: both sets empty (0/0 undefined)");
  }
  require_sorted_distinct(a, "a");
  require_sorted_distinct(b, "b");
  std::size_t inter = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

ItemSets fold_union(const ItemSets& sets) {
  std::vector<std::int64_t> acc;
  for (const auto& txn : sets.transactions) {
    std::vector<std::int64_t> merged;
    std::set_union(acc.begin(), acc.end(), txn.begin(), txn.end(),
                   std::back_inserter(merged));
    acc = std::move(merged);
  }
  ItemSets out;
  out.transactions.push_back(std::move(acc));
  return out;
}

ItemSets singletons(const ItemSets& universe) {
  if (universe.transactions.size() != 1) {
    throw ArgumentError("singletons: expected a single universe transaction");
  }
  ItemSets out;
  out.transactions.reserve(universe.transactions.front().size());
  for (std::int64_t item : universe.transactions.front()) {
    out.transactions.push_back({item});
  }
  return out;
}

ItemSets apriori_join(const ItemSets& frequent, std::size_t level) {
  if (level < 2) throw ArgumentError("apriori_join: level must be >= 2");
  const std::size_t prev_len = level - 1;
  std::vector<const std::vector<std::int64_t>*> prev;
  for (const auto& txn : frequent.transactions) {
    if (txn.size() == prev_len) prev.push_back(&txn);
  }
  auto is_frequent = [&prev](const std::vector<std::int64_t>& s) {
    for (const auto* p : prev) {
      if (*p == s) return true;
    }
    return false;
  };
  ItemSets out;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    for (std::size_t j = i + 1; j < prev.size(); ++j) {
      const auto& a = *prev[i];
      const auto& b = *prev[j];
      // Classic prefix join: identical first level-2 items, distinct last.
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) continue;
      std::vector<std::int64_t> candidate = a;
      candidate.push_back(b.back());
      if (candidate[candidate.size() - 2] >= candidate.back()) {
        std::swap(candidate[candidate.size() - 2],
                  candidate[candidate.size() - 1]);
      }
      // Prune: every (level-1)-subset must itself be frequent.
      bool keep = true;
      for (std::size_t drop = 0; keep && drop + 2 < candidate.size(); ++drop) {
        std::vector<std::int64_t> subset;
        subset.reserve(prev_len);
        for (std::size_t t = 0; t < candidate.size(); ++t) {
          if (t != drop) subset.push_back(candidate[t]);
        }
        keep = is_frequent(subset);
      }
      if (keep) out.transactions.push_back(std::move(candidate));
    }
  }
  std::sort(out.transactions.begin(), out.transactions.end());
  out.transactions.erase(
      std::unique(out.transactions.begin(), out.transactions.end()),
      out.transactions.end());
  return out;
}

ItemSets table_keys_to_sets(const CountTable& table) {
  ItemSets out;
  out.transactions.reserve(table.entries.size());
  for (const auto& [key, count] : table.entries) {
    (void)count;
    for (std::size_t i = 1; i < key.size(); ++i) {
      if (key[i] <= key[i - 1]) {
        throw StructuralError(
            "table_keys_to_sets: key is not a sorted-distinct item tuple");
      }
    }
    out.transactions.push_back(key);
  }
  return out;
}

}  // namespace dwarfs::kernels
