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

#include <cmath>
#include <numeric>
#include <sstream>

#include "dwarfs/kernels.hpp"

namespace dwarfs::kernels {

namespace {

/// Partial Fisher-Yates: the first k slots of the shuffled index array are a
/// uniform sample without replacement, in order of first selection.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                        RngState& rng) {
  if (k > n) {
    std::ostringstream os;
    os << "random_sample: k = " << k << " exceeds length " << n;
    throw ArgumentError(os.str());
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_below(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

DataValue random_sample(const DataValue& xs, std::size_t k, RngState& rng) {
  if (const auto* v = std::get_if<Vector>(&xs)) {
    auto idx = sample_indices(v->size(), k, rng);
    Vector out;
    out.elements.reserve(k);
    for (std::size_t i : idx) out.elements.push_back(v->elements[i]);
    return out;
  }
  if (const auto* m = std::get_if<DenseMatrix>(&xs)) {
    auto idx = sample_indices(m->rows, k, rng);
    DenseMatrix out(k, m->cols);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < m->cols; ++c) {
        out.at(r, c) = m->at(idx[r], c);
      }
    }
    return out;
  }
  if (const auto* c = std::get_if<Corpus>(&xs)) {
    auto idx = sample_indices(c->documents.size(), k, rng);
    Corpus out;
    out.documents.reserve(k);
    for (std::size_t i : idx) out.documents.push_back(c->documents[i]);
    return out;
  }
  if (const auto* s = std::get_if<ItemSets>(&xs)) {
    auto idx = sample_indices(s->transactions.size(), k, rng);
    ItemSets out;
    out.transactions.reserve(k);
    for (std::size_t i : idx) out.transactions.push_back(s->transactions[i]);
    return out;
  }
  std::ostringstream os;
  os << "random_sample: unsupported input kind "
     << to_string(kind_of(xs));
  throw ArgumentError(os.str());
}

DenseMatrix gibbs_bivariate_normal(double rho, std::size_t n,
                                   std::size_t burn_in, RngState& rng) {
  if (!(std::fabs(rho) < 1.0)) {
    std::ostringstream os;
    os << "gibbs_bivariate_normal: |rho| = " << std::fabs(rho)
       << " must be < 1";
    throw ArgumentError(os.str());
  }
  if (n < 1) throw ArgumentError("gibbs_bivariate_normal: n must be >= 1");
  const double cond_sd = std::sqrt(1.0 - rho * rho);
  double x = 0.0;
  double y = 0.0;
  DenseMatrix out(n, 2);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    x = rho * y + cond_sd * rng.next_gaussian();
    y = rho * x + cond_sd * rng.next_gaussian();
    if (t >= burn_in) {
      out.at(t - burn_in, 0) = x;
      out.at(t - burn_in, 1) = y;
    }
  }
  return out;
}

DenseMatrix downsample2(const DenseMatrix& m) {
  const std::size_t rows = (m.rows + 1) / 2;
  const std::size_t cols = (m.cols + 1) / 2;
  DenseMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.at(r, c) = m.at(2 * r, 2 * c);
    }
  }
  return out;
}

DenseMatrix head_rows(const DenseMatrix& m, std::size_t k) {
  if (k > m.rows) {
    std::ostringstream os;
    os << "head_rows: k = " << k << " exceeds row count " << m.rows;
    throw ArgumentError(os.str());
  }
  DenseMatrix out(k, m.cols);
  std::copy(m.elements.begin(),
            m.elements.begin() + static_cast<std::ptrdiff_t>(k * m.cols),
            out.elements.begin());
  return out;
}

}  // namespace dwarfs::kernels
