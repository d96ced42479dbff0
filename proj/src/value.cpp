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

#include "dwarfs/value.hpp"

#include <cstring>
#include <sstream>

namespace dwarfs {

namespace {

std::string join_dims(const std::vector<std::int64_t>& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) os << ", ";
    if (dims[i] < 0) {
      os << "?";
    } else {
      os << dims[i];
    }
  }
  os << "]";
  return os.str();
}

bool bits_equal(double a, double b) {
  std::uint64_t ua, ub;
  std::memcpy(&ua, &a, sizeof(ua));
  std::memcpy(&ub, &b, sizeof(ub));
  return ua == ub;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bits_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::DenseMatrix: return "DenseMatrix";
    case ValueKind::Vector: return "Vector";
    case ValueKind::SparseMatrix: return "SparseMatrix";
    case ValueKind::Graph: return "Graph";
    case ValueKind::Corpus: return "Corpus";
    case ValueKind::ItemSets: return "ItemSets";
    case ValueKind::CountTable: return "CountTable";
    case ValueKind::Bytes: return "Bytes";
    case ValueKind::Scalar: return "Scalar";
  }
  return "?";
}

std::optional<ValueKind> value_kind_from_string(std::string_view name) {
  for (ValueKind k : {ValueKind::DenseMatrix, ValueKind::Vector,
                      ValueKind::SparseMatrix, ValueKind::Graph,
                      ValueKind::Corpus, ValueKind::ItemSets,
                      ValueKind::CountTable, ValueKind::Bytes,
                      ValueKind::Scalar}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ValueKind kind_of(const DataValue& value) {
  return static_cast<ValueKind>(value.index());
}

std::string to_string(const ShapeDesc& shape) {
  std::ostringstream os;
  os << "(" << to_string(shape.kind) << ", " << join_dims(shape.dims) << ")";
  return os.str();
}

std::string to_string(const PartialShape& shape) {
  if (shape.any) return "any";
  std::ostringstream os;
  os << "(" << to_string(shape.kind) << ", " << join_dims(shape.dims) << ")";
  return os.str();
}

bool PartialShape::admits(const ShapeDesc& shape) const {
  if (any) return true;
  if (kind != shape.kind) return false;
  if (dims.size() != shape.dims.size()) return false;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] >= 0 && dims[i] != shape.dims[i]) return false;
  }
  return true;
}

bool PartialShape::conflicts_with(const PartialShape& other) const {
  if (any || other.any) return false;
  if (kind != other.kind) return true;
  if (dims.size() != other.dims.size()) return true;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] >= 0 && other.dims[i] >= 0 && dims[i] != other.dims[i]) {
      return true;
    }
  }
  return false;
}

std::string_view to_string(DwarfClass dwarf) {
  switch (dwarf) {
    case DwarfClass::LinearAlgebra: return "LinearAlgebra";
    case DwarfClass::Sampling: return "Sampling";
    case DwarfClass::LogicOps: return "LogicOps";
    case DwarfClass::TransformOps: return "TransformOps";
    case DwarfClass::SetOps: return "SetOps";
    case DwarfClass::GraphOps: return "GraphOps";
    case DwarfClass::Sort: return "Sort";
    case DwarfClass::StatisticOps: return "StatisticOps";
  }
  return "?";
}

std::optional<DwarfClass> dwarf_class_from_string(std::string_view name) {
  for (DwarfClass d : kAllDwarfClasses) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

std::string to_string(const ParamValue& value) {
  std::ostringstream os;
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    os << *i;
  } else if (const auto* d = std::get_if<double>(&value)) {
    os.precision(17);
    os << *d;
  } else {
    os << std::get<std::string>(value);
  }
  return os.str();
}

namespace {

void validate_dense(const DenseMatrix& m, std::vector<std::string>& out) {
  if (m.elements.size() != m.rows * m.cols) {
    std::ostringstream os;
    os << "element count " << m.elements.size() << " != " << m.rows * m.cols;
    out.push_back(os.str());
  }
}

void validate_sparse(const SparseMatrix& m, std::vector<std::string>& out) {
  if (m.row_offsets.size() != m.rows + 1) {
    std::ostringstream os;
    os << "row-offsets length " << m.row_offsets.size() << " != rows+1 = "
       << m.rows + 1;
    out.push_back(os.str());
    return;  // offsets unusable, later checks would index out of range
  }
  if (m.col_indices.size() != m.values.size()) {
    std::ostringstream os;
    os << "col-indices length " << m.col_indices.size()
       << " != values length " << m.values.size();
    out.push_back(os.str());
  }
  if (!m.row_offsets.empty() && m.row_offsets.front() != 0) {
    out.push_back("row-offsets does not start at 0");
  }
  for (std::size_t r = 0; r + 1 < m.row_offsets.size(); ++r) {
    if (m.row_offsets[r] > m.row_offsets[r + 1]) {
      std::ostringstream os;
      os << "row-offsets decreasing at row " << r;
      out.push_back(os.str());
      return;
    }
  }
  if (m.row_offsets.back() != m.values.size()) {
    std::ostringstream os;
    os << "last row-offset " << m.row_offsets.back() << " != values length "
       << m.values.size();
    out.push_back(os.str());
    return;
  }
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t i = m.row_offsets[r]; i < m.row_offsets[r + 1]; ++i) {
      if (m.col_indices[i] >= m.cols) {
        std::ostringstream os;
        os << "column index " << m.col_indices[i] << " out of range at row "
           << r;
        out.push_back(os.str());
      }
      if (i > m.row_offsets[r] && m.col_indices[i] <= m.col_indices[i - 1]) {
        std::ostringstream os;
        os << "column indices not strictly increasing in row " << r;
        out.push_back(os.str());
      }
    }
  }
}

void validate_graph(const Graph& g, std::vector<std::string>& out) {
  if (g.adjacency.size() != g.vertex_count) {
    std::ostringstream os;
    os << "adjacency list count " << g.adjacency.size()
       << " != vertex-count " << g.vertex_count;
    out.push_back(os.str());
    return;
  }
  for (std::size_t v = 0; v < g.adjacency.size(); ++v) {
    const auto& nbrs = g.adjacency[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= g.vertex_count) {
        std::ostringstream os;
        os << "neighbor " << nbrs[i] << " out of range at vertex " << v;
        out.push_back(os.str());
      }
      if (i > 0) {
        if (nbrs[i] == nbrs[i - 1]) {
          std::ostringstream os;
          os << "duplicate neighbor at vertex " << v;
          out.push_back(os.str());
        } else if (nbrs[i] < nbrs[i - 1]) {
          std::ostringstream os;
          os << "neighbors not sorted at vertex " << v;
          out.push_back(os.str());
        }
      }
    }
  }
}

void validate_itemsets(const ItemSets& s, std::vector<std::string>& out) {
  for (std::size_t t = 0; t < s.transactions.size(); ++t) {
    const auto& items = s.transactions[t];
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i] < 0) {
        std::ostringstream os;
        os << "negative item id at transaction " << t;
        out.push_back(os.str());
      }
      if (i > 0) {
        if (items[i] == items[i - 1]) {
          std::ostringstream os;
          os << "duplicate item at transaction " << t;
          out.push_back(os.str());
        } else if (items[i] < items[i - 1]) {
          std::ostringstream os;
          os << "items not sorted at transaction " << t;
          out.push_back(os.str());
        }
      }
    }
  }
}

void validate_corpus(const Corpus& c, std::vector<std::string>& out) {
  for (std::size_t d = 0; d < c.documents.size(); ++d) {
    for (std::int64_t tok : c.documents[d]) {
      if (tok < 0) {
        std::ostringstream os;
        os << "negative token id in document " << d;
        out.push_back(os.str());
        break;
      }
    }
  }
}

void validate_table(const CountTable& t, std::vector<std::string>& out) {
  for (const auto& [key, count] : t.entries) {
    (void)count;  // std::uint64_t, nonnegative by type
    if (key.empty()) {
      out.push_back("empty key tuple");
    }
    for (std::int64_t k : key) {
      if (k < 0) {
        out.push_back("negative key component");
        break;
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate(const DataValue& value) {
  std::vector<std::string> out;
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DenseMatrix>) {
          validate_dense(v, out);
        } else if constexpr (std::is_same_v<T, SparseMatrix>) {
          validate_sparse(v, out);
        } else if constexpr (std::is_same_v<T, Graph>) {
          validate_graph(v, out);
        } else if constexpr (std::is_same_v<T, ItemSets>) {
          validate_itemsets(v, out);
        } else if constexpr (std::is_same_v<T, Corpus>) {
          validate_corpus(v, out);
        } else if constexpr (std::is_same_v<T, CountTable>) {
          validate_table(v, out);
        }
        // Vector, Bytes, Scalar carry no structural invariants.
      },
      value);
  return out;
}

ShapeDesc shape_of(const DataValue& value) {
  auto report = validate(value);
  if (!report.empty()) {
    throw StructuralError("invalid value: " + report.front());
  }
  ShapeDesc shape;
  shape.kind = kind_of(value);
  std::visit(
      [&shape](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DenseMatrix> ||
                      std::is_same_v<T, SparseMatrix>) {
          shape.dims = {static_cast<std::int64_t>(v.rows),
                        static_cast<std::int64_t>(v.cols)};
        } else if constexpr (std::is_same_v<T, Vector>) {
          shape.dims = {static_cast<std::int64_t>(v.elements.size())};
        } else if constexpr (std::is_same_v<T, Graph>) {
          shape.dims = {static_cast<std::int64_t>(v.vertex_count)};
        } else if constexpr (std::is_same_v<T, Corpus>) {
          shape.dims = {static_cast<std::int64_t>(v.documents.size())};
        } else if constexpr (std::is_same_v<T, ItemSets>) {
          shape.dims = {static_cast<std::int64_t>(v.transactions.size())};
        } else if constexpr (std::is_same_v<T, CountTable>) {
          shape.dims = {static_cast<std::int64_t>(v.entries.size())};
        } else if constexpr (std::is_same_v<T, Bytes>) {
          shape.dims = {static_cast<std::int64_t>(v.octets.size())};
        }
        // Scalar: no dimensions.
      },
      value);
  return shape;
}

bool identical(const DataValue& a, const DataValue& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b);
        if constexpr (std::is_same_v<T, DenseMatrix>) {
          return va.rows == vb.rows && va.cols == vb.cols &&
                 bits_equal(va.elements, vb.elements);
        } else if constexpr (std::is_same_v<T, Vector>) {
          return bits_equal(va.elements, vb.elements);
        } else if constexpr (std::is_same_v<T, SparseMatrix>) {
          return va.rows == vb.rows && va.cols == vb.cols &&
                 va.row_offsets == vb.row_offsets &&
                 va.col_indices == vb.col_indices &&
                 bits_equal(va.values, vb.values);
        } else if constexpr (std::is_same_v<T, Graph>) {
          return va.vertex_count == vb.vertex_count &&
                 va.adjacency == vb.adjacency;
        } else if constexpr (std::is_same_v<T, Corpus>) {
          return va.documents == vb.documents;
        } else if constexpr (std::is_same_v<T, ItemSets>) {
          return va.transactions == vb.transactions;
        } else if constexpr (std::is_same_v<T, CountTable>) {
          return va.entries == vb.entries;
        } else if constexpr (std::is_same_v<T, Bytes>) {
          return va.octets == vb.octets;
        } else {
          return bits_equal(va.value, vb.value);
        }
      },
      a);
}

}  // namespace dwarfs
