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

#ifndef DWARFS_VALUE_HPP_
#define DWARFS_VALUE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dwarfs/error.hpp"

namespace dwarfs {

// ---------------------------------------------------------------------------
// Dataset value model. Every kernel consumes and produces DataValue instances;
// all of them are immutable after construction and safe to share across
// threads without coordination.
// ---------------------------------------------------------------------------

/// Row-major dense matrix of 64-bit reals.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> elements;  // rows * cols entries, row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), elements(r * c, 0.0) {}
  DenseMatrix(std::size_t r, std::size_t c, std::vector<double> e)
      : rows(r), cols(c), elements(std::move(e)) {}

  double at(std::size_t r, std::size_t c) const {
    return elements[r * cols + c];
  }
  double& at(std::size_t r, std::size_t c) { return elements[r * cols + c]; }
};

struct Vector {
  std::vector<double> elements;

  Vector() = default;
  explicit Vector(std::vector<double> e) : elements(std::move(e)) {}

  std::size_t size() const { return elements.size(); }
};

/// Compressed-row sparse matrix. row_offsets has rows+1 entries; the column
/// indices of each row are strictly increasing.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_offsets;
  std::vector<std::size_t> col_indices;
  std::vector<double> values;
};

/// Adjacency-list graph. Neighbor lists are sorted ascending with no
/// duplicates; the same type models directed and undirected (symmetric)
/// graphs.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;
};

/// Pre-tokenized document collection; tokens are nonnegative integer ids.
struct Corpus {
  std::vector<std::vector<std::int64_t>> documents;
};

/// Transaction collection; each transaction is a sorted set of distinct
/// nonnegative item ids.
struct ItemSets {
  std::vector<std::vector<std::int64_t>> transactions;
};

/// Ordered table mapping integer-tuple keys to nonnegative counts. Tuple keys
/// let one type carry token counts ([token] -> n), postings ([term, doc] -> n)
/// and itemset supports ([i1, i2, ...] -> n). std::map keeps entries in
/// lexicographic key order, which makes serialization and equality
/// deterministic.
struct CountTable {
  std::map<std::vector<std::int64_t>, std::uint64_t> entries;
};

struct Bytes {
  std::vector<std::uint8_t> octets;
};

struct Scalar {
  double value = 0.0;

  Scalar() = default;
  explicit Scalar(double v) : value(v) {}
};

using DataValue = std::variant<DenseMatrix, Vector, SparseMatrix, Graph,
                               Corpus, ItemSets, CountTable, Bytes, Scalar>;

enum class ValueKind {
  DenseMatrix,
  Vector,
  SparseMatrix,
  Graph,
  Corpus,
  ItemSets,
  CountTable,
  Bytes,
  Scalar,
};

std::string_view to_string(ValueKind kind);
std::optional<ValueKind> value_kind_from_string(std::string_view name);

ValueKind kind_of(const DataValue& value);

/// Concrete shape descriptor: kind tag plus dimension list, as reported by
/// shape_of. Dimensions: DenseMatrix/SparseMatrix [rows, cols]; Vector [n];
/// Graph [vertices]; Corpus [documents]; ItemSets [transactions];
/// CountTable [entries]; Bytes [octets]; Scalar [].
struct ShapeDesc {
  ValueKind kind = ValueKind::Scalar;
  std::vector<std::int64_t> dims;

  bool operator==(const ShapeDesc&) const = default;
};

std::string to_string(const ShapeDesc& shape);

/// Partially known shape used for node declarations and static inference.
/// A default-constructed PartialShape admits anything ("any"); otherwise the
/// kind is fixed and dimension entries of -1 are wildcards.
struct PartialShape {
  bool any = true;
  ValueKind kind = ValueKind::Scalar;
  std::vector<std::int64_t> dims;

  PartialShape() = default;
  PartialShape(ValueKind k, std::vector<std::int64_t> d)
      : any(false), kind(k), dims(std::move(d)) {}

  static PartialShape exact(const ShapeDesc& s) {
    return PartialShape(s.kind, s.dims);
  }

  bool admits(const ShapeDesc& shape) const;
  /// True when this shape and `other` cannot describe the same value.
  bool conflicts_with(const PartialShape& other) const;
  bool operator==(const PartialShape&) const = default;
};

std::string to_string(const PartialShape& shape);

/// Returns every violated structural invariant of the value; the empty list
/// means the value is well formed. Never throws: violations are data.
std::vector<std::string> validate(const DataValue& value);

/// Kind tag and dimensions of a well-formed value. Throws StructuralError
/// naming the first violated invariant when the value is invalid.
ShapeDesc shape_of(const DataValue& value);

/// Bit-level equality (reals compared by their binary representation); used
/// by determinism tests and acceptance checks.
bool identical(const DataValue& a, const DataValue& b);

// ---------------------------------------------------------------------------
// Dwarf taxonomy. Exactly the eight classes of the suite, in fixed order;
// every kernel operation is tagged with exactly one of them.
// ---------------------------------------------------------------------------

enum class DwarfClass : int {
  LinearAlgebra = 0,
  Sampling = 1,
  LogicOps = 2,
  TransformOps = 3,
  SetOps = 4,
  GraphOps = 5,
  Sort = 6,
  StatisticOps = 7,
};

inline constexpr std::size_t kDwarfClassCount = 8;

inline constexpr std::array<DwarfClass, kDwarfClassCount> kAllDwarfClasses = {
    DwarfClass::LinearAlgebra, DwarfClass::Sampling,  DwarfClass::LogicOps,
    DwarfClass::TransformOps,  DwarfClass::SetOps,    DwarfClass::GraphOps,
    DwarfClass::Sort,          DwarfClass::StatisticOps,
};

std::string_view to_string(DwarfClass dwarf);
std::optional<DwarfClass> dwarf_class_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Operation descriptors.
// ---------------------------------------------------------------------------

/// Kernel parameter value: integer, real or identifier.
using ParamValue = std::variant<std::int64_t, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

std::string to_string(const ParamValue& value);

/// Names one dwarf operation application: the class, the kernel name and its
/// parameters. The name must resolve in the KernelRegistry and the params
/// must validate against that kernel's schema before execution.
struct OpDescriptor {
  DwarfClass dwarf = DwarfClass::LinearAlgebra;
  std::string name;
  ParamMap params;
};

}  // namespace dwarfs

#endif  // DWARFS_VALUE_HPP_
