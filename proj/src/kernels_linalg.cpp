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
#include <sstream>

#include "dwarfs/kernels.hpp"

namespace dwarfs::kernels {

namespace {

[[noreturn]] void shape_mismatch(const char* op, std::size_t ar,
                                 std::size_t ac, std::size_t br,
                                 std::size_t bc) {
  std::ostringstream os;
  os << op << ": incompatible shapes " << ar << "x" << ac << " and " << br
     << "x" << bc;
  throw ShapeError(os.str());
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) shape_mismatch("matmul", a.rows, a.cols, b.rows, b.cols);
  DenseMatrix out(a.rows, b.cols);
  // i-k-j loop order keeps the inner accumulation over b rows sequential.
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

DenseMatrix matmul(const SparseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) shape_mismatch("matmul", a.rows, a.cols, b.rows, b.cols);
  DenseMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t p = a.row_offsets[i]; p < a.row_offsets[i + 1]; ++p) {
      const std::size_t k = a.col_indices[p];
      const double aik = a.values[p];
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Vector matvec(const DenseMatrix& a, const Vector& v) {
  if (a.cols != v.size()) shape_mismatch("matvec", a.rows, a.cols, v.size(), 1);
  Vector out(std::vector<double>(a.rows, 0.0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      acc += a.at(i, j) * v.elements[j];
    }
    out.elements[i] = acc;
  }
  return out;
}

Vector matvec(const SparseMatrix& a, const Vector& v) {
  if (a.cols != v.size()) shape_mismatch("matvec", a.rows, a.cols, v.size(), 1);
  Vector out(std::vector<double>(a.rows, 0.0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (std::size_t p = a.row_offsets[i]; p < a.row_offsets[i + 1]; ++p) {
      acc += a.values[p] * v.elements[a.col_indices[p]];
    }
    out.elements[i] = acc;
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      out.at(j, i) = a.at(i, j);
    }
  }
  return out;
}

namespace {

double apply_elementwise(ElementwiseOp op, double x, double y) {
  switch (op) {
    case ElementwiseOp::Add: return x + y;
    case ElementwiseOp::Sub: return x - y;
    case ElementwiseOp::Mul: return x * y;
  }
  return 0.0;
}

}  // namespace

DenseMatrix elementwise(ElementwiseOp op, const DenseMatrix& a,
                        const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    shape_mismatch("elementwise", a.rows, a.cols, b.rows, b.cols);
  }
  DenseMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    out.elements[i] = apply_elementwise(op, a.elements[i], b.elements[i]);
  }
  return out;
}

Vector elementwise(ElementwiseOp op, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    shape_mismatch("elementwise", a.size(), 1, b.size(), 1);
  }
  Vector out(std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.elements[i] = apply_elementwise(op, a.elements[i], b.elements[i]);
  }
  return out;
}

DenseMatrix scale(const DenseMatrix& a, double alpha) {
  DenseMatrix out = a;
  for (double& x : out.elements) x *= alpha;
  return out;
}

Vector scale(const Vector& a, double alpha) {
  Vector out = a;
  for (double& x : out.elements) x *= alpha;
  return out;
}

Vector row_sq_norms(const DenseMatrix& a) {
  Vector out(std::vector<double>(a.rows, 0.0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      const double x = a.at(i, j);
      acc += x * x;
    }
    out.elements[i] = acc;
  }
  return out;
}

DenseMatrix rank1_add(const DenseMatrix& m, const Vector& row_terms,
                      const Vector& col_terms) {
  if (row_terms.size() != m.rows || col_terms.size() != m.cols) {
    std::ostringstream os;
    os << "rank1_add: matrix " << m.rows << "x" << m.cols
       << " vs row terms [" << row_terms.size() << "] and col terms ["
       << col_terms.size() << "]";
    throw ShapeError(os.str());
  }
  DenseMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      out.at(i, j) = m.at(i, j) + row_terms.elements[i] + col_terms.elements[j];
    }
  }
  return out;
}

SparseMatrix indicator_matrix(const Vector& labels, std::size_t classes) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> by_class(classes);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = labels.elements[i];
    if (!(x >= 0.0) || x != std::floor(x) ||
        x >= static_cast<double>(classes)) {
      std::ostringstream os;
      os << "indicator_matrix: label " << x << " at position " << i
         << " is not an integer in [0, " << classes << ")";
      throw ArgumentError(os.str());
    }
    by_class[static_cast<std::size_t>(x)].push_back(i);
  }
  SparseMatrix out;
  out.rows = classes;
  out.cols = n;
  out.row_offsets.reserve(classes + 1);
  out.row_offsets.push_back(0);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t i : by_class[c]) {
      out.col_indices.push_back(i);
      out.values.push_back(1.0);
    }
    out.row_offsets.push_back(out.col_indices.size());
  }
  return out;
}

DenseMatrix row_divide(const DenseMatrix& m, const Vector& divisors,
                       const DenseMatrix& fallback) {
  if (divisors.size() != m.rows || fallback.rows != m.rows ||
      fallback.cols != m.cols) {
    std::ostringstream os;
    os << "row_divide: matrix " << m.rows << "x" << m.cols << ", divisors ["
       << divisors.size() << "], fallback " << fallback.rows << "x"
       << fallback.cols;
    throw ShapeError(os.str());
  }
  DenseMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double d = divisors.elements[i];
    for (std::size_t j = 0; j < m.cols; ++j) {
      out.at(i, j) = d != 0.0 ? m.at(i, j) / d : fallback.at(i, j);
    }
  }
  return out;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) shape_mismatch("dot", a.size(), 1, b.size(), 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a.elements[i] * b.elements[i];
  }
  return acc;
}

Vector vec_add_scalar(const Vector& v, double s) {
  Vector out = v;
  for (double& x : out.elements) x += s;
  return out;
}

Vector select_by_index(const Vector& values, const DenseMatrix& selection) {
  if (selection.cols != 2) {
    std::ostringstream os;
    os << "select_by_index: selection must be k x 2, got " << selection.rows
       << "x" << selection.cols;
    throw ShapeError(os.str());
  }
  Vector out(std::vector<double>(selection.rows));
  for (std::size_t i = 0; i < selection.rows; ++i) {
    const double raw = selection.at(i, 1);
    if (raw < 0.0 || raw != std::floor(raw) ||
        raw >= static_cast<double>(values.size())) {
      std::ostringstream os;
      os << "select_by_index: index " << raw << " out of range [0, "
         << values.size() << ")";
      throw ArgumentError(os.str());
    }
    out.elements[i] = values.elements[static_cast<std::size_t>(raw)];
  }
  return out;
}

DenseMatrix concat_rows(std::span<const DenseMatrix* const> parts) {
  if (parts.empty()) throw ArgumentError("concat_rows: no inputs");
  const std::size_t cols = parts.front()->cols;
  std::size_t rows = 0;
  for (const DenseMatrix* part : parts) {
    if (part->cols != cols) {
      shape_mismatch("concat_rows", parts.front()->rows, cols, part->rows,
                     part->cols);
    }
    rows += part->rows;
  }
  DenseMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const DenseMatrix* part : parts) {
    std::copy(part->elements.begin(), part->elements.end(),
              out.elements.begin() + static_cast<std::ptrdiff_t>(offset));
    offset += part->elements.size();
  }
  return out;
}

}  // namespace dwarfs::kernels
