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

#ifndef DWARFS_KERNELS_HPP_
#define DWARFS_KERNELS_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dwarfs/rng.hpp"
#include "dwarfs/value.hpp"

// Typed kernel implementations for the eight dwarf families. Every function
// is a pure function of its arguments (plus the RngState it is handed, for
// the stochastic ones): repeated invocation yields bit-identical output.

namespace dwarfs::kernels {

// --- Linear algebra ---------------------------------------------------------

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul(const SparseMatrix& a, const DenseMatrix& b);
Vector matvec(const DenseMatrix& a, const Vector& v);
Vector matvec(const SparseMatrix& a, const Vector& v);
DenseMatrix transpose(const DenseMatrix& a);

enum class ElementwiseOp { Add, Sub, Mul };
DenseMatrix elementwise(ElementwiseOp op, const DenseMatrix& a,
                        const DenseMatrix& b);
Vector elementwise(ElementwiseOp op, const Vector& a, const Vector& b);

DenseMatrix scale(const DenseMatrix& a, double alpha);
Vector scale(const Vector& a, double alpha);

/// Sum of squares of each row: diag(A A^T).
Vector row_sq_norms(const DenseMatrix& a);

/// out[i][j] = m[i][j] + row_terms[i] + col_terms[j].
DenseMatrix rank1_add(const DenseMatrix& m, const Vector& row_terms,
                      const Vector& col_terms);

/// classes x n sparse 0/1 matrix with entry [labels[i]][i] = 1. Labels must
/// be integral values in [0, classes).
SparseMatrix indicator_matrix(const Vector& labels, std::size_t classes);

/// Row j of the result is m[j] / divisors[j], or fallback[j] when the
/// divisor is zero.
DenseMatrix row_divide(const DenseMatrix& m, const Vector& divisors,
                       const DenseMatrix& fallback);

double dot(const Vector& a, const Vector& b);
Vector vec_add_scalar(const Vector& v, double s);

/// Gathers values[index] for each index in the second column of a
/// (value, source index) selection matrix, as produced by top_k.
Vector select_by_index(const Vector& values, const DenseMatrix& selection);

DenseMatrix concat_rows(std::span<const DenseMatrix* const> parts);

// --- Sampling ----------------------------------------------------------------

/// Uniform sample of k elements without replacement, in order of first
/// selection. Supported kinds: Vector, DenseMatrix (rows), Corpus, ItemSets.
DataValue random_sample(const DataValue& xs, std::size_t k, RngState& rng);

/// Gibbs chain targeting a standard bivariate normal with correlation rho,
/// using the exact conditionals x|y ~ N(rho*y, 1 - rho^2). Returns n rows of
/// (x, y) after discarding burn_in sweeps.
DenseMatrix gibbs_bivariate_normal(double rho, std::size_t n,
                                   std::size_t burn_in, RngState& rng);

/// Every second row and column (indices 0, 2, 4, ...).
DenseMatrix downsample2(const DenseMatrix& m);

/// First k rows.
DenseMatrix head_rows(const DenseMatrix& m, std::size_t k);

// --- Logic operations (hashes) ----------------------------------------------

std::array<std::uint8_t, 16> md5(std::span<const std::uint8_t> data);

/// Fixed 64-bit per-token hash shared by the logic-operation kernels.
std::uint64_t token_hash(std::int64_t token);

/// Weighted bit-vote fingerprint over per-token 64-bit hashes. The table maps
/// token -> integer weight (single-component keys).
std::uint64_t simhash64(const CountTable& weighted_tokens);

/// h independent seeded min-hash values of a sorted item set. Values are
/// 32-bit (the top half of a 64-bit mix) so they stay exact in doubles.
std::vector<std::uint64_t> minhash_signature(std::span<const std::int64_t> s,
                                             std::size_t h, RngState& rng);

/// Maps every token to its 32-bit term id (token_hash >> 32).
Corpus hash_tokens(const Corpus& corpus);

// --- Transform operations -----------------------------------------------------

/// Radix-2 decimation-in-time FFT; length must be a power of two. The
/// inverse scales by 1/n.
std::vector<std::complex<double>> fft(std::vector<std::complex<double>> v,
                                      bool inverse);

/// Orthonormal DCT-II (the transform matrix is orthogonal); inverse=true
/// applies DCT-III, its transpose.
std::vector<double> dct2(std::span<const double> v, bool inverse = false);

/// Orthonormal Haar analysis: per level, pairwise sums/differences scaled by
/// 1/sqrt(2), laid out as [approx | detail_levels...]. The length must be
/// divisible by 2^levels.
std::vector<double> haar(std::span<const double> v, std::size_t levels);

/// Same-size circular convolution with an odd-dimension centered kernel,
/// computed via 2-D FFT on zero-padded power-of-two extents.
DenseMatrix convolve2d_fft(const DenseMatrix& image, const DenseMatrix& kernel);

/// Discretely sampled Gaussian kernel with radius ceil(3*sigma), L1
/// normalized.
DenseMatrix gaussian_kernel(double sigma);

// --- Set operations -----------------------------------------------------------

enum class SetBinaryOp { Union, Intersection, Difference };
std::vector<std::int64_t> set_binary(SetBinaryOp op,
                                     std::span<const std::int64_t> a,
                                     std::span<const std::int64_t> b);

/// |a n b| / |a u b|; rejects two empty sets (0/0).
double jaccard(std::span<const std::int64_t> a,
               std::span<const std::int64_t> b);

/// Union of all transactions, as a single-transaction collection.
ItemSets fold_union(const ItemSets& sets);

/// One singleton transaction per item of the (single) input transaction.
ItemSets singletons(const ItemSets& universe);

/// Classic (level-1)-prefix join of frequent (level-1)-itemsets into level
/// candidates, with the subset prune. Transactions of other lengths are
/// ignored so unrolled levels stay total.
ItemSets apriori_join(const ItemSets& frequent, std::size_t level);

/// CountTable keys reinterpreted as transactions (keys must be sorted
/// distinct item tuples).
ItemSets table_keys_to_sets(const CountTable& table);

// --- Graph operations -----------------------------------------------------------

inline constexpr std::int64_t kUnreachable = -1;

/// Exact hop distances from source; unreachable vertices get kUnreachable.
std::vector<std::int64_t> bfs(const Graph& g, std::size_t source);

/// Component ids for an undirected (symmetric) graph; the id of a component
/// is its minimum vertex id. Throws StructuralError on asymmetric adjacency.
std::vector<std::int64_t> connected_components(const Graph& g);

Graph graph_transpose(const Graph& g);

/// Column-stochastic transition matrix of a directed graph; dangling
/// vertices spread uniform mass over all vertices.
SparseMatrix transition_matrix(const Graph& g);

/// The uniform vector 1/n over the graph's vertices.
Vector uniform_rank(const Graph& g);

// --- Sort ---------------------------------------------------------------------

enum class SortOrder { Asc, Desc };

struct SortResult {
  std::vector<double> values;
  std::vector<std::size_t> indices;  // permutation: source index per output
};

/// Stable full sort; equal keys keep their original relative order. NaN keys
/// are rejected.
SortResult sort_full(std::span<const double> v, SortOrder order);

/// The k extreme values in order, ties broken by smaller source index;
/// equals the first k entries of sort_full.
SortResult top_k(std::span<const double> v, std::size_t k, SortOrder order);

/// Per-row argmin (top_k with k=1 ascending on each row).
std::vector<std::size_t> row_argmin(const DenseMatrix& m);

/// Re-keys the table by permuting key components and re-sorting. perm must be
/// a permutation of 0..m-1 applicable to every key; an empty perm keeps the
/// components and just re-canonicalizes.
CountTable table_sort_keys(const CountTable& table,
                           std::span<const std::size_t> perm);

/// Key with the maximum count; ties resolve to the lexicographically
/// smallest key.
std::vector<std::int64_t> table_argmax(const CountTable& table);

/// Local extrema of a difference-of-Gaussian stack: a non-border pixel is a
/// keypoint when it is strictly greater (or strictly smaller) than its 8
/// in-scale neighbors and all 9 neighbors in each adjacent scale that
/// exists, and |value| > threshold. Returns rows of
/// (octave, scale index, row, col) in scan order.
DenseMatrix dog_extrema(std::span<const DenseMatrix* const> dogs,
                        double threshold, std::int64_t octave);

// --- Statistic operations -------------------------------------------------------

/// Exact multiplicity per key. Accepts Corpus (tokens), ItemSets (items) and
/// Vector (integral keys); keys become single-component table entries.
CountTable count_frequencies(const DataValue& xs);

/// tf(t,d) = count(t,d)/|d|, idf(t) = ln(N/df(t)), weight = tf*idf.
/// Documents must be nonempty.
std::vector<std::map<std::int64_t, double>> tfidf(const Corpus& corpus);

/// (document id, term) -> count over a corpus.
CountTable count_doc_terms(const Corpus& corpus);

/// Support of each candidate itemset over the transactions, counted via
/// per-transaction intersection tests.
CountTable support_count(const ItemSets& candidates,
                         const ItemSets& transactions);

CountTable filter_min_count(const CountTable& table, std::uint64_t min_count);

/// Entrywise sum of two tables.
CountTable table_merge(const CountTable& a, const CountTable& b);

/// Materializes single-component keys into a vector of counts of the given
/// size; missing keys are 0. Keys at or beyond size are rejected.
Vector counts_to_vector(const CountTable& table, std::size_t size);

Scalar count_rows(const DenseMatrix& m);

}  // namespace dwarfs::kernels

#endif  // DWARFS_KERNELS_HPP_
