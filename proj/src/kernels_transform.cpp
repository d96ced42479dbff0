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

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// In-place iterative radix-2 decimation-in-time transform.
void fft_inplace(std::vector<std::complex<double>>& v, bool inverse) {
  const std::size_t n = v.size();
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = v[i + k];
        const std::complex<double> t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : v) x *= inv_n;
  }
}

}  // namespace

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> v,
                                      bool inverse) {
  if (!is_pow2(v.size())) {
    std::ostringstream os;
    os << "fft: length " << v.size()
       << " is not a power of two (zero-pad before calling)";
    throw ArgumentError(os.str());
  }
  fft_inplace(v, inverse);
  return v;
}

std::vector<double> dct2(std::span<const double> v, bool inverse) {
  const std::size_t n = v.size();
  if (n < 1) throw ArgumentError("dct2: length must be >= 1");
  const double dn = static_cast<double>(n);
  std::vector<double> out(n, 0.0);
  if (!inverse) {
    // X_k = s_k * sum_i v_i * cos(pi (2i+1) k / (2n)), s_0 = sqrt(1/n),
    // s_k = sqrt(2/n): the orthonormal DCT-II.
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += v[i] * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * dn));
      }
      out[k] = acc * (k == 0 ? std::sqrt(1.0 / dn) : std::sqrt(2.0 / dn));
    }
  } else {
    // The transpose (DCT-III with the same scaling).
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double s = k == 0 ? std::sqrt(1.0 / dn) : std::sqrt(2.0 / dn);
        acc += s * v[k] * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * dn));
      }
      out[i] = acc;
    }
  }
  return out;
}

std::vector<double> haar(std::span<const double> v, std::size_t levels) {
  const std::size_t n = v.size();
  std::size_t block = n;
  for (std::size_t l = 0; l < levels; ++l) {
    if (block % 2 != 0) {
      std::ostringstream os;
      os << "haar: length " << n << " is not divisible by 2^" << levels;
      throw ArgumentError(os.str());
    }
    block /= 2;
  }
  std::vector<double> out(v.begin(), v.end());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::size_t len = n;
  std::vector<double> scratch(n);
  for (std::size_t l = 0; l < levels; ++l) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) {
      scratch[i] = (out[2 * i] + out[2 * i + 1]) * inv_sqrt2;
      scratch[half + i] = (out[2 * i] - out[2 * i + 1]) * inv_sqrt2;
    }
    std::copy(scratch.begin(),
              scratch.begin() + static_cast<std::ptrdiff_t>(len), out.begin());
    len = half;
  }
  return out;
}

namespace {

using ComplexGrid = std::vector<std::vector<std::complex<double>>>;

/// Row FFTs then column FFTs over a power-of-two grid.
void fft2_inplace(ComplexGrid& grid, bool inverse) {
  const std::size_t rows = grid.size();
  const std::size_t cols = grid.front().size();
  for (auto& row : grid) fft_inplace(row, inverse);
  std::vector<std::complex<double>> column(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) column[r] = grid[r][c];
    fft_inplace(column, inverse);
    for (std::size_t r = 0; r < rows; ++r) grid[r][c] = column[r];
  }
}

}  // namespace

DenseMatrix convolve2d_fft(const DenseMatrix& image,
                           const DenseMatrix& kernel) {
  if (kernel.rows % 2 == 0 || kernel.cols % 2 == 0) {
    std::ostringstream os;
    os << "convolve2d_fft: kernel dimensions must be odd, got " << kernel.rows
       << "x" << kernel.cols;
    throw ArgumentError(os.str());
  }
  if (kernel.rows > image.rows || kernel.cols > image.cols) {
    std::ostringstream os;
    os << "convolve2d_fft: kernel " << kernel.rows << "x" << kernel.cols
       << " exceeds image " << image.rows << "x" << image.cols;
    throw ArgumentError(os.str());
  }
  const std::size_t h = image.rows;
  const std::size_t w = image.cols;
  // Linear convolution on padded power-of-two extents, then folded back to
  // the circular same-size result.
  const std::size_t ph = next_pow2(h + kernel.rows - 1);
  const std::size_t pw = next_pow2(w + kernel.cols - 1);
  ComplexGrid fa(ph, std::vector<std::complex<double>>(pw));
  ComplexGrid fb(ph, std::vector<std::complex<double>>(pw));
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      fa[r][c] = image.at(r, c);
    }
  }
  for (std::size_t r = 0; r < kernel.rows; ++r) {
    for (std::size_t c = 0; c < kernel.cols; ++c) {
      fb[r][c] = kernel.at(r, c);
    }
  }
  fft2_inplace(fa, false);
  fft2_inplace(fb, false);
  for (std::size_t r = 0; r < ph; ++r) {
    for (std::size_t c = 0; c < pw; ++c) {
      fa[r][c] *= fb[r][c];
    }
  }
  fft2_inplace(fa, true);
  // fa now holds the linear convolution with the kernel anchored at its
  // top-left corner. Fold modulo the image extent and shift by the kernel
  // center so the output aligns with a centered kernel.
  const std::size_t center_r = kernel.rows / 2;
  const std::size_t center_c = kernel.cols / 2;
  DenseMatrix out(h, w);
  for (std::size_t r = 0; r < h + kernel.rows - 1; ++r) {
    for (std::size_t c = 0; c < w + kernel.cols - 1; ++c) {
      // The linear result at (r, c) lands at circular position
      // ((r - center_r) mod h, (c - center_c) mod w).
      const std::size_t tr = (r + h - (center_r % h)) % h;
      const std::size_t tc = (c + w - (center_c % w)) % w;
      out.at(tr, tc) += fa[r][c].real();
    }
  }
  return out;
}

DenseMatrix gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) {
    std::ostringstream os;
    os << "gaussian_kernel: sigma = " << sigma << " must be > 0";
    throw ArgumentError(os.str());
  }
  const auto radius = static_cast<std::size_t>(std::ceil(3.0 * sigma));
  const std::size_t size = 2 * radius + 1;
  DenseMatrix out(size, size);
  double total = 0.0;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const double dr = static_cast<double>(r) - static_cast<double>(radius);
      const double dc = static_cast<double>(c) - static_cast<double>(radius);
      const double v = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
      out.at(r, c) = v;
      total += v;
    }
  }
  for (double& v : out.elements) v /= total;
  return out;
}

}  // namespace dwarfs::kernels
