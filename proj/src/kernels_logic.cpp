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

#include <bit>
#include <cstring>
#include <sstream>

#include "dwarfs/kernels.hpp"

namespace dwarfs::kernels {

namespace {

// MD5 per RFC 1321. Round constants K[i] = floor(2^32 * |sin(i + 1)|).
constexpr std::uint32_t kMd5K[64] = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a,
    0xa8304613, 0xfd469501, 0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be,
    0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821, 0xf61e2562, 0xc040b340,
    0x265e5a51, 0xe9b6c7aa, 0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8,
    0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c,
    0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70, 0x289b7ec6, 0xeaa127fa,
    0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92,
    0xffeff47d, 0x85845dd1, 0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
    0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391,
};

constexpr std::uint32_t kMd5Shift[64] = {
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21,
};

struct Md5State {
  std::uint32_t a = 0x67452301;
  std::uint32_t b = 0xefcdab89;
  std::uint32_t c = 0x98badcfe;
  std::uint32_t d = 0x10325476;

  void process_block(const std::uint8_t* block) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) {
      m[i] = static_cast<std::uint32_t>(block[4 * i]) |
             (static_cast<std::uint32_t>(block[4 * i + 1]) << 8) |
             (static_cast<std::uint32_t>(block[4 * i + 2]) << 16) |
             (static_cast<std::uint32_t>(block[4 * i + 3]) << 24);
    }
    std::uint32_t A = a, B = b, C = c, D = d;
    for (int i = 0; i < 64; ++i) {
      std::uint32_t f;
      int g;
      if (i < 16) {
        f = (B & C) | (~B & D);
        g = i;
      } else if (i < 32) {
        f = (D & B) | (~D & C);
        g = (5 * i + 1) % 16;
      } else if (i < 48) {
        f = B ^ C ^ D;
        g = (3 * i + 5) % 16;
      } else {
        f = C ^ (B | ~D);
        g = (7 * i) % 16;
      }
      const std::uint32_t tmp = D;
      D = C;
      C = B;
      B = B + std::rotl(A + f + kMd5K[i] + m[g], static_cast<int>(kMd5Shift[i]));
      A = tmp;
    }
    a += A;
    b += B;
    c += C;
    d += D;
  }
};

void store_le32(std::uint32_t x, std::uint8_t* out) {
  out[0] = static_cast<std::uint8_t>(x);
  out[1] = static_cast<std::uint8_t>(x >> 8);
  out[2] = static_cast<std::uint8_t>(x >> 16);
  out[3] = static_cast<std::uint8_t>(x >> 24);
}

}  // namespace

std::array<std::uint8_t, 16> md5(std::span<const std::uint8_t> data) {
  Md5State state;
  std::size_t pos = 0;
  while (data.size() - pos >= 64) {
    state.process_block(data.data() + pos);
    pos += 64;
  }
  // Padding: 0x80, zeros, then the 64-bit little-endian bit length.
  std::uint8_t tail[128] = {0};
  const std::size_t rem = data.size() - pos;
  if (rem > 0) std::memcpy(tail, data.data() + pos, rem);
  tail[rem] = 0x80;
  const std::size_t tail_len = rem + 1 + 8 <= 64 ? 64 : 128;
  const std::uint64_t bits = static_cast<std::uint64_t>(data.size()) * 8;
  for (int i = 0; i < 8; ++i) {
    tail[tail_len - 8 + i] = static_cast<std::uint8_t>(bits >> (8 * i));
  }
  state.process_block(tail);
  if (tail_len == 128) state.process_block(tail + 64);

  std::array<std::uint8_t, 16> digest;
  store_le32(state.a, digest.data());
  store_le32(state.b, digest.data() + 4);
  store_le32(state.c, digest.data() + 8);
  store_le32(state.d, digest.data() + 12);
  return digest;
}

std::uint64_t token_hash(std::int64_t token) {
  return mix64(static_cast<std::uint64_t>(token));
}

std::uint64_t simhash64(const CountTable& weighted_tokens) {
  if (weighted_tokens.entries.empty()) {
    throw ArgumentError("simhash64: empty document");
  }
  std::int64_t votes[64] = {0};
  for (const auto& [key, weight] : weighted_tokens.entries) {
    if (key.size() != 1) {
      throw ArgumentError(
          "simhash64: token table keys must have a single component");
    }
    const std::uint64_t h = token_hash(key[0]);
    const auto w = static_cast<std::int64_t>(weight);
    for (int b = 0; b < 64; ++b) {
      votes[b] += (h >> b) & 1 ? w : -w;
    }
  }
  std::uint64_t fingerprint = 0;
  for (int b = 0; b < 64; ++b) {
    if (votes[b] > 0) fingerprint |= std::uint64_t{1} << b;
  }
  return fingerprint;
}

std::vector<std::uint64_t> minhash_signature(std::span<const std::int64_t> s,
                                             std::size_t h, RngState& rng) {
  if (s.empty()) throw ArgumentError("minhash_signature: empty set");
  if (h < 1) throw ArgumentError("minhash_signature: h must be >= 1");
  std::vector<std::uint64_t> salts(h);
  for (std::size_t i = 0; i < h; ++i) salts[i] = rng.next_u64();
  std::vector<std::uint64_t> sig(h);
  for (std::size_t i = 0; i < h; ++i) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::int64_t item : s) {
      const std::uint64_t v =
          mix64(static_cast<std::uint64_t>(item) ^ salts[i]) >> 32;
      if (v < best) best = v;
    }
    sig[i] = best;
  }
  return sig;
}

Corpus hash_tokens(const Corpus& corpus) {
  Corpus out;
  out.documents.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    std::vector<std::int64_t> hashed;
    hashed.reserve(doc.size());
    for (std::int64_t tok : doc) {
      hashed.push_back(static_cast<std::int64_t>(token_hash(tok) >> 32));
    }
    out.documents.push_back(std::move(hashed));
  }
  return out;
}

}  // namespace dwarfs::kernels
