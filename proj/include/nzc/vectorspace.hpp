// Copyright 2026 The nzc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Non-zero vectors of an n-dimensional space over a q-element field.
//
// Coefficients are opaque symbols 0..q-1: only the zero / non-zero pattern
// of a vector matters to the graph, so no field arithmetic is implemented and
// any q >= 2 is accepted (prime power or not). Every result downstream depends
// on q only through the count q - 1 of non-zero symbols.

#ifndef NZC_VECTORSPACE_HPP_
#define NZC_VECTORSPACE_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nzc/error.hpp"

namespace nzc {

inline constexpr std::uint64_t kDefaultVertexCap = 65535;

// Skeletons are stored as bit masks, so the dimension is bounded by the mask
// width regardless of the vertex cap.
inline constexpr int kMaxDimension = 32;

struct SpaceParams {
  int n = 0;
  int q = 0;

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

// q^n - 1, or 0 when q^n overflows 64 bits.
inline std::uint64_t checked_vertex_count(SpaceParams p) {
  std::uint64_t total = 1;
  for (int i = 0; i < p.n; ++i) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(p.q), &total)) {
      return 0;
    }
  }
  return total - 1;
}

// Throws kInvalidArgument for n < 1, q < 2 or n > kMaxDimension and
// kCapExceeded when q^n - 1 exceeds `vertex_cap`. Returns q^n - 1.
inline std::uint64_t validate(SpaceParams p, std::uint64_t vertex_cap = kDefaultVertexCap) {
  if (p.n < 1) throw Error(ErrorKind::kInvalidArgument, "dimension n must be >= 1");
  if (p.q < 2) throw Error(ErrorKind::kInvalidArgument, "field size q must be >= 2");
  if (p.n > kMaxDimension) {
    throw Error(ErrorKind::kInvalidArgument,
                "dimension n must be <= " + std::to_string(kMaxDimension));
  }
  const std::uint64_t count = checked_vertex_count(p);
  if (count == 0 || count > vertex_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "q^n - 1 exceeds vertex cap " + std::to_string(vertex_cap));
  }
  return count;
}

// Set of basis positions carrying a non-zero coefficient. Bit i-1 of the mask
// stands for basis vector b_i.
class Skeleton {
 public:
  Skeleton() = default;
  Skeleton(std::uint32_t mask, int n) : mask_(mask), n_(n) {}

  std::uint32_t mask() const noexcept { return mask_; }
  int dimension() const noexcept { return n_; }
  int size() const noexcept { return std::popcount(mask_); }

  // `index` is 1-based, as in b_1 .. b_n.
  bool contains(int index) const noexcept {
    return index >= 1 && index <= n_ && ((mask_ >> (index - 1)) & 1u) != 0;
  }

  bool intersects(const Skeleton& other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }

  // 1-based basis indices in increasing order.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if ((mask_ >> i) & 1u) out.push_back(i + 1);
    }
    return out;
  }

  friend bool operator==(const Skeleton&, const Skeleton&) = default;

 private:
  std::uint32_t mask_ = 0;
  int n_ = 0;
};

// A non-zero vector, identified by its coefficient tuple. coeffs()[0] is the
// coefficient of b_1.
class Vector {
 public:
  Vector(std::vector<std::uint32_t> coeffs, int q) : coeffs_(std::move(coeffs)) {
    bool any = false;
    for (std::uint32_t c : coeffs_) {
      if (c >= static_cast<std::uint32_t>(q)) {
        throw Error(ErrorKind::kInvalidArgument, "coefficient out of range 0..q-1");
      }
      any = any || c != 0;
    }
    if (coeffs_.empty() || !any) {
      throw Error(ErrorKind::kInvalidArgument, "zero vector is not a vertex");
    }
  }

  // b_index: the vector with coefficient 1 at 1-based position `index`.
  static Vector basis(int index, SpaceParams p) {
    if (index < 1 || index > p.n) throw Error(ErrorKind::kOutOfRange, "basis index");
    std::vector<std::uint32_t> c(static_cast<std::size_t>(p.n), 0);
    c[static_cast<std::size_t>(index - 1)] = 1;
    return Vector(std::move(c), p.q);
  }

  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  int dimension() const noexcept { return static_cast<int>(coeffs_.size()); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<std::uint32_t> coeffs_;
};

inline Skeleton skeleton(const Vector& v) {
  std::uint32_t mask = 0;
  const auto c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) mask |= 1u << i;
  }
  return Skeleton(mask, v.dimension());
}

// i such that v lies in T_i.
inline int skeleton_class(const Vector& v) { return skeleton(v).size(); }

// Radix-q value with b_1 as the least-significant digit.
inline std::uint64_t radix_value(const Vector& v, int q) {
  std::uint64_t value = 0;
  const auto c = v.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    value = value * static_cast<std::uint64_t>(q) + c[i];
  }
  return value;
}

inline Vector vector_from_radix(std::uint64_t value, SpaceParams p) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(p.n), 0);
  for (int i = 0; i < p.n; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(value % static_cast<std::uint64_t>(p.q));
    value /= static_cast<std::uint64_t>(p.q);
  }
  return Vector(std::move(c), p.q);
}

// All q^n - 1 non-zero vectors ordered by radix value, so the vertex with
// radix value r has index r - 1.
inline std::vector<Vector> enumerate_vectors(SpaceParams p,
                                             std::uint64_t vertex_cap = kDefaultVertexCap) {
  const std::uint64_t count = validate(p, vertex_cap);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::uint64_t r = 1; r <= count; ++r) out.push_back(vector_from_radix(r, p));
  return out;
}

// Human-readable form such as "b1+b3" or "2b1+b2".
inline std::string to_label(const Vector& v) {
  std::string out;
  const auto c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'b';
    out += std::to_string(i + 1);
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace nzc

#endif  // NZC_VECTORSPACE_HPP_
