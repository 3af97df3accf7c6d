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

#ifndef NZC_PERMUTATION_HPP_
#define NZC_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nzc/error.hpp"

namespace nzc {

// Permutation of {0, ..., size-1} in one-line notation: image()[i] = p(i).
// Composition follows function application: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::uint32_t x : image_) {
      if (x >= image_.size() || seen[x]) {
        throw Error(ErrorKind::kInvalidArgument, "not a permutation");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t size) {
    std::vector<std::uint32_t> img(size);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(std::move(img), Unchecked{});
  }

  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::uint32_t x) const noexcept { return image_[x]; }
  std::span<const std::uint32_t> image() const noexcept { return image_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv), Unchecked{});
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::kInvalidArgument, "size mismatch");
    std::vector<std::uint32_t> img(b.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.image_[b.image_[i]];
    return Permutation(std::move(img), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> image, Unchecked) : image_(std::move(image)) {}

  std::vector<std::uint32_t> image_;
};

// Hash for unordered containers of permutations.
struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : p.image()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// "[a b c]" with 1-based entries when `one_based` is set.
inline std::string to_string(const Permutation& p, bool one_based = false) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(static_cast<std::uint32_t>(i)) + (one_based ? 1 : 0));
  }
  return out + "]";
}

}  // namespace nzc

#endif  // NZC_PERMUTATION_HPP_
