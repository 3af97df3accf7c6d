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

// Independent automorphism engine: individualization / refinement
// backtracking over vertex partitions, in the style of nauty-like tools but
// without canonical labeling. It knows nothing about skeletons; cells start
// from (vertex colour, degree) and are refined by the multiset of neighbour
// cells until stable.

#ifndef NZC_SEARCH_HPP_
#define NZC_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nzc/error.hpp"
#include "nzc/graph.hpp"
#include "nzc/permutation.hpp"

namespace nzc {

// Base points and one coset representative per orbit point at every level:
// transversals[k] maps each point of the orbit of base[k] under the pointwise
// stabilizer of base[0..k-1] to an element sending base[k] there.
struct StabilizerChain {
  std::vector<VertexIndex> base;
  std::vector<std::vector<std::pair<VertexIndex, Permutation>>> transversals;
  std::uint64_t order = 1;

  std::vector<Permutation> generators() const {
    std::vector<Permutation> out;
    for (const auto& level : transversals) {
      for (const auto& [point, rep] : level) {
        if (!rep.is_identity()) out.push_back(rep);
      }
    }
    return out;
  }
};

class RefinementSearch {
 public:
  using Colours = std::vector<std::uint32_t>;

  // `vertex_colours` (optional) restricts the search to automorphisms that
  // preserve it.
  explicit RefinementSearch(const NzcGraph& g, std::vector<std::uint32_t> vertex_colours = {})
      : g_(g), user_colours_(std::move(vertex_colours)) {
    if (user_colours_.empty()) user_colours_.assign(g.size(), 0);
    if (user_colours_.size() != g.size()) {
      throw Error(ErrorKind::kInvalidArgument, "colouring size != vertex count");
    }
    std::vector<std::pair<std::uint32_t, std::size_t>> keys;
    keys.reserve(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) keys.emplace_back(user_colours_[v], g.degree(v));
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    initial_.resize(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) {
      initial_[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
  }

  // Every colour-preserving automorphism, or nullopt if there are more than
  // `limit`.
  std::optional<std::vector<Permutation>> enumerate(std::size_t limit) const {
    std::vector<Permutation> out;
    Colours src = initial_;
    Colours tgt = initial_;
    if (!enumerate_from(src, tgt, out, limit)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
  }

  // Some colour-preserving automorphism fixing every vertex of `fixed` and
  // sending `from` to `to`.
  std::optional<Permutation> find(std::span<const VertexIndex> fixed, VertexIndex from,
                                  VertexIndex to) const {
    Colours src = initial_;
    Colours tgt = initial_;
    for (VertexIndex f : fixed) {
      individualize(src, f);
      individualize(tgt, f);
    }
    if (!refine_pair(src, tgt) || src[from] != tgt[to]) return std::nullopt;
    individualize(src, from);
    individualize(tgt, to);
    std::vector<Permutation> out;
    find_first(src, tgt, out);
    if (out.empty()) return std::nullopt;
    return out.front();
  }

  StabilizerChain chain() const {
    StabilizerChain sc;
    Colours cur = initial_;
    refine_pair(cur, cur);
    for (;;) {
      const auto cell = first_nontrivial_cell(cur);
      if (!cell) break;
      const VertexIndex v = first_with_colour(cur, *cell);
      std::vector<std::pair<VertexIndex, Permutation>> level;
      for (VertexIndex w = 0; w < g_.size(); ++w) {
        if (cur[w] != *cell) continue;
        if (w == v) {
          level.emplace_back(w, Permutation::identity(g_.size()));
        } else if (auto rep = find(sc.base, v, w)) {
          level.emplace_back(w, std::move(*rep));
        }
      }
      if (__builtin_mul_overflow(sc.order, static_cast<std::uint64_t>(level.size()), &sc.order)) {
        throw Error(ErrorKind::kCapExceeded, "group order overflows 64 bits");
      }
      sc.base.push_back(v);
      sc.transversals.push_back(std::move(level));
      individualize(cur, v);
      refine_pair(cur, cur);
    }
    return sc;
  }

 private:
  static std::uint32_t colour_count(const Colours& c) {
    std::uint32_t k = 0;
    for (std::uint32_t x : c) k = std::max(k, x + 1);
    return k;
  }

  static void individualize(Colours& c, VertexIndex v) { c[v] = colour_count(c); }

  static std::optional<std::uint32_t> first_nontrivial_cell(const Colours& c) {
    std::vector<std::uint32_t> size(colour_count(c), 0);
    for (std::uint32_t x : c) ++size[x];
    for (std::uint32_t k = 0; k < size.size(); ++k) {
      if (size[k] > 1) return k;
    }
    return std::nullopt;
  }

  static VertexIndex first_with_colour(const Colours& c, std::uint32_t colour) {
    return static_cast<VertexIndex>(std::find(c.begin(), c.end(), colour) - c.begin());
  }

  using Signature = std::vector<std::uint32_t>;

  std::vector<Signature> signatures(const Colours& c) const {
    std::vector<Signature> sig(c.size());
    for (VertexIndex v = 0; v < c.size(); ++v) {
      Signature& s = sig[v];
      g_.row(v).for_each_set([&](std::size_t u) { s.push_back(c[u]); });
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c[v]);
    }
    return sig;
  }

  // Refines both partitions with the same deterministic rule; false when the
  // two sides stop corresponding (no automorphism maps src cells to tgt cells).
  bool refine_pair(Colours& src, Colours& tgt) const {
    for (;;) {
      const std::uint32_t before = colour_count(src);
      auto ssig = signatures(src);
      auto tsig = &src == &tgt ? ssig : signatures(tgt);
      std::map<Signature, std::pair<std::uint32_t, std::int64_t>> table;
      for (const auto& s : ssig) ++table[s].second;
      for (const auto& s : tsig) {
        auto it = table.find(s);
        if (it == table.end()) return false;
        --it->second.second;
      }
      std::uint32_t next = 0;
      for (auto& [s, entry] : table) {
        if (entry.second != 0) return false;
        entry.first = next++;
      }
      for (VertexIndex v = 0; v < src.size(); ++v) src[v] = table[ssig[v]].first;
      if (&src != &tgt) {
        for (VertexIndex v = 0; v < tgt.size(); ++v) tgt[v] = table[tsig[v]].first;
      }
      if (next == before) return true;
    }
  }

  std::optional<Permutation> leaf(const Colours& src, const Colours& tgt) const {
    std::vector<VertexIndex> vertex_of(src.size());
    for (VertexIndex w = 0; w < tgt.size(); ++w) vertex_of[tgt[w]] = w;
    std::vector<std::uint32_t> img(src.size());
    for (VertexIndex v = 0; v < src.size(); ++v) img[v] = vertex_of[src[v]];
    for (VertexIndex v = 0; v < src.size(); ++v) {
      if (user_colours_[v] != user_colours_[img[v]]) return std::nullopt;
      if (g_.row(v).count() != g_.row(img[v]).count()) return std::nullopt;
      bool ok = true;
      g_.row(v).for_each_set([&](std::size_t u) { ok = ok && g_.adjacent(img[v], img[u]); });
      if (!ok) return std::nullopt;
    }
    return Permutation(std::move(img));
  }

  // Returns false once more than `limit` automorphisms were collected.
  bool enumerate_from(Colours& src, Colours& tgt, std::vector<Permutation>& out,
                      std::size_t limit) const {
    if (!refine_pair(src, tgt)) return true;
    const auto cell = first_nontrivial_cell(src);
    if (!cell) {
      if (auto p = leaf(src, tgt)) {
        out.push_back(std::move(*p));
        if (out.size() > limit) return false;
      }
      return true;
    }
    const VertexIndex v = first_with_colour(src, *cell);
    for (VertexIndex w = 0; w < tgt.size(); ++w) {
      if (tgt[w] != *cell) continue;
      Colours s2 = src;
      Colours t2 = tgt;
      individualize(s2, v);
      individualize(t2, w);
      if (!enumerate_from(s2, t2, out, limit)) return false;
    }
    return true;
  }

  void find_first(Colours& src, Colours& tgt, std::vector<Permutation>& out) const {
    // A limit of zero aborts at the first automorphism found.
    enumerate_from(src, tgt, out, 0);
  }

  const NzcGraph& g_;
  std::vector<std::uint32_t> user_colours_;
  Colours initial_;
};

}  // namespace nzc

#endif  // NZC_SEARCH_HPP_
