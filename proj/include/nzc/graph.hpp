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

// The non-zero component graph G(V): vertices are the non-zero vectors, and
// two distinct vertices are adjacent iff their skeletons intersect.

#ifndef NZC_GRAPH_HPP_
#define NZC_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nzc/bitset.hpp"
#include "nzc/error.hpp"
#include "nzc/vectorspace.hpp"

namespace nzc {

using VertexIndex = std::uint32_t;

class NzcGraph {
 public:
  static NzcGraph build(SpaceParams p, std::uint64_t vertex_cap = kDefaultVertexCap) {
    NzcGraph g;
    g.params_ = p;
    g.vertices_ = enumerate_vectors(p, vertex_cap);
    g.index_skeletons();

    // One row per distinct skeleton mask, then copied to its twins.
    const std::size_t v = g.vertices_.size();
    std::vector<DynamicBitset> containing(static_cast<std::size_t>(p.n), DynamicBitset(v));
    for (std::size_t u = 0; u < v; ++u) {
      const std::uint32_t m = g.masks_[u];
      for (int i = 0; i < p.n; ++i) {
        if ((m >> i) & 1u) containing[static_cast<std::size_t>(i)].set(u);
      }
    }
    std::map<std::uint32_t, DynamicBitset> by_mask;
    g.adjacency_.reserve(v);
    for (std::size_t u = 0; u < v; ++u) {
      const std::uint32_t m = g.masks_[u];
      auto it = by_mask.find(m);
      if (it == by_mask.end()) {
        DynamicBitset row(v);
        for (int i = 0; i < p.n; ++i) {
          if ((m >> i) & 1u) row |= containing[static_cast<std::size_t>(i)];
        }
        it = by_mask.emplace(m, std::move(row)).first;
      }
      g.adjacency_.push_back(it->second);
      g.adjacency_.back().reset(u);
    }
    return g;
  }

  // Rebuilds a graph from serialized parts. Vertex order and edges are taken
  // as given; classes and twin sets are derived from the coefficient tuples.
  static NzcGraph from_parts(SpaceParams p, std::vector<Vector> vertices,
                             std::span<const std::pair<VertexIndex, VertexIndex>> edges) {
    NzcGraph g;
    g.params_ = p;
    for (const Vector& x : vertices) {
      if (x.dimension() != p.n) throw Error(ErrorKind::kInvalidArgument, "vector length != n");
    }
    g.vertices_ = std::move(vertices);
    g.index_skeletons();
    const std::size_t v = g.vertices_.size();
    g.adjacency_.assign(v, DynamicBitset(v));
    for (auto [a, b] : edges) {
      if (a >= v || b >= v || a == b) throw Error(ErrorKind::kInvalidArgument, "bad edge");
      g.adjacency_[a].set(b);
      g.adjacency_[b].set(a);
    }
    return g;
  }

  const SpaceParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  const Vector& vertex(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }

  Skeleton skeleton(VertexIndex v) const { return Skeleton(masks_.at(v), params_.n); }
  std::uint32_t skeleton_mask(VertexIndex v) const noexcept { return masks_[v]; }
  int skeleton_class(VertexIndex v) const noexcept { return std::popcount(masks_[v]); }

  bool adjacent(VertexIndex u, VertexIndex v) const noexcept { return adjacency_[u].test(v); }
  const DynamicBitset& row(VertexIndex v) const noexcept { return adjacency_[v]; }

  std::size_t degree(VertexIndex v) const {
    if (v >= size()) throw Error(ErrorKind::kOutOfRange, "vertex index " + std::to_string(v));
    return adjacency_[v].count();
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& r : adjacency_) total += r.count();
    return total / 2;
  }

  // Vertices of T_i, 1 <= i <= n, in canonical order.
  const std::vector<VertexIndex>& t_class(int i) const {
    if (i < 1 || i > params_.n) throw Error(ErrorKind::kOutOfRange, "class index");
    return t_classes_[static_cast<std::size_t>(i - 1)];
  }

  // Maximal sets of vertices with identical skeletons, ordered by first member.
  const std::vector<std::vector<VertexIndex>>& twin_sets() const noexcept { return twin_sets_; }

  // Canonical index of a vector: radix value - 1.
  VertexIndex index_of(const Vector& x) const {
    const std::uint64_t r = radix_value(x, params_.q);
    if (r == 0 || r > size()) throw Error(ErrorKind::kOutOfRange, "vector not in graph");
    return static_cast<VertexIndex>(r - 1);
  }

  // Index of b_k (1-based k).
  VertexIndex basis_vertex(int k) const { return index_of(Vector::basis(k, params_)); }

  // For q = 2 a skeleton determines its vertex; the radix value of the 0/1
  // tuple is the mask itself.
  VertexIndex vertex_with_mask(std::uint32_t mask) const {
    if (params_.q != 2) throw Error(ErrorKind::kUnsupportedQ, "skeleton lookup needs q = 2");
    if (mask == 0 || mask > size()) throw Error(ErrorKind::kOutOfRange, "mask");
    return static_cast<VertexIndex>(mask - 1);
  }

  friend bool operator==(const NzcGraph& a, const NzcGraph& b) {
    return a.params_ == b.params_ && a.vertices_ == b.vertices_ &&
           a.adjacency_ == b.adjacency_ && a.t_classes_ == b.t_classes_ &&
           a.twin_sets_ == b.twin_sets_;
  }

 private:
  NzcGraph() = default;

  void index_skeletons() {
    masks_.clear();
    t_classes_.assign(static_cast<std::size_t>(params_.n), {});
    twin_sets_.clear();
    std::map<std::uint32_t, std::size_t> twin_slot;
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
      const std::uint32_t m = nzc::skeleton(vertices_[u]).mask();
      masks_.push_back(m);
      const auto vi = static_cast<VertexIndex>(u);
      t_classes_[static_cast<std::size_t>(std::popcount(m) - 1)].push_back(vi);
      auto [it, inserted] = twin_slot.emplace(m, twin_sets_.size());
      if (inserted) twin_sets_.emplace_back();
      twin_sets_[it->second].push_back(vi);
    }
  }

  SpaceParams params_;
  std::vector<Vector> vertices_;
  std::vector<std::uint32_t> masks_;
  std::vector<DynamicBitset> adjacency_;
  std::vector<std::vector<VertexIndex>> t_classes_;
  std::vector<std::vector<VertexIndex>> twin_sets_;
};

inline std::size_t degree(const NzcGraph& g, VertexIndex v) { return g.degree(v); }

// Adjacency must be symmetric and irreflexive, and must coincide with
// skeleton intersection.
inline bool adjacency_is_consistent(const NzcGraph& g) {
  const auto n = static_cast<VertexIndex>(g.size());
  for (VertexIndex u = 0; u < n; ++u) {
    if (g.adjacent(u, u)) return false;
    for (VertexIndex v = u + 1; v < n; ++v) {
      const bool a = g.adjacent(u, v);
      if (a != g.adjacent(v, u)) return false;
      if (a != ((g.skeleton_mask(u) & g.skeleton_mask(v)) != 0)) return false;
    }
  }
  return true;
}

struct DegreeEntry {
  VertexIndex vertex = 0;
  int skeleton_size = 0;
  std::uint64_t computed = 0;
  std::uint64_t expected = 0;
};

struct DegreeReport {
  // false for the generalized q^n - q^(n-s) - 1 form, which is derived here
  // rather than taken from the literature.
  bool closed_form = true;
  std::vector<DegreeEntry> entries;
  std::size_t matched = 0;

  bool passed() const noexcept { return matched == entries.size(); }
};

namespace detail {

template <class Formula>
DegreeReport degree_report(const NzcGraph& g, bool closed, Formula&& formula) {
  DegreeReport rep;
  rep.closed_form = closed;
  const auto n = static_cast<VertexIndex>(g.size());
  rep.entries.reserve(n);
  for (VertexIndex v = 0; v < n; ++v) {
    DegreeEntry e{v, g.skeleton_class(v), g.degree(v), formula(g.skeleton_class(v))};
    if (e.computed == e.expected) ++rep.matched;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace detail

// deg(v) = (2^s - 1) 2^(n-s) - 1 for v in T_s; stated for q = 2 only.
inline DegreeReport check_degree_formula(const NzcGraph& g) {
  if (g.params().q != 2) {
    throw Error(ErrorKind::kUnsupportedQ, "degree formula is stated for q = 2 only");
  }
  const int n = g.params().n;
  return detail::degree_report(g, true, [n](int s) {
    return ((std::uint64_t{1} << s) - 1) * (std::uint64_t{1} << (n - s)) - 1;
  });
}

// deg(v) = q^n - q^(n-s) - 1: every vertex whose skeleton meets S_v, minus v.
inline DegreeReport check_generalized_degree_formula(const NzcGraph& g) {
  const auto [n, q] = g.params();
  return detail::degree_report(g, false, [n = n, q = q](int s) {
    return ipow(static_cast<std::uint64_t>(q), n) -
           ipow(static_cast<std::uint64_t>(q), n - s) - 1;
  });
}

inline std::vector<std::vector<VertexIndex>> twin_partition(const NzcGraph& g) {
  return g.twin_sets();
}

// Groups vertices by equal closed neighbourhood N[v], the definitional notion
// of (true) twins. Used to validate twin_partition.
inline std::vector<std::vector<VertexIndex>> twin_partition_by_neighborhood(const NzcGraph& g) {
  std::map<std::vector<std::uint64_t>, std::size_t> slot;
  std::vector<std::vector<VertexIndex>> out;
  const auto n = static_cast<VertexIndex>(g.size());
  for (VertexIndex v = 0; v < n; ++v) {
    DynamicBitset closed = g.row(v);
    closed.set(v);
    auto [it, inserted] = slot.emplace(closed.words(), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

// Number of u in T_i with b_l in S_u and b_m not in S_u; each pairs with the
// vertex obtained by swapping b_l and b_m in its skeleton.
inline std::uint64_t count_distinguishing_pairs(const NzcGraph& g, int l, int m, int i) {
  const auto [n, q] = g.params();
  if (q != 2) throw Error(ErrorKind::kUnsupportedQ, "pair count is defined for q = 2");
  if (l < 1 || l > n || m < 1 || m > n || l == m) {
    throw Error(ErrorKind::kPrecondition, "need distinct basis indices l, m in 1..n");
  }
  if (i < 1 || i > n - 1) throw Error(ErrorKind::kPrecondition, "need 1 <= i <= n-1");
  const std::uint32_t bl = 1u << (l - 1);
  const std::uint32_t bm = 1u << (m - 1);
  std::uint64_t count = 0;
  for (VertexIndex u : g.t_class(i)) {
    const std::uint32_t s = g.skeleton_mask(u);
    if ((s & bl) != 0 && (s & bm) == 0) ++count;
  }
  return count;
}

}  // namespace nzc

#endif  // NZC_GRAPH_HPP_
