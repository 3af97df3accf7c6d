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

// Distinguishing labelings: checks, the explicit 2-colourings for q = 2, the
// twin-injective colourings for q >= 3, and the exact / bounded search for
// the distinguishing number.

#ifndef NZC_DISTINGUISHING_HPP_
#define NZC_DISTINGUISHING_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nzc/error.hpp"
#include "nzc/graph.hpp"
#include "nzc/permutation.hpp"
#include "nzc/search.hpp"
#include "nzc/symmetry.hpp"

namespace nzc {

// f : V -> {1, ..., t}.
class Labeling {
 public:
  Labeling(std::vector<std::uint32_t> colours, std::uint32_t t) : colours_(std::move(colours)), t_(t) {
    if (t_ < 1 || t_ > std::max<std::size_t>(colours_.size(), 1)) {
      throw Error(ErrorKind::kInvalidArgument, "colour count t must be in 1..|V|");
    }
    for (std::uint32_t c : colours_) {
      if (c < 1 || c > t_) throw Error(ErrorKind::kInvalidArgument, "colour outside 1..t");
    }
  }

  static Labeling constant(std::size_t vertices) {
    return Labeling(std::vector<std::uint32_t>(vertices, 1), 1);
  }

  static Labeling all_distinct(std::size_t vertices) {
    std::vector<std::uint32_t> c(vertices);
    for (std::size_t v = 0; v < vertices; ++v) c[v] = static_cast<std::uint32_t>(v + 1);
    return Labeling(std::move(c), static_cast<std::uint32_t>(vertices));
  }

  std::uint32_t operator[](VertexIndex v) const noexcept { return colours_[v]; }
  std::uint32_t t() const noexcept { return t_; }
  std::size_t size() const noexcept { return colours_.size(); }
  const std::vector<std::uint32_t>& colours() const noexcept { return colours_; }

  std::size_t colours_used() const {
    return std::set<std::uint32_t>(colours_.begin(), colours_.end()).size();
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::uint32_t> colours_;
  std::uint32_t t_;
};

inline bool preserves(const Permutation& p, const Labeling& f) {
  for (VertexIndex v = 0; v < p.size(); ++v) {
    if (f[p(v)] != f[v]) return false;
  }
  return true;
}

// Decides distinguishing-ness with the refinement engine alone: the labeling is
// distinguishing iff the colour-preserving automorphism group is trivial.
inline bool is_distinguishing_by_search(const NzcGraph& g, const Labeling& f) {
  return RefinementSearch(g, f.colours()).chain().order == 1;
}

// True iff no non-identity element of `grp` preserves f. `grp` must be the
// full automorphism group of g; chain groups are decided by search.
inline bool is_distinguishing(const NzcGraph& g, const AutGroup& grp, const Labeling& f) {
  if (f.size() != g.size()) throw Error(ErrorKind::kInvalidArgument, "labeling size != |V|");
  switch (grp.kind()) {
    case AutGroup::Kind::kExplicit:
      return std::none_of(grp.elements().begin(), grp.elements().end(), [&](const Permutation& p) {
        return !p.is_identity() && preserves(p, f);
      });
    case AutGroup::Kind::kStructural: {
      // Images computed lazily along increasing masks; stops at the first
      // colour clash.
      const int n = grp.basis_size();
      const std::uint32_t total = 1u << n;
      std::vector<std::uint32_t> sigma(static_cast<std::size_t>(n));
      std::iota(sigma.begin(), sigma.end(), 0u);
      std::vector<std::uint32_t> img(total, 0);
      while (std::next_permutation(sigma.begin(), sigma.end())) {
        bool preserved = true;
        for (std::uint32_t m = 1; m < total && preserved; ++m) {
          img[m] = img[m & (m - 1)] | (1u << sigma[static_cast<std::size_t>(std::countr_zero(m))]);
          preserved = f[img[m] - 1] == f[m - 1];
        }
        if (preserved) return false;
      }
      return true;
    }
    case AutGroup::Kind::kChain:
      return is_distinguishing_by_search(g, f);
  }
  return false;
}

enum class TnMinus1Rule {
  // Colour 1 iff S_u is {b_2..b_floor(n/2)} or {b_floor(n/2)+2..b_n}, read
  // literally (these sets never have n-1 elements, so T_{n-1} is all 2).
  kLiteral,
  // Colour 1 iff S_u misses exactly b_1 or exactly b_floor(n/2)+1.
  kComplement,
};

// Two-colouring for q = 2, n >= 3. Rules run in the order T_1, T_{n-1}, T_2
// (the last one wins when n = 3 and T_{n-1} = T_2); every other class gets 2.
inline Labeling two_colouring_q2(const NzcGraph& g, TnMinus1Rule rule = TnMinus1Rule::kLiteral) {
  const int n = g.params().n;
  if (g.params().q != 2) throw Error(ErrorKind::kPrecondition, "two-colouring needs q = 2");
  if (n < 3) throw Error(ErrorKind::kPrecondition, "two-colouring needs n >= 3");
  const int half = n / 2;
  auto range = [](int lo, int hi) {
    std::uint32_t m = 0;
    for (int i = lo; i <= hi; ++i) m |= 1u << (i - 1);
    return m;
  };
  const std::uint32_t full = range(1, n);
  std::vector<std::uint32_t> colour(g.size(), 2);

  for (int i = 1; i <= half; ++i) colour[g.basis_vertex(i)] = 1;

  std::uint32_t first = 0;
  std::uint32_t second = 0;
  if (rule == TnMinus1Rule::kLiteral) {
    first = range(2, half);
    second = range(half + 2, n);
  } else {
    first = full & ~range(1, 1);
    second = full & ~range(half + 1, half + 1);
  }
  for (VertexIndex u : g.t_class(n - 1)) {
    const std::uint32_t s = g.skeleton_mask(u);
    colour[u] = (s == first || s == second) ? 1 : 2;
  }

  for (VertexIndex u : g.t_class(2)) {
    const std::uint32_t s = g.skeleton_mask(u);
    const bool consecutive = (s & (s >> 1)) != 0;
    colour[u] = consecutive ? 1 : 2;
  }
  return Labeling(std::move(colour), 2);
}

struct ClassTally {
  std::string label;
  int skeleton_class = 0;
  std::uint64_t tally = 0;
  std::uint64_t expected = 0;
  // The transpositions (l, m), 1-based, attributed to this class.
  std::vector<std::pair<int, int>> transpositions;

  bool matches() const noexcept { return tally == expected; }
};

struct TranspositionReport {
  int n = 0;
  std::vector<ClassTally> classes;  // T_1, T_{n-1}, T_2 in that order
  std::uint64_t total = 0;          // C(n, 2)
  std::vector<std::pair<int, int>> uncovered;

  bool covers_all() const noexcept { return uncovered.empty(); }
  bool tallies_match() const noexcept {
    return std::all_of(classes.begin(), classes.end(), [](const ClassTally& c) { return c.matches(); });
  }
};

// Closed forms for the number of basis transpositions broken by T_1, T_{n-1}
// and T_2 respectively under the two-colouring.
inline std::uint64_t expected_tally_t1(int n) {
  const auto m = static_cast<std::uint64_t>(n);
  return n % 2 == 0 ? m * m / 4 : (m * m - 1) / 4;
}
inline std::uint64_t expected_tally_tn1(int n) { return static_cast<std::uint64_t>(n - 2); }
inline std::uint64_t expected_tally_t2(int n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(n % 2 == 0 ? (m * m - 6 * m + 8) / 4 : (m * m - 6 * m + 9) / 4);
}

// For each transposition (l m) of basis vectors, finds the first class among
// T_1, T_{n-1}, T_2 containing a vertex whose image under the transposition's
// extension has a different colour, and tallies per class.
inline TranspositionReport destroyed_transpositions(const NzcGraph& g, const Labeling& f) {
  const int n = g.params().n;
  if (g.params().q != 2) throw Error(ErrorKind::kPrecondition, "transposition tallies need q = 2");
  if (n < 3) throw Error(ErrorKind::kPrecondition, "transposition tallies need n >= 3");
  TranspositionReport rep;
  rep.n = n;
  rep.total = binomial(n, 2);
  rep.classes = {{"T_1", 1, 0, expected_tally_t1(n), {}},
                 {"T_{n-1}", n - 1, 0, expected_tally_tn1(n), {}},
                 {"T_2", 2, 0, expected_tally_t2(n), {}}};
  for (int l = 1; l <= n; ++l) {
    for (int m = l + 1; m <= n; ++m) {
      const std::uint32_t bl = 1u << (l - 1);
      const std::uint32_t bm = 1u << (m - 1);
      auto swapped = [&](std::uint32_t s) {
        const bool has_l = (s & bl) != 0;
        const bool has_m = (s & bm) != 0;
        s &= ~(bl | bm);
        return s | (has_l ? bm : 0u) | (has_m ? bl : 0u);
      };
      bool attributed = false;
      for (auto& cls : rep.classes) {
        bool broken = false;
        for (VertexIndex u : g.t_class(cls.skeleton_class)) {
          if (f[g.vertex_with_mask(swapped(g.skeleton_mask(u)))] != f[u]) {
            broken = true;
            break;
          }
        }
        if (broken) {
          ++cls.tally;
          cls.transpositions.emplace_back(l, m);
          attributed = true;
          break;
        }
      }
      if (!attributed) rep.uncovered.emplace_back(l, m);
    }
  }
  return rep;
}

// For u, v in the same T_i with b_l in S_u - S_v, b_m in S_v - S_u and
// f(u) != f(v): true iff every element of grp exchanging b_l and b_m fails to
// preserve f.
inline bool check_lem_diff_labels(const NzcGraph& g, const AutGroup& grp, const Labeling& f,
                                  VertexIndex u, VertexIndex v, int l, int m) {
  const int n = g.params().n;
  if (g.params().q != 2) throw Error(ErrorKind::kPrecondition, "needs q = 2");
  if (u >= g.size() || v >= g.size()) throw Error(ErrorKind::kOutOfRange, "vertex index");
  if (l < 1 || l > n || m < 1 || m > n || l == m) {
    throw Error(ErrorKind::kPrecondition, "need distinct basis indices");
  }
  const int cls = g.skeleton_class(u);
  if (cls != g.skeleton_class(v) || cls < 2 || cls > n - 1) {
    throw Error(ErrorKind::kPrecondition, "u and v must share a class T_i with 2 <= i <= n-1");
  }
  const Skeleton su = g.skeleton(u);
  const Skeleton sv = g.skeleton(v);
  if (!(su.contains(l) && !sv.contains(l) && sv.contains(m) && !su.contains(m))) {
    throw Error(ErrorKind::kPrecondition, "need b_l in S_u - S_v and b_m in S_v - S_u");
  }
  if (f[u] == f[v]) throw Error(ErrorKind::kPrecondition, "need f(u) != f(v)");
  const VertexIndex bl = g.basis_vertex(l);
  const VertexIndex bm = g.basis_vertex(m);
  return grp.for_each([&](const Permutation& p) {
    if (p(bl) != bm || p(bm) != bl) return true;
    return !preserves(p, f);
  });
}

inline std::size_t twin_lower_bound(const NzcGraph& g) {
  std::size_t best = 0;
  for (const auto& t : g.twin_sets()) best = std::max(best, t.size());
  return best;
}

// Every twin set of T_i coloured 1..(q-1)^i in canonical order. Not
// distinguishing once n >= 2 and q >= 3: a basis transposition paired with the
// colour-matching bijection between twin sets preserves it.
inline Labeling twin_block_labeling(const NzcGraph& g) {
  std::vector<std::uint32_t> colour(g.size(), 1);
  std::uint32_t t = 1;
  for (const auto& twins : g.twin_sets()) {
    for (std::size_t r = 0; r < twins.size(); ++r) colour[twins[r]] = static_cast<std::uint32_t>(r + 1);
    t = std::max(t, static_cast<std::uint32_t>(twins.size()));
  }
  return Labeling(std::move(colour), t);
}

// Injective on every twin set, with (q-1)^n colours in total. The twin set of
// b_j (j = 0..n-1) takes the cyclic window j, j+1, ..., j+q-2 of the pool, so
// distinct basis twin sets carry distinct colour sets and no basis
// permutation other than the identity survives; all other twin sets of T_i
// use colours 1..(q-1)^i.
inline Labeling q3_constructive_labeling(const NzcGraph& g) {
  const auto [n, q] = g.params();
  if (q < 3) throw Error(ErrorKind::kPrecondition, "twin-injective labeling needs q >= 3");
  const auto pool = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(q - 1), n));
  std::vector<std::uint32_t> colour(g.size(), 1);
  for (const auto& twins : g.twin_sets()) {
    const std::uint32_t mask = g.skeleton_mask(twins.front());
    const std::uint32_t offset =
        std::popcount(mask) == 1 ? static_cast<std::uint32_t>(std::countr_zero(mask)) : 0u;
    for (std::size_t r = 0; r < twins.size(); ++r) {
      colour[twins[r]] = (offset + static_cast<std::uint32_t>(r)) % pool + 1;
    }
  }
  return Labeling(std::move(colour), pool);
}

struct DistConfig {
  std::size_t exact_cap = 30;
  // Largest group listed explicitly for the exact search.
  std::uint64_t group_cap = kDefaultElementCap;
  std::uint64_t node_budget = 50'000'000;
};

struct DistResult {
  enum class Method { kExact, kBounded };

  std::uint32_t lower = 1;
  std::uint32_t upper = 1;
  Labeling witness = Labeling::constant(1);
  Method method = Method::kBounded;
  std::string lower_source;
  std::string upper_source;
  std::uint64_t nodes = 0;

  std::optional<std::uint32_t> value() const {
    return lower == upper ? std::optional<std::uint32_t>(upper) : std::nullopt;
  }
};

namespace detail {

class ExactColouringSearch {
 public:
  ExactColouringSearch(std::size_t vertices, const std::vector<Permutation>& elements,
                       std::uint64_t budget)
      : vertices_(vertices), budget_(budget) {
    for (const auto& p : elements) {
      if (p.is_identity()) continue;
      perms_.push_back(p);
      inverses_.push_back(p.inverse());
      VertexIndex last = 0;
      for (VertexIndex v = 0; v < vertices; ++v) {
        if (p(v) != v) last = v;
      }
      support_end_.push_back(last);
    }
  }

  enum class Outcome { kFound, kNone, kBudget };

  Outcome run(std::uint32_t t) {
    t_ = t;
    colour_.assign(vertices_, kUncoloured);
    std::vector<std::uint32_t> alive(perms_.size());
    std::iota(alive.begin(), alive.end(), 0u);
    return extend(0, 0, alive);
  }

  const std::vector<std::uint32_t>& colouring() const noexcept { return colour_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static constexpr std::uint32_t kUncoloured = ~0u;

  // Colours vertices k.. in index order. `used` = number of colours so far.
  Outcome extend(VertexIndex k, std::uint32_t used, const std::vector<std::uint32_t>& alive) {
    if (alive.empty()) {
      for (VertexIndex v = k; v < vertices_; ++v) colour_[v] = 0;
      return Outcome::kFound;
    }
    if (k == vertices_) return Outcome::kNone;
    if (++nodes_ > budget_) return Outcome::kBudget;
    const std::uint32_t limit = std::min(t_, used + 1);
    std::vector<std::uint32_t> next;
    next.reserve(alive.size());
    for (std::uint32_t c = 0; c < limit; ++c) {
      colour_[k] = c;
      next.clear();
      bool dead = false;
      for (std::uint32_t a : alive) {
        const VertexIndex fwd = perms_[a](k);
        const VertexIndex back = inverses_[a](k);
        const bool broken = (fwd <= k && colour_[fwd] != c) || (back < k && colour_[back] != c);
        if (broken) continue;
        if (support_end_[a] <= k) {
          dead = true;
          break;
        }
        next.push_back(a);
      }
      if (dead) continue;
      const Outcome r = extend(k + 1, std::max(used, c + 1), next);
      if (r != Outcome::kNone) return r;
    }
    colour_[k] = kUncoloured;
    return Outcome::kNone;
  }

  std::size_t vertices_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint32_t t_ = 1;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
  std::vector<VertexIndex> support_end_;
  std::vector<std::uint32_t> colour_;
};

}  // namespace detail

// Least t admitting a t-distinguishing labeling. Exact when |V| <= exact_cap
// and the group can be listed; otherwise bounded by the twin-set size (and 2
// for a non-trivial group) from below and by a validated constructive
// labeling from above.
inline DistResult dist_number(const NzcGraph& g, const AutGroup& grp, DistConfig cfg = {}) {
  DistResult res;
  const auto twins = static_cast<std::uint32_t>(twin_lower_bound(g));
  res.lower = std::max<std::uint32_t>(twins, grp.order() > 1 ? 2 : 1);
  res.lower_source = grp.order() > 1 && twins < 2 ? "non-trivial group" : "twin " + std::to_string(twins);

  if (g.size() <= cfg.exact_cap && grp.order() <= cfg.group_cap) {
    const AutGroup listed = grp.materialized(cfg.group_cap);
    detail::ExactColouringSearch search(g.size(), listed.elements(), cfg.node_budget);
    for (std::uint32_t t = res.lower; t <= g.size(); ++t) {
      const auto outcome = search.run(t);
      res.nodes = search.nodes();
      if (outcome == detail::ExactColouringSearch::Outcome::kBudget) {
        // Every t' < t was refuted.
        if (t > res.lower) {
          res.lower = t;
          res.lower_source = "exact search refuted t <= " + std::to_string(t - 1);
        }
        break;
      }
      if (outcome == detail::ExactColouringSearch::Outcome::kFound) {
        std::vector<std::uint32_t> colours = search.colouring();
        for (auto& c : colours) ++c;
        res.lower = res.upper = t;
        res.witness = Labeling(std::move(colours), t);
        res.method = DistResult::Method::kExact;
        res.lower_source = res.upper_source = "exact search";
        return res;
      }
    }
  }

  std::optional<Labeling> candidate;
  const auto [n, q] = g.params();
  if (q == 2 && n >= 3) {
    candidate = two_colouring_q2(g);
    res.upper_source = "two-colouring";
  } else if (q >= 3) {
    candidate = q3_constructive_labeling(g);
    res.upper_source = "constructive";
  }
  if (candidate && is_distinguishing(g, grp, *candidate)) {
    res.witness = *candidate;
  } else {
    res.witness = grp.order() > 1 ? Labeling::all_distinct(g.size()) : Labeling::constant(g.size());
    res.upper_source = grp.order() > 1 ? "all-distinct" : "constant";
  }
  res.upper = res.witness.t();
  res.method = DistResult::Method::kBounded;
  return res;
}

}  // namespace nzc

#endif  // NZC_DISTINGUISHING_HPP_
