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

// Automorphism groups of G(V): the structural engine (extend every basis
// permutation along skeletons, q = 2 only), the refinement-search oracle, and
// orbit / stabilizer machinery shared by both.

#ifndef NZC_SYMMETRY_HPP_
#define NZC_SYMMETRY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nzc/error.hpp"
#include "nzc/graph.hpp"
#include "nzc/permutation.hpp"
#include "nzc/search.hpp"

namespace nzc {

inline constexpr std::size_t kDefaultOracleCap = 40;
inline constexpr std::size_t kDefaultElementCap = 200000;
inline constexpr std::uint64_t kDefaultMaterializeCap = 40320;

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

inline bool is_automorphism(const NzcGraph& g, const Permutation& p) {
  if (p.size() != g.size()) return false;
  const auto n = static_cast<VertexIndex>(g.size());
  for (VertexIndex u = 0; u < n; ++u) {
    if (g.row(u).count() != g.row(p(u)).count()) return false;
    bool ok = true;
    g.row(u).for_each_set([&](std::size_t v) {
      ok = ok && g.adjacent(p(u), p(static_cast<VertexIndex>(v)));
    });
    if (!ok) return false;
  }
  return true;
}

// A vertex permutation checked on construction to preserve adjacency and
// non-adjacency.
class Automorphism {
 public:
  Automorphism(const NzcGraph& g, Permutation p) : perm_(std::move(p)) {
    if (!is_automorphism(g, perm_)) {
      throw Error(ErrorKind::kInvalidArgument, "permutation is not an automorphism");
    }
  }

  const Permutation& perm() const noexcept { return perm_; }
  VertexIndex operator()(VertexIndex v) const noexcept { return perm_(v); }
  bool is_identity() const noexcept { return perm_.is_identity(); }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Permutation perm_;
};

// sigma on basis indices; operator() and the one-based constructor use 1..n.
class BasisPermutation {
 public:
  explicit BasisPermutation(Permutation p) : perm_(std::move(p)) {}

  static BasisPermutation identity(int n) {
    return BasisPermutation(Permutation::identity(static_cast<std::size_t>(n)));
  }

  static BasisPermutation from_one_based(const std::vector<int>& images) {
    std::vector<std::uint32_t> img;
    img.reserve(images.size());
    for (int x : images) {
      if (x < 1) throw Error(ErrorKind::kInvalidArgument, "basis index must be >= 1");
      img.push_back(static_cast<std::uint32_t>(x - 1));
    }
    return BasisPermutation(Permutation(std::move(img)));
  }

  // Transposition (l m), 1-based.
  static BasisPermutation transposition(int n, int l, int m) {
    std::vector<std::uint32_t> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img.at(static_cast<std::size_t>(l - 1)), img.at(static_cast<std::size_t>(m - 1)));
    return BasisPermutation(Permutation(std::move(img)));
  }

  int dimension() const noexcept { return static_cast<int>(perm_.size()); }
  int operator()(int i) const noexcept {
    return static_cast<int>(perm_(static_cast<std::uint32_t>(i - 1))) + 1;
  }
  const Permutation& perm() const noexcept { return perm_; }

  friend BasisPermutation operator*(const BasisPermutation& a, const BasisPermutation& b) {
    return BasisPermutation(a.perm_ * b.perm_);
  }
  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  Permutation perm_;
};

inline std::uint32_t permute_mask(std::uint32_t mask, std::span<const std::uint32_t> sigma) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if ((mask >> i) & 1u) out |= 1u << sigma[i];
  }
  return out;
}

namespace detail {

// Image masks of every mask 1..2^n-1 under sigma, in O(2^n).
inline void extend_masks(std::span<const std::uint32_t> sigma, std::vector<std::uint32_t>& img) {
  const std::uint32_t total = 1u << sigma.size();
  img.assign(total, 0);
  for (std::uint32_t m = 1; m < total; ++m) {
    const int low = std::countr_zero(m);
    img[m] = img[m & (m - 1)] | (1u << sigma[static_cast<std::size_t>(low)]);
  }
}

inline void require_q2(const NzcGraph& g, const char* what) {
  if (g.params().q != 2) {
    throw Error(ErrorKind::kUnsupportedQ,
                std::string(what) + " requires q = 2 (a skeleton determines a unique vertex)");
  }
}

inline Permutation extend_raw(std::span<const std::uint32_t> sigma) {
  std::vector<std::uint32_t> masks;
  extend_masks(sigma, masks);
  std::vector<std::uint32_t> img(masks.size() - 1);
  for (std::size_t u = 0; u < img.size(); ++u) img[u] = masks[u + 1] - 1;
  return Permutation(std::move(img));
}

}  // namespace detail

// Maps u to the unique vertex whose skeleton is h(S_u).
inline Automorphism extend_basis_permutation(const NzcGraph& g, const BasisPermutation& h) {
  detail::require_q2(g, "extend_basis_permutation");
  if (h.dimension() != g.params().n) throw Error(ErrorKind::kInvalidArgument, "sigma has wrong size");
  return Automorphism(g, detail::extend_raw(h.perm().image()));
}

// The permutation an automorphism induces on the basis vectors b_1..b_n.
inline BasisPermutation restrict_to_basis(const Automorphism& a, const NzcGraph& g) {
  detail::require_q2(g, "restrict_to_basis");
  const int n = g.params().n;
  std::vector<std::uint32_t> img(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const VertexIndex image = a(g.basis_vertex(k));
    if (g.skeleton_class(image) != 1) {
      throw Error(ErrorKind::kPrecondition,
                  "automorphism maps b" + std::to_string(k) + " outside T_1");
    }
    img[static_cast<std::size_t>(k - 1)] =
        static_cast<std::uint32_t>(std::countr_zero(g.skeleton_mask(image)));
  }
  return BasisPermutation(Permutation(std::move(img)));
}

// An automorphism group. Three representations:
//  - explicit: every element stored (sorted);
//  - structural: the n! skeleton extensions of S_n, generated on demand (q = 2);
//  - chain: a stabilizer chain from the oracle, for groups too large to list.
class AutGroup {
 public:
  enum class Kind { kExplicit, kStructural, kChain };

  static AutGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                std::vector<Permutation> generators = {}) {
    AutGroup grp;
    grp.kind_ = Kind::kExplicit;
    grp.degree_ = degree;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    grp.order_ = elements.size();
    grp.generators_ = generators.empty() ? non_identity(elements) : std::move(generators);
    grp.elements_ = std::move(elements);
    return grp;
  }

  static AutGroup structural(int n) {
    AutGroup grp;
    grp.kind_ = Kind::kStructural;
    grp.n_ = n;
    grp.degree_ = (std::size_t{1} << n) - 1;
    grp.order_ = factorial(n);
    grp.generators_ = symmetric_generators(n);
    return grp;
  }

  static AutGroup from_chain(std::size_t degree, StabilizerChain chain) {
    AutGroup grp;
    grp.kind_ = Kind::kChain;
    grp.degree_ = degree;
    grp.order_ = chain.order;
    grp.generators_ = chain.generators();
    grp.chain_ = std::move(chain);
    return grp;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::optional<StabilizerChain>& chain() const noexcept { return chain_; }
  // Dimension n for structural groups, 0 otherwise.
  int basis_size() const noexcept { return n_; }

  const std::vector<Permutation>& elements() const {
    if (kind_ != Kind::kExplicit) throw Error(ErrorKind::kPrecondition, "group is not explicit");
    return elements_;
  }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements().begin(), elements().end(), p);
  }

  // Calls f(element) for every element until f returns false. Returns false
  // iff stopped early.
  template <class F>
  bool for_each(F&& f) const {
    switch (kind_) {
      case Kind::kExplicit:
        for (const auto& p : elements_) {
          if (!f(p)) return false;
        }
        return true;
      case Kind::kStructural: {
        std::vector<std::uint32_t> sigma(static_cast<std::size_t>(n_));
        std::iota(sigma.begin(), sigma.end(), 0u);
        do {
          if (!f(detail::extend_raw(sigma))) return false;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return true;
      }
      case Kind::kChain: {
        Permutation acc = Permutation::identity(degree_);
        return chain_products(0, acc, f);
      }
    }
    return true;
  }

  // Explicit copy of the elements; kCapExceeded beyond `cap`.
  AutGroup materialized(std::uint64_t cap = kDefaultMaterializeCap) const {
    if (kind_ == Kind::kExplicit) return *this;
    if (order_ > cap) throw Error(ErrorKind::kCapExceeded, "group too large to materialize");
    std::vector<Permutation> all;
    all.reserve(order_);
    for_each([&](const Permutation& p) {
      all.push_back(p);
      return true;
    });
    return from_elements(degree_, std::move(all), generators_);
  }

 private:
  static std::vector<Permutation> non_identity(const std::vector<Permutation>& elems) {
    std::vector<Permutation> out;
    for (const auto& p : elems) {
      if (!p.is_identity()) out.push_back(p);
    }
    return out;
  }

  // Extensions of (1 2) and (1 2 ... n), which generate S_n.
  static std::vector<Permutation> symmetric_generators(int n) {
    std::vector<Permutation> out;
    if (n < 2) return out;
    std::vector<std::uint32_t> swap12(static_cast<std::size_t>(n));
    std::iota(swap12.begin(), swap12.end(), 0u);
    std::swap(swap12[0], swap12[1]);
    out.push_back(detail::extend_raw(swap12));
    if (n > 2) {
      std::vector<std::uint32_t> cycle(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((i + 1) % n);
      out.push_back(detail::extend_raw(cycle));
    }
    return out;
  }

  // Every element is uniquely u_0 * u_1 * ... * u_k with u_i from level i.
  template <class F>
  bool chain_products(std::size_t level, const Permutation& acc, F& f) const {
    if (level == chain_->transversals.size()) return f(acc);
    for (const auto& [point, rep] : chain_->transversals[level]) {
      if (!chain_products(level + 1, acc * rep, f)) return false;
    }
    return true;
  }

  Kind kind_ = Kind::kExplicit;
  std::size_t degree_ = 0;
  std::uint64_t order_ = 0;
  int n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::optional<StabilizerChain> chain_;
};

// {extend(h) : h in S_n}. Listed explicitly when n! <= materialize_cap,
// otherwise kept structural and generated on demand.
inline AutGroup aut_group_structural(const NzcGraph& g,
                                     std::uint64_t materialize_cap = kDefaultMaterializeCap) {
  detail::require_q2(g, "structural engine");
  AutGroup grp = AutGroup::structural(g.params().n);
  if (grp.order() <= materialize_cap) return grp.materialized(materialize_cap);
  return grp;
}

struct OracleConfig {
  std::size_t vertex_cap = kDefaultOracleCap;
  // Groups with more elements are returned as a stabilizer chain.
  std::size_t element_cap = kDefaultElementCap;
};

// All adjacency-preserving vertex permutations, found by refinement search
// without reference to skeletons.
inline AutGroup aut_group_oracle(const NzcGraph& g, OracleConfig cfg = {}) {
  if (g.size() > cfg.vertex_cap) {
    throw Error(ErrorKind::kCapExceeded, "graph has " + std::to_string(g.size()) +
                                             " vertices, oracle cap is " +
                                             std::to_string(cfg.vertex_cap));
  }
  RefinementSearch search(g);
  StabilizerChain chain = search.chain();
  if (chain.order > cfg.element_cap) return AutGroup::from_chain(g.size(), std::move(chain));
  auto elements = search.enumerate(cfg.element_cap);
  if (!elements || elements->size() != chain.order) {
    throw Error(ErrorKind::kPrecondition, "oracle enumeration disagrees with its stabilizer chain");
  }
  return AutGroup::from_elements(g.size(), std::move(*elements), chain.generators());
}

struct GroupAxiomReport {
  bool has_identity = false;
  bool has_inverses = false;
  bool closed = false;
  // true when closure was checked on all pairs, false when only products
  // with the generators were checked.
  bool exhaustive_closure = false;
  std::uint64_t order = 0;

  bool passed() const noexcept { return has_identity && has_inverses && closed; }
};

inline GroupAxiomReport check_group_axioms(const AutGroup& grp, std::size_t pairwise_cap = 2000) {
  GroupAxiomReport rep;
  const auto& elems = grp.elements();
  rep.order = elems.size();
  rep.has_identity = grp.contains(Permutation::identity(grp.degree()));
  rep.has_inverses = std::all_of(elems.begin(), elems.end(),
                                 [&](const Permutation& p) { return grp.contains(p.inverse()); });
  rep.exhaustive_closure = elems.size() <= pairwise_cap;
  const auto& left = rep.exhaustive_closure ? elems : grp.generators();
  rep.closed = true;
  for (const auto& a : left) {
    for (const auto& b : elems) {
      if (!grp.contains(a * b)) {
        rep.closed = false;
        return rep;
      }
    }
  }
  return rep;
}

struct PsiReport {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t homomorphism_failures = 0;
  std::optional<bool> injective;
  // Set when the oracle group was available for comparison.
  std::optional<bool> surjective;
  std::optional<bool> round_trip;

  bool passed() const noexcept {
    return homomorphism_failures == 0 && injective.value_or(true) && surjective.value_or(true) &&
           round_trip.value_or(true);
  }
};

// extend(h1 h2) = extend(h1) extend(h2): on all pairs for n <= 4, otherwise on
// `samples` random pairs. Bijectivity is checked against `oracle` when given.
inline PsiReport check_psi_isomorphism(const NzcGraph& g, std::uint64_t samples,
                                       std::uint64_t seed = 1,
                                       const AutGroup* oracle = nullptr) {
  detail::require_q2(g, "check_psi_isomorphism");
  const int n = g.params().n;
  PsiReport rep;
  auto check_pair = [&](const std::vector<std::uint32_t>& s1, const std::vector<std::uint32_t>& s2) {
    const Permutation h1(s1);
    const Permutation h2(s2);
    const Permutation lhs = detail::extend_raw((h1 * h2).image());
    const Permutation rhs = detail::extend_raw(s1) * detail::extend_raw(s2);
    ++rep.pairs_checked;
    if (lhs != rhs) ++rep.homomorphism_failures;
  };
  std::vector<std::uint32_t> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0u);
  if (n <= 4) {
    rep.exhaustive = true;
    std::vector<std::vector<std::uint32_t>> all;
    auto s = id;
    do all.push_back(s); while (std::next_permutation(s.begin(), s.end()));
    for (const auto& a : all) {
      for (const auto& b : all) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
      auto a = id;
      auto b = id;
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      check_pair(a, b);
    }
  }
  if (factorial(n) <= kDefaultMaterializeCap) {
    std::unordered_set<Permutation, PermutationHash> images;
    auto s = id;
    do images.insert(detail::extend_raw(s)); while (std::next_permutation(s.begin(), s.end()));
    rep.injective = images.size() == factorial(n);
    if (oracle != nullptr) {
      bool onto = oracle->order() == images.size();
      bool round_trip = true;
      oracle->for_each([&](const Permutation& p) {
        onto = onto && images.count(p) != 0;
        const Automorphism a(g, p);
        round_trip = round_trip && extend_basis_permutation(g, restrict_to_basis(a, g)) == a;
        return onto && round_trip;
      });
      rep.surjective = onto;
      rep.round_trip = round_trip;
    }
  }
  return rep;
}

// Orbit partition, ordered by smallest member.
inline std::vector<std::vector<VertexIndex>> orbits(const AutGroup& grp) {
  std::vector<VertexIndex> parent(grp.degree());
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<VertexIndex(VertexIndex)> root = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& perms = grp.kind() == AutGroup::Kind::kExplicit ? grp.elements() : grp.generators();
  for (const auto& p : perms) {
    for (VertexIndex v = 0; v < grp.degree(); ++v) {
      const VertexIndex a = root(v);
      const VertexIndex b = root(p(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<VertexIndex>> out;
  std::vector<std::size_t> slot(grp.degree(), SIZE_MAX);
  for (VertexIndex v = 0; v < grp.degree(); ++v) {
    const VertexIndex r = root(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline std::vector<VertexIndex> orbit_of(const AutGroup& grp, VertexIndex v) {
  for (auto& o : orbits(grp)) {
    if (std::find(o.begin(), o.end(), v) != o.end()) return o;
  }
  return {};
}

// Subgroup fixing v, listed explicitly.
inline AutGroup stabilizer(const AutGroup& grp, VertexIndex v) {
  std::vector<Permutation> fixing;
  grp.for_each([&](const Permutation& p) {
    if (p(v) == v) fixing.push_back(p);
    return true;
  });
  return AutGroup::from_elements(grp.degree(), std::move(fixing));
}

// S(G): vertices whose orbit has at least two elements.
inline std::vector<VertexIndex> moved_set(const AutGroup& grp) {
  std::vector<VertexIndex> out;
  for (const auto& o : orbits(grp)) {
    if (o.size() >= 2) out.insert(out.end(), o.begin(), o.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// V_s(G): ordered pairs of distinct vertices sharing an orbit.
inline std::vector<std::pair<VertexIndex, VertexIndex>> same_orbit_pairs(const AutGroup& grp) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (const auto& o : orbits(grp)) {
    for (VertexIndex u : o) {
      for (VertexIndex v : o) {
        if (u != v) out.emplace_back(u, v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PropertyCheck {
  PropertyCheck(std::string n, std::string s) : name(std::move(n)), statement(std::move(s)) {}

  std::string name;
  std::string statement;
  bool applicable = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return !applicable || failures == 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

struct StructureReport {
  std::vector<PropertyCheck> checks;

  bool passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed(); });
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

// Machine-checks the skeleton properties over every group element. "u and v are
// exchanged by g" means g(u) = v and g(v) = u.
inline StructureReport check_structure_properties(const NzcGraph& g, const AutGroup& grp) {
  const auto [n, q] = g.params();
  const auto size = static_cast<VertexIndex>(g.size());
  std::vector<VertexIndex> basis(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) basis[static_cast<std::size_t>(k - 1)] = g.basis_vertex(k);
  auto bit = [](int k) { return 1u << (k - 1); };

  PropertyCheck classes{"class-preservation", "class(g(v)) = class(v) for every automorphism g"};
  PropertyCheck full_fixed{"full-skeleton-fixed", "the T_n vertices are mapped inside T_n; for q = 2 the T_n vertex is fixed"};
  PropertyCheck exchange{"exchanged-pair-skeletons",
                      "u, v in T_i exchanged by g: b in S_u and S_v gives g(b) in S_u and S_v; "
                      "b in S_u - S_v gives g(b) in S_v - S_u"};
  PropertyCheck stab{"basis-stabilizer", "g fixes b_l: b_l in S_u iff b_l in S_g(u)"};
  PropertyCheck swap{"basis-exchange",
                  "g exchanges b_l, b_m: (b_l in S_u, b_m not) gives (b_l not, b_m in S_g(u)); "
                  "both in S_u iff both in S_g(u)"};
  PropertyCheck moves{"moves-two-basis", "a non-identity g moves at least two basis vectors"};
  PropertyCheck scaled{"basis-to-scaled-basis",
                    "g maps each b_i to a non-zero multiple of b_sigma(i) for a permutation sigma"};
  moves.applicable = q == 2;

  const std::uint32_t full_mask = n == 32 ? ~0u : (1u << n) - 1;
  grp.for_each([&](const Permutation& p) {
    // sigma from basis images; -1 marks a basis vector leaving T_1.
    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    bool sigma_ok = true;
    std::uint32_t seen = 0;
    for (int k = 1; k <= n; ++k) {
      const VertexIndex img = p(basis[static_cast<std::size_t>(k - 1)]);
      const std::uint32_t m = g.skeleton_mask(img);
      if (std::popcount(m) != 1 || (seen & m) != 0) {
        sigma_ok = false;
      } else {
        sigma[static_cast<std::size_t>(k - 1)] = std::countr_zero(m) + 1;
        seen |= m;
      }
    }
    ++scaled.checked;
    if (!sigma_ok) scaled.fail("basis not mapped to a scaled permutation of itself by " + to_string(p));

    for (VertexIndex v = 0; v < size; ++v) {
      ++classes.checked;
      if (g.skeleton_class(p(v)) != g.skeleton_class(v)) {
        classes.fail("vertex " + std::to_string(v) + " changes class under " + to_string(p));
      }
      if (g.skeleton_mask(v) == full_mask) {
        ++full_fixed.checked;
        const bool ok = g.skeleton_mask(p(v)) == full_mask && (q != 2 || p(v) == v);
        if (!ok) full_fixed.fail("T_n vertex moved by " + to_string(p));
      }
    }

    int moved_basis = 0;
    for (int k = 1; k <= n; ++k) {
      if (p(basis[static_cast<std::size_t>(k - 1)]) != basis[static_cast<std::size_t>(k - 1)]) ++moved_basis;
    }
    if (!p.is_identity()) {
      ++moves.checked;
      if (q == 2 && moved_basis < 2) moves.fail("non-identity " + to_string(p) + " moves < 2 basis vectors");
    }

    // Basis index of g(b_k) as a mask, 0 when g(b_k) is not in T_1.
    auto image_bit = [&](int k) -> std::uint32_t {
      const std::uint32_t m = g.skeleton_mask(p(basis[static_cast<std::size_t>(k - 1)]));
      return std::popcount(m) == 1 ? m : 0;
    };

    for (VertexIndex u = 0; u < size; ++u) {
      const VertexIndex v = p(u);
      const int cls = g.skeleton_class(u);
      if (v == u || p(v) != u || cls != g.skeleton_class(v) || cls == n) continue;
      const std::uint32_t su = g.skeleton_mask(u);
      const std::uint32_t sv = g.skeleton_mask(v);
      for (int k = 1; k <= n; ++k) {
        const std::uint32_t b = bit(k);
        const std::uint32_t ib = image_bit(k);
        if ((su & sv & b) != 0) {
          ++exchange.checked;
          if ((ib & su & sv) == 0) exchange.fail("common basis vector escapes the intersection");
        } else if ((su & b) != 0 && (sv & b) == 0) {
          ++exchange.checked;
          if ((ib & sv) == 0 || (ib & su) != 0) exchange.fail("private basis vector not sent to S_v - S_u");
        }
      }
    }

    for (int l = 1; l <= n; ++l) {
      const VertexIndex bl = basis[static_cast<std::size_t>(l - 1)];
      if (p(bl) == bl) {
        for (VertexIndex u = 0; u < size; ++u) {
          ++stab.checked;
          if (((g.skeleton_mask(u) & bit(l)) != 0) != ((g.skeleton_mask(p(u)) & bit(l)) != 0)) {
            stab.fail("b" + std::to_string(l) + " membership changes under " + to_string(p));
          }
        }
      }
      for (int m = l + 1; m <= n; ++m) {
        const VertexIndex bm = basis[static_cast<std::size_t>(m - 1)];
        if (p(bl) != bm || p(bm) != bl) continue;
        const std::uint32_t both = bit(l) | bit(m);
        for (VertexIndex u = 0; u < size; ++u) {
          const std::uint32_t su = g.skeleton_mask(u);
          const std::uint32_t sg = g.skeleton_mask(p(u));
          ++swap.checked;
          if ((su & both) == bit(l) && (sg & both) != bit(m)) swap.fail("part (i) fails");
          if ((su & both) == bit(m) && (sg & both) != bit(l)) swap.fail("part (i) fails");
          if (((su & both) == both) != ((sg & both) == both)) swap.fail("part (ii) fails");
        }
      }
    }
    return true;
  });

  StructureReport rep;
  rep.checks = {classes, full_fixed, exchange, stab, swap, moves, scaled};
  return rep;
}

}  // namespace nzc

#endif  // NZC_SYMMETRY_HPP_
