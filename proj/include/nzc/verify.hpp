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

// Verification certificates: every checkable statement about G(V), run on one
// (n, q) instance at a time and reported claim by claim.

#ifndef NZC_VERIFY_HPP_
#define NZC_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nzc/distinguishing.hpp"
#include "nzc/graph.hpp"
#include "nzc/io.hpp"
#include "nzc/symmetry.hpp"

namespace nzc {

enum class ClaimStatus {
  kPass,
  kFail,
  // Informational: a documented anomaly or an unproven conjecture, recorded
  // with its outcome but not counted as a failure.
  kObserved,
};

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kObserved: return "observed";
  }
  return "?";
}

struct Claim {
  std::string id;
  std::string citation;
  int n = 0;
  int q = 0;
  ClaimStatus status = ClaimStatus::kPass;
  std::string detail;
};

struct Certificate {
  std::vector<Claim> claims;

  bool passed() const noexcept {
    return std::none_of(claims.begin(), claims.end(),
                        [](const Claim& c) { return c.status == ClaimStatus::kFail; });
  }

  std::size_t count(ClaimStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
  }

  const Claim* find(const std::string& id, int n, int q) const {
    for (const auto& c : claims) {
      if (c.id == id && c.n == n && c.q == q) return &c;
    }
    return nullptr;
  }

  void append(const Certificate& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    auto& arr = j["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
      arr.push_back({{"id", c.id},
                     {"citation", c.citation},
                     {"n", c.n},
                     {"q", c.q},
                     {"status", to_string(c.status)},
                     {"detail", c.detail}});
    }
    j["summary"] = {{"pass", count(ClaimStatus::kPass)},
                    {"fail", count(ClaimStatus::kFail)},
                    {"observed", count(ClaimStatus::kObserved)},
                    {"ok", passed()}};
    return j;
  }
};

struct VerifyConfig {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t exact_cap = 30;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  // Largest group on which the per-element skeleton properties are run.
  std::uint64_t property_group_cap = 40320;
};

namespace detail {

class ClaimSink {
 public:
  ClaimSink(Certificate& cert, SpaceParams p) : cert_(cert), p_(p) {}

  void add(std::string id, std::string citation, bool ok, std::string detail) {
    add(std::move(id), std::move(citation), ok ? ClaimStatus::kPass : ClaimStatus::kFail,
        std::move(detail));
  }
  void add(std::string id, std::string citation, ClaimStatus s, std::string detail) {
    cert_.claims.push_back({std::move(id), std::move(citation), p_.n, p_.q, s, std::move(detail)});
  }

 private:
  Certificate& cert_;
  SpaceParams p_;
};

inline std::string pairs_to_string(const std::vector<std::pair<int, int>>& ps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? " " : "") << "(" << ps[i].first << " " << ps[i].second << ")";
  return out.str();
}

inline void verify_graph_basics(const NzcGraph& g, ClaimSink& sink) {
  const auto [n, q] = g.params();
  bool counts = g.size() == ipow(static_cast<std::uint64_t>(q), n) - 1;
  std::ostringstream d;
  d << "|V| = " << g.size();
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t want = binomial(n, i) * ipow(static_cast<std::uint64_t>(q - 1), i);
    counts = counts && g.t_class(i).size() == want;
    d << ", |T_" << i << "| = " << g.t_class(i).size();
  }
  sink.add("class-sizes", "|T_i| = C(n,i)(q-1)^i and |V| = q^n - 1", counts, d.str());

  sink.add("adjacency", "adjacency is symmetric, irreflexive and equals skeleton intersection",
           adjacency_is_consistent(g), std::to_string(g.edge_count()) + " edges");

  bool universal = true;
  for (VertexIndex v : g.t_class(n)) universal = universal && g.degree(v) == g.size() - 1;
  sink.add("universal-vertex", "every T_n vertex is adjacent to all other vertices", universal, "");

  const auto twins = twin_partition(g);
  bool twin_ok = twins == twin_partition_by_neighborhood(g);
  std::vector<std::uint64_t> per_class(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& t : twins) {
    const int i = g.skeleton_class(t.front());
    ++per_class[static_cast<std::size_t>(i)];
    twin_ok = twin_ok && t.size() == ipow(static_cast<std::uint64_t>(q - 1), i);
  }
  for (int i = 1; i <= n; ++i) twin_ok = twin_ok && per_class[static_cast<std::size_t>(i)] == binomial(n, i);
  sink.add("twin-sets",
           "T_i holds C(n,i) twin sets of size (q-1)^i; skeleton twins = closed-neighbourhood twins",
           twin_ok, std::to_string(twins.size()) + " twin sets");

  if (q == 2) {
    const auto rep = check_degree_formula(g);
    sink.add("degree-formula", "deg(v) = (2^s-1)2^(n-s)-1 for v in T_s (q = 2)", rep.passed(),
             std::to_string(rep.matched) + "/" + std::to_string(rep.entries.size()) + " vertices");
  } else {
    const auto rep = check_generalized_degree_formula(g);
    sink.add("degree-formula-generalized", "deg(v) = q^n - q^(n-s) - 1 (derived, not quoted)",
             rep.passed(),
             std::to_string(rep.matched) + "/" + std::to_string(rep.entries.size()) + " vertices");
  }
}

inline void verify_pairs(const NzcGraph& g, ClaimSink& sink) {
  const int n = g.params().n;
  if (n < 2) return;
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  for (int l = 1; l <= n; ++l) {
    for (int m = 1; m <= n; ++m) {
      if (l == m) continue;
      for (int i = 1; i <= n - 1; ++i) {
        ++checked;
        const std::uint64_t want = binomial(n - 1, i - 1) - binomial(n - 2, i - 2);
        if (count_distinguishing_pairs(g, l, m, i) != want) ++bad;
      }
    }
  }
  sink.add("distinguishing-pairs",
           "#{u in T_i : b_l in S_u, b_m not in S_u} = C(n-1,i-1) - C(n-2,i-2)", bad == 0,
           std::to_string(checked - bad) + "/" + std::to_string(checked) + " (l, m, i) triples");
}

inline void verify_structure(const NzcGraph& g, const AutGroup& grp, const VerifyConfig& cfg,
                             ClaimSink& sink) {
  if (grp.order() > cfg.property_group_cap) return;
  const auto rep = check_structure_properties(g, grp);
  for (const auto& c : rep.checks) {
    std::string detail = std::to_string(c.checked) + " cases";
    if (!c.applicable) detail = "not applicable for q >= 3";
    if (c.failures) detail += ", " + std::to_string(c.failures) + " failures: " + c.first_failure;
    sink.add("property:" + c.name, c.statement, c.passed(), detail);
  }
}

inline void verify_orbit_stabilizer(const AutGroup& grp, ClaimSink& sink) {
  if (grp.kind() != AutGroup::Kind::kExplicit) return;
  bool ok = true;
  for (const auto& orbit : orbits(grp)) {
    const VertexIndex v = orbit.front();
    ok = ok && orbit.size() * stabilizer(grp, v).order() == grp.order();
  }
  sink.add("orbit-stabilizer", "|O(v)| |Stab(v)| = |Aut| for every vertex", ok, "");
}

inline void verify_q2(const NzcGraph& g, const VerifyConfig& cfg, ClaimSink& sink) {
  const int n = g.params().n;
  verify_pairs(g, sink);

  const AutGroup structural = aut_group_structural(g);
  {
    bool ok = structural.order() == factorial(n);
    std::string detail = "|Aut| = " + std::to_string(structural.order());
    if (structural.kind() == AutGroup::Kind::kExplicit) {
      const auto ax = check_group_axioms(structural);
      ok = ok && ax.passed() && structural.elements().size() == factorial(n);
      detail += ax.exhaustive_closure ? ", closure on all pairs" : ", closure under generators";
    }
    sink.add("aut-order", "|Aut(G(V))| = n! and the extensions form a group", ok, detail);
  }

  std::optional<AutGroup> oracle;
  if (g.size() <= cfg.oracle_cap) {
    oracle = aut_group_oracle(g, {cfg.oracle_cap, kDefaultElementCap});
    bool equal = oracle->order() == structural.order();
    if (equal && oracle->kind() == AutGroup::Kind::kExplicit &&
        structural.kind() == AutGroup::Kind::kExplicit) {
      equal = oracle->elements() == structural.elements();
    }
    sink.add("engines-agree", "structural group equals the refinement-search group", equal,
             "oracle |Aut| = " + std::to_string(oracle->order()));
  }

  {
    const auto rep = check_psi_isomorphism(g, cfg.samples, cfg.seed, oracle ? &*oracle : nullptr);
    std::string detail = std::to_string(rep.pairs_checked) + (rep.exhaustive ? " pairs (all)" : " random pairs");
    if (rep.surjective) detail += ", bijective onto the oracle group";
    sink.add("psi-isomorphism", "extend(h1 h2) = extend(h1) extend(h2), extend is a bijection S_n -> Aut",
             rep.passed(), detail);
  }

  {
    bool ok = true;
    std::uint64_t checked = 0;
    auto check = [&](const std::vector<std::uint32_t>& s) {
      const BasisPermutation h{Permutation(s)};
      ok = ok && restrict_to_basis(extend_basis_permutation(g, h), g) == h;
      ++checked;
    };
    std::vector<std::uint32_t> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0u);
    if (factorial(n) <= kDefaultMaterializeCap) {
      do check(s); while (std::next_permutation(s.begin(), s.end()));
    } else {
      std::mt19937_64 rng(cfg.seed);
      for (std::uint64_t k = 0; k < cfg.samples; ++k) {
        std::shuffle(s.begin(), s.end(), rng);
        check(s);
      }
    }
    sink.add("restrict-extend", "restricting extend(h) to the basis gives back h", ok,
             std::to_string(checked) + " permutations");
  }

  {
    auto orb = orbits(structural);
    std::vector<std::vector<VertexIndex>> classes;
    for (int i = 1; i <= n; ++i) classes.push_back(g.t_class(i));
    std::sort(orb.begin(), orb.end());
    std::sort(classes.begin(), classes.end());
    const auto full = orbit_of(structural, g.t_class(n).front());
    sink.add("orbits-are-classes", "the orbits are exactly T_1..T_n and the T_n vertex is fixed",
             orb == classes && full.size() == 1, std::to_string(orb.size()) + " orbits");
  }

  verify_orbit_stabilizer(structural, sink);
  verify_structure(g, structural, cfg, sink);

  if (n < 3) {
    const auto res = dist_number(g, structural, {cfg.exact_cap});
    const std::uint32_t want = n == 1 ? 1 : 2;
    sink.add("dist-number", "Dist(G(V)) for n < 3", res.value() == want,
             "lower " + std::to_string(res.lower) + ", upper " + std::to_string(res.upper));
    return;
  }

  const Labeling literal = two_colouring_q2(g, TnMinus1Rule::kLiteral);
  const Labeling complement = two_colouring_q2(g, TnMinus1Rule::kComplement);
  sink.add("two-colouring", "the explicit T_1 / T_{n-1} / T_2 two-colouring is distinguishing",
           is_distinguishing(g, structural, literal), "T_{n-1} rule read literally");
  sink.add("two-colouring-complement",
           "the two-colouring with T_{n-1} sets read as complements is distinguishing",
           is_distinguishing(g, structural, complement), "");

  const auto lit = destroyed_transpositions(g, literal);
  {
    std::ostringstream d;
    for (const auto& c : lit.classes) d << c.label << " " << c.tally << "/" << c.expected << "; ";
    if (lit.tallies_match()) {
      sink.add("transposition-tallies", "per-class broken transpositions match n^2/4, n-2, (n^2-6n+8)/4 (even n) or (n^2-1)/4, n-2, (n^2-6n+9)/4 (odd n)",
               ClaimStatus::kPass, d.str() + "literal T_{n-1} rule");
    } else {
      sink.add("transposition-tallies", "per-class broken transpositions match n^2/4, n-2, (n^2-6n+8)/4 (even n) or (n^2-1)/4, n-2, (n^2-6n+9)/4 (odd n)",
               ClaimStatus::kObserved,
               d.str() + "literal T_{n-1} rule selects no vertex of T_{n-1} for this n");
    }
    sink.add("transposition-coverage", "T_1, T_{n-1}, T_2 together break all C(n,2) transpositions",
             lit.covers_all(), lit.covers_all() ? "" : "uncovered: " + pairs_to_string(lit.uncovered));
  }
  {
    const auto comp = destroyed_transpositions(g, complement);
    std::ostringstream d;
    for (const auto& c : comp.classes) d << c.label << " " << c.tally << "/" << c.expected << "; ";
    sink.add("transposition-tallies-complement",
             "per-class tallies match the closed forms with T_{n-1} sets read as complements",
             comp.tallies_match() && comp.covers_all(), d.str());
  }

  if (n <= 5 && structural.kind() == AutGroup::Kind::kExplicit) {
    std::uint64_t tuples = 0;
    bool ok = true;
    for (int i = 2; i <= n - 1; ++i) {
      for (VertexIndex u : g.t_class(i)) {
        for (VertexIndex v : g.t_class(i)) {
          if (literal[u] == literal[v]) continue;
          const Skeleton su = g.skeleton(u);
          const Skeleton sv = g.skeleton(v);
          for (int l : su.indices()) {
            if (sv.contains(l)) continue;
            for (int m : sv.indices()) {
              if (su.contains(m)) continue;
              ++tuples;
              ok = ok && check_lem_diff_labels(g, structural, literal, u, v, l, m);
            }
          }
        }
      }
    }
    sink.add("different-labels-break-exchange",
             "f(u) != f(v) with b_l in S_u - S_v, b_m in S_v - S_u breaks every g exchanging b_l, b_m",
             ok, std::to_string(tuples) + " tuples under the two-colouring");
  }

  const auto res = dist_number(g, structural, {cfg.exact_cap});
  sink.add("dist-number", "Dist(G(V)) = 2 for q = 2, n >= 3", res.value() == 2u,
           std::string(res.method == DistResult::Method::kExact ? "exact" : "bounded") + " " +
               std::to_string(res.lower) + ".." + std::to_string(res.upper));
}

inline void verify_q3(const NzcGraph& g, const VerifyConfig& cfg, ClaimSink& sink) {
  const auto [n, q] = g.params();
  const auto pool = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(q - 1), n));

  sink.add("twin-lower-bound", "the largest twin set has (q-1)^n vertices",
           twin_lower_bound(g) == pool, std::to_string(twin_lower_bound(g)));

  if (g.size() > cfg.oracle_cap) return;
  const AutGroup oracle = aut_group_oracle(g, {cfg.oracle_cap, kDefaultElementCap});

  {
    // n! * prod_i ((q-1)^i)!^C(n,i); never asserted, only recorded.
    long double conj = static_cast<long double>(factorial(n));
    for (int i = 1; i <= n; ++i) {
      long double f = 1;
      for (std::uint64_t k = 2; k <= ipow(static_cast<std::uint64_t>(q - 1), i); ++k) f *= static_cast<long double>(k);
      for (std::uint64_t c = 0; c < binomial(n, i); ++c) conj *= f;
    }
    const bool match = static_cast<long double>(oracle.order()) == conj;
    sink.add("aut-order-observed", "observed |Aut| versus n! prod_i ((q-1)^i)!^C(n,i) (conjecture)",
             ClaimStatus::kObserved,
             "oracle |Aut| = " + std::to_string(oracle.order()) + (match ? ", matches" : ", differs"));
  }

  verify_orbit_stabilizer(oracle, sink);
  verify_structure(g, oracle, cfg, sink);

  const Labeling constructive = q3_constructive_labeling(g);
  sink.add("constructive-labeling",
           "a twin-injective labeling with (q-1)^n colours is distinguishing",
           is_distinguishing(g, oracle, constructive) && constructive.colours_used() == pool,
           std::to_string(constructive.colours_used()) + " colours");

  const Labeling block = twin_block_labeling(g);
  const bool block_ok = is_distinguishing(g, oracle, block);
  sink.add("twin-block-labeling",
           "colours 1..(q-1)^i on every twin set of T_i (no coordination between twin sets)",
           ClaimStatus::kObserved,
           block_ok ? "distinguishing" : "not distinguishing: a basis swap matching equal twin colours survives");

  const auto res = dist_number(g, oracle, {cfg.exact_cap});
  sink.add("dist-number", "Dist(G(V)) = (q-1)^n for q >= 3", res.value() == pool,
           std::string(res.method == DistResult::Method::kExact ? "exact" : "bounded") + " " +
               std::to_string(res.lower) + ".." + std::to_string(res.upper) + " (lower: " +
               res.lower_source + ", upper: " + res.upper_source + ")");
}

}  // namespace detail

inline Certificate verify_instance(SpaceParams p, const VerifyConfig& cfg = {}) {
  Certificate cert;
  detail::ClaimSink sink(cert, p);
  const NzcGraph g = NzcGraph::build(p, cfg.vertex_cap);
  detail::verify_graph_basics(g, sink);
  {
    const NzcGraph back = graph_from_json(graph_to_json(g));
    sink.add("json-round-trip", "JSON export re-imports to an identical graph", back == g, "");
  }
  if (p.q == 2) {
    detail::verify_q2(g, cfg, sink);
  } else {
    detail::verify_q3(g, cfg, sink);
  }
  return cert;
}

}  // namespace nzc

#endif  // NZC_VERIFY_HPP_
