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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nzc/nzc.hpp"

namespace {

using nzc::AutGroup;
using nzc::NzcGraph;
using nzc::Permutation;
using nzc::VertexIndex;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome degree_formula() {
  Outcome o;
  double worst = 0;
  std::uint64_t vertices = 0;
  for (int n = 2; n <= 10; ++n) {
    const auto t0 = Clock::now();
    const auto g = NzcGraph::build({n, 2});
    const auto rep = nzc::check_degree_formula(g);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    vertices += rep.entries.size();
    if (!rep.passed() || dt >= 1.0) {
      o.ok = false;
      o.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  o.detail += std::to_string(vertices) + " vertices checked for n=2..10, slowest n " + fmt_seconds(worst);
  return o;
}

Outcome aut_order() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto grp = nzc::aut_group_structural(g);
    std::vector<Permutation> distinct = grp.elements();
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    bool all_aut = std::all_of(distinct.begin(), distinct.end(),
                               [&](const Permutation& p) { return nzc::is_automorphism(g, p); });
    if (distinct.size() != nzc::factorial(n) || !all_aut) {
      o.ok = false;
      o.detail += "structural n=" + std::to_string(n) + " wrong; ";
    }
  }
  double oracle4 = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto t0 = Clock::now();
    const auto oracle = nzc::aut_group_oracle(g);
    if (n == 4) oracle4 = seconds_since(t0);
    if (oracle.elements() != nzc::aut_group_structural(g).elements()) {
      o.ok = false;
      o.detail += "oracle n=" + std::to_string(n) + " differs; ";
    }
  }
  if (oracle4 >= 10.0) o.ok = false;
  o.detail += "n! distinct automorphisms for n=1..8, oracle set-equal for n=2..4, oracle n=4 in " +
              fmt_seconds(oracle4);
  return o;
}

Outcome psi_isomorphism() {
  Outcome o;
  std::uint64_t exhaustive = 0;
  std::uint64_t sampled = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto oracle = nzc::aut_group_oracle(g);
    const auto rep = nzc::check_psi_isomorphism(g, 0, 1, &oracle);
    exhaustive += rep.pairs_checked;
    const bool bijective = rep.injective.value_or(false) && rep.surjective.value_or(false);
    if (!rep.exhaustive || !rep.passed() || !bijective) {
      o.ok = false;
      o.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  for (int n = 5; n <= 8; ++n) {
    const auto rep = nzc::check_psi_isomorphism(NzcGraph::build({n, 2}), 1000, 7 + static_cast<std::uint64_t>(n));
    sampled += rep.pairs_checked;
    if (!rep.passed() || rep.pairs_checked < 1000) {
      o.ok = false;
      o.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  o.detail += std::to_string(exhaustive) + " exhaustive pairs (n<=4, bijective onto oracle group), " +
              std::to_string(sampled) + " random pairs (n=5..8)";
  return o;
}

Outcome orbit_structure() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    const auto g = NzcGraph::build({n, 2});
    for (const auto& grp : {nzc::aut_group_structural(g), nzc::aut_group_oracle(g)}) {
      auto orb = nzc::orbits(grp);
      std::vector<std::vector<VertexIndex>> classes;
      for (int i = 1; i <= n; ++i) classes.push_back(g.t_class(i));
      std::sort(orb.begin(), orb.end());
      std::sort(classes.begin(), classes.end());
      const VertexIndex full = g.t_class(n).front();
      const bool fixed = grp.for_each([&](const Permutation& p) { return p(full) == full; });
      if (orb != classes || !fixed) {
        o.ok = false;
        o.detail += "n=" + std::to_string(n) + " failed; ";
      }
    }
  }
  o.detail += "orbits = T_1..T_n and T_n vertex fixed, n=3,4, structural and oracle groups";
  return o;
}

Outcome distinguishing_pairs() {
  Outcome o;
  std::uint64_t triples = 0;
  for (int n = 3; n <= 10; ++n) {
    const auto g = NzcGraph::build({n, 2});
    for (int l = 1; l <= n; ++l) {
      for (int m = 1; m <= n; ++m) {
        if (l == m) continue;
        for (int i = 1; i <= n - 1; ++i) {
          ++triples;
          const auto want = nzc::binomial(n - 1, i - 1) - nzc::binomial(n - 2, i - 2);
          if (nzc::count_distinguishing_pairs(g, l, m, i) != want) {
            o.ok = false;
            o.detail += "(n,l,m,i)=(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m) +
                        "," + std::to_string(i) + ") ";
          }
        }
      }
    }
  }
  o.detail += std::to_string(triples) + " (n,l,m,i) counts for n=3..10";
  return o;
}

std::string list_ns(const std::vector<int>& ns) {
  if (ns.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? "," : "") + std::to_string(ns[i]);
  return s;
}

Outcome binary_two_colouring() {
  Outcome o;
  std::vector<int> literal_mismatch;
  std::vector<int> complement_mismatch;
  for (int n = 3; n <= 10; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto grp = nzc::aut_group_structural(g);
    const auto f = nzc::two_colouring_q2(g);
    if (!nzc::is_distinguishing(g, grp, f)) {
      o.ok = false;
      o.detail += "labeling not distinguishing at n=" + std::to_string(n) + "; ";
    }
    const auto lit = nzc::destroyed_transpositions(g, f);
    if (!lit.tallies_match()) literal_mismatch.push_back(n);
    const auto comp = nzc::destroyed_transpositions(g, nzc::two_colouring_q2(g, nzc::TnMinus1Rule::kComplement));
    if (!comp.tallies_match() || !comp.covers_all()) complement_mismatch.push_back(n);
    if (!lit.covers_all()) {
      o.ok = false;
      o.detail += "uncovered transpositions at n=" + std::to_string(n) + "; ";
    }
  }
  for (int n = 3; n <= 4; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto res = nzc::dist_number(g, nzc::aut_group_structural(g));
    if (res.method != nzc::DistResult::Method::kExact || res.value() != 2u) {
      o.ok = false;
      o.detail += "exact Dist != 2 at n=" + std::to_string(n) + "; ";
    }
  }
  if (!complement_mismatch.empty()) o.ok = false;
  o.detail += "distinguishing for n=3..10, exact Dist=2 for n=3,4; literal T_{n-1} tallies differ for n=" +
              list_ns(literal_mismatch) + " (rule selects no T_{n-1} vertex), complement reading mismatches: " +
              list_ns(complement_mismatch);
  return o;
}

Outcome ternary() {
  Outcome o;
  const auto t0 = Clock::now();
  for (auto [n, q] : {std::pair{2, 3}, {3, 3}, {2, 4}}) {
    const auto g = NzcGraph::build({n, q});
    const auto pool = static_cast<std::uint32_t>(nzc::ipow(static_cast<std::uint64_t>(q - 1), n));
    const auto grp = nzc::aut_group_oracle(g);
    const auto f = nzc::q3_constructive_labeling(g);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    if (nzc::twin_lower_bound(g) != pool) {
      o.ok = false;
      o.detail += tag + " twin bound; ";
    }
    if (!nzc::is_distinguishing(g, grp, f) || f.colours_used() != pool) {
      o.ok = false;
      o.detail += tag + " constructive labeling; ";
    }
    if (g.size() <= 30 && grp.order() <= nzc::kDefaultElementCap) {
      const auto res = nzc::dist_number(g, grp);
      if (res.method != nzc::DistResult::Method::kExact || res.value() != pool) {
        o.ok = false;
        o.detail += tag + " exact search; ";
      } else {
        o.detail += tag + " exact Dist=" + std::to_string(pool) + " (no " + std::to_string(pool - 1) +
                    "-colouring); ";
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 120.0) o.ok = false;
  o.detail += "twin bound and constructive labeling hold for (2,3),(3,3),(2,4) in " + fmt_seconds(dt);
  return o;
}

// |orbit(v)| * |Aut_v| = |Aut| with |Aut_v| from a search that individualizes v.
bool orbit_stabilizer_by_search(const NzcGraph& g, const AutGroup& grp) {
  for (const auto& orbit : nzc::orbits(grp)) {
    std::vector<std::uint32_t> colours(g.size(), 0);
    colours[orbit.front()] = 1;
    const auto stab = nzc::RefinementSearch(g, colours).chain().order;
    if (orbit.size() * stab != grp.order()) return false;
  }
  return true;
}

// Same identity for the lazy structural group, counting the stabilizer on the
// basis: sigma fixes v iff it fixes the skeleton of v setwise.
bool orbit_stabilizer_on_basis(const NzcGraph& g, const AutGroup& grp) {
  const int n = g.params().n;
  for (const auto& orbit : nzc::orbits(grp)) {
    const std::uint32_t mask = g.skeleton_mask(orbit.front());
    std::vector<std::uint32_t> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::uint64_t stab = 0;
    do stab += nzc::permute_mask(mask, sigma) == mask;
    while (std::next_permutation(sigma.begin(), sigma.end()));
    if (orbit.size() * stab != grp.order()) return false;
  }
  return true;
}

Outcome property_suite() {
  Outcome o;
  std::vector<std::pair<int, int>> configs;
  for (int n = 1; n <= 10; ++n) configs.emplace_back(n, 2);
  configs.insert(configs.end(), {{2, 3}, {3, 3}, {2, 4}});
  for (auto [n, q] : configs) {
    const auto g = NzcGraph::build({n, q});
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    std::vector<std::string> bad;
    if (!nzc::adjacency_is_consistent(g)) bad.push_back("adjacency");
    if (nzc::twin_partition(g) != nzc::twin_partition_by_neighborhood(g)) bad.push_back("twins");
    if (!(nzc::graph_from_json(nlohmann::json::parse(nzc::graph_to_json(g).dump())) == g)) bad.push_back("json");
    bool orbit_stab = true;
    if (q == 2) {
      const auto grp = nzc::aut_group_structural(g);
      if (grp.kind() == AutGroup::Kind::kExplicit) {
        for (const auto& orbit : nzc::orbits(grp)) {
          orbit_stab = orbit_stab && orbit.size() * nzc::stabilizer(grp, orbit.front()).order() == grp.order();
        }
      } else {
        orbit_stab = orbit_stabilizer_on_basis(g, grp);
      }
    } else {
      orbit_stab = orbit_stabilizer_by_search(g, nzc::aut_group_oracle(g));
    }
    if (!orbit_stab) bad.push_back("orbit-stabilizer");
    if (!bad.empty()) {
      o.ok = false;
      o.detail += tag + ":";
      for (const auto& b : bad) o.detail += " " + b;
      o.detail += "; ";
    }
  }
  o.detail += "orbit-stabilizer, adjacency symmetry, twin agreement, JSON round trip on " +
              std::to_string(configs.size()) + " configurations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"degree formula, q=2, n=2..10", degree_formula},
      {"|Aut| = n!, engines agree", aut_order},
      {"extension is an isomorphism S_n -> Aut", psi_isomorphism},
      {"orbits are the classes T_i", orbit_structure},
      {"distinguishing-pair counts", distinguishing_pairs},
      {"two-colouring, Dist = 2 for q = 2", binary_two_colouring},
      {"Dist = (q-1)^n for q >= 3", ternary},
      {"property suite", property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::printf("%s criterion %zu: %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
