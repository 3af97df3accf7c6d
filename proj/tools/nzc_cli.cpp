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

// nzc: build non-zero component graphs, compute their symmetry and
// distinguishing numbers, and emit verification certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nzc/nzc.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kEngineMismatch = 4,
};

struct Options {
  std::string n = "3";
  std::string q = "2";
  std::string format;
  std::string engine;
  std::string rule = "literal";
  std::uint64_t seed = 1;
  std::uint64_t vertex_cap = nzc::kDefaultVertexCap;
  std::size_t oracle_cap = nzc::kDefaultOracleCap;
  std::size_t exact_cap = 30;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// Accepts "5", "3..8" and comma lists of either.
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots));
    const int hi = parse_int(part.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty value");
  return out;
}

nzc::SpaceParams single_params(const Options& o) {
  const auto ns = parse_range(o.n);
  const auto qs = parse_range(o.q);
  if (ns.size() != 1 || qs.size() != 1) throw UsageError("this command takes a single -n and -q");
  return {ns.front(), qs.front()};
}

std::string resolve_format(const Options& o, const std::string& fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "dot" && f != "table") throw UsageError("unknown format '" + f + "'");
  return f;
}

nzc::NzcGraph build_graph(const Options& o) {
  const auto p = single_params(o);
  nzc::validate(p, o.vertex_cap);
  return nzc::NzcGraph::build(p, o.vertex_cap);
}

std::string vertex_list(const nzc::NzcGraph& g, const std::vector<nzc::VertexIndex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + nzc::to_label(g.vertex(vs[i]));
  return s + "}";
}

nlohmann::json orbits_json(const std::vector<std::vector<nzc::VertexIndex>>& orbs) {
  return nlohmann::json(orbs);
}

std::string engine_for(const Options& o, const nzc::NzcGraph& g) {
  std::string e = o.engine.empty() ? (g.params().q == 2 ? "structural" : "oracle") : o.engine;
  if (e != "structural" && e != "oracle" && e != "both") throw UsageError("unknown engine '" + e + "'");
  if (e != "oracle" && g.params().q != 2) {
    throw nzc::Error(nzc::ErrorKind::kUnsupportedQ, "the structural engine needs q = 2");
  }
  return e;
}

nzc::AutGroup group_for(const Options& o, const nzc::NzcGraph& g, const std::string& engine) {
  if (engine == "oracle") return nzc::aut_group_oracle(g, {o.oracle_cap, nzc::kDefaultElementCap});
  return nzc::aut_group_structural(g);
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  const auto fmt = resolve_format(o, "json");
  if (fmt == "json") {
    out << nzc::graph_to_json(g).dump() << "\n";
  } else if (fmt == "dot") {
    out << nzc::graph_to_dot(g);
  } else {
    out << "n = " << g.params().n << ", q = " << g.params().q << ", " << g.size() << " vertices, "
        << g.edge_count() << " edges\n";
    for (nzc::VertexIndex v = 0; v < g.size(); ++v) {
      out << v << "\t" << nzc::to_label(g.vertex(v)) << "\tT_" << g.skeleton_class(v) << "\tdeg "
          << g.degree(v) << "\n";
    }
  }
  return kOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  const auto engine = engine_for(o, g);
  const auto fmt = resolve_format(o, "table");
  const auto grp = group_for(o, g, engine == "both" ? "structural" : engine);
  std::optional<bool> agree;
  if (engine == "both") {
    const auto oracle = nzc::aut_group_oracle(g, {o.oracle_cap, nzc::kDefaultElementCap});
    agree = oracle.order() == grp.order();
    if (*agree && oracle.kind() == nzc::AutGroup::Kind::kExplicit &&
        grp.kind() == nzc::AutGroup::Kind::kExplicit) {
      agree = oracle.elements() == grp.elements();
    }
  }
  const auto orbs = nzc::orbits(grp);
  if (fmt == "json") {
    nlohmann::json j{{"n", g.params().n}, {"q", g.params().q}, {"engine", engine},
                     {"order", grp.order()}, {"orbits", orbits_json(orbs)}};
    if (agree) j["engines_agree"] = *agree;
    out << j.dump() << "\n";
  } else {
    out << "|Aut| = " << grp.order() << " (" << engine << ")\n";
    out << orbs.size() << " orbits\n";
    for (const auto& orb : orbs) out << "  " << vertex_list(g, orb) << "\n";
    if (agree) out << "engines agree: " << (*agree ? "yes" : "no") << "\n";
  }
  return agree.value_or(true) ? kOk : kCheckFailed;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  const auto engine = engine_for(o, g);
  const auto grp = group_for(o, g, engine == "both" ? "structural" : engine);
  const auto orbs = nzc::orbits(grp);
  if (resolve_format(o, "table") == "json") {
    out << orbits_json(orbs).dump() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    out << "O" << i + 1 << " (T_" << g.skeleton_class(orbs[i].front()) << ", " << orbs[i].size()
        << "): " << vertex_list(g, orbs[i]) << "\n";
  }
  return kOk;
}

std::string colours_string(const nzc::Labeling& f) {
  std::string s = "[";
  for (std::size_t v = 0; v < f.size(); ++v) {
    s += (v ? "," : "") + std::to_string(f[static_cast<nzc::VertexIndex>(v)]);
  }
  return s + "]";
}

int cmd_dist(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  const auto grp = group_for(o, g, engine_for(o, g));
  const auto res = nzc::dist_number(g, grp, {o.exact_cap});
  const bool exact = res.method == nzc::DistResult::Method::kExact;
  if (resolve_format(o, "table") == "json") {
    out << nlohmann::json{{"n", g.params().n},
                          {"q", g.params().q},
                          {"method", exact ? "exact" : "bounded"},
                          {"lower", res.lower},
                          {"upper", res.upper},
                          {"lower_source", res.lower_source},
                          {"upper_source", res.upper_source},
                          {"witness", res.witness.colours()}}
               .dump()
        << "\n";
    return kOk;
  }
  if (exact) {
    out << "exact " << res.upper << ", witness: " << colours_string(res.witness) << "\n";
  } else {
    const std::string head = res.value() ? std::to_string(res.upper)
                                         : std::to_string(res.lower) + ".." + std::to_string(res.upper);
    out << head << " (lower=" << res.lower_source << ", upper=" << res.upper_source << " "
        << res.upper << ")\n";
  }
  return kOk;
}

int cmd_labeling(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  if (o.rule != "literal" && o.rule != "complement") throw UsageError("unknown rule '" + o.rule + "'");
  const auto f = g.params().q == 2
                     ? nzc::two_colouring_q2(g, o.rule == "literal" ? nzc::TnMinus1Rule::kLiteral
                                                                    : nzc::TnMinus1Rule::kComplement)
                     : nzc::q3_constructive_labeling(g);
  const auto fmt = resolve_format(o, "table");
  if (fmt == "json") {
    out << nlohmann::json{{"n", g.params().n}, {"q", g.params().q}, {"t", f.t()}, {"colours", f.colours()}}
               .dump()
        << "\n";
  } else if (fmt == "dot") {
    out << "graph G {\n";
    for (nzc::VertexIndex v = 0; v < g.size(); ++v) {
      out << "  " << v << " [label=\"" << nzc::to_label(g.vertex(v)) << "\", colour=" << f[v] << "];\n";
    }
    for (nzc::VertexIndex u = 0; u < g.size(); ++u) {
      g.row(u).for_each_set([&](std::size_t v) {
        if (v > u) out << "  " << u << " -- " << v << ";\n";
      });
    }
    out << "}\n";
  } else {
    for (nzc::VertexIndex v = 0; v < g.size(); ++v) {
      out << v << "\t" << nzc::to_label(g.vertex(v)) << "\t" << f[v] << "\n";
    }
  }
  return kOk;
}

int cmd_twins(const Options& o, std::ostream& out) {
  const auto g = build_graph(o);
  const auto twins = g.twin_sets();
  if (resolve_format(o, "table") == "json") {
    out << nlohmann::json(twins).dump() << "\n";
    return kOk;
  }
  for (const auto& t : twins) out << "T_" << g.skeleton_class(t.front()) << "\t" << vertex_list(g, t) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto ns = parse_range(o.n);
  const auto qs = parse_range(o.q);
  const auto fmt = resolve_format(o, "table");
  if (fmt == "dot") throw UsageError("verify has no dot output");
  nzc::VerifyConfig cfg;
  cfg.vertex_cap = o.vertex_cap;
  cfg.oracle_cap = o.oracle_cap;
  cfg.exact_cap = o.exact_cap;
  cfg.seed = o.seed;
  for (int q : qs) {
    for (int n : ns) nzc::validate({n, q}, o.vertex_cap);
  }
  nzc::Certificate cert;
  for (int q : qs) {
    for (int n : ns) cert.append(nzc::verify_instance({n, q}, cfg));
  }
  if (fmt == "json") {
    out << cert.to_json().dump(2) << "\n";
  } else {
    for (const auto& c : cert.claims) {
      out << nzc::to_string(c.status) << "\t(" << c.n << "," << c.q << ")\t" << c.id;
      if (!c.detail.empty()) out << "\t" << c.detail;
      out << "\n";
    }
    out << cert.count(nzc::ClaimStatus::kPass) << " pass, " << cert.count(nzc::ClaimStatus::kFail)
        << " fail, " << cert.count(nzc::ClaimStatus::kObserved) << " observed\n";
  }
  return cert.passed() ? kOk : kCheckFailed;
}

int exit_code_for(nzc::ErrorKind k) {
  switch (k) {
    case nzc::ErrorKind::kCapExceeded: return kCapExceeded;
    case nzc::ErrorKind::kUnsupportedQ: return kEngineMismatch;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-zero component graphs of finite vector spaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file with the same keys as the flags")->envname("NZC_CONFIG");

  Options o;
  app.add_option("-n", o.n, "Dimension (verify also takes a range such as 3..8)");
  app.add_option("-q", o.q, "Field size");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--engine", o.engine, "Automorphism engine")
      ->check(CLI::IsMember({"structural", "oracle", "both"}));
  app.add_option("--rule", o.rule, "T_{n-1} rule of the two-colouring")
      ->check(CLI::IsMember({"literal", "complement"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--vertex-cap", o.vertex_cap, "Largest |V| to build")->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", o.oracle_cap, "Largest |V| for the search engine")->check(CLI::PositiveNumber);
  app.add_option("--exact-cap", o.exact_cap, "Largest |V| for the exact distinguishing search")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write output to FILE");

  using Handler = int (*)(const Options&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"build", "Emit the graph", cmd_build},
      {"aut", "Automorphism group order and orbits", cmd_aut},
      {"orbits", "Orbit partition", cmd_orbits},
      {"dist", "Distinguishing number", cmd_dist},
      {"labeling", "Emit the distinguishing labeling", cmd_labeling},
      {"verify", "Run every check and emit a certificate", cmd_verify},
      {"twins", "Twin sets", cmd_twins},
  };
  Handler chosen = nullptr;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&chosen, fn = fn] { chosen = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (o.out.empty()) return chosen(o, std::cout);
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "nzc: cannot open " << o.out << "\n";
      return kUsage;
    }
    return chosen(o, file);
  } catch (const nzc::Error& e) {
    std::cerr << "nzc: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    std::cerr << "nzc: " << e.what() << "\n";
    return kUsage;
  }
}
