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

// Graph serialization: JSON (lossless, re-importable) and Graphviz DOT.

#ifndef NZC_IO_HPP_
#define NZC_IO_HPP_

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nzc/graph.hpp"

namespace nzc {

inline nlohmann::json graph_to_json(const NzcGraph& g) {
  nlohmann::json j;
  j["n"] = g.params().n;
  j["q"] = g.params().q;
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const auto c = g.vertex(v).coeffs();
    vertices.push_back({{"id", v},
                        {"coeffs", std::vector<std::uint32_t>(c.begin(), c.end())},
                        {"skeleton", g.skeleton(v).indices()},
                        {"class", g.skeleton_class(v)}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (VertexIndex u = 0; u < g.size(); ++u) {
    g.row(u).for_each_set([&](std::size_t v) {
      if (v > u) edges.push_back({u, v});
    });
  }
  j["twin_sets"] = g.twin_sets();
  return j;
}

// Inverse of graph_to_json. Vertex ids must be 0..|V|-1 in order; the stored
// skeleton, class and twin sets must agree with the coefficients.
inline NzcGraph graph_from_json(const nlohmann::json& j) {
  try {
    const SpaceParams p{j.at("n").get<int>(), j.at("q").get<int>()};
    if (p.n < 1 || p.q < 2 || p.n > kMaxDimension) {
      throw Error(ErrorKind::kInvalidArgument, "bad n or q");
    }
    std::vector<Vector> vertices;
    const auto& jv = j.at("vertices");
    for (std::size_t i = 0; i < jv.size(); ++i) {
      if (jv[i].at("id").get<std::size_t>() != i) {
        throw Error(ErrorKind::kInvalidArgument, "vertex ids must be 0..|V|-1 in order");
      }
      vertices.emplace_back(jv[i].at("coeffs").get<std::vector<std::uint32_t>>(), p.q);
    }
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<VertexIndex>(), e.at(1).get<VertexIndex>());
    NzcGraph g = NzcGraph::from_parts(p, std::move(vertices), edges);
    for (VertexIndex v = 0; v < g.size(); ++v) {
      if (jv[v].at("skeleton").get<std::vector<int>>() != g.skeleton(v).indices() ||
          jv[v].at("class").get<int>() != g.skeleton_class(v)) {
        throw Error(ErrorKind::kInvalidArgument, "skeleton or class disagrees with coefficients");
      }
    }
    if (j.contains("twin_sets") &&
        j.at("twin_sets").get<std::vector<std::vector<VertexIndex>>>() != g.twin_sets()) {
      throw Error(ErrorKind::kInvalidArgument, "twin sets disagree with coefficients");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument, std::string("malformed graph JSON: ") + e.what());
  }
}

inline std::string graph_to_dot(const NzcGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexIndex v = 0; v < g.size(); ++v) {
    out << "  " << v << " [label=\"" << to_label(g.vertex(v)) << "\"];\n";
  }
  for (VertexIndex u = 0; u < g.size(); ++u) {
    g.row(u).for_each_set([&](std::size_t v) {
      if (v > u) out << "  " << u << " -- " << v << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace nzc

#endif  // NZC_IO_HPP_
