// Copyright 2026 The boundsearch Authors
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

#include "boundsearch/graph_io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace boundsearch {
namespace {

using Json = nlohmann::ordered_json;

// Integral values are emitted as JSON integers so that 4 and 4.0 serialize
// identically.
Json Number(double x) {
  if (std::isfinite(x) && x == std::trunc(x) && std::fabs(x) < 9.0e15) {
    return static_cast<std::int64_t>(x);
  }
  return x;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::uint32_t ReadIndex(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

double ReadNumber(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

const Json& Field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

const Json& ArrayField(const Json& obj, const char* name) {
  const Json& j = Field(obj, name);
  if (!j.is_array()) {
    throw FormatError(std::string("field \"") + name + "\" must be an array");
  }
  return j;
}

struct Header {
  std::uint32_t vertex_count;
  VertexId start;
  std::vector<VertexId> goals;
};

Header ReadHeader(const Json& root) {
  Header h;
  h.vertex_count = ReadIndex(Field(root, "vertex_count"), "vertex_count");
  h.start = VertexId(ReadIndex(Field(root, "start"), "start"));
  for (const Json& g : ArrayField(root, "goals")) {
    h.goals.push_back(VertexId(ReadIndex(g, "goal")));
  }
  if (h.start.value() >= h.vertex_count) {
    throw FormatError("start vertex out of range");
  }
  if (h.goals.empty()) throw FormatError("goal set is empty");
  for (VertexId g : h.goals) {
    if (g.value() >= h.vertex_count) throw FormatError("goal out of range");
  }
  return h;
}

Json WriteHeader(std::uint32_t vertex_count, VertexId start,
                 const std::vector<VertexId>& goals) {
  Json root = Json::object();
  root["vertex_count"] = vertex_count;
  root["start"] = start.value();
  Json gs = Json::array();
  for (VertexId g : goals) gs.push_back(g.value());
  root["goals"] = gs;
  return root;
}

void CheckEndpoints(std::uint32_t from, std::uint32_t to,
                    std::uint32_t vertex_count) {
  if (from >= vertex_count || to >= vertex_count) {
    throw FormatError("edge endpoint out of range");
  }
}

}  // namespace

std::string SerializeProblem(const Problem& problem) {
  Json root = WriteHeader(problem.graph.vertex_count(), problem.start,
                          problem.goals);
  Json edges = Json::array();
  for (const Edge& e : problem.graph.edges()) {
    Json je = Json::object();
    je["from"] = e.from.value();
    je["to"] = e.to.value();
    Json ests = Json::array();
    for (const EstimatorSpec& s : e.estimators) {
      ests.push_back(Json::array(
          {Number(s.lower), Number(s.upper), Number(s.time_cost)}));
    }
    je["estimators"] = ests;
    je["true_cost"] = e.true_cost ? Number(*e.true_cost) : Json(nullptr);
    edges.push_back(std::move(je));
  }
  root["edges"] = edges;
  return Dump(root);
}

Problem ParseProblem(std::string_view json) {
  const Json root = Parse(json);
  Header h = ReadHeader(root);
  std::vector<Edge> edges;
  for (const Json& je : ArrayField(root, "edges")) {
    Edge e;
    const std::uint32_t from = ReadIndex(Field(je, "from"), "from");
    const std::uint32_t to = ReadIndex(Field(je, "to"), "to");
    CheckEndpoints(from, to, h.vertex_count);
    e.from = VertexId(from);
    e.to = VertexId(to);
    const Json& ests = ArrayField(je, "estimators");
    if (ests.empty()) throw FormatError("edge has no estimators");
    for (const Json& t : ests) {
      if (!t.is_array() || t.size() != 3) {
        throw FormatError("estimator must be [lower, upper, time_cost]");
      }
      e.estimators.push_back({ReadNumber(t[0], "lower"),
                              ReadNumber(t[1], "upper"),
                              ReadNumber(t[2], "time_cost")});
    }
    auto tc = je.find("true_cost");
    if (tc != je.end() && !tc->is_null()) {
      e.true_cost = ReadNumber(*tc, "true_cost");
    }
    edges.push_back(std::move(e));
  }
  return Problem{EstimatedDigraph(h.vertex_count, std::move(edges)), h.start,
                 std::move(h.goals)};
}

std::string SerializeWeightedGraph(const WeightedGraph& graph) {
  Json root = WriteHeader(graph.vertex_count, graph.start, graph.goals);
  Json edges = Json::array();
  for (const WeightedEdge& e : graph.edges) {
    Json je = Json::object();
    je["from"] = e.from.value();
    je["to"] = e.to.value();
    je["cost"] = e.cost;
    edges.push_back(std::move(je));
  }
  root["edges"] = edges;
  return Dump(root);
}

WeightedGraph ParseWeightedGraph(std::string_view json) {
  const Json root = Parse(json);
  Header h = ReadHeader(root);
  WeightedGraph g;
  g.vertex_count = h.vertex_count;
  g.start = h.start;
  g.goals = std::move(h.goals);
  for (const Json& je : ArrayField(root, "edges")) {
    const std::uint32_t from = ReadIndex(Field(je, "from"), "from");
    const std::uint32_t to = ReadIndex(Field(je, "to"), "to");
    CheckEndpoints(from, to, g.vertex_count);
    const Json& c = Field(je, "cost");
    if (!c.is_number_integer()) throw FormatError("cost must be an integer");
    g.edges.push_back({VertexId(from), VertexId(to), c.get<std::int64_t>()});
  }
  return g;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace boundsearch
