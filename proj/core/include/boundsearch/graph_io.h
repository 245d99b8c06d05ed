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

// JSON file formats.
//
// Estimated graph:
//   {"vertex_count": int, "start": int, "goals": [int],
//    "edges": [{"from": int, "to": int,
//               "estimators": [[lower, upper, time_cost], ...],
//               "true_cost": number|null}]}
//
// Weighted graph:
//   {"vertex_count": int, "start": int, "goals": [int],
//    "edges": [{"from": int, "to": int, "cost": int}]}
//
// Serialization is canonical: fixed field order, two-space indentation,
// integral values written without a fractional part, trailing newline.
// Serialize(Parse(Serialize(x))) == Serialize(x) byte for byte.

#ifndef BOUNDSEARCH_GRAPH_IO_H_
#define BOUNDSEARCH_GRAPH_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boundsearch/graph.h"
#include "boundsearch/synth.h"

namespace boundsearch {

// Malformed or out-of-range input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string SerializeProblem(const Problem& problem);
Problem ParseProblem(std::string_view json);

std::string SerializeWeightedGraph(const WeightedGraph& graph);
WeightedGraph ParseWeightedGraph(std::string_view json);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

inline Problem LoadProblem(const std::filesystem::path& path) {
  return ParseProblem(ReadFile(path));
}
inline WeightedGraph LoadWeightedGraph(const std::filesystem::path& path) {
  return ParseWeightedGraph(ReadFile(path));
}

}  // namespace boundsearch

#endif  // BOUNDSEARCH_GRAPH_IO_H_
