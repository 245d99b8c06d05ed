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

#include "boundsearch/csv.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace boundsearch {
namespace {

// Quotes a field only when it contains a separator, quote or newline.
std::string Field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string PathText(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(path.edges[i].value());
  }
  return out;
}

}  // namespace

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string MetricsCsvHeader() {
  return "instance_id,algorithm,w_1,w_2,w_3,expansions,evaluations,prunings,"
         "T_w,T_v,l_under,l_over,optimal_flag,iterations\n";
}

std::string MetricsCsvRow(const MetricsRecord& r) {
  std::ostringstream out;
  const Metrics& m = r.metrics;
  out << Field(r.instance_id) << ',' << Field(r.algorithm) << ',' << m.layer(1)
      << ',' << m.layer(2) << ',' << m.layer(3) << ',' << m.expansions << ','
      << m.evaluations << ',' << m.prunings << ','
      << FormatNumber(m.estimation_time) << ',' << FormatNumber(m.search_time())
      << ',' << FormatNumber(r.l_under) << ',' << FormatNumber(r.l_over) << ','
      << (r.opt ? 1 : 0) << ',' << r.iterations << '\n';
  return out.str();
}

std::string IterationCsvHeader() {
  return "instance_id,algorithm,iteration,forced,l_est,l_prune,l_under,l_over,"
         "optimal_flag,path,w_1,w_2,w_3,expansions,evaluations,prunings,T_w,"
         "T_v\n";
}

std::string IterationCsvRow(std::string_view instance_id,
                            std::string_view algorithm,
                            const IterationEntry& e) {
  std::ostringstream out;
  const Metrics& m = e.metrics_delta;
  out << Field(instance_id) << ',' << Field(algorithm) << ',' << e.iteration
      << ',' << (e.forced ? 1 : 0) << ',' << FormatNumber(e.l_est) << ','
      << FormatNumber(e.l_prune) << ',' << FormatNumber(e.l_under) << ','
      << FormatNumber(e.l_over) << ',' << (e.opt ? 1 : 0) << ','
      << PathText(e.path) << ',' << m.layer(1) << ',' << m.layer(2) << ','
      << m.layer(3) << ',' << m.expansions << ',' << m.evaluations << ','
      << m.prunings << ',' << FormatNumber(m.estimation_time) << ','
      << FormatNumber(m.search_time()) << '\n';
  return out.str();
}

}  // namespace boundsearch
