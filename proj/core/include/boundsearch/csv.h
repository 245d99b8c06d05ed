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

// CSV rows for run metrics and anytime iteration logs. Numbers use the
// shortest round-trip representation; infinity is written as "inf".

#ifndef BOUNDSEARCH_CSV_H_
#define BOUNDSEARCH_CSV_H_

#include <string>
#include <string_view>

#include "boundsearch/anytime.h"
#include "boundsearch/estimation.h"

namespace boundsearch {

struct MetricsRecord {
  std::string instance_id;
  std::string algorithm;
  Metrics metrics;
  double l_under = kInfinity;
  double l_over = kInfinity;
  bool opt = false;
  int iterations = 1;
};

std::string FormatNumber(double x);

// instance_id,algorithm,w_1,w_2,w_3,expansions,evaluations,prunings,T_w,T_v,
// l_under,l_over,optimal_flag,iterations
std::string MetricsCsvHeader();
std::string MetricsCsvRow(const MetricsRecord& record);

// One row per anytime iteration, with that iteration's metric deltas.
std::string IterationCsvHeader();
std::string IterationCsvRow(std::string_view instance_id,
                            std::string_view algorithm,
                            const IterationEntry& entry);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_CSV_H_
