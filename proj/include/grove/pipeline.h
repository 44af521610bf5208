// include/grove/pipeline.h

// Copyright 2026  The Grove Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVE_PIPELINE_H_
#define GROVE_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grove/metrics.h"

namespace grove {

/// Pipeline exit statuses.  Non-convergence is not an error; it is flagged
/// in the report.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInputError = 3;

struct RunConfig {
  std::string input_path;                 // sapling file, or
  std::string synthetic_spec_path;        // synthetic corpus spec
  std::string format = "sapling-json";    // sapling-json | sapling-csv
  std::string seed_term;                  // optional seed selection
  std::string mode = "compare";           // ap | rap | compare
  double damping = 0.9;
  int max_iterations = 2000;
  double preference = 0.0001;
  int convergence_window = 50;
  std::optional<std::uint64_t> rng_seed;  // overrides the spec file's seed
  std::string out_dir;
  int debug_tau_iteration = -1;           // >= 0: dump tau state at that sweep
};

struct PipelineOutcome {
  int exit_code = kExitOk;
  std::string error;                   // set when exit_code != 0
  std::vector<std::string> warnings;   // e.g. non-convergence, cycle cuts
  std::vector<std::pair<std::string, CorpusReport>> reports;  // per mode
};

/// Loads or synthesizes saplings, applies seed selection and the
/// root-named-leaf filter, aggregates tags, builds the similarity matrix,
/// runs the requested engine(s) on it, corrects the output to a forest and
/// writes all artifacts under cfg.out_dir:
///   trace_<mode>.csv, forest_<mode>.dot, membership_<mode>.json, report.txt.
/// Compare mode runs both engines on the identical matrix with fresh
/// message state each.  All artifacts are byte-deterministic for a fixed
/// config.
PipelineOutcome run_pipeline(const RunConfig& cfg);

}  // namespace grove

#endif  // GROVE_PIPELINE_H_
