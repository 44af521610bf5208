// src/pipeline.cc

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

#include "grove/pipeline.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "grove/ap_engine.h"
#include "grove/ingest.h"
#include "grove/rap_engine.h"
#include "grove/recovery.h"
#include "grove/similarity.h"
#include "grove/synthetic.h"

namespace grove {

namespace {

struct ModeOutputs {
  std::string label;
  CorpusReport report;
};

void validate_config(const RunConfig& cfg) {
  if (cfg.input_path.empty() == cfg.synthetic_spec_path.empty()) {
    throw std::invalid_argument("exactly one of --input and --synthetic-spec is required");
  }
  if (cfg.mode != "ap" && cfg.mode != "rap" && cfg.mode != "compare") {
    throw std::invalid_argument("mode must be ap, rap or compare");
  }
  if (cfg.out_dir.empty()) {
    throw std::invalid_argument("--out is required");
  }
  if (!(cfg.damping >= 0.0 && cfg.damping < 1.0)) {
    throw std::invalid_argument("damping must be in [0,1)");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("max iterations must be >= 1");
  }
  if (cfg.convergence_window < 1) {
    throw std::invalid_argument("convergence window must be >= 1");
  }
  if (!std::isfinite(cfg.preference)) {
    throw std::invalid_argument("preference must be finite");
  }
  if (!cfg.input_path.empty()) {
    parse_sapling_format(cfg.format);  // throws on unknown formats
  }
}

std::ofstream open_artifact(const std::filesystem::path& dir, const std::string& name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write artifact " + (dir / name).string());
  }
  return out;
}

ModeOutputs execute_mode(EngineMode mode, const std::string& label, const RunConfig& cfg,
                         const SimilarityMatrix& sim, const NodeIndex& index,
                         const std::filesystem::path& out_dir,
                         std::vector<std::string>& warnings) {
  EngineConfig engine_cfg;
  engine_cfg.damping = cfg.damping;
  engine_cfg.max_iterations = cfg.max_iterations;
  engine_cfg.convergence_window = cfg.convergence_window;
  engine_cfg.mode = mode;

  RunResult result = run(sim, engine_cfg, &index);
  if (!result.report.converged) {
    warnings.push_back(label + ": did not converge within " +
                       std::to_string(cfg.max_iterations) + " iterations");
  }

  if (mode == EngineMode::RAP && cfg.debug_tau_iteration >= 0) {
    // Re-run up to the requested sweep with a fresh state and dump the
    // constraint's view of that iteration.
    MessageState debug_state = init_state(sim.size());
    StructureContext debug_ctx(index);
    const int stop = std::min(cfg.debug_tau_iteration, result.report.iterations);
    for (int it = 0; it < stop; ++it) {
      sweep_rap(debug_state, sim, debug_ctx, engine_cfg);
    }
    std::ofstream tau_out = open_artifact(out_dir, "tau_debug.txt");
    dump_tau_debug(debug_state, sim, debug_ctx, tau_out);
  }

  const Beliefs beliefs = compute_beliefs(result.state, sim);
  const std::vector<int> exemplars = extract_exemplars(beliefs);
  const Assignment assignment = assign_members(beliefs, exemplars);
  CorrectionResult corrected = correct_to_forest(assignment, index);
  if (corrected.cycle_edges_cut > 0) {
    warnings.push_back(label + ": cut " + std::to_string(corrected.cycle_edges_cut) +
                       " cycle edge(s) while building the forest");
  }

  {
    std::ofstream out = open_artifact(out_dir, "trace_" + label + ".csv");
    result.report.write_csv(out);
  }
  {
    std::ofstream out = open_artifact(out_dir, "forest_" + label + ".dot");
    write_forest_dot(corrected.forest, out);
  }
  {
    std::ofstream out = open_artifact(out_dir, "membership_" + label + ".json");
    write_membership_json(corrected.forest, index, out);
  }

  ModeOutputs outputs;
  outputs.label = label;
  outputs.report = build_report(corrected.forest, corrected.assignment, sim, result.report,
                                corrected.members_split, corrected.cycle_edges_cut);
  return outputs;
}

}  // namespace

PipelineOutcome run_pipeline(const RunConfig& cfg) {
  PipelineOutcome outcome;
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    outcome.exit_code = kExitConfigError;
    outcome.error = e.what();
    return outcome;
  }

  std::vector<Sapling> saplings;
  try {
    if (!cfg.input_path.empty()) {
      saplings = load_saplings(cfg.input_path, parse_sapling_format(cfg.format));
    } else {
      SyntheticSpec spec = load_synthetic_spec(cfg.synthetic_spec_path);
      if (cfg.rng_seed) spec.rng_seed = *cfg.rng_seed;
      saplings = generate_synthetic(spec).saplings;
    }

    if (!cfg.seed_term.empty()) {
      SeedConfig seed_cfg;
      seed_cfg.seed_term = cfg.seed_term;
      saplings = select_by_seed(saplings, seed_cfg);
      saplings = drop_root_named_leaves(saplings, seed_cfg);
    }
    if (saplings.empty()) {
      throw std::runtime_error("no saplings left after loading and selection");
    }
    for (Sapling& s : saplings) {
      s = aggregate_tags(std::move(s));
    }
  } catch (const std::exception& e) {
    outcome.exit_code = kExitInputError;
    outcome.error = e.what();
    return outcome;
  }

  try {
    const NodeIndex index = build_index(saplings);
    const SimilarityMatrix sim = build_similarity(index, cfg.preference);
    if (sim.preference_not_below_max_similarity()) {
      outcome.warnings.push_back(
          "preference is not below the maximum pairwise similarity; every node "
          "will become an exemplar");
    }

    const std::filesystem::path out_dir(cfg.out_dir);
    std::filesystem::create_directories(out_dir);

    std::vector<ModeOutputs> outputs;
    if (cfg.mode == "ap" || cfg.mode == "compare") {
      outputs.push_back(
          execute_mode(EngineMode::AP, "ap", cfg, sim, index, out_dir, outcome.warnings));
    }
    if (cfg.mode == "rap" || cfg.mode == "compare") {
      outputs.push_back(
          execute_mode(EngineMode::RAP, "rap", cfg, sim, index, out_dir, outcome.warnings));
    }

    for (ModeOutputs& mode_outputs : outputs) {
      outcome.reports.emplace_back(mode_outputs.label, std::move(mode_outputs.report));
    }

    std::ofstream report_out = open_artifact(out_dir, "report.txt");
    report_out << "nodes: " << index.size() << " (" << index.leaf_count() << " leaves, "
               << index.root_count() << " roots)\n";
    report_out << "damping " << cfg.damping << ", max iterations " << cfg.max_iterations
               << ", preference " << cfg.preference << ", window " << cfg.convergence_window
               << "\n\n";
    write_report_text(outcome.reports, report_out);
    if (!outcome.warnings.empty()) {
      report_out << "\nwarnings:\n";
      for (const std::string& w : outcome.warnings) report_out << "  - " << w << '\n';
    }
  } catch (const std::exception& e) {
    outcome.exit_code = kExitInputError;
    outcome.error = e.what();
    return outcome;
  }

  return outcome;
}

}  // namespace grove
