// tools/main.cc

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

#include <cstdint>
#include <iostream>

#include "CLI11.hpp"

#include "grove/pipeline.h"

int main(int argc, char** argv) {
  CLI::App app{
      "grove: merges many shallow user hierarchies (saplings) into consistent "
      "taxonomies with relational affinity propagation"};

  grove::RunConfig cfg;
  std::uint64_t rng_seed = 0;

  app.add_option("--input", cfg.input_path, "Sapling corpus file");
  app.add_option("--format", cfg.format, "Input format: sapling-json | sapling-csv")
      ->default_str(cfg.format);
  app.add_option("--synthetic-spec", cfg.synthetic_spec_path,
                 "Synthetic corpus spec (JSON); alternative to --input");
  app.add_option("--seed-term", cfg.seed_term,
                 "Seed term for sapling selection and the root-leaf filter");
  app.add_option("--mode", cfg.mode, "ap | rap | compare")->default_str(cfg.mode);
  app.add_option("--damping", cfg.damping, "Message damping factor, in [0,1)")
      ->default_val(cfg.damping);
  app.add_option("--max-iters", cfg.max_iterations, "Iteration budget")
      ->default_val(cfg.max_iterations);
  app.add_option("--preference", cfg.preference, "Uniform self-similarity")
      ->default_val(cfg.preference);
  app.add_option("--window", cfg.convergence_window,
                 "Consecutive stable iterations required for convergence")
      ->default_val(cfg.convergence_window);
  auto* seed_opt =
      app.add_option("--rng-seed", rng_seed, "Overrides the synthetic spec's rng seed");
  app.add_option("--out", cfg.out_dir, "Output directory for all artifacts")->required();
  app.add_option("--debug-tau-iter", cfg.debug_tau_iteration,
                 "Dump the constraint messages at this sweep (rap/compare only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return grove::kExitConfigError;
  }

  if (seed_opt->count() > 0) cfg.rng_seed = rng_seed;

  const grove::PipelineOutcome outcome = grove::run_pipeline(cfg);
  if (outcome.exit_code != grove::kExitOk) {
    std::cerr << "error: " << outcome.error << '\n';
    return outcome.exit_code;
  }
  for (const std::string& w : outcome.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  for (const auto& [label, report] : outcome.reports) {
    std::cout << label << ": net similarity " << report.net_similarity << ", "
              << report.tree_count << " tree(s), " << report.isolated_clusters
              << " isolated cluster(s), " << report.convergence.iterations << " iteration(s)"
              << (report.convergence.converged ? "" : " [not converged]") << '\n';
  }
  std::cout << "artifacts written to " << cfg.out_dir << '\n';
  return grove::kExitOk;
}
