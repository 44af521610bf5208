// include/grove/metrics.h

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

#ifndef GROVE_METRICS_H_
#define GROVE_METRICS_H_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "grove/ap_engine.h"
#include "grove/recovery.h"
#include "grove/similarity.h"

namespace grove {

/// Per-level counts down one tree; level 0 is the tree root cluster.
struct DepthProfile {
  std::vector<long> clusters_per_level;
  std::vector<long> instances_per_level;  // total members across the level
};

enum class ProfileKind { Clusters, Instances };

/// Breadth-first level counts for the tree rooted at `root_cluster`.
DepthProfile depth_profile(const Forest& forest, int root_cluster);

/// Trapezoidal area under the per-level counts, unit level spacing:
/// sum over d of 0.5 * (n_d + n_{d+1}).  A single level has zero area.
/// Throws std::invalid_argument on an empty profile.
double area_under_tree(const DepthProfile& profile, ProfileKind which);

struct TreeMetrics {
  int root_cluster = -1;
  int root_exemplar = -1;
  double net_similarity = 0.0;
  DepthProfile profile;
  double aut_clusters = 0.0;
  double aut_instances = 0.0;
};

/// Net similarity restricted to one tree: members' similarities to their
/// exemplars plus one preference per cluster.
double tree_net_similarity(const Forest& forest, int root_cluster, const SimilarityMatrix& sim);

TreeMetrics compute_tree_metrics(const Forest& forest, int root_cluster,
                                 const SimilarityMatrix& sim);

/// The tree with the highest net similarity; ties go to the larger
/// instance-count AUT, then the lowest root exemplar id.  Every root
/// cluster (including isolated ones) is a candidate.  Throws
/// std::invalid_argument on an empty forest.
TreeMetrics best_tree(const Forest& forest, const SimilarityMatrix& sim);

struct ConvergenceSummary {
  int iterations = 0;
  bool converged = false;
};

/// Corpus-level evaluation of one corrected run.
struct CorpusReport {
  double net_similarity = 0.0;  // decomposes as the sum over trees
  int tree_count = 0;
  int isolated_clusters = 0;
  int members_split = 0;
  int cycle_edges_cut = 0;
  std::vector<TreeMetrics> trees;  // every root cluster, ascending root id
  ConvergenceSummary convergence;
};

CorpusReport build_report(const Forest& forest, const Assignment& assignment,
                          const SimilarityMatrix& sim, const ConvergenceReport& convergence,
                          int members_split, int cycle_edges_cut);

/// Side-by-side text report, one labelled column block per run.
void write_report_text(const std::vector<std::pair<std::string, CorpusReport>>& runs,
                       std::ostream& out);

}  // namespace grove

#endif  // GROVE_METRICS_H_
