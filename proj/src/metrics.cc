// src/metrics.cc

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

#include "grove/metrics.h"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace grove {

namespace {

// Clusters of the tree rooted at `root_cluster`, level by level.
std::vector<std::vector<int>> levels_of(const Forest& forest, int root_cluster) {
  if (root_cluster < 0 || root_cluster >= static_cast<int>(forest.clusters.size())) {
    throw std::invalid_argument("depth_profile: bad root cluster");
  }
  std::vector<std::vector<int>> levels;
  std::vector<int> frontier = {root_cluster};
  std::size_t visited = 0;
  while (!frontier.empty()) {
    visited += frontier.size();
    if (visited > forest.clusters.size()) {
      throw std::invalid_argument("depth_profile: cycle in cluster graph");
    }
    levels.push_back(frontier);
    std::vector<int> next;
    for (const int c : frontier) {
      for (const int child : forest.children[static_cast<std::size_t>(c)]) {
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace

DepthProfile depth_profile(const Forest& forest, int root_cluster) {
  DepthProfile profile;
  for (const std::vector<int>& level : levels_of(forest, root_cluster)) {
    long instances = 0;
    for (const int c : level) {
      instances += static_cast<long>(forest.clusters[static_cast<std::size_t>(c)].members.size());
    }
    profile.clusters_per_level.push_back(static_cast<long>(level.size()));
    profile.instances_per_level.push_back(instances);
  }
  return profile;
}

double area_under_tree(const DepthProfile& profile, ProfileKind which) {
  const std::vector<long>& counts =
      which == ProfileKind::Clusters ? profile.clusters_per_level : profile.instances_per_level;
  if (counts.empty()) {
    throw std::invalid_argument("area_under_tree: empty profile");
  }
  double area = 0.0;
  for (std::size_t d = 0; d + 1 < counts.size(); ++d) {
    area += 0.5 * static_cast<double>(counts[d] + counts[d + 1]);
  }
  return area;
}

double tree_net_similarity(const Forest& forest, int root_cluster, const SimilarityMatrix& sim) {
  double total = 0.0;
  for (const std::vector<int>& level : levels_of(forest, root_cluster)) {
    for (const int c : level) {
      const Forest::Cluster& cluster = forest.clusters[static_cast<std::size_t>(c)];
      total += sim.preference();
      for (const int m : cluster.members) {
        if (m != cluster.exemplar) total += sim(m, cluster.exemplar);
      }
    }
  }
  return total;
}

TreeMetrics compute_tree_metrics(const Forest& forest, int root_cluster,
                                 const SimilarityMatrix& sim) {
  TreeMetrics metrics;
  metrics.root_cluster = root_cluster;
  metrics.root_exemplar = forest.clusters[static_cast<std::size_t>(root_cluster)].exemplar;
  metrics.net_similarity = tree_net_similarity(forest, root_cluster, sim);
  metrics.profile = depth_profile(forest, root_cluster);
  metrics.aut_clusters = area_under_tree(metrics.profile, ProfileKind::Clusters);
  metrics.aut_instances = area_under_tree(metrics.profile, ProfileKind::Instances);
  return metrics;
}

TreeMetrics best_tree(const Forest& forest, const SimilarityMatrix& sim) {
  if (forest.roots.empty()) {
    throw std::invalid_argument("best_tree: empty forest");
  }
  TreeMetrics best;
  bool have = false;
  for (const int root : forest.roots) {
    TreeMetrics candidate = compute_tree_metrics(forest, root, sim);
    if (!have) {
      best = candidate;
      have = true;
      continue;
    }
    if (candidate.net_similarity > best.net_similarity ||
        (candidate.net_similarity == best.net_similarity &&
         (candidate.aut_instances > best.aut_instances ||
          (candidate.aut_instances == best.aut_instances &&
           candidate.root_exemplar < best.root_exemplar)))) {
      best = candidate;
    }
  }
  return best;
}

CorpusReport build_report(const Forest& forest, const Assignment& assignment,
                          const SimilarityMatrix& sim, const ConvergenceReport& convergence,
                          int members_split, int cycle_edges_cut) {
  (void)assignment;
  CorpusReport report;
  const TreeCount count = count_trees(forest);
  report.tree_count = count.trees;
  report.isolated_clusters = count.isolated_clusters;
  report.members_split = members_split;
  report.cycle_edges_cut = cycle_edges_cut;
  report.convergence.iterations = convergence.iterations;
  report.convergence.converged = convergence.converged;
  for (const int root : forest.roots) {
    report.trees.push_back(compute_tree_metrics(forest, root, sim));
    report.net_similarity += report.trees.back().net_similarity;
  }
  return report;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string format_profile(const std::vector<long>& counts) {
  std::string out = "<";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(counts[i]);
  }
  out += ">";
  return out;
}

}  // namespace

void write_report_text(const std::vector<std::pair<std::string, CorpusReport>>& runs,
                       std::ostream& out) {
  out << "run            net_sim      trees  isolated  split  cut  iters  converged\n";
  for (const auto& [label, report] : runs) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-14s %-12s %-6d %-9d %-6d %-4d %-6d %s", label.c_str(),
                  format_double(report.net_similarity).c_str(), report.tree_count,
                  report.isolated_clusters, report.members_split, report.cycle_edges_cut,
                  report.convergence.iterations, report.convergence.converged ? "yes" : "no");
    out << line << '\n';
  }
  out << '\n';
  for (const auto& [label, report] : runs) {
    if (report.trees.empty()) continue;
    // Pick the same winner best_tree would.
    const TreeMetrics* best = &report.trees.front();
    for (const TreeMetrics& t : report.trees) {
      if (t.net_similarity > best->net_similarity ||
          (t.net_similarity == best->net_similarity &&
           (t.aut_instances > best->aut_instances ||
            (t.aut_instances == best->aut_instances && t.root_exemplar < best->root_exemplar)))) {
        best = &t;
      }
    }
    out << label << " best tree: exemplar " << best->root_exemplar << ", net_sim "
        << format_double(best->net_similarity) << ", AUT(instances) "
        << format_double(best->aut_instances) << ", AUT(clusters) "
        << format_double(best->aut_clusters) << "\n";
    out << label << " best tree clusters per level:  " << format_profile(best->profile.clusters_per_level)
        << "\n";
    out << label << " best tree instances per level: "
        << format_profile(best->profile.instances_per_level) << "\n";
  }
}

}  // namespace grove
