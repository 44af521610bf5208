// src/recovery.cc

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

#include "grove/recovery.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace grove {

std::vector<int> extract_exemplars(const Beliefs& beliefs) {
  const int n = beliefs.b.size();
  std::vector<int> exemplars;
  for (int j = 0; j < n; ++j) {
    if (beliefs.b(j, j) > 0.0) exemplars.push_back(j);
  }
  if (exemplars.empty()) {
    // Nothing crossed the threshold; promote the best diagonal so the
    // assignment stays total.
    int best = 0;
    for (int j = 1; j < n; ++j) {
      if (beliefs.b(j, j) > beliefs.b(best, best)) best = j;
    }
    exemplars.push_back(best);
  }
  return exemplars;
}

Assignment assign_members(const Beliefs& beliefs, const std::vector<int>& exemplars) {
  if (exemplars.empty()) {
    throw std::invalid_argument("assign_members: empty exemplar set");
  }
  const int n = beliefs.b.size();

  Assignment out;
  out.member_of.assign(static_cast<std::size_t>(n), -1);
  out.exemplars = exemplars;
  std::sort(out.exemplars.begin(), out.exemplars.end());
  out.belief_to_exemplar.assign(static_cast<std::size_t>(n), 0.0);
  out.belief_diag.assign(static_cast<std::size_t>(n), 0.0);

  std::vector<bool> is_exemplar(static_cast<std::size_t>(n), false);
  for (const int e : out.exemplars) is_exemplar[static_cast<std::size_t>(e)] = true;

  for (int i = 0; i < n; ++i) {
    out.belief_diag[static_cast<std::size_t>(i)] = beliefs.b(i, i);
    if (is_exemplar[static_cast<std::size_t>(i)]) {
      out.member_of[static_cast<std::size_t>(i)] = i;
      out.belief_to_exemplar[static_cast<std::size_t>(i)] = beliefs.b(i, i);
      continue;
    }
    int best = -1;
    double best_value = -HUGE_VAL;
    for (const int e : out.exemplars) {
      if (beliefs.b(i, e) > best_value) {
        best_value = beliefs.b(i, e);
        best = e;
      }
    }
    out.member_of[static_cast<std::size_t>(i)] = best;
    out.belief_to_exemplar[static_cast<std::size_t>(i)] = best_value;
  }

  for (int i = 0; i < n; ++i) {
    out.ranking[out.member_of[static_cast<std::size_t>(i)]].push_back(i);
  }
  for (auto& [exemplar, members] : out.ranking) {
    (void)exemplar;
    std::stable_sort(members.begin(), members.end(), [&out](int a, int b) {
      const double ba = out.belief_to_exemplar[static_cast<std::size_t>(a)];
      const double bb = out.belief_to_exemplar[static_cast<std::size_t>(b)];
      if (ba != bb) return ba > bb;
      return a < b;
    });
  }
  return out;
}

std::optional<int> cluster_parent(int exemplar, const Assignment& assignment,
                                  const NodeIndex& index) {
  if (index.is_leaf(exemplar)) {
    const int parent = *index.parent_of(exemplar);
    return assignment.member_of[static_cast<std::size_t>(parent)];
  }
  const auto it = assignment.ranking.find(exemplar);
  if (it == assignment.ranking.end()) return std::nullopt;
  for (const int member : it->second) {
    if (index.is_leaf(member)) {
      const int parent = *index.parent_of(member);
      return assignment.member_of[static_cast<std::size_t>(parent)];
    }
  }
  return std::nullopt;
}

int Forest::cluster_of(int exemplar) const {
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters[c].exemplar == exemplar) return static_cast<int>(c);
  }
  return -1;
}

namespace {

// The belief backing a cluster's parent edge: the deciding node is pa(x)
// where x is the exemplar (leaf exemplar) or the top-ranked leaf member
// (root exemplar); the edge is only as credible as that node's attachment
// to its own exemplar.
double parent_edge_weight(int exemplar, const Assignment& assignment, const NodeIndex& index) {
  int deciding = -1;
  if (index.is_leaf(exemplar)) {
    deciding = *index.parent_of(exemplar);
  } else {
    const auto it = assignment.ranking.find(exemplar);
    if (it != assignment.ranking.end()) {
      for (const int member : it->second) {
        if (index.is_leaf(member)) {
          deciding = *index.parent_of(member);
          break;
        }
      }
    }
  }
  if (deciding < 0) return -HUGE_VAL;
  return assignment.belief_to_exemplar[static_cast<std::size_t>(deciding)];
}

Forest build_forest(const Assignment& assignment, const NodeIndex& index, int* cycle_edges_cut) {
  Forest forest;
  for (const int e : assignment.exemplars) {
    Forest::Cluster cluster;
    cluster.exemplar = e;
    cluster.name = index.node(e).stem;
    const auto it = assignment.ranking.find(e);
    if (it != assignment.ranking.end()) cluster.members = it->second;
    forest.clusters.push_back(std::move(cluster));
  }

  const int cluster_count = static_cast<int>(forest.clusters.size());
  forest.parent.assign(static_cast<std::size_t>(cluster_count), std::nullopt);
  forest.children.assign(static_cast<std::size_t>(cluster_count), {});

  std::vector<int> position_of(static_cast<std::size_t>(index.size()), -1);
  for (int c = 0; c < cluster_count; ++c) {
    position_of[static_cast<std::size_t>(forest.clusters[static_cast<std::size_t>(c)].exemplar)] = c;
  }

  for (int c = 0; c < cluster_count; ++c) {
    const int exemplar = forest.clusters[static_cast<std::size_t>(c)].exemplar;
    const std::optional<int> parent_exemplar = cluster_parent(exemplar, assignment, index);
    if (!parent_exemplar) continue;
    const int p = position_of[static_cast<std::size_t>(*parent_exemplar)];
    if (p == c) {
      // A cluster cannot parent itself; treat as a one-edge cycle and cut.
      ++*cycle_edges_cut;
      continue;
    }
    forest.parent[static_cast<std::size_t>(c)] = p;
  }

  // The parent map is a functional graph; any remaining cycle is broken at
  // its minimum-weight edge (ties to the lowest exemplar id).
  std::vector<int> color(static_cast<std::size_t>(cluster_count), 0);  // 0 new, 1 active, 2 done
  for (int start = 0; start < cluster_count; ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (cur >= 0 && color[static_cast<std::size_t>(cur)] == 0) {
      color[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      cur = forest.parent[static_cast<std::size_t>(cur)].value_or(-1);
    }
    if (cur >= 0 && color[static_cast<std::size_t>(cur)] == 1) {
      // Found a cycle: cur .. path.back().
      std::size_t first = 0;
      while (path[first] != cur) ++first;
      int cut = path[first];
      double cut_weight =
          parent_edge_weight(forest.clusters[static_cast<std::size_t>(cut)].exemplar, assignment, index);
      for (std::size_t k = first + 1; k < path.size(); ++k) {
        const double w = parent_edge_weight(
            forest.clusters[static_cast<std::size_t>(path[k])].exemplar, assignment, index);
        const int candidate = path[k];
        const int cut_exemplar = forest.clusters[static_cast<std::size_t>(cut)].exemplar;
        const int cand_exemplar = forest.clusters[static_cast<std::size_t>(candidate)].exemplar;
        if (w < cut_weight || (w == cut_weight && cand_exemplar < cut_exemplar)) {
          cut = candidate;
          cut_weight = w;
        }
      }
      forest.parent[static_cast<std::size_t>(cut)].reset();
      ++*cycle_edges_cut;
    }
    for (const int c : path) color[static_cast<std::size_t>(c)] = 2;
  }

  for (int c = 0; c < cluster_count; ++c) {
    if (forest.parent[static_cast<std::size_t>(c)]) {
      forest.children[static_cast<std::size_t>(*forest.parent[static_cast<std::size_t>(c)])]
          .push_back(c);
    } else {
      forest.roots.push_back(c);
    }
  }
  return forest;
}

}  // namespace

CorrectionResult correct_to_forest(const Assignment& assignment, const NodeIndex& index) {
  CorrectionResult result;

  // Decide the splits against the input assignment.  Splitting only moves
  // leaf nodes, and every parent is a root, so the parent-exemplar values
  // consulted here cannot be invalidated by the splits themselves.
  std::vector<int> to_split;
  for (const int e : assignment.exemplars) {
    const std::optional<int> cluster_parent_exemplar = cluster_parent(e, assignment, index);
    if (!cluster_parent_exemplar) continue;
    const auto it = assignment.ranking.find(e);
    if (it == assignment.ranking.end()) continue;
    for (const int member : it->second) {
      if (member == e || !index.is_leaf(member)) continue;
      const int parent = *index.parent_of(member);
      if (assignment.member_of[static_cast<std::size_t>(parent)] != *cluster_parent_exemplar) {
        to_split.push_back(member);
      }
    }
  }

  Assignment corrected = assignment;
  for (const int m : to_split) {
    corrected.member_of[static_cast<std::size_t>(m)] = m;
    corrected.belief_to_exemplar[static_cast<std::size_t>(m)] =
        corrected.belief_diag[static_cast<std::size_t>(m)];
  }
  if (!to_split.empty()) {
    corrected.exemplars.clear();
    corrected.ranking.clear();
    const int n = static_cast<int>(corrected.member_of.size());
    for (int i = 0; i < n; ++i) {
      if (corrected.member_of[static_cast<std::size_t>(i)] == i) corrected.exemplars.push_back(i);
    }
    for (int i = 0; i < n; ++i) {
      corrected.ranking[corrected.member_of[static_cast<std::size_t>(i)]].push_back(i);
    }
    for (auto& [exemplar, members] : corrected.ranking) {
      (void)exemplar;
      std::stable_sort(members.begin(), members.end(), [&corrected](int a, int b) {
        const double ba = corrected.belief_to_exemplar[static_cast<std::size_t>(a)];
        const double bb = corrected.belief_to_exemplar[static_cast<std::size_t>(b)];
        if (ba != bb) return ba > bb;
        return a < b;
      });
    }
  }

  result.members_split = static_cast<int>(to_split.size());
  result.forest = build_forest(corrected, index, &result.cycle_edges_cut);
  result.assignment = std::move(corrected);
  return result;
}

TreeCount count_trees(const Forest& forest) {
  TreeCount count;
  for (const int root : forest.roots) {
    if (forest.children[static_cast<std::size_t>(root)].empty()) {
      ++count.isolated_clusters;
    } else {
      ++count.trees;
    }
  }
  return count;
}

void write_forest_dot(const Forest& forest, std::ostream& out) {
  out << "digraph taxonomy {\n";
  out << "  node [shape=box];\n";
  for (std::size_t c = 0; c < forest.clusters.size(); ++c) {
    const Forest::Cluster& cluster = forest.clusters[c];
    out << "  c" << cluster.exemplar << " [label=\"" << cluster.name << " ("
        << cluster.members.size() << ")\"];\n";
  }
  for (std::size_t c = 0; c < forest.clusters.size(); ++c) {
    if (forest.parent[c]) {
      out << "  c" << forest.clusters[static_cast<std::size_t>(*forest.parent[c])].exemplar
          << " -> c" << forest.clusters[c].exemplar << ";\n";
    }
  }
  out << "}\n";
}

void write_membership_json(const Forest& forest, const NodeIndex& index, std::ostream& out) {
  nlohmann::json doc;
  nlohmann::json clusters = nlohmann::json::array();
  for (std::size_t c = 0; c < forest.clusters.size(); ++c) {
    const Forest::Cluster& cluster = forest.clusters[c];
    nlohmann::json rec;
    rec["exemplar"] = cluster.exemplar;
    rec["name"] = cluster.name;
    if (forest.parent[c]) {
      rec["parent_exemplar"] =
          forest.clusters[static_cast<std::size_t>(*forest.parent[c])].exemplar;
    } else {
      rec["parent_exemplar"] = nullptr;
    }
    nlohmann::json members = nlohmann::json::array();
    for (const int m : cluster.members) {
      const SaplingNode& node = index.node(m);
      members.push_back({{"id", m},
                         {"name", node.raw_name},
                         {"kind", index.is_leaf(m) ? "leaf" : "root"},
                         {"owner", index.owner_of(m)}});
    }
    rec["members"] = std::move(members);
    clusters.push_back(std::move(rec));
  }
  doc["clusters"] = std::move(clusters);
  out << doc.dump(2) << '\n';
}

}  // namespace grove
