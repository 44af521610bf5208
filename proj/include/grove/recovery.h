// include/grove/recovery.h

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

#ifndef GROVE_RECOVERY_H_
#define GROVE_RECOVERY_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grove/ap_engine.h"
#include "grove/sapling.h"
#include "grove/similarity.h"

namespace grove {

/// Recovered MAP configuration: exemplars, total membership, and per-cluster
/// member rankings by belief (descending, ties to the lower id).
struct Assignment {
  std::vector<int> member_of;                // node -> its exemplar
  std::vector<int> exemplars;                // ascending
  std::map<int, std::vector<int>> ranking;   // exemplar -> ranked members (incl. exemplar)
  std::vector<double> belief_to_exemplar;    // b(i, member_of[i])
  std::vector<double> belief_diag;           // b(i, i)

  bool is_exemplar(int i) const { return member_of[static_cast<std::size_t>(i)] == i; }
};

/// { j : b(j,j) > 0 }; when empty, the diagonal argmax is promoted so the
/// result is never empty.  Ascending order.
std::vector<int> extract_exemplars(const Beliefs& beliefs);

/// Assigns every non-exemplar to its best exemplar by belief (ties to the
/// lowest exemplar id) and builds the rankings.  Throws
/// std::invalid_argument if `exemplars` is empty.
Assignment assign_members(const Beliefs& beliefs, const std::vector<int>& exemplars);

/// Parent exemplar of a cluster: for a leaf exemplar, the exemplar of its
/// parent node; for a root exemplar, the exemplar of the parent of its
/// highest-ranked leaf member; absent when a root exemplar has no leaf
/// members.
std::optional<int> cluster_parent(int exemplar, const Assignment& assignment,
                                  const NodeIndex& index);

/// The corrected cluster graph.  Clusters are ordered by exemplar id;
/// `parent` holds cluster positions, not node ids.
struct Forest {
  struct Cluster {
    int exemplar;
    std::string name;          // exemplar's stem
    std::vector<int> members;  // ranked, includes the exemplar
  };

  std::vector<Cluster> clusters;
  std::vector<std::optional<int>> parent;     // per cluster
  std::vector<std::vector<int>> children;     // per cluster
  std::vector<int> roots;                     // clusters with no parent

  int cluster_of(int exemplar) const;  // position lookup, -1 if absent
};

struct CorrectionResult {
  Assignment assignment;
  Forest forest;
  int members_split = 0;
  int cycle_edges_cut = 0;
};

/// Splits every leaf member whose parent exemplar disagrees with its
/// cluster's parent exemplar into a singleton cluster, then rebuilds the
/// cluster graph.  Any remaining parent cycle is broken by cutting its
/// minimum-belief edge.  The result always satisfies the single-parent
/// constraint and the Forest invariants; applying it twice changes nothing.
CorrectionResult correct_to_forest(const Assignment& assignment, const NodeIndex& index);

struct TreeCount {
  int trees = 0;               // root clusters with at least one child
  int isolated_clusters = 0;   // root clusters with no children
};

TreeCount count_trees(const Forest& forest);

/// DOT rendering of the cluster graph (label = exemplar stem + member count).
void write_forest_dot(const Forest& forest, std::ostream& out);

/// Full membership listing as JSON.
void write_membership_json(const Forest& forest, const NodeIndex& index, std::ostream& out);

}  // namespace grove

#endif  // GROVE_RECOVERY_H_
