// include/grove/rap_engine.h

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

#ifndef GROVE_RAP_ENGINE_H_
#define GROVE_RAP_ENGINE_H_

#include <iosfwd>
#include <vector>

#include "grove/ap_engine.h"
#include "grove/sapling.h"
#include "grove/similarity.h"

namespace grove {

/// Mid-inference structural state: the node index (pa(.) and the leaf/root
/// boundary) plus each root's tentative exemplar, re-estimated every sweep.
struct StructureContext {
  StructureContext() = default;
  explicit StructureContext(const NodeIndex& idx);

  const NodeIndex* index = nullptr;
  /// Tentative exemplar per root node, indexed by (root id - leaf_count).
  std::vector<int> parent_exemplar;

  /// Tentative exemplar of pa(leaf).
  int parent_exemplar_of_leaf(int leaf) const;
};

/// Re-estimates every root's exemplar from current beliefs: argmax over the
/// tentative exemplar set {j : b(j,j) > 0}, over all columns when that set
/// is empty; ties go to the lowest index.
void refresh_parent_exemplars(const MessageState& state, const SimilarityMatrix& sim,
                              StructureContext& ctx);

/// Leaf rows bucketed by their parent's tentative exemplar.  Groups are
/// ordered by exemplar id, members ascending.
struct LeafGroups {
  std::vector<int> group_exemplar;           // exemplar id per group
  std::vector<std::vector<int>> members;     // leaf rows per group
  std::vector<int> group_of_leaf;            // leaf row -> group position
};

LeafGroups group_leaves_by_parent_exemplar(const StructureContext& ctx);

/// Message from variable (i,j) to the single-parent factor of column j:
/// S(i,j) + alpha(i,j) + eta(i,j), read from the current arrays.  Defined
/// for leaf rows only; throws std::out_of_range otherwise.
double sigma_message(const MessageState& state, const SimilarityMatrix& sim,
                     const NodeIndex& index, int i, int j);

/// Factor-to-variable message for a diagonal leaf entry (j < L): the best
/// same-parent-group subset sum of positive sigmas around j, never below
/// zero (the empty cluster is always available).
/// `sigma_column` holds sigma(k, j) for leaf rows k = 0..L-1.
double tau_diagonal(const std::vector<double>& sigma_column, const LeafGroups& groups, int j);

/// Factor-to-variable message for an off-diagonal leaf entry: the best
/// subset restricted to i's parent group minus the best subset from any
/// single parent group (empty allowed), both over positive sigmas and
/// excluding row i.  Always <= 0.
double tau_offdiagonal(const std::vector<double>& sigma_column, const LeafGroups& groups,
                       int i, int j);

/// One synchronous RAP sweep: refresh parent exemplars, then the phases
/// eta; sigma; tau; rho and beta (with the tau term on leaf rows only);
/// alpha.  Each phase damps like sweep_ap.
void sweep_rap(MessageState& state, const SimilarityMatrix& sim, StructureContext& ctx,
               const EngineConfig& cfg);

/// True iff within every cluster all leaf members' parents share a single
/// exemplar under the assignment itself.
bool f_constraint_holds(const Assignment& assignment, const NodeIndex& index);

/// Trace output: per-column parent-exemplar group decomposition and tau
/// values at the current iteration.
void dump_tau_debug(const MessageState& state, const SimilarityMatrix& sim,
                    const StructureContext& ctx, std::ostream& out);

}  // namespace grove

#endif  // GROVE_RAP_ENGINE_H_
