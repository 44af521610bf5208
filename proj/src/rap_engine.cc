// src/rap_engine.cc

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

#include "grove/rap_engine.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "grove/engine_detail.h"
#include "grove/recovery.h"

namespace grove {

StructureContext::StructureContext(const NodeIndex& idx) : index(&idx) {
  parent_exemplar.resize(static_cast<std::size_t>(idx.root_count()));
  for (int r = 0; r < idx.root_count(); ++r) {
    parent_exemplar[static_cast<std::size_t>(r)] = idx.leaf_count() + r;
  }
}

int StructureContext::parent_exemplar_of_leaf(int leaf) const {
  const int parent = *index->parent_of(leaf);
  return parent_exemplar[static_cast<std::size_t>(parent - index->leaf_count())];
}

void refresh_parent_exemplars(const MessageState& state, const SimilarityMatrix& sim,
                              StructureContext& ctx) {
  if (ctx.index == nullptr) {
    throw std::invalid_argument("refresh_parent_exemplars: context has no index");
  }
  detail::require_same_size(state, sim);
  const NodeIndex& index = *ctx.index;
  const int n = state.size();
  const Beliefs beliefs = compute_beliefs(state, sim);

  std::vector<int> tentative;
  for (int j = 0; j < n; ++j) {
    if (beliefs.b(j, j) > 0.0) tentative.push_back(j);
  }

  for (int r = index.leaf_count(); r < n; ++r) {
    int best = -1;
    double best_value = -HUGE_VAL;
    if (!tentative.empty()) {
      for (const int j : tentative) {
        if (beliefs.b(r, j) > best_value) {
          best_value = beliefs.b(r, j);
          best = j;
        }
      }
    } else {
      for (int j = 0; j < n; ++j) {
        if (beliefs.b(r, j) > best_value) {
          best_value = beliefs.b(r, j);
          best = j;
        }
      }
    }
    ctx.parent_exemplar[static_cast<std::size_t>(r - index.leaf_count())] = best;
  }
}

LeafGroups group_leaves_by_parent_exemplar(const StructureContext& ctx) {
  if (ctx.index == nullptr) {
    throw std::invalid_argument("group_leaves_by_parent_exemplar: context has no index");
  }
  const int leaf_count = ctx.index->leaf_count();

  std::map<int, std::vector<int>> by_exemplar;
  for (int leaf = 0; leaf < leaf_count; ++leaf) {
    by_exemplar[ctx.parent_exemplar_of_leaf(leaf)].push_back(leaf);
  }

  LeafGroups groups;
  groups.group_of_leaf.assign(static_cast<std::size_t>(leaf_count), -1);
  for (auto& [exemplar, members] : by_exemplar) {
    const int g = static_cast<int>(groups.members.size());
    for (const int leaf : members) {
      groups.group_of_leaf[static_cast<std::size_t>(leaf)] = g;
    }
    groups.group_exemplar.push_back(exemplar);
    groups.members.push_back(std::move(members));
  }
  return groups;
}

double sigma_message(const MessageState& state, const SimilarityMatrix& sim,
                     const NodeIndex& index, int i, int j) {
  detail::require_same_size(state, sim);
  if (j < 0 || j >= state.size()) {
    throw std::out_of_range("sigma_message: column out of range");
  }
  // The single-parent factor touches leaf rows only.
  if (!index.is_leaf(i)) {
    throw std::out_of_range("sigma_message: row " + std::to_string(i) + " is not a leaf");
  }
  return sim(i, j) + state.alpha(i, j) + state.eta(i, j);
}

double tau_diagonal(const std::vector<double>& sigma_column, const LeafGroups& groups, int j) {
  if (j < 0 || j >= static_cast<int>(groups.group_of_leaf.size())) {
    throw std::out_of_range("tau_diagonal: j is not a leaf row");
  }
  const int g = groups.group_of_leaf[static_cast<std::size_t>(j)];
  double sum = 0.0;
  for (const int k : groups.members[static_cast<std::size_t>(g)]) {
    if (k == j) continue;
    const double s = sigma_column[static_cast<std::size_t>(k)];
    if (s > 0.0) sum += s;
  }
  return std::max(0.0, sum);
}

double tau_offdiagonal(const std::vector<double>& sigma_column, const LeafGroups& groups,
                       int i, int j) {
  if (i < 0 || i >= static_cast<int>(groups.group_of_leaf.size())) {
    throw std::out_of_range("tau_offdiagonal: i is not a leaf row");
  }
  if (i == j) {
    throw std::invalid_argument("tau_offdiagonal: diagonal entry");
  }
  const int own_group = groups.group_of_leaf[static_cast<std::size_t>(i)];

  // Best consistent cluster around j that also contains i: only members of
  // i's parent group qualify, positive sigmas only, empty allowed.
  double own_sum = 0.0;
  for (const int k : groups.members[static_cast<std::size_t>(own_group)]) {
    if (k == i) continue;
    const double s = sigma_column[static_cast<std::size_t>(k)];
    if (s > 0.0) own_sum += s;
  }

  // Best cluster around j from any single parent group, i excluded, empty
  // allowed.
  double best = 0.0;
  for (const std::vector<int>& group : groups.members) {
    double sum = 0.0;
    for (const int k : group) {
      if (k == i) continue;
      const double s = sigma_column[static_cast<std::size_t>(k)];
      if (s > 0.0) sum += s;
    }
    best = std::max(best, sum);
  }
  return own_sum - best;
}

void sweep_rap(MessageState& state, const SimilarityMatrix& sim, StructureContext& ctx,
               const EngineConfig& cfg) {
  detail::require_same_size(state, sim);
  if (ctx.index == nullptr) {
    throw std::invalid_argument("sweep_rap: context has no index");
  }
  if (ctx.index->size() != state.size()) {
    throw std::invalid_argument("sweep_rap: node index and state dimensions differ");
  }
  const double lambda = cfg.damping;
  const int n = state.size();
  const int leaf_count = ctx.index->leaf_count();

  refresh_parent_exemplars(state, sim, ctx);
  const LeafGroups groups = group_leaves_by_parent_exemplar(ctx);
  const int group_count = static_cast<int>(groups.members.size());

  detail::update_eta_phase(state, lambda);

  // sigma: leaf rows only, from the fresh eta and last sweep's alpha.
  for (int i = 0; i < leaf_count; ++i) {
    for (int j = 0; j < n; ++j) {
      detail::damp(state.sigma(i, j), sim(i, j) + state.alpha(i, j) + state.eta(i, j), lambda);
    }
  }

  // tau: per column, the factor decouples across parent groups, so the best
  // subset is just each group's positive-sigma mass.  Track the two largest
  // group sums to answer "best group excluding mine" in O(1) per leaf.
  std::vector<double> group_sum(static_cast<std::size_t>(group_count));
  for (int j = 0; j < n; ++j) {
    std::fill(group_sum.begin(), group_sum.end(), 0.0);
    for (int k = 0; k < leaf_count; ++k) {
      const double s = state.sigma(k, j);
      if (s > 0.0) group_sum[static_cast<std::size_t>(groups.group_of_leaf[static_cast<std::size_t>(k)])] += s;
    }
    double max1 = 0.0, max2 = 0.0;
    int arg1 = -1;
    for (int g = 0; g < group_count; ++g) {
      const double v = group_sum[static_cast<std::size_t>(g)];
      if (v > max1) {
        max2 = max1;
        max1 = v;
        arg1 = g;
      } else if (v > max2) {
        max2 = v;
      }
    }
    for (int i = 0; i < leaf_count; ++i) {
      const int g = groups.group_of_leaf[static_cast<std::size_t>(i)];
      const double own_contribution = std::max(0.0, state.sigma(i, j));
      const double own_sum = group_sum[static_cast<std::size_t>(g)] - own_contribution;
      double computed;
      if (i == j) {
        computed = std::max(0.0, own_sum);
      } else {
        const double best_other = (g == arg1) ? max2 : max1;
        const double best = std::max({0.0, own_sum, best_other});
        computed = own_sum - best;
      }
      detail::damp(state.tau(i, j), computed, lambda);
    }
  }

  // rho and beta; the tau term applies to leaf rows only.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = (i < leaf_count) ? state.tau(i, j) : 0.0;
      detail::damp(state.rho(i, j), sim(i, j) + state.eta(i, j) + t, lambda);
      detail::damp(state.beta(i, j), sim(i, j) + state.alpha(i, j) + t, lambda);
    }
  }

  detail::update_alpha_phase(state, lambda);
  ++state.iteration;
}

bool f_constraint_holds(const Assignment& assignment, const NodeIndex& index) {
  std::map<int, int> cluster_parent_exemplar;  // exemplar -> shared parent exemplar of its leaves
  for (int i = 0; i < index.leaf_count(); ++i) {
    const int cluster = assignment.member_of[static_cast<std::size_t>(i)];
    const int parent = *index.parent_of(i);
    const int parent_exemplar = assignment.member_of[static_cast<std::size_t>(parent)];
    auto [it, inserted] = cluster_parent_exemplar.emplace(cluster, parent_exemplar);
    if (!inserted && it->second != parent_exemplar) {
      return false;
    }
  }
  return true;
}

void dump_tau_debug(const MessageState& state, const SimilarityMatrix& sim,
                    const StructureContext& ctx, std::ostream& out) {
  detail::require_same_size(state, sim);
  const LeafGroups groups = group_leaves_by_parent_exemplar(ctx);
  const int n = state.size();
  const int leaf_count = ctx.index->leaf_count();

  out << "iteration " << state.iteration << "\n";
  out << "parent-exemplar groups:\n";
  for (std::size_t g = 0; g < groups.members.size(); ++g) {
    out << "  group " << g << " (parent exemplar " << groups.group_exemplar[g] << "): leaves";
    for (const int leaf : groups.members[g]) out << ' ' << leaf;
    out << "\n";
  }
  out << "tau (leaf rows x columns):\n";
  for (int i = 0; i < leaf_count; ++i) {
    out << "  row " << i << ":";
    for (int j = 0; j < n; ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %.6g", state.tau(i, j));
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace grove
