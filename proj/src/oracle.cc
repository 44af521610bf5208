// src/oracle.cc

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

#include "grove/oracle.h"

#include <stdexcept>
#include <utility>

namespace grove {

namespace {

bool satisfies_f(const std::vector<int>& member_of, const NodeIndex& index) {
  // Within each cluster, every leaf member's parent must share one exemplar.
  std::vector<int> shared(member_of.size(), -1);
  for (int i = 0; i < index.leaf_count(); ++i) {
    const int cluster = member_of[static_cast<std::size_t>(i)];
    const int parent_exemplar =
        member_of[static_cast<std::size_t>(*index.parent_of(i))];
    int& slot = shared[static_cast<std::size_t>(cluster)];
    if (slot == -1) {
      slot = parent_exemplar;
    } else if (slot != parent_exemplar) {
      return false;
    }
  }
  return true;
}

double objective_of(const std::vector<int>& member_of, const SimilarityMatrix& sim) {
  double total = 0.0;
  for (std::size_t i = 0; i < member_of.size(); ++i) {
    total += sim(static_cast<int>(i), member_of[i]);
  }
  return total;
}

}  // namespace

OracleResult exact_map(const SimilarityMatrix& sim, const NodeIndex& index, bool enforce_f) {
  const int n = sim.size();
  if (index.size() != n) {
    throw std::invalid_argument("exact_map: index and similarity dimensions differ");
  }
  if (n < 1) {
    throw std::invalid_argument("exact_map: empty instance");
  }
  if (n > 10) {
    throw std::invalid_argument("exact_map: instance too large for enumeration (N > 10)");
  }

  OracleResult result;
  result.f_enforced = enforce_f;
  bool have_best = false;
  std::vector<int> best;
  double best_objective = 0.0;

  std::vector<int> exemplars;
  std::vector<int> members;
  std::vector<int> member_of(static_cast<std::size_t>(n));
  std::vector<int> choice;

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    exemplars.clear();
    members.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        exemplars.push_back(i);
        member_of[static_cast<std::size_t>(i)] = i;
      } else {
        members.push_back(i);
      }
    }

    // Odometer over each member's exemplar choice.
    choice.assign(members.size(), 0);
    while (true) {
      for (std::size_t m = 0; m < members.size(); ++m) {
        member_of[static_cast<std::size_t>(members[m])] =
            exemplars[static_cast<std::size_t>(choice[m])];
      }
      ++result.configurations;

      if (!enforce_f || satisfies_f(member_of, index)) {
        const double objective = objective_of(member_of, sim);
        if (!have_best || objective > best_objective ||
            (objective == best_objective && member_of < best)) {
          have_best = true;
          best = member_of;
          best_objective = objective;
        }
      }

      std::size_t pos = 0;
      while (pos < choice.size()) {
        if (++choice[pos] < static_cast<int>(exemplars.size())) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
  }

  result.member_of = std::move(best);
  result.objective = best_objective;
  for (int i = 0; i < n; ++i) {
    if (result.member_of[static_cast<std::size_t>(i)] == i) result.exemplars.push_back(i);
  }
  return result;
}

}  // namespace grove
