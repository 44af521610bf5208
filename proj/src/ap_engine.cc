// src/ap_engine.cc

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

#include "grove/ap_engine.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "grove/engine_detail.h"
#include "grove/rap_engine.h"
#include "grove/recovery.h"

namespace grove {

void EngineConfig::validate() const {
  if (!(damping >= 0.0 && damping < 1.0)) {
    throw std::invalid_argument("EngineConfig: damping must be in [0,1)");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("EngineConfig: max_iterations must be >= 1");
  }
  if (convergence_window < 1) {
    throw std::invalid_argument("EngineConfig: convergence_window must be >= 1");
  }
}

MessageState init_state(int n) {
  if (n < 1) {
    throw std::invalid_argument("init_state: dimension must be >= 1");
  }
  return MessageState(n);
}

Beliefs compute_beliefs(const MessageState& state, const SimilarityMatrix& sim) {
  detail::require_same_size(state, sim);
  const int n = state.size();
  Beliefs out{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.b(i, j) = sim(i, j) + state.eta(i, j) + state.alpha(i, j) + state.tau(i, j);
    }
  }
  return out;
}

namespace detail {

void require_same_size(const MessageState& state, const SimilarityMatrix& sim) {
  if (state.size() != sim.size()) {
    throw std::invalid_argument("message state and similarity dimensions differ");
  }
}

void update_beta_phase(MessageState& st, const SimilarityMatrix& sim, double lambda) {
  const int n = st.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      damp(st.beta(i, j), sim(i, j) + st.alpha(i, j), lambda);
    }
  }
}

void update_eta_phase(MessageState& st, double lambda) {
  const int n = st.size();
  for (int i = 0; i < n; ++i) {
    // Row max and runner-up of beta; ties resolve to the lowest column.
    double max1 = 0.0, max2 = 0.0;
    int arg1 = -1;
    if (n > 1) {
      max1 = max2 = -HUGE_VAL;
      for (int k = 0; k < n; ++k) {
        const double v = st.beta(i, k);
        if (v > max1) {
          max2 = max1;
          max1 = v;
          arg1 = k;
        } else if (v > max2) {
          max2 = v;
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      const double best_other = (n == 1) ? 0.0 : (j == arg1 ? max2 : max1);
      damp(st.eta(i, j), -best_other, lambda);
    }
  }
}

void update_alpha_phase(MessageState& st, double lambda) {
  const int n = st.size();
  for (int j = 0; j < n; ++j) {
    double positive_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k != j) positive_sum += std::max(0.0, st.rho(k, j));
    }
    const double rho_jj = st.rho(j, j);
    for (int i = 0; i < n; ++i) {
      if (i == j) {
        damp(st.alpha(j, j), positive_sum, lambda);
      } else {
        const double others = positive_sum - std::max(0.0, st.rho(i, j));
        damp(st.alpha(i, j), std::min(0.0, rho_jj + others), lambda);
      }
    }
  }
}

}  // namespace detail

void sweep_ap(MessageState& state, const SimilarityMatrix& sim, const EngineConfig& cfg) {
  detail::require_same_size(state, sim);
  const double lambda = cfg.damping;
  const int n = state.size();

  detail::update_beta_phase(state, sim, lambda);
  detail::update_eta_phase(state, lambda);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      detail::damp(state.rho(i, j), sim(i, j) + state.eta(i, j), lambda);
    }
  }
  detail::update_alpha_phase(state, lambda);
  ++state.iteration;
}

double net_similarity(const Assignment& assignment, const SimilarityMatrix& sim) {
  const int n = sim.size();
  if (static_cast<int>(assignment.member_of.size()) != n) {
    throw std::invalid_argument("net_similarity: assignment size mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const int e = assignment.member_of[static_cast<std::size_t>(i)];
    if (e < 0 || e >= n) {
      throw std::invalid_argument("net_similarity: node " + std::to_string(i) + " unassigned");
    }
    total += sim(i, e);  // S(i, exemplar) for members, the preference for exemplars
  }
  return total;
}

void ConvergenceReport::write_csv(std::ostream& out) const {
  out << "iteration,net_similarity,exemplar_count\n";
  char buf[64];
  for (const TracePoint& p : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.10g,%d", p.iteration, p.net_similarity,
                  p.exemplar_count);
    out << buf << '\n';
  }
}

RunResult run(const SimilarityMatrix& sim, const EngineConfig& cfg, const NodeIndex* index) {
  cfg.validate();
  if (cfg.mode == EngineMode::RAP && index == nullptr) {
    throw std::invalid_argument("run: RAP mode needs a node index");
  }
  if (index != nullptr && index->size() != sim.size()) {
    throw std::invalid_argument("run: node index and similarity dimensions differ");
  }

  RunResult result{init_state(sim.size()), {}};
  MessageState& state = result.state;
  ConvergenceReport& report = result.report;

  StructureContext ctx = (cfg.mode == EngineMode::RAP) ? StructureContext(*index)
                                                       : StructureContext();

  double previous = 0.0;
  int stable = 0;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    if (cfg.mode == EngineMode::RAP) {
      sweep_rap(state, sim, ctx, cfg);
    } else {
      sweep_ap(state, sim, cfg);
    }

    const Beliefs beliefs = compute_beliefs(state, sim);
    const std::vector<int> exemplars = extract_exemplars(beliefs);
    const Assignment assignment = assign_members(beliefs, exemplars);
    const double net = net_similarity(assignment, sim);
    report.trace.push_back({it, net, static_cast<int>(exemplars.size())});

    if (it > 1 && net == previous) {
      if (++stable >= cfg.convergence_window) {
        report.converged = true;
        break;
      }
    } else {
      stable = 0;
    }
    previous = net;
  }
  report.iterations = state.iteration;
  return result;
}

}  // namespace grove
