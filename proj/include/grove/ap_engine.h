// include/grove/ap_engine.h

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

#ifndef GROVE_AP_ENGINE_H_
#define GROVE_AP_ENGINE_H_

#include <iosfwd>
#include <vector>

#include "grove/matrix.h"
#include "grove/sapling.h"
#include "grove/similarity.h"

namespace grove {

struct Assignment;  // recovery.h

enum class EngineMode { AP, RAP };

struct EngineConfig {
  double damping = 0.9;
  int max_iterations = 4000;
  int convergence_window = 50;
  EngineMode mode = EngineMode::AP;

  /// Throws std::invalid_argument unless 0 <= damping < 1,
  /// max_iterations >= 1 and convergence_window >= 1.
  void validate() const;
};

/// Scalar max-sum messages over the binary assignment matrix.  Each entry is
/// message(c=1) - message(c=0).  Five message families drive plain affinity
/// propagation; sigma and tau carry the single-parent factor and stay zero
/// unless the RAP sweep runs (and stay zero on root rows always).
struct MessageState {
  explicit MessageState(int n)
      : rho(n), beta(n), eta(n), alpha(n), sigma(n), tau(n) {}

  int size() const { return rho.size(); }

  SquareMatrix rho;
  SquareMatrix beta;
  SquareMatrix eta;
  SquareMatrix alpha;
  SquareMatrix sigma;
  SquareMatrix tau;
  int iteration = 0;
};

/// All-zero messages, iteration 0.  Throws std::invalid_argument for n < 1.
MessageState init_state(int n);

/// The sum of all messages arriving at each variable:
/// b(i,j) = S(i,j) + eta(i,j) + alpha(i,j) + tau(i,j).
/// tau is identically zero outside RAP leaf rows, so the same formula serves
/// both modes.
struct Beliefs {
  SquareMatrix b;
};

Beliefs compute_beliefs(const MessageState& state, const SimilarityMatrix& sim);

/// One synchronous plain-AP sweep in the phase order beta, eta, rho, alpha;
/// every phase reads only completed arrays and damps its result:
/// new = damping * old + (1 - damping) * computed.
void sweep_ap(MessageState& state, const SimilarityMatrix& sim, const EngineConfig& cfg);

/// Sum of S(i, exemplar(i)) over members plus the preference of every
/// exemplar.  Throws std::invalid_argument on an incomplete assignment.
double net_similarity(const Assignment& assignment, const SimilarityMatrix& sim);

struct TracePoint {
  int iteration;
  double net_similarity;
  int exemplar_count;
};

struct ConvergenceReport {
  int iterations = 0;
  bool converged = false;
  std::vector<TracePoint> trace;

  void write_csv(std::ostream& out) const;
};

struct RunResult {
  MessageState state;
  ConvergenceReport report;
};

/// Runs sweeps until the net similarity of the tentatively recovered
/// configuration has been stable for `convergence_window` consecutive
/// iterations, or until max_iterations.  Non-convergence is reported, not
/// thrown.  RAP mode requires the node index (for pa(.) and the leaf/root
/// split); AP ignores it.
RunResult run(const SimilarityMatrix& sim, const EngineConfig& cfg,
              const NodeIndex* index = nullptr);

}  // namespace grove

#endif  // GROVE_AP_ENGINE_H_
