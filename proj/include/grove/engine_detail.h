// include/grove/engine_detail.h

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

// Update phases shared by the AP and RAP sweeps.  Not part of the public
// surface.

#ifndef GROVE_ENGINE_DETAIL_H_
#define GROVE_ENGINE_DETAIL_H_

#include "grove/ap_engine.h"
#include "grove/similarity.h"

namespace grove {
namespace detail {

inline void damp(double& value, double computed, double lambda) {
  value = lambda * value + (1.0 - lambda) * computed;
}

void require_same_size(const MessageState& state, const SimilarityMatrix& sim);

/// beta(i,j) = S(i,j) + alpha(i,j), damped.
void update_beta_phase(MessageState& st, const SimilarityMatrix& sim, double lambda);

/// eta(i,j) = -max_{k != j} beta(i,k), damped; 0 when the row has no other
/// column (n == 1).
void update_eta_phase(MessageState& st, double lambda);

/// alpha(j,j) = sum_{k != j} max(0, rho(k,j));
/// alpha(i,j) = min(0, rho(j,j) + sum_{k not in {i,j}} max(0, rho(k,j))),
/// damped.
void update_alpha_phase(MessageState& st, double lambda);

}  // namespace detail
}  // namespace grove

#endif  // GROVE_ENGINE_DETAIL_H_
