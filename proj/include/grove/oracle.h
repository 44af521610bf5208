// include/grove/oracle.h

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

#ifndef GROVE_ORACLE_H_
#define GROVE_ORACLE_H_

#include <cstdint>
#include <vector>

#include "grove/sapling.h"
#include "grove/similarity.h"

namespace grove {

struct OracleResult {
  std::vector<int> member_of;
  std::vector<int> exemplars;
  double objective = 0.0;
  bool f_enforced = false;
  std::int64_t configurations = 0;  // candidate assignments evaluated
};

/// Exhaustive MAP over every assignment satisfying the row and column
/// constraints; with enforce_f, every cluster's leaf members must share one
/// parent exemplar under the candidate assignment itself.  Ties go to the
/// lexicographically smallest member_of vector.  Instances are capped at
/// 10 nodes (std::invalid_argument beyond).
OracleResult exact_map(const SimilarityMatrix& sim, const NodeIndex& index, bool enforce_f);

}  // namespace grove

#endif  // GROVE_ORACLE_H_
