// include/grove/similarity.h

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

#ifndef GROVE_SIMILARITY_H_
#define GROVE_SIMILARITY_H_

#include <iosfwd>

#include "grove/matrix.h"
#include "grove/sapling.h"

namespace grove {

/// Dense pairwise similarity with a uniform diagonal preference.  Every
/// entry is finite and the whole diagonal equals the preference.
class SimilarityMatrix {
 public:
  /// Validates the invariants; throws std::invalid_argument on a non-finite
  /// entry or a diagonal entry that differs from `preference`.
  SimilarityMatrix(SquareMatrix values, double preference);

  int size() const { return values_.size(); }
  double preference() const { return preference_; }
  double operator()(int i, int j) const { return values_(i, j); }

  /// True when some off-diagonal pair has positive similarity but the
  /// preference is not below the maximum such value.  Callers surface this
  /// as a warning: such a preference makes every point an exemplar.
  bool preference_not_below_max_similarity() const;

  /// Plain text dump, one row per line, round-trippable via load().
  void dump(std::ostream& out) const;
  static SimilarityMatrix load(std::istream& in);

 private:
  SquareMatrix values_;
  double preference_;
};

/// Number of distinct tags present in both statistics (frequencies ignored).
int common_tag_count(const TagStats& a, const TagStats& b);

/// Builds the default similarity: for i != j, S(i,j) = min(1, common tag
/// count) when the stems match and 0 otherwise; S(j,j) = preference.
/// Throws std::invalid_argument on an empty index or non-finite preference.
SimilarityMatrix build_similarity(const NodeIndex& index, double preference);

}  // namespace grove

#endif  // GROVE_SIMILARITY_H_
