// include/grove/synthetic.h

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

#ifndef GROVE_SYNTHETIC_H_
#define GROVE_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grove/sapling.h"

namespace grove {

/// One concept of a ground-truth taxonomy.  `name` identifies the concept;
/// `label` is the surface name emitted on sapling nodes (defaults to the
/// name, and distinct concepts may share a label — that ambiguity is the
/// interesting case).
struct ConceptNode {
  std::string name;
  std::string label;
  std::optional<std::string> parent;
  std::vector<std::string> tags;
};

/// Declarative description of a synthetic corpus: a concept tree plus
/// generator knobs.
struct SyntheticSpec {
  std::vector<ConceptNode> concepts;
  int sapling_count = 1;
  int leaves_min = 1;
  int leaves_max = 3;
  int tags_min = 3;
  int tags_max = 6;
  double tag_noise = 0.0;
  std::uint64_t rng_seed = 1;

  /// Throws std::invalid_argument when the tree or the knobs are malformed
  /// (unknown parent, cycle, no concept with children, noise outside [0,1],
  /// bad ranges).
  void validate() const;
};

/// Loads a spec from its JSON file format.
SyntheticSpec load_synthetic_spec(const std::string& path);

/// Ground-truth concept names for one generated sapling, parallel to its
/// root and leaves.  Kept out of the Sapling itself so inference never sees
/// the labels.
struct SyntheticTruth {
  std::string root_concept;
  std::vector<std::string> leaf_concepts;
};

struct SyntheticCorpus {
  std::vector<Sapling> saplings;
  std::vector<SyntheticTruth> truth;  // parallel to saplings
};

/// Samples a corpus: every sapling picks a concept with children as its
/// root and a subset of that concept's children as leaves; leaf tags are
/// drawn from the leaf concept's vocabulary, each tag replaced by an
/// off-concept tag with probability tag_noise.  Root tags are left
/// unaggregated, like load_saplings.  Deterministic under rng_seed.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

}  // namespace grove

#endif  // GROVE_SYNTHETIC_H_
