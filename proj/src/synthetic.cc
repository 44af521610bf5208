// src/synthetic.cc

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

#include "grove/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "grove/rng.h"
#include "grove/stemmer.h"

namespace grove {

namespace {

using nlohmann::json;

std::map<std::string, int> concept_positions(const std::vector<ConceptNode>& concepts) {
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (!pos.emplace(concepts[i].name, static_cast<int>(i)).second) {
      throw std::invalid_argument("synthetic spec: duplicate concept '" + concepts[i].name + "'");
    }
  }
  return pos;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (concepts.empty()) {
    throw std::invalid_argument("synthetic spec: no concepts");
  }
  if (sapling_count < 1) {
    throw std::invalid_argument("synthetic spec: sapling_count must be >= 1");
  }
  if (leaves_min < 1 || leaves_min > leaves_max) {
    throw std::invalid_argument("synthetic spec: bad leaves_per_sapling range");
  }
  if (tags_min < 0 || tags_min > tags_max) {
    throw std::invalid_argument("synthetic spec: bad tags_per_leaf range");
  }
  if (!(tag_noise >= 0.0 && tag_noise <= 1.0)) {
    throw std::invalid_argument("synthetic spec: tag_noise must be in [0,1]");
  }

  const std::map<std::string, int> pos = concept_positions(concepts);
  bool any_children = false;
  for (const ConceptNode& c : concepts) {
    if (c.name.empty()) {
      throw std::invalid_argument("synthetic spec: empty concept name");
    }
    if (c.parent) {
      auto it = pos.find(*c.parent);
      if (it == pos.end()) {
        throw std::invalid_argument("synthetic spec: concept '" + c.name +
                                    "' names unknown parent '" + *c.parent + "'");
      }
      any_children = true;
      // Walk up; a cycle would loop longer than the concept count.
      int steps = 0;
      const ConceptNode* cur = &c;
      while (cur->parent) {
        cur = &concepts[static_cast<std::size_t>(pos.at(*cur->parent))];
        if (++steps > static_cast<int>(concepts.size())) {
          throw std::invalid_argument("synthetic spec: parent links contain a cycle");
        }
      }
    }
  }
  if (!any_children) {
    throw std::invalid_argument("synthetic spec: concept tree has no children anywhere");
  }
}

SyntheticSpec load_synthetic_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open synthetic spec '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("synthetic spec parse error: ") + e.what());
  }

  SyntheticSpec spec;
  if (!doc.contains("concepts") || !doc["concepts"].is_array()) {
    throw std::runtime_error("synthetic spec: missing 'concepts' array");
  }
  for (const json& c : doc["concepts"]) {
    ConceptNode node;
    node.name = c.at("name").get<std::string>();
    node.label = c.contains("label") ? c["label"].get<std::string>() : node.name;
    if (c.contains("parent") && !c["parent"].is_null()) {
      node.parent = c["parent"].get<std::string>();
    }
    if (c.contains("tags")) {
      for (const json& t : c["tags"]) node.tags.push_back(t.get<std::string>());
    }
    spec.concepts.push_back(std::move(node));
  }
  spec.sapling_count = doc.value("sapling_count", spec.sapling_count);
  if (doc.contains("leaves_per_sapling")) {
    spec.leaves_min = doc["leaves_per_sapling"].at(0).get<int>();
    spec.leaves_max = doc["leaves_per_sapling"].at(1).get<int>();
  }
  if (doc.contains("tags_per_leaf")) {
    spec.tags_min = doc["tags_per_leaf"].at(0).get<int>();
    spec.tags_max = doc["tags_per_leaf"].at(1).get<int>();
  }
  spec.tag_noise = doc.value("tag_noise", spec.tag_noise);
  spec.rng_seed = doc.value("rng_seed", spec.rng_seed);
  spec.validate();
  return spec;
}

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();

  const std::map<std::string, int> pos = concept_positions(spec.concepts);
  std::vector<std::vector<int>> children(spec.concepts.size());
  for (std::size_t i = 0; i < spec.concepts.size(); ++i) {
    if (spec.concepts[i].parent) {
      children[static_cast<std::size_t>(pos.at(*spec.concepts[i].parent))].push_back(
          static_cast<int>(i));
    }
  }
  std::vector<int> rootable;
  for (std::size_t i = 0; i < spec.concepts.size(); ++i) {
    if (!children[i].empty()) rootable.push_back(static_cast<int>(i));
  }

  // Off-concept tag pool per concept: every tag of the other concepts.
  std::set<std::string> all_tags;
  for (const ConceptNode& c : spec.concepts) all_tags.insert(c.tags.begin(), c.tags.end());
  std::vector<std::vector<std::string>> noise_pool(spec.concepts.size());
  for (std::size_t i = 0; i < spec.concepts.size(); ++i) {
    const std::set<std::string> own(spec.concepts[i].tags.begin(), spec.concepts[i].tags.end());
    for (const std::string& t : all_tags) {
      if (own.count(t) == 0) noise_pool[i].push_back(t);
    }
  }

  Rng rng(spec.rng_seed);
  SyntheticCorpus corpus;
  corpus.saplings.reserve(static_cast<std::size_t>(spec.sapling_count));
  corpus.truth.reserve(static_cast<std::size_t>(spec.sapling_count));

  char owner_buf[32];
  for (int s = 0; s < spec.sapling_count; ++s) {
    const int root_concept = rootable[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(rootable.size()) - 1))];
    const std::vector<int>& kids = children[static_cast<std::size_t>(root_concept)];

    int want = rng.uniform_int(spec.leaves_min, spec.leaves_max);
    want = std::min(want, static_cast<int>(kids.size()));
    const std::vector<int> picked = rng.sample_without_replacement(static_cast<int>(kids.size()), want);

    Sapling sap;
    std::snprintf(owner_buf, sizeof(owner_buf), "user%04d", s);
    sap.owner = owner_buf;
    sap.root.raw_name = spec.concepts[static_cast<std::size_t>(root_concept)].label;
    sap.root.stem = stem(sap.root.raw_name);
    sap.root.kind = NodeKind::Root;

    SyntheticTruth truth;
    truth.root_concept = spec.concepts[static_cast<std::size_t>(root_concept)].name;

    for (const int ci : picked) {
      const int concept_id = kids[static_cast<std::size_t>(ci)];
      const ConceptNode& leaf_concept = spec.concepts[static_cast<std::size_t>(concept_id)];
      SaplingNode leaf;
      leaf.raw_name = leaf_concept.label;
      leaf.stem = stem(leaf.raw_name);
      leaf.kind = NodeKind::Leaf;

      const int vocab = static_cast<int>(leaf_concept.tags.size());
      int tag_count = rng.uniform_int(spec.tags_min, spec.tags_max);
      tag_count = std::min(tag_count, vocab);
      if (tag_count > 0) {
        const std::vector<int> chosen = rng.sample_without_replacement(vocab, tag_count);
        for (const int ti : chosen) {
          std::string tag = leaf_concept.tags[static_cast<std::size_t>(ti)];
          if (spec.tag_noise > 0.0 && rng.bernoulli(spec.tag_noise) &&
              !noise_pool[static_cast<std::size_t>(concept_id)].empty()) {
            const std::vector<std::string>& pool = noise_pool[static_cast<std::size_t>(concept_id)];
            tag = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
          }
          leaf.tags.add(tag, rng.uniform_int(1, 3));
        }
      }
      sap.leaves.push_back(std::move(leaf));
      truth.leaf_concepts.push_back(leaf_concept.name);
    }

    corpus.saplings.push_back(std::move(sap));
    corpus.truth.push_back(std::move(truth));
  }
  return corpus;
}

}  // namespace grove
