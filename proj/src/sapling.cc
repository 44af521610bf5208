// src/sapling.cc

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

#include "grove/sapling.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace grove {

void TagStats::add(const std::string& tag, std::int64_t count) {
  if (tag.empty()) {
    throw std::invalid_argument("TagStats: empty tag");
  }
  if (count < 0) {
    throw std::invalid_argument("TagStats: negative count for tag '" + tag + "'");
  }
  if (count == 0) return;
  entries_[tag] += count;
}

void TagStats::merge(const TagStats& other) {
  for (const auto& [tag, count] : other.entries_) {
    entries_[tag] += count;
  }
}

std::int64_t TagStats::count(const std::string& tag) const {
  auto it = entries_.find(tag);
  return it == entries_.end() ? 0 : it->second;
}

NodeIndex::NodeIndex(std::vector<SaplingNode> nodes, std::vector<std::string> owners,
                     int leaf_count)
    : nodes_(std::move(nodes)), owners_(std::move(owners)), leaf_count_(leaf_count) {
  if (leaf_count_ < 0 || leaf_count_ > size()) {
    throw std::invalid_argument("NodeIndex: leaf count out of range");
  }
  if (owners_.size() != nodes_.size()) {
    throw std::invalid_argument("NodeIndex: owner list size mismatch");
  }
}

const SaplingNode& NodeIndex::node(int id) const {
  if (id < 0 || id >= size()) {
    throw std::out_of_range("NodeIndex: node id out of range");
  }
  return nodes_[static_cast<std::size_t>(id)];
}

const std::string& NodeIndex::owner_of(int id) const {
  if (id < 0 || id >= size()) {
    throw std::out_of_range("NodeIndex: node id out of range");
  }
  return owners_[static_cast<std::size_t>(id)];
}

std::optional<int> NodeIndex::parent_of(int id) const {
  return node(id).parent;
}

NodeIndex build_index(const std::vector<Sapling>& saplings) {
  if (saplings.empty()) {
    throw std::invalid_argument("build_index: empty sapling list");
  }

  int leaf_count = 0;
  std::set<std::pair<std::string, std::string>> root_identities;
  for (const Sapling& s : saplings) {
    if (s.leaves.empty()) {
      throw std::invalid_argument("build_index: sapling '" + s.root.raw_name +
                                  "' of owner '" + s.owner + "' has no leaves");
    }
    if (!root_identities.insert({s.owner, s.root.raw_name}).second) {
      throw std::invalid_argument("build_index: duplicate sapling identity (" + s.owner +
                                  ", " + s.root.raw_name + ")");
    }
    leaf_count += static_cast<int>(s.leaves.size());
  }

  const int total = leaf_count + static_cast<int>(saplings.size());
  std::vector<SaplingNode> nodes;
  std::vector<std::string> owners;
  nodes.reserve(total);
  owners.reserve(total);

  int next_leaf = 0;
  for (std::size_t si = 0; si < saplings.size(); ++si) {
    const int root_id = leaf_count + static_cast<int>(si);
    for (const SaplingNode& leaf : saplings[si].leaves) {
      SaplingNode n = leaf;
      n.id = next_leaf++;
      n.kind = NodeKind::Leaf;
      n.parent = root_id;
      nodes.push_back(std::move(n));
      owners.push_back(saplings[si].owner);
    }
  }
  for (std::size_t si = 0; si < saplings.size(); ++si) {
    SaplingNode n = saplings[si].root;
    n.id = leaf_count + static_cast<int>(si);
    n.kind = NodeKind::Root;
    n.parent.reset();
    nodes.push_back(std::move(n));
    owners.push_back(saplings[si].owner);
  }

  return NodeIndex(std::move(nodes), std::move(owners), leaf_count);
}

}  // namespace grove
