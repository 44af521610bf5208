// include/grove/sapling.h

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

#ifndef GROVE_SAPLING_H_
#define GROVE_SAPLING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grove {

/// Per-node tag frequencies.  Stored tags always have frequency >= 1;
/// adding a tag with count 0 is a no-op, so "no tag" is simply "absent".
class TagStats {
 public:
  /// Adds `count` occurrences of `tag`.  The tag must be non-empty (callers
  /// normalize before insertion) and the count non-negative.
  void add(const std::string& tag, std::int64_t count);

  /// Element-wise sum with another statistic.
  void merge(const TagStats& other);

  std::int64_t count(const std::string& tag) const;
  bool contains(const std::string& tag) const { return entries_.count(tag) > 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t distinct_tags() const { return entries_.size(); }

  const std::map<std::string, std::int64_t>& entries() const { return entries_; }

  bool operator==(const TagStats& other) const { return entries_ == other.entries_; }

 private:
  std::map<std::string, std::int64_t> entries_;
};

enum class NodeKind { Root, Leaf };

/// One node of a sapling.  Global ids and parent links are assigned by
/// build_index; until then both are unset.
struct SaplingNode {
  int id = -1;
  std::string raw_name;
  std::string stem;  // normalized name, filled by the loader / generator
  NodeKind kind = NodeKind::Leaf;
  TagStats tags;
  std::optional<int> parent;  // global id of the sapling root; leaves only
};

/// A shallow two-level personal hierarchy: one root plus its leaves.
struct Sapling {
  SaplingNode root;
  std::vector<SaplingNode> leaves;
  std::string owner;
};

/// Flat view over every node of a corpus.  Leaves occupy [0, leaf_count)
/// and roots [leaf_count, size); all message-passing code relies on that
/// ordering.
class NodeIndex {
 public:
  NodeIndex() : leaf_count_(0) {}
  NodeIndex(std::vector<SaplingNode> nodes, std::vector<std::string> owners, int leaf_count);

  int size() const { return static_cast<int>(nodes_.size()); }
  int leaf_count() const { return leaf_count_; }
  int root_count() const { return size() - leaf_count_; }

  bool is_leaf(int id) const { return id >= 0 && id < leaf_count_; }

  const SaplingNode& node(int id) const;
  const std::string& owner_of(int id) const;

  /// Parent id for leaves, absent for roots.  Throws std::out_of_range for
  /// ids outside [0, size).
  std::optional<int> parent_of(int id) const;

  const std::vector<SaplingNode>& nodes() const { return nodes_; }

 private:
  std::vector<SaplingNode> nodes_;
  std::vector<std::string> owners_;
  int leaf_count_;
};

/// Flattens saplings into a NodeIndex: all leaves first (input order), then
/// all roots (input order); leaf parent references are rewritten to global
/// root ids.  Deterministic.  Throws std::invalid_argument on an empty
/// corpus, a sapling without leaves, or two saplings sharing
/// (owner, root name).
NodeIndex build_index(const std::vector<Sapling>& saplings);

}  // namespace grove

#endif  // GROVE_SAPLING_H_
