// include/grove/ingest.h

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

#ifndef GROVE_INGEST_H_
#define GROVE_INGEST_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "grove/sapling.h"

namespace grove {

enum class SaplingFormat {
  JsonArray,  // "sapling-json": a JSON array of sapling objects
  Csv,        // "sapling-csv": owner,root_name,leaf_name,tag,count rows
};

/// Parses "sapling-json" / "sapling-csv" into the enum.  Throws
/// std::invalid_argument on anything else.
SaplingFormat parse_sapling_format(const std::string& name);

/// Loads saplings from a file.  Leaf tag statistics are populated; root
/// statistics are left empty (aggregate_tags fills them).  Node names are
/// trimmed and stemmed; tags are case-folded and trimmed.  Malformed input
/// throws std::runtime_error naming the record or line.  An empty file
/// yields an empty list.
std::vector<Sapling> load_saplings(const std::string& path, SaplingFormat format);

/// Writes saplings in the sapling-json format (root tags are not stored).
void save_saplings_json(const std::vector<Sapling>& saplings, std::ostream& out);

/// Returns the sapling with its root tags replaced by the element-wise sum
/// of the leaf tags.  Leaves are untouched; idempotent.
Sapling aggregate_tags(Sapling sapling);

enum class NameMatch { ExactStem };

struct SeedConfig {
  std::string seed_term;
  int expansion_rounds = 2;
  NameMatch name_match = NameMatch::ExactStem;
};

/// Seed-expansion selection.  Round 1 keeps saplings whose root stem equals
/// the seed stem; each further round adds saplings whose root stem matches
/// any leaf stem seen among the saplings selected so far.  Runs exactly
/// cfg.expansion_rounds rounds; the result is deduplicated and keeps input
/// order.
std::vector<Sapling> select_by_seed(const std::vector<Sapling>& saplings, const SeedConfig& cfg);

/// Removes every leaf whose stem equals the seed stem; saplings left with
/// no leaves are dropped entirely.
std::vector<Sapling> drop_root_named_leaves(const std::vector<Sapling>& saplings,
                                            const SeedConfig& cfg);

}  // namespace grove

#endif  // GROVE_INGEST_H_
