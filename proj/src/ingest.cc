// src/ingest.cc

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

#include "grove/ingest.h"

#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "grove/stemmer.h"

namespace grove {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string normalize_tag(const std::string& raw) {
  std::string t = trim(raw);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return t;
}

[[noreturn]] void record_error(std::size_t record, const std::string& what) {
  throw std::runtime_error("sapling record " + std::to_string(record) + ": " + what);
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

SaplingNode make_node(const std::string& raw_name, NodeKind kind) {
  SaplingNode n;
  n.raw_name = trim(raw_name);
  n.stem = stem(n.raw_name);
  n.kind = kind;
  return n;
}

std::vector<Sapling> load_json(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (trim(text).empty()) return {};

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("sapling-json parse error: ") + e.what());
  }
  if (!doc.is_array()) {
    throw std::runtime_error("sapling-json: top-level value must be an array of saplings");
  }

  std::vector<Sapling> out;
  out.reserve(doc.size());
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const json& rec = doc[r];
    if (!rec.is_object()) record_error(r, "not an object");
    if (!rec.contains("owner") || !rec["owner"].is_string()) {
      record_error(r, "missing owner");
    }
    if (!rec.contains("root") || !rec["root"].is_object() || !rec["root"].contains("name") ||
        !rec["root"]["name"].is_string() || trim(rec["root"]["name"].get<std::string>()).empty()) {
      record_error(r, "missing root name");
    }
    if (!rec.contains("leaves") || !rec["leaves"].is_array() || rec["leaves"].empty()) {
      record_error(r, "sapling needs at least one leaf");
    }

    Sapling s;
    s.owner = rec["owner"].get<std::string>();
    s.root = make_node(rec["root"]["name"].get<std::string>(), NodeKind::Root);
    for (std::size_t li = 0; li < rec["leaves"].size(); ++li) {
      const json& lrec = rec["leaves"][li];
      if (!lrec.is_object() || !lrec.contains("name") || !lrec["name"].is_string() ||
          trim(lrec["name"].get<std::string>()).empty()) {
        record_error(r, "leaf " + std::to_string(li) + ": missing name");
      }
      SaplingNode leaf = make_node(lrec["name"].get<std::string>(), NodeKind::Leaf);
      if (lrec.contains("tags")) {
        if (!lrec["tags"].is_object()) {
          record_error(r, "leaf " + std::to_string(li) + ": tags must be an object");
        }
        for (const auto& [key, value] : lrec["tags"].items()) {
          if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
            record_error(r, "leaf " + std::to_string(li) + ": tag '" + key +
                                "' needs a non-negative integer count");
          }
          const std::string tag = normalize_tag(key);
          if (tag.empty()) {
            record_error(r, "leaf " + std::to_string(li) + ": empty tag");
          }
          leaf.tags.add(tag, value.get<std::int64_t>());
        }
      }
      s.leaves.push_back(std::move(leaf));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<Sapling> load_csv(std::istream& in) {
  std::vector<Sapling> out;
  std::string line;
  std::size_t line_no = 0;
  std::string cur_owner, cur_root, cur_leaf;
  bool have_sapling = false;
  bool have_leaf = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && trim(line) == "owner,root_name,leaf_name,tag,count") continue;
    if (trim(line).empty()) continue;

    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 5) line_error(line_no, "expected 5 comma-separated fields");
    const std::string owner = f[0];
    const std::string root_name = trim(f[1]);
    const std::string leaf_name = trim(f[2]);
    const std::string tag = normalize_tag(f[3]);
    const std::string count_str = trim(f[4]);
    if (root_name.empty()) line_error(line_no, "missing root name");
    if (leaf_name.empty()) line_error(line_no, "missing leaf name");

    std::int64_t count = 0;
    try {
      std::size_t pos = 0;
      count = static_cast<std::int64_t>(std::stoll(count_str, &pos));
      if (pos != count_str.size()) throw std::invalid_argument(count_str);
    } catch (const std::exception&) {
      line_error(line_no, "malformed count '" + count_str + "'");
    }
    if (count < 0) line_error(line_no, "negative count");
    if (tag.empty() && count != 0) line_error(line_no, "empty tag with nonzero count");

    if (!have_sapling || owner != cur_owner || root_name != cur_root) {
      Sapling s;
      s.owner = owner;
      s.root = make_node(root_name, NodeKind::Root);
      out.push_back(std::move(s));
      cur_owner = owner;
      cur_root = root_name;
      have_sapling = true;
      have_leaf = false;
    }
    // A new leaf whenever the leaf name changes between consecutive rows.
    if (!have_leaf || leaf_name != cur_leaf) {
      out.back().leaves.push_back(make_node(leaf_name, NodeKind::Leaf));
      cur_leaf = leaf_name;
      have_leaf = true;
    }
    if (!tag.empty() && count > 0) {
      out.back().leaves.back().tags.add(tag, count);
    }
  }
  return out;
}

}  // namespace

SaplingFormat parse_sapling_format(const std::string& name) {
  if (name == "sapling-json" || name == "json") return SaplingFormat::JsonArray;
  if (name == "sapling-csv" || name == "csv") return SaplingFormat::Csv;
  throw std::invalid_argument("unknown sapling format '" + name + "'");
}

std::vector<Sapling> load_saplings(const std::string& path, SaplingFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open sapling file '" + path + "'");
  }
  switch (format) {
    case SaplingFormat::JsonArray:
      return load_json(in);
    case SaplingFormat::Csv:
      return load_csv(in);
  }
  throw std::invalid_argument("unknown sapling format");
}

void save_saplings_json(const std::vector<Sapling>& saplings, std::ostream& out) {
  json doc = json::array();
  for (const Sapling& s : saplings) {
    json rec;
    rec["owner"] = s.owner;
    rec["root"] = {{"name", s.root.raw_name}};
    json leaves = json::array();
    for (const SaplingNode& leaf : s.leaves) {
      json tags = json::object();
      for (const auto& [tag, count] : leaf.tags.entries()) tags[tag] = count;
      leaves.push_back({{"name", leaf.raw_name}, {"tags", std::move(tags)}});
    }
    rec["leaves"] = std::move(leaves);
    doc.push_back(std::move(rec));
  }
  out << doc.dump(2) << '\n';
}

Sapling aggregate_tags(Sapling sapling) {
  TagStats sum;
  for (const SaplingNode& leaf : sapling.leaves) {
    sum.merge(leaf.tags);
  }
  sapling.root.tags = std::move(sum);
  return sapling;
}

std::vector<Sapling> select_by_seed(const std::vector<Sapling>& saplings, const SeedConfig& cfg) {
  if (cfg.expansion_rounds < 1) {
    throw std::invalid_argument("select_by_seed: expansion_rounds must be >= 1");
  }
  const std::string seed_stem = stem(cfg.seed_term);

  std::vector<bool> selected(saplings.size(), false);
  std::set<std::string> wanted_root_stems = {seed_stem};

  for (int round = 0; round < cfg.expansion_rounds; ++round) {
    std::set<std::string> next_wanted;
    for (std::size_t i = 0; i < saplings.size(); ++i) {
      if (selected[i]) continue;
      if (wanted_root_stems.count(saplings[i].root.stem) == 0) continue;
      selected[i] = true;
      for (const SaplingNode& leaf : saplings[i].leaves) {
        next_wanted.insert(leaf.stem);
      }
    }
    wanted_root_stems = std::move(next_wanted);
  }

  std::vector<Sapling> out;
  for (std::size_t i = 0; i < saplings.size(); ++i) {
    if (selected[i]) out.push_back(saplings[i]);
  }
  return out;
}

std::vector<Sapling> drop_root_named_leaves(const std::vector<Sapling>& saplings,
                                            const SeedConfig& cfg) {
  const std::string seed_stem = stem(cfg.seed_term);
  std::vector<Sapling> out;
  for (const Sapling& s : saplings) {
    Sapling kept;
    kept.owner = s.owner;
    kept.root = s.root;
    for (const SaplingNode& leaf : s.leaves) {
      if (leaf.stem != seed_stem) kept.leaves.push_back(leaf);
    }
    if (!kept.leaves.empty()) out.push_back(std::move(kept));
  }
  return out;
}

}  // namespace grove
