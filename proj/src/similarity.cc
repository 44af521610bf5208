// src/similarity.cc

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

#include "grove/similarity.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace grove {

SimilarityMatrix::SimilarityMatrix(SquareMatrix values, double preference)
    : values_(std::move(values)), preference_(preference) {
  if (values_.size() == 0) {
    throw std::invalid_argument("SimilarityMatrix: empty matrix");
  }
  if (!std::isfinite(preference_)) {
    throw std::invalid_argument("SimilarityMatrix: non-finite preference");
  }
  const int n = values_.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw std::invalid_argument("SimilarityMatrix: non-finite entry");
      }
    }
    if (values_(i, i) != preference_) {
      throw std::invalid_argument("SimilarityMatrix: diagonal differs from preference");
    }
  }
}

bool SimilarityMatrix::preference_not_below_max_similarity() const {
  double max_off = 0.0;
  bool any_positive = false;
  const int n = values_.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (values_(i, j) > 0.0) {
        any_positive = true;
        max_off = std::max(max_off, values_(i, j));
      }
    }
  }
  return any_positive && preference_ >= max_off;
}

void SimilarityMatrix::dump(std::ostream& out) const {
  const int n = values_.size();
  char buf[64];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", values_(i, j));
      if (j) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

SimilarityMatrix SimilarityMatrix::load(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) {
      throw std::invalid_argument("SimilarityMatrix::load: malformed value in row " +
                                  std::to_string(rows.size()));
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) {
    throw std::invalid_argument("SimilarityMatrix::load: empty input");
  }
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("SimilarityMatrix::load: row " + std::to_string(i) +
                                  " has wrong length");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const double preference = rows[0][0];
  return SimilarityMatrix(std::move(m), preference);
}

int common_tag_count(const TagStats& a, const TagStats& b) {
  // Walk the smaller map, probe the larger.
  const TagStats& small = a.distinct_tags() <= b.distinct_tags() ? a : b;
  const TagStats& large = a.distinct_tags() <= b.distinct_tags() ? b : a;
  int shared = 0;
  for (const auto& [tag, count] : small.entries()) {
    (void)count;
    if (large.contains(tag)) ++shared;
  }
  return shared;
}

SimilarityMatrix build_similarity(const NodeIndex& index, double preference) {
  if (index.size() == 0) {
    throw std::invalid_argument("build_similarity: empty index");
  }
  if (!std::isfinite(preference)) {
    throw std::invalid_argument("build_similarity: non-finite preference");
  }
  const int n = index.size();
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const SaplingNode& a = index.node(i);
    m(i, i) = preference;
    for (int j = i + 1; j < n; ++j) {
      const SaplingNode& b = index.node(j);
      double s = 0.0;
      if (a.stem == b.stem) {
        s = std::min(1.0, static_cast<double>(common_tag_count(a.tags, b.tags)));
      }
      m(i, j) = s;
      m(j, i) = s;
    }
  }
  SimilarityMatrix sim(std::move(m), preference);
  if (sim.preference_not_below_max_similarity()) {
    std::cerr << "warning: preference " << preference
              << " is not below the maximum pairwise similarity; "
                 "expect every node to become an exemplar\n";
  }
  return sim;
}

}  // namespace grove
