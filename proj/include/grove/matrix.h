// include/grove/matrix.h

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

#ifndef GROVE_MATRIX_H_
#define GROVE_MATRIX_H_

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

namespace grove {

/// Dense square matrix of doubles, row-major.
class SquareMatrix {
 public:
  SquareMatrix() : n_(0) {}
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
    assert(n >= 0);
  }

  int size() const { return n_; }

  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> data_;
};

}  // namespace grove

#endif  // GROVE_MATRIX_H_
