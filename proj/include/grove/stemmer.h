// include/grove/stemmer.h

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

#ifndef GROVE_STEMMER_H_
#define GROVE_STEMMER_H_

#include <string>

namespace grove {

/// Normalizes a node name: ASCII case-fold, trim, collapse inner whitespace,
/// then Porter-stem each token and rejoin with single spaces.  Empty input
/// stems to the empty string.  Deterministic.
std::string stem(const std::string& name);

}  // namespace grove

#endif  // GROVE_STEMMER_H_
