// Copyright 2026 The conjpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

namespace conjpair {

template <class Gen>
CVec random_unit_vector(int size, Gen& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec v(size);
  for (int i = 0; i < size; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace conjpair
