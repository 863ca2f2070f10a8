// Copyright 2026 The Dueling Algorithms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DUELING_DISTRIBUTIONS_H_
#define DUELING_DISTRIBUTIONS_H_

#include <string>
#include <vector>

#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {

// Named probability families over n items, all exact.

std::vector<Rational> UniformProbs(int n);

// (1/2, 1/4, ..., 1/2^(n-1), 1/2^(n-1)).
std::vector<Rational> DyadicProbs(int n);

// p_1 = 1/3, p_i = 1/(3 2^(i-2)) for 1 < i < n, p_n = 1/(3 2^(n-3)); n >= 3.
std::vector<Rational> TwoThirdsProbs(int n);

// Uniform with a centered linear tilt: p_i = 1/n + (i - (n+1)/2) eps for
// i = 1..n, so item n is strictly most likely and the sum stays one.
std::vector<Rational> PerturbedUniformProbs(int n, const Rational& eps);

// 2^-d_i for the leaf depths of a uniformly random split tree on n leaves.
std::vector<Rational> RandomDyadicProbs(int n, CounterRng& rng);

// Random distribution with denominators `resolution` (a random
// composition of `resolution` into n nonnegative parts, shifted so every
// item gets mass when `positive` is set).
std::vector<Rational> RandomProbs(int n, CounterRng& rng, int resolution = 1000,
                                  bool positive = true);

// Parses "uniform", "dyadic", "two-thirds", "perturbed-uniform(eps)".
std::vector<Rational> NamedProbs(const std::string& name, int n);

}  // namespace dueling

#endif  // DUELING_DISTRIBUTIONS_H_
