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


#include "dueling/distributions.h"

#include <algorithm>
#include <functional>

#include "dueling/errors.h"

namespace dueling {
namespace {

Rational PowTwo(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

void RequirePositive(int n) {
  if (n < 1) throw DomainError("a distribution needs at least one item");
}

}  // namespace

std::vector<Rational> UniformProbs(int n) {
  RequirePositive(n);
  return std::vector<Rational>(n, Rational(1, n));
}

std::vector<Rational> DyadicProbs(int n) {
  RequirePositive(n);
  if (n == 1) return {Rational(1)};
  std::vector<Rational> p(n);
  for (int i = 0; i < n - 1; ++i) p[i] = 1 / PowTwo(i + 1);
  p[n - 1] = p[n - 2];
  return p;
}

std::vector<Rational> TwoThirdsProbs(int n) {
  if (n < 3) throw DomainError("the two-thirds family needs n >= 3");
  std::vector<Rational> p(n);
  p[0] = Rational(1, 3);
  for (int i = 2; i < n; ++i) p[i - 1] = 1 / (3 * PowTwo(i - 2));
  p[n - 1] = 1 / (3 * PowTwo(n - 3));
  return p;
}

std::vector<Rational> PerturbedUniformProbs(int n, const Rational& eps) {
  RequirePositive(n);
  std::vector<Rational> p(n);
  for (int i = 1; i <= n; ++i) p[i - 1] = Rational(1, n) + (Rational(i) - Rational(n + 1, 2)) * eps;
  for (const auto& v : p)
    if (v < 0) throw DomainError("perturbation too large: negative probability");
  return p;
}

std::vector<Rational> RandomDyadicProbs(int n, CounterRng& rng) {
  RequirePositive(n);
  std::vector<int> depth(n, 0);
  // Split the leaf range [lo, hi) at a random point, recursing on both sides.
  std::function<void(int, int, int)> split = [&](int lo, int hi, int d) {
    if (hi - lo == 1) {
      depth[lo] = d;
      return;
    }
    int mid = lo + 1 + static_cast<int>(rng.UniformInt(hi - lo - 1));
    split(lo, mid, d + 1);
    split(mid, hi, d + 1);
  };
  split(0, n, 0);
  std::vector<int> order = rng.Permutation(n);
  std::vector<Rational> p(n);
  for (int i = 0; i < n; ++i) p[i] = 1 / PowTwo(depth[order[i]]);
  return p;
}

std::vector<Rational> RandomProbs(int n, CounterRng& rng, int resolution, bool positive) {
  RequirePositive(n);
  const int free_units = positive ? resolution - n : resolution;
  if (free_units < 0) throw DomainError("resolution too small for n positive items");
  std::vector<int> cuts(n - 1);
  for (int& c : cuts) c = static_cast<int>(rng.UniformInt(free_units + 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> p(n);
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    int next = i + 1 < n ? cuts[i] : free_units;
    p[i] = Rational(next - prev + (positive ? 1 : 0), resolution);
    prev = next;
  }
  return p;
}

std::vector<Rational> NamedProbs(const std::string& name, int n) {
  if (name == "uniform") return UniformProbs(n);
  if (name == "dyadic") return DyadicProbs(n);
  if (name == "two-thirds") return TwoThirdsProbs(n);
  const std::string prefix = "perturbed-uniform(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')')
    return PerturbedUniformProbs(n, ParseRational(name.substr(prefix.size(),
                                                              name.size() - prefix.size() - 1)));
  throw DomainError("unknown distribution family: " + name);
}

}  // namespace dueling
