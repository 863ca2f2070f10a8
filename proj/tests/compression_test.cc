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


#include "dueling/compression.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "dueling/distributions.h"
#include "dueling/errors.h"

namespace dueling {
namespace compression {
namespace {

Rational ExpectedDepth(const DepthProfile& d, const std::vector<Rational>& p) {
  Rational s(0);
  for (size_t i = 0; i < p.size(); ++i) s += p[i] * d.depths[i];
  return s;
}

Rational Dyadic(int d) {
  Rational r(1);
  for (int k = 0; k < d; ++k) r /= 2;
  return r;
}

Matrix<double> ToDoubleMatrix(const Matrix<Rational>& m) {
  return Matrix<double>::FromRowMajor(m.rows(), m.cols(), ToDoubles(m.data()));
}

std::vector<Rational> R(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(ParseRational(x));
  return v;
}

Matrix<Rational> RandomDepthMatrix(int n, CounterRng& rng, Mode mode) {
  Matrix<Rational> x(n, DepthColumns(n));
  const int cols = mode == Mode::kFail ? DepthColumns(n) : DepthColumns(n) - 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row = RandomProbs(cols, rng, 60, false);
    for (int j = 0; j < cols; ++j) x(i, j) = row[j];
  }
  return x;
}

TEST_CASE("huffman depths") {
  CHECK(Huffman(R({"1/2", "1/4", "1/4"})).depths == std::vector<int>{1, 2, 2});
  CHECK(Huffman(TwoThirdsProbs(5)).depths == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(Huffman(R({"1"})).depths == std::vector<int>{0});
  CounterRng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(10));
    const std::vector<Rational> p = RandomDyadicProbs(n, rng);
    const DepthProfile h = Huffman(p);
    for (int i = 0; i < n; ++i) CHECK(p[i] == Dyadic(h.depths[i]));
  }
}

TEST_CASE("huffman is optimal among all profiles") {
  CounterRng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(5));
    const std::vector<Rational> p = RandomProbs(n, rng, 100);
    const DepthProfile h = Huffman(p);
    CHECK(h.IsValid(Mode::kNoFail));
    Rational best(1000);
    for (const DepthProfile& d : EnumerateProfiles(n, Mode::kNoFail))
      best = std::min(best, ExpectedDepth(d, p));
    CHECK(ExpectedDepth(h, p) == best);
  }
}

TEST_CASE("profile enumeration counts") {
  CHECK(EnumerateProfiles(1, Mode::kNoFail).size() == 1);
  CHECK(EnumerateProfiles(3, Mode::kNoFail).size() == 3);
  CHECK(EnumerateProfiles(5, Mode::kNoFail).size() == 75);
  for (const DepthProfile& d : EnumerateProfiles(3, Mode::kFail)) CHECK(d.KraftSum() <= 1);
  CHECK_THROWS_AS(EnumerateProfiles(kEnumerationCap + 1, Mode::kNoFail), SizeError);
}

TEST_CASE("profile validation") {
  CHECK(DepthProfile{{1, 2, 2}}.IsValid(Mode::kNoFail));
  CHECK_FALSE(DepthProfile{{1, 2, 3}}.IsValid(Mode::kNoFail));
  CHECK(DepthProfile{{1, 2, 3}}.IsValid(Mode::kFail));
  CHECK_FALSE(DepthProfile{{1, kAbsent}}.IsValid(Mode::kNoFail));
  CHECK(DepthProfile{{0, kAbsent}}.IsValid(Mode::kFail));
  CHECK_FALSE(DepthProfile{{1, 1, 1}}.IsValid(Mode::kFail));
}

TEST_CASE("compression payoff") {
  const std::vector<Rational> p = TwoThirdsProbs(5);
  const DepthProfile h = Huffman(p);
  CHECK(CompressionPayoff(h, h, p, Mode::kNoFail) == Rational(1, 2));
  const DepthProfile alt{{4, 1, 2, 3, 4}};
  CHECK(CompressionPayoff(alt, h, p, Mode::kNoFail) == Rational(2, 3) - Rational(1, 24));

  const std::vector<Rational> q = R({"1", "0"});
  CHECK(CompressionPayoff(DepthProfile{{0, kAbsent}}, Huffman(q), q, Mode::kFail) == 1);
  CHECK_THROWS_AS(CompressionPayoff(DepthProfile{{0, kAbsent}}, Huffman(q), q, Mode::kNoFail),
                  DomainError);
}

TEST_CASE("knapsack against brute force") {
  CounterRng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    MckpInstance<Rational> inst;
    inst.unit_depth = 4;
    inst.at_most_one = trial % 2 == 1;
    for (int l = 0; l < 4; ++l) {
      std::vector<MckpItem<Rational>> list;
      for (int d = 0; d <= 4; ++d)
        if (rng.Uniform() < 0.8 || d == 4) list.push_back({Rational(rng.UniformInt(20)), d});
      inst.lists.push_back(list);
    }
    const MckpSelection<Rational> brute = BruteForceMckp(inst);
    const MckpSelection<Rational> dp = SolveMckp(inst, 0.0);
    CHECK(dp.value == brute.value);
    CHECK(dp.weight <= 1);
    const MckpSelection<Rational> approx = SolveMckp(inst, 0.2);
    CHECK(approx.value >= Rational(4, 5) * brute.value);
    CHECK(approx.weight <= 1);
  }
}

TEST_CASE("knapsack small cases") {
  MckpInstance<Rational> single;
  single.unit_depth = 2;
  single.lists = {{{Rational(1), 2}, {Rational(3), 1}, {Rational(2), 0}}};
  CHECK(SolveMckp(single, 0.0).choice == std::vector<int>{1});

  MckpInstance<Rational> flat;
  flat.unit_depth = 3;
  for (int l = 0; l < 3; ++l)
    flat.lists.push_back({{Rational(1), 3}, {Rational(1), 2}, {Rational(1), 1}});
  const MckpSelection<Rational> s = SolveMckp(flat, 0.0);
  CHECK(s.choice == std::vector<int>{0, 0, 0});  // deepest on ties
  CHECK(s.weight == Rational(3, 8));

  MckpInstance<Rational> tight;
  tight.unit_depth = 1;
  tight.lists = {{{Rational(1), 1}}, {{Rational(1), 1}}, {{Rational(1), 1}}};
  CHECK_THROWS_AS(SolveMckp(tight, 0.0), InfeasibleError);
}

TEST_CASE("best response matches enumeration") {
  CounterRng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(5));
    const Mode mode = (trial % 4 == 3 && n <= 3) ? Mode::kFail : Mode::kNoFail;
    const std::vector<Rational> p = RandomProbs(n, rng, 100, false);
    const Matrix<Rational> y = RandomDepthMatrix(n, rng, mode);
    const CompressionResponse<Rational> br = BestResponseCompression(y, p, 0.0, mode);
    const CompressionResponse<Rational> oracle = BestResponseByEnumeration(y, p, mode);
    CHECK(br.profile.IsValid(mode));
    CHECK(br.value == oracle.value);
    const CompressionResponse<double> approx =
        BestResponseCompression(ToDoubleMatrix(y), ToDoubles(p), 0.1, mode);
    CHECK(approx.value >= 0.9 * ToDouble(oracle.value) - 1e-12);
  }
  // Uniform depth matrix over depths 0..n-1.
  const int n = 4;
  Matrix<Rational> uniform(n, DepthColumns(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) uniform(i, j) = Rational(1, n);
  const std::vector<Rational> p = UniformProbs(n);
  CHECK(BestResponseCompression(uniform, p, 0.0, Mode::kNoFail).value ==
        BestResponseByEnumeration(uniform, p, Mode::kNoFail).value);
}

TEST_CASE("huffman beatability") {
  CHECK(HuffmanBeatability(TwoThirdsProbs(5), Mode::kNoFail).value == Rational(5, 8));
  CounterRng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformInt(7));
    CHECK(HuffmanBeatability(RandomDyadicProbs(n, rng), Mode::kNoFail).value == Rational(1, 2));
  }
  const CompressionResponse<Rational> fail = HuffmanBeatability(R({"1", "0"}), Mode::kFail);
  CHECK(fail.value == 1);
  CHECK(fail.profile.depths == std::vector<int>{0, kAbsent});
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(8));
    const Rational b = HuffmanBeatability(RandomProbs(n, rng, 1000), Mode::kNoFail).value;
    CHECK(b >= Rational(1, 2));
    CHECK(b <= Rational(3, 4));
  }
}

TEST_CASE("kraft to tree") {
  const CodeTree t = KraftToTree(DepthProfile{{1, 2, 2}});
  const int root = t.root;
  REQUIRE(t.left[root] >= 0);
  CHECK(t.item[t.left[root]] == 0);
  const int inner = t.right[root];
  CHECK(t.item[inner] == -1);
  CHECK(t.item[t.left[inner]] == 1);
  CHECK(t.item[t.right[inner]] == 2);

  const CodeTree full = KraftToTree(DepthProfile{{2, 2, 2, 2}});
  CHECK(full.size() == 7);
  CHECK(full.Profile(4).depths == std::vector<int>{2, 2, 2, 2});

  CounterRng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(12));
    const DepthProfile h = Huffman(RandomProbs(n, rng, 1000));
    CHECK(KraftToTree(h).Profile(n) == h);
  }
  CHECK(KraftToTree(DepthProfile{{1, kAbsent, 3}}).Profile(3).depths ==
        std::vector<int>{1, kAbsent, 3});
  CHECK_THROWS_AS(KraftToTree(DepthProfile{{1, 1, 1}}), DomainError);
}

TEST_CASE("huffman structure facts") {
  CounterRng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformInt(12));
    const std::vector<Rational> p = RandomProbs(n, rng, 1000);
    const StructureCheck c = VerifyHuffmanStructure(HuffmanTree(p), p);
    CHECK(c.ok);
    CHECK(c.rule.empty());
  }
  const std::vector<Rational> single = R({"1"});
  CHECK(VerifyHuffmanStructure(HuffmanTree(single), single).ok);

  // The likeliest item placed deepest.
  const std::vector<Rational> p = R({"1/10", "1/5", "7/10"});
  const StructureCheck bad = VerifyHuffmanStructure(KraftToTree(DepthProfile{{1, 2, 2}}), p);
  CHECK_FALSE(bad.ok);
  CHECK(bad.rule == "depth-order");
  CHECK(bad.first >= 0);
  CHECK(bad.second >= 0);
}

TEST_CASE("antichain weight bound") {
  CounterRng rng(8);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformInt(9));
    const std::vector<Rational> p = RandomProbs(n, rng, 1000);
    const CodeTree tree = HuffmanTree(p);
    const std::vector<int> depth = tree.NodeDepths();
    // Random cut: descend from the root, stopping at each node with
    // probability one half.
    std::vector<int> cut;
    std::function<void(int)> descend = [&](int v) {
      if (tree.item[v] >= 0 || (v != tree.root && rng.Uniform() < 0.5)) {
        cut.push_back(v);
        return;
      }
      descend(tree.left[v]);
      descend(tree.right[v]);
    };
    descend(tree.root);
    // Random subsets of the cut whose weight is a power of two.
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<int> subset;
      Rational weight(0);
      for (int v : cut)
        if (rng.Uniform() < 0.5) {
          subset.push_back(v);
          weight += Dyadic(depth[v]);
        }
      if (subset.empty()) continue;
      Rational power(1);
      while (power > weight) power /= 2;
      if (power != weight) continue;
      CHECK(CheckAntichainBound(tree, p, subset));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("fel on small compression duels") {
  const learning::FelParams fast{300, 20.0, 20, 1.0, 1.0, 0.1, 0.1};
  const CounterRng rng(9);

  const CompressionFelResult one = FelSolveCompression({1.0}, Mode::kNoFail, fast, rng);
  CHECK(one.value == doctest::Approx(0.5));

  const std::vector<double> dyadic = ToDoubles(DyadicProbs(4));
  const CompressionFelResult d = FelSolveCompression(dyadic, Mode::kNoFail, fast, rng);
  CHECK(std::abs(d.value - 0.5) <= d.eps_prime + 1e-12);
  CHECK(IsDepthMatrix(d.sigma, Mode::kNoFail));

  CounterRng draw(10);
  for (int trial = 0; trial < 3; ++trial) {
    const std::vector<Rational> p = RandomProbs(3, draw, 100);
    const Matrix<Rational> game = DuelToMatrix(CompressionFiniteDuel(p, Mode::kNoFail));
    const Rational exact = SolveMatrixGame(game).value;
    learning::FelOptions opts;
    opts.record_pure = true;
    const CompressionFelResult r =
        FelSolveCompression(ToDoubles(p), Mode::kNoFail, fast, rng.Split(trial), opts);
    CHECK(std::abs(r.value - ToDouble(exact)) <= r.eps_prime + 1e-12);
    double total = 0.0;
    for (const auto& [profile, w] : r.mixture) {
      CHECK(profile.IsValid(Mode::kNoFail));
      total += w;
    }
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("fel schedule uses the duel dimensions") {
  const learning::FelParams p = CompressionFelParams(3, 0.1, 0.1);
  CHECK(p.C == doctest::Approx(15.0 * 15.0));
  CHECK(p.T >= DepthMatrixHalfspaceCount(3));
}

}  // namespace
}  // namespace compression
}  // namespace dueling
