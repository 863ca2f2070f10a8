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


#include "dueling/learning.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dueling/errors.h"

namespace dueling {
namespace learning {

std::vector<double> BestResponseOracle::operator()(const std::vector<double>& opponent) const {
  if (static_cast<int>(opponent.size()) != input_dim)
    throw DimensionError("oracle input has the wrong dimension");
  double norm = 0.0;
  for (double v : opponent) {
    if (v < 0.0) throw DomainError("oracle input must be nonnegative");
    norm = std::max(norm, v);
  }
  std::vector<double> scaled(opponent.size(), 0.0);
  if (norm > 0.0)
    for (size_t i = 0; i < opponent.size(); ++i) scaled[i] = opponent[i] * (bound / norm);
  std::vector<double> out = respond(scaled);
  if (static_cast<int>(out.size()) != output_dim)
    throw ContractViolation("oracle output has the wrong dimension");
  if (feasible && !feasible(out)) throw ContractViolation("oracle output lies outside its polytope");
  return out;
}

BestResponseOracle SimplexOracle(const Matrix<double>& M) {
  BestResponseOracle o;
  o.input_dim = M.cols();
  o.output_dim = M.rows();
  o.respond = [M](const std::vector<double>& y) {
    std::vector<double> gains = RightMultiply(M, y);
    int best = 0;
    for (int i = 1; i < static_cast<int>(gains.size()); ++i)
      if (gains[i] > gains[best]) best = i;
    std::vector<double> x(gains.size(), 0.0);
    x[best] = 1.0;
    return x;
  };
  o.feasible = [n = M.rows()](const std::vector<double>& x) {
    return Polytope<double>::Simplex(n).Contains(x, 1e-9);
  };
  return o;
}

OracleDuel ConstantSumSimplexDuel(const Matrix<double>& M) {
  OracleDuel d;
  d.M1 = M;
  // x'^T (J - M^T) x = 1 - x^T M x' on the simplices.
  d.M2 = Matrix<double>(M.cols(), M.rows());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) d.M2(j, i) = 1.0 - M(i, j);
  d.oracle1 = SimplexOracle(d.M1);
  d.oracle2 = SimplexOracle(d.M2);
  d.m1 = HalfspaceCount(Polytope<double>::Simplex(M.rows()));
  d.m2 = HalfspaceCount(Polytope<double>::Simplex(M.cols()));
  d.bound = 1.0;
  return d;
}

std::string FelParams::ToString() const {
  std::ostringstream os;
  os << "T=" << T << " R=" << R << " N=" << N << " B=" << B << " C=" << C
     << " delta=" << delta << " eps=" << eps;
  return os.str();
}

FelParams FelParamsFrom(double eps, double delta, int m, int mprime, int n, int nprime,
                        double B) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw DomainError("eps and delta must lie in (0, 1)");
  if (m < 1 || mprime < 1 || n < 1 || nprime < 1 || !(B > 0.0))
    throw DomainError("dimensions and bound must be positive");
  FelParams p;
  p.eps = eps;
  p.delta = delta;
  p.B = B;
  p.C = B * B * B * n * nprime;
  const double mm = std::max(m, mprime);
  const double t = std::pow(4.0 * p.C * std::sqrt(mm) / (3.0 * eps), 2.0 / 3.0);
  p.T = std::max(static_cast<long>(std::ceil(t)), static_cast<long>(mm));
  p.R = B * std::sqrt(mm * static_cast<double>(p.T));
  p.N = static_cast<long>(std::ceil(std::log(4.0 * p.T * p.C / delta) / (2.0 * eps * eps)));
  p.N = std::max(p.N, 1L);
  return p;
}

std::vector<double> FelPlay(const BestResponseOracle& oracle,
                            const std::vector<double>& history_sum, const FelParams& params,
                            const CounterRng& rng, std::vector<std::vector<double>>* pure) {
  if (static_cast<int>(history_sum.size()) != oracle.input_dim)
    throw DimensionError("history has the wrong dimension");
  for (double v : history_sum)
    if (v < 0.0) throw DomainError("history sum must be nonnegative");
  if (params.N < 1) throw DomainError("N must be at least one");
  std::vector<double> play(oracle.output_dim, 0.0);
  std::vector<double> perturbed(history_sum.size());
  if (pure) pure->clear();
  for (long j = 0; j < params.N; ++j) {
    CounterRng sample = rng.Split(static_cast<uint64_t>(j));
    for (size_t i = 0; i < history_sum.size(); ++i)
      perturbed[i] = history_sum[i] + sample.Uniform(0.0, params.R);
    std::vector<double> out = oracle(perturbed);
    for (int i = 0; i < oracle.output_dim; ++i) play[i] += out[i];
    if (pure) pure->push_back(std::move(out));
  }
  for (double& v : play) v /= static_cast<double>(params.N);
  return play;
}

std::string DuelTranscript::ToCsv() const {
  std::ostringstream os;
  os.precision(17);
  os << "t,payoff,cumulative_payoff\n";
  double cumulative = 0.0;
  for (size_t t = 0; t < payoffs1.size(); ++t) {
    cumulative += payoffs1[t];
    os << t + 1 << "," << payoffs1[t] << "," << cumulative << "\n";
  }
  return os.str();
}

double RegretOf(const std::vector<std::vector<double>>& opponent_plays,
                const std::vector<double>& realized, const BestResponseOracle& oracle,
                const Matrix<double>& payoff) {
  if (opponent_plays.empty()) return 0.0;
  std::vector<double> total(oracle.input_dim, 0.0);
  for (const auto& y : opponent_plays)
    for (int i = 0; i < oracle.input_dim; ++i) total[i] += y[i];
  std::vector<double> best = oracle(total);
  double regret = BilinearValue(best, payoff, total);
  for (double r : realized) regret -= r;
  return regret;
}

double RegretOf(const DuelTranscript& transcript, const OracleDuel& duel) {
  return RegretOf(transcript.plays2, transcript.payoffs1, duel.oracle1, duel.M1);
}

double BeTheLeaderPayoff(const std::vector<std::vector<double>>& opponent_plays,
                         const std::vector<double>& r, const BestResponseOracle& oracle,
                         const Matrix<double>& payoff) {
  std::vector<double> running = r;
  double total = 0.0;
  for (const auto& y : opponent_plays) {
    for (size_t i = 0; i < running.size(); ++i) running[i] += y[i];
    total += BilinearValue(oracle(running), payoff, y);
  }
  return total;
}

FelResult FelSolve(const OracleDuel& duel, const FelParams& params, const CounterRng& rng,
                   const FelOptions& options) {
  const int n = duel.M1.rows(), np = duel.M1.cols();
  if (duel.M2.rows() != np || duel.M2.cols() != n)
    throw DimensionError("player-two payoff matrix has the wrong shape");
  if (params.T < 1) throw DomainError("T must be at least one");
  FelResult result;
  DuelTranscript& tr = result.transcript;
  std::vector<double> sum1(n, 0.0), sum2(np, 0.0);
  double total1 = 0.0, total2 = 0.0;
  for (long t = 0; t < params.T; ++t) {
    std::vector<std::vector<double>> pure1, pure2;
    auto* p1 = options.record_pure ? &pure1 : nullptr;
    auto* p2 = options.record_pure ? &pure2 : nullptr;
    std::vector<double> x = FelPlay(duel.oracle1, sum2, params, rng.Split(2 * t), p1);
    std::vector<double> xp = FelPlay(duel.oracle2, sum1, params, rng.Split(2 * t + 1), p2);
    const double v1 = BilinearValue(x, duel.M1, xp);
    const double v2 = BilinearValue(xp, duel.M2, x);
    total1 += v1;
    total2 += v2;
    for (int i = 0; i < n; ++i) sum1[i] += x[i];
    for (int i = 0; i < np; ++i) sum2[i] += xp[i];
    tr.payoffs1.push_back(v1);
    tr.payoffs2.push_back(v2);
    tr.plays1.push_back(std::move(x));
    tr.plays2.push_back(std::move(xp));
    if (options.record_pure) {
      tr.pure1.push_back(std::move(pure1));
      tr.pure2.push_back(std::move(pure2));
    }
  }
  const double T = static_cast<double>(params.T);
  result.sigma = sum1;
  result.sigma_prime = sum2;
  for (double& v : result.sigma) v /= T;
  for (double& v : result.sigma_prime) v /= T;
  result.value = total1 / T;
  result.value2 = total2 / T;
  result.regret1 = RegretOf(tr.plays2, tr.payoffs1, duel.oracle1, duel.M1);
  result.regret2 = RegretOf(tr.plays1, tr.payoffs2, duel.oracle2, duel.M2);
  result.eps_prime = 2.0 * std::max({result.regret1, result.regret2, 0.0}) / T;
  return result;
}

double RegretBound(const FelParams& params, int m, int mprime) {
  const double T = static_cast<double>(params.T);
  return 4.0 * params.C * std::sqrt(std::max(m, mprime) * T) + 3.0 * T * T * params.eps;
}

}  // namespace learning
}  // namespace dueling
