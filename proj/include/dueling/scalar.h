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


#ifndef DUELING_SCALAR_H_
#define DUELING_SCALAR_H_

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace dueling {

// Exact arithmetic backend. Every numeric routine in the library is
// instantiated for both `double` and `Rational`.
using Rational = boost::multiprecision::mpq_rational;

template <typename S>
using Vector = std::vector<S>;

// Dense row-major matrix. Kept deliberately small: the solvers only need
// element access and a few shape queries.
template <typename S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const S& fill = S(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  // Row-major data; throws std::invalid_argument on a size mismatch.
  static Matrix FromRowMajor(int rows, int cols, std::vector<S> data) {
    if (data.size() != static_cast<size_t>(rows) * cols)
      throw std::invalid_argument("matrix data has the wrong size");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<S>& data() const { return data_; }

  Matrix Transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

// Tolerance-aware comparisons. In rational mode every tolerance is zero.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static double Tolerance(double tol) { return tol; }
  static double ToDouble(double x) { return x; }
  static double FromDouble(double x) { return x; }
  static bool IsFinite(double x) { return std::isfinite(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static Rational Tolerance(double) { return Rational(0); }
  static double ToDouble(const Rational& x) { return x.convert_to<double>(); }
  static Rational FromDouble(double x) { return Rational(x); }
  static bool IsFinite(const Rational&) { return true; }
};

template <typename S>
double ToDouble(const S& x) {
  return ScalarTraits<S>::ToDouble(x);
}

template <typename S>
S Half() {
  return S(1) / S(2);
}

// Parses "0.25", "-3", "1/3", "1/2^k" or "2.5e-3" exactly.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q", or "p" when the denominator is one.
std::string FormatRational(const Rational& x);

// "1/2^k" for an exact dyadic 2^-k.
std::string FormatDyadic(int k);

template <typename S>
S Sum(const std::vector<S>& values) {
  S total(0);
  for (const S& v : values) total += v;
  return total;
}

std::vector<double> ToDoubles(const std::vector<Rational>& values);
std::vector<Rational> ToRationals(const std::vector<double>& values);

}  // namespace dueling

#endif  // DUELING_SCALAR_H_
