#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rectpark/rational.hpp"

namespace rectpark {

// Polynomial in z truncated at degree D, with coefficients in a ring T
// (Rational, SymFunc or BiSymFunc). T must support T + T, T * T and
// Rational * T. The unit element is stored so that zero and one can be
// produced in the right basis.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(int truncation, T unit)
      : unit_(std::move(unit)), coeffs_(static_cast<std::size_t>(truncation) + 1, zero_of(unit_)) {
    if (truncation < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  }

  static TruncatedSeries one(int truncation, const T& unit) {
    TruncatedSeries s(truncation, unit);
    s.coeffs_[0] = unit;
    return s;
  }

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& unit() const { return unit_; }
  const T& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  void set(int d, T value) {
    if (d <= truncation()) coeffs_.at(static_cast<std::size_t>(d)) = std::move(value);
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r = *this;
    for (int d = 0; d <= truncation(); ++d) r.coeffs_[d] = coeffs_[d] + o.coeffs_[d];
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + o.scaled(-1); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r(truncation(), unit_);
    for (int i = 0; i <= truncation(); ++i)
      for (int j = 0; i + j <= truncation(); ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    return r;
  }

  TruncatedSeries scaled(const Rational& c) const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = c * v;
    return r;
  }

  // 1 / F for F with constant term equal to the unit.
  TruncatedSeries inverse() const {
    if (!(coeffs_[0] == unit_)) throw std::invalid_argument("inverse: constant term must be one");
    TruncatedSeries q = one(truncation(), unit_);
    for (int n = 1; n <= truncation(); ++n) {
      T acc = zero_of(unit_);
      for (int k = 1; k <= n; ++k) acc = acc + coeffs_[k] * q.coeffs_[n - k];
      q.coeffs_[n] = Rational(-1) * acc;
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static T zero_of(const T& unit) { return Rational(0) * unit; }

  void check(const TruncatedSeries& o) const {
    if (o.truncation() != truncation()) throw std::invalid_argument("series truncation mismatch");
  }

  T unit_;
  std::vector<T> coeffs_;
};

// exp(sum_k c_k z^k / k) truncated at D, through n F_n = sum_{k=1}^n c_k F_{n-k}.
template <class T>
TruncatedSeries<T> exp_series(const std::map<int, T>& terms, int truncation, const T& unit) {
  for (const auto& [k, c] : terms)
    if (k < 1) throw std::invalid_argument("exp_series: exponents must be positive");
  auto f = TruncatedSeries<T>::one(truncation, unit);
  for (int n = 1; n <= truncation; ++n) {
    T acc = Rational(0) * unit;
    for (int k = 1; k <= n; ++k) {
      auto it = terms.find(k);
      if (it == terms.end()) continue;
      acc = acc + it->second * f[n - k];
    }
    f.set(n, make_rational(1, n) * acc);
  }
  return f;
}

}  // namespace rectpark
