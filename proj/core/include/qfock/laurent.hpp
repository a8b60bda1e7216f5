#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qfock/common.hpp"

namespace qfock {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1] in canonical sparse form: terms sorted by ascending
/// exponent, no zero coefficient ever stored.  Values are immutable in spirit;
/// the compound operators return to canonical form before they yield control.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;  // (exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(long long c) { if (c != 0) terms_.emplace_back(0, c); }
  LaurentPoly(BigInt c) { if (c != 0) terms_.emplace_back(0, std::move(c)); }

  static LaurentPoly q_power(int e) { return monomial(1, e); }
  static LaurentPoly monomial(BigInt c, int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  /// Largest exponent; throws on the zero polynomial.
  int degree() const;
  /// Smallest exponent; throws on the zero polynomial.
  int valuation() const;
  BigInt coeff(int e) const;
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  /// Multiply by q^e.
  LaurentPoly shifted(int e) const;
  /// q -> q^-1.
  LaurentPoly bar() const;
  /// q -> -q: the coefficient at exponent k picks up (-1)^k.
  LaurentPoly at_neg_q() const;
  /// Specialize q to x; only x = 1 and x = -1 are accepted.
  BigInt eval_at(int x) const;

  bool is_polynomial() const { return terms_.empty() || terms_.front().first >= 0; }
  bool has_nonneg_coeffs() const;
  /// True when the value lies in q Z[q] (zero counts).
  bool in_qzq() const { return terms_.empty() || terms_.front().first >= 1; }

  /// Text form, terms by ascending exponent: "q^-1 + 2 + 3*q^2"; "0" for zero.
  std::string str() const;
  static LaurentPoly parse(const std::string& s);

  /// JSON object mapping decimal exponent strings to integer coefficients.
  std::string json() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<Term> terms_;
  void normalize();
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Exact division; throws if den does not divide num in Z[q,q^-1].
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Symmetric quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.
LaurentPoly q_int(int k);
/// [k]! = [1][2]...[k].
LaurentPoly q_factorial(int k);

}  // namespace qfock
