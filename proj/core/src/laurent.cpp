#include "qfock/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace qfock {

namespace {

void check_exponent(long long e) {
  QFOCK_REQUIRE(e > -(1LL << 31) && e < (1LL << 31), "exponent out of range");
}

}  // namespace

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

int LaurentPoly::degree() const {
  QFOCK_REQUIRE(!terms_.empty(), "degree of zero polynomial");
  return terms_.back().first;
}

int LaurentPoly::valuation() const {
  QFOCK_REQUIRE(!terms_.empty(), "valuation of zero polynomial");
  return terms_.front().first;
}

BigInt LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) {
    terms_.clear();
    return *this;
  }
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      check_exponent(static_cast<long long>(ea) + eb);
      acc[ea + eb] += ca * cb;
    }
  terms_.clear();
  for (auto& [e, c] : acc)
    if (c != 0) terms_.emplace_back(e, std::move(c));
  return *this;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    check_exponent(static_cast<long long>(t.first) + e);
    t.first += e;
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = -t.first;
  std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

LaurentPoly LaurentPoly::at_neg_q() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_)
    if (t.first & 1) t.second = -t.second;
  return r;
}

BigInt LaurentPoly::eval_at(int x) const {
  QFOCK_REQUIRE(x == 1 || x == -1, "eval_at accepts only 1 and -1");
  BigInt s = 0;
  for (const auto& [e, c] : terms_)
    s += (x == 1 || e % 2 == 0) ? c : -c;
  return s;
}

bool LaurentPoly::has_nonneg_coeffs() const {
  for (const auto& t : terms_)
    if (t.second < 0) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
  LaurentPoly out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto parse_int = [&]() -> BigInt {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    QFOCK_REQUIRE(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])),
                  "polynomial parse error: integer expected");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return BigInt(s.substr(start, i - start));
  };

  skip_ws();
  QFOCK_REQUIRE(i < s.size(), "polynomial parse error: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    int sign = 1;
    if (!first || s[i] == '+' || s[i] == '-') {
      QFOCK_REQUIRE(s[i] == '+' || s[i] == '-', "polynomial parse error: expected '+' or '-'");
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    first = false;
    BigInt c = 1;
    bool saw_coeff = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
      c = parse_int();
      saw_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      } else if (i < s.size() && s[i] == 'q') {
        // "2q" without the star is tolerated on input
      }
    }
    long long e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt be = parse_int();
        QFOCK_REQUIRE(be > -(BigInt(1) << 31) && be < (BigInt(1) << 31),
                      "exponent out of range");
        e = be.convert_to<long long>();
      }
    } else {
      QFOCK_REQUIRE(saw_coeff, "polynomial parse error: term expected");
    }
    check_exponent(e);
    out += monomial(sign * c, static_cast<int>(e));
  }
  return out;
}

std::string LaurentPoly::json() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    os << "\"" << e << "\":" << c.str();
    first = false;
  }
  os << "}";
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  return r *= b;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  QFOCK_REQUIRE(!den.is_zero(), "division by zero polynomial");
  if (num.is_zero()) return {};
  const int min_e = num.valuation() - den.valuation();
  LaurentPoly rem = num;
  LaurentPoly quot;
  const BigInt lead = den.terms().back().second;
  const int dend = den.degree();
  // Peel from the top; each step strips the leading term of the remainder.
  while (!rem.is_zero()) {
    int e = rem.degree() - dend;
    QFOCK_REQUIRE(e >= min_e, "inexact polynomial division");
    BigInt c = rem.terms().back().second;
    QFOCK_REQUIRE(c % lead == 0, "inexact polynomial division");
    LaurentPoly t = LaurentPoly::monomial(c / lead, e);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

LaurentPoly q_int(int k) {
  QFOCK_REQUIRE(k >= 0, "q_int of negative argument");
  LaurentPoly r;
  for (int e = -(k - 1); e <= k - 1; e += 2) r += LaurentPoly::q_power(e);
  return r;
}

LaurentPoly q_factorial(int k) {
  LaurentPoly r(1);
  for (int j = 2; j <= k; ++j) r *= q_int(j);
  return r;
}

}  // namespace qfock
