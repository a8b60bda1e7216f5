#include "qfock/fock.hpp"

#include <algorithm>
#include <sstream>

namespace qfock {

void FockVector::add(const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockVector::add_scaled(const FockVector& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [p, a] : w.terms_) add(p, a * c);
}

LaurentPoly FockVector::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

FockVector FockVector::div_all(const LaurentPoly& den) const {
  FockVector out;
  for (const auto& [p, a] : terms_) out.add(p, div_exact(a, den));
  return out;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [p, a] : terms_) os << p.str() << ": " << a.str() << "\n";
  return os.str();
}

std::string FockVector::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [p, a] : terms_) {
    if (!first) os << ",";
    os << "{\"partition\":\"" << p.str() << "\",\"poly\":" << a.json() << "}";
    first = false;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

FockMatrix::FockMatrix(long long m, int n, int r, std::vector<Partition> index)
    : m_(m), n_(n), r_(r), index_(std::move(index)) {
  entries_.assign(static_cast<size_t>(index_.size()) * index_.size(), {});
}

const LaurentPoly& FockMatrix::at(int row, int col) const {
  QFOCK_REQUIRE(row >= 0 && row < dim() && col >= 0 && col < dim(),
                "matrix index out of range");
  return entries_[static_cast<size_t>(row) * dim() + col];
}

LaurentPoly& FockMatrix::at(int row, int col) {
  QFOCK_REQUIRE(row >= 0 && row < dim() && col >= 0 && col < dim(),
                "matrix index out of range");
  return entries_[static_cast<size_t>(row) * dim() + col];
}

const LaurentPoly& FockMatrix::at(const Partition& row, const Partition& col) const {
  int i = position(row), j = position(col);
  QFOCK_REQUIRE(i >= 0 && j >= 0, "partition not in the matrix index");
  return at(i, j);
}

int FockMatrix::position(const Partition& p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), p,
                             [](const Partition& a, const Partition& b) {
                               return revlex_less(a, b);
                             });
  if (it != index_.end() && *it == p) return static_cast<int>(it - index_.begin());
  return -1;
}

std::string FockMatrix::csv() const {
  std::ostringstream os;
  os << "# partitions of " << m_ << ", reverse-lexicographic; n=" << n_
     << " r=" << r_ << "\n";
  os << "rows\\cols";
  for (const auto& p : index_) os << ",\"" << p.str() << "\"";
  os << "\n";
  for (int i = 0; i < dim(); ++i) {
    os << "\"" << index_[i].str() << "\"";
    for (int j = 0; j < dim(); ++j) os << "," << at(i, j).str();
    os << "\n";
  }
  return os.str();
}

std::string FockMatrix::json() const {
  std::ostringstream os;
  os << "{\"m\":" << m_ << ",\"n\":" << n_ << ",\"r\":" << r_ << ",\"index\":[";
  for (int i = 0; i < dim(); ++i)
    os << (i ? "," : "") << "\"" << index_[i].str() << "\"";
  os << "],\"entries\":{";
  bool firstrow = true;
  for (int i = 0; i < dim(); ++i) {
    bool any = false;
    for (int j = 0; j < dim(); ++j) any = any || !at(i, j).is_zero();
    if (!any) continue;
    if (!firstrow) os << ",";
    os << "\"" << index_[i].str() << "\":{";
    bool firstcol = true;
    for (int j = 0; j < dim(); ++j) {
      if (at(i, j).is_zero()) continue;
      if (!firstcol) os << ",";
      os << "\"" << index_[j].str() << "\":" << at(i, j).json();
      firstcol = false;
    }
    os << "}";
    firstrow = false;
  }
  os << "}}";
  return os.str();
}

// ---------------------------------------------------------------------------

KLTable& FockContext::table(int r) {
  auto it = tables_.find(r);
  if (it == tables_.end())
    it = tables_.emplace(r, std::make_unique<KLTable>(r)).first;
  return *it->second;
}

LaurentPoly FockContext::d_poly(const Partition& lam, const Partition& mu, int n,
                                int r) {
  QFOCK_REQUIRE(lam.size() == mu.size(), "partitions must have equal size");
  QFOCK_REQUIRE(lam.length() <= r && mu.length() <= r, "partition length exceeds r");
  QFOCK_REQUIRE(n >= 2 && r >= 2, "need n >= 2 and r >= 2");
  if (lam == mu) return LaurentPoly(1);
  if (lam.n_core(n) != mu.n_core(n)) return {};

  KLTable& t = table(r);
  PointR beta{plus_rho(lam, r)};
  PointR alpha{plus_rho(mu, r)};
  AffinePerm w_beta = w_min_underline(beta, n);
  AffinePerm w_alpha = w_min_underline(alpha, n);
  PointR xi = act_level(w_alpha.inverse(), n, alpha);
  auto [w0xi, l0] = stabilizer_longest(xi, n);
  (void)l0;
  return t.n_poly(w_beta * w0xi, w_alpha * w0xi);
}

LaurentPoly FockContext::d_poly_via_r(const Partition& lam, const Partition& mu,
                                      int n, int r) {
  QFOCK_REQUIRE(lam.size() == mu.size(), "partitions must have equal size");
  QFOCK_REQUIRE(lam.length() <= r && mu.length() <= r, "partition length exceeds r");
  QFOCK_REQUIRE(n >= 2 && r >= 2, "need n >= 2 and r >= 2");
  if (lam == mu) return LaurentPoly(1);
  if (lam.n_core(n) != mu.n_core(n)) return {};
  PointR beta{plus_rho(lam, r)};
  PointR alpha{plus_rho(mu, r)};
  return table(r).r_poly(beta, alpha, n);
}

LaurentPoly FockContext::d_entry(const Partition& lam, const Partition& mu, int n) {
  QFOCK_REQUIRE(lam.size() == mu.size(), "partitions must have equal size");
  if (lam == mu) return LaurentPoly(1);
  if (lam.n_core(n) != mu.n_core(n)) return {};
  // Two valid routes with different rank requirements; take the cheaper one.
  int rank_direct = std::max({lam.length(), mu.length(), 2});
  long long rank_conj = std::max({lam.part(1), mu.part(1), 2LL});
  if (rank_direct <= rank_conj)
    return d_poly(lam, mu, n, rank_direct);
  return d_poly_via_r(lam.conjugate(), mu.conjugate(), n, static_cast<int>(rank_conj));
}

FockMatrix FockContext::d_matrix(long long m, int n, int r) {
  QFOCK_REQUIRE(n >= 2 && r >= 2, "need n >= 2 and r >= 2");
  FockMatrix out(m, n, r, partitions_of(m, r));
  const auto& idx = out.index();
  for (int i = 0; i < out.dim(); ++i) {
    for (int j = 0; j < out.dim(); ++j) {
      LaurentPoly d = d_entry(idx[i], idx[j], n);
      if (d.is_zero()) continue;
      QFOCK_CHECK(d.is_polynomial() && d.has_nonneg_coeffs(),
                  "d-matrix entry outside N[q]");
      QFOCK_CHECK(i == j ? d.is_one() : dominance_leq(idx[i], idx[j]),
                  "d-matrix support violates unitriangularity");
      out.at(i, j) = std::move(d);
    }
  }
  return out;
}

FockMatrix FockContext::e_matrix(long long m, int n, int r) {
  QFOCK_REQUIRE(r >= m, "e_matrix requires r >= m");
  FockMatrix d = d_matrix(m, n, r);
  const int dim = d.dim();
  // Invert the lower unitriangular d-matrix by forward substitution.
  FockMatrix inv(m, n, r, d.index());
  for (int j = 0; j < dim; ++j) {
    inv.at(j, j) = LaurentPoly(1);
    for (int i = j + 1; i < dim; ++i) {
      LaurentPoly acc;
      for (int k = j; k < i; ++k) {
        if (d.at(i, k).is_zero() || inv.at(k, j).is_zero()) continue;
        acc += d.at(i, k) * inv.at(k, j);
      }
      inv.at(i, j) = -acc;
    }
  }
  // inv holds e_{lam',mu'}(-q); reindex by conjugation and undo the sign.
  FockMatrix e(m, n, r, d.index());
  const auto& idx = e.index();
  for (int i = 0; i < dim; ++i) {
    int ci = e.position(idx[i].conjugate());
    QFOCK_CHECK(ci >= 0, "conjugate label missing from index");
    for (int j = 0; j < dim; ++j) {
      int cj = e.position(idx[j].conjugate());
      const LaurentPoly& v = inv.at(ci, cj);
      if (!v.is_zero()) e.at(i, j) = v.at_neg_q();
    }
  }
  return e;
}

FockVector FockContext::gplus_vector(const Partition& mu, int n, int r) {
  QFOCK_REQUIRE(mu.length() <= r, "partition length exceeds r");
  // Column of label mu'; any row with a nonzero coefficient has conjugate
  // length at most len(mu), so this enumeration covers the support.
  Partition muc = mu.conjugate();
  FockVector out;
  for (const Partition& lam : partitions_of(mu.size(), mu.length())) {
    LaurentPoly c = d_entry(lam.conjugate(), muc, n);
    if (!c.is_zero()) out.add(lam.conjugate(), c);
  }
  QFOCK_CHECK(out.coeff(muc).is_one(), "canonical column without unit diagonal");
  return out;
}

long long FockContext::ell_mu(const Partition& mu, int n, int r) {
  QFOCK_REQUIRE(mu.length() <= r, "partition length exceeds r");
  QFOCK_REQUIRE(n >= 2 && r >= 2, "need n >= 2 and r >= 2");
  PointR alpha{plus_rho(mu, r)};
  AffinePerm w = w_min_underline(alpha, n);
  PointR xi = act_level(w.inverse(), n, alpha);
  return stabilizer_longest(xi, n).second;
}

FockContext::IdentityCheck FockContext::check_th2(const Partition& lam,
                                                  const Partition& mu, int n,
                                                  int r) {
  QFOCK_REQUIRE(lam.size() == mu.size(), "partitions must have equal size");
  IdentityCheck res;
  res.lhs = d_poly_via_r(lam, mu, n, r);
  res.lam_tilde = lam.tilde(n, r);
  res.mu_hat = mu.hat(n, r);
  res.d_inflated = d_poly(res.lam_tilde, res.mu_hat, n, r);
  res.shift = static_cast<long long>(r) * (r - 1) / 2 - ell_mu(mu, n, r);
  res.rhs = res.d_inflated.bar().shifted(static_cast<int>(res.shift));
  res.ok = (res.lhs == res.rhs);
  return res;
}

bool FockContext::check_th1(const Partition& lam, const Partition& mu, int n,
                            int r) {
  IdentityCheck c = check_th2(lam, mu, n, r);
  return c.lhs.eval_at(1) == c.d_inflated.eval_at(1);
}

// ---------------------------------------------------------------------------

namespace {

struct Box {
  int row, col;  // 1-based
};

int residue(const Box& b, int n) {
  long long v = (b.col - b.row) % n;
  return static_cast<int>(v < 0 ? v + n : v);
}

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  const int len = p.length();
  for (int row = 1; row <= len + 1; ++row) {
    long long here = p.part(row);
    long long above = (row == 1) ? -1 : p.part(row - 1);
    if (row == 1 || here < above) out.push_back({row, static_cast<int>(here + 1)});
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int row = 1; row <= p.length(); ++row)
    if (p.part(row) > p.part(row + 1))
      out.push_back({row, static_cast<int>(p.part(row))});
  return out;
}

Partition with_box(const Partition& p, const Box& b) {
  std::vector<long long> parts = p.parts();
  if (b.row == p.length() + 1)
    parts.push_back(1);
  else
    parts[b.row - 1] += 1;
  return Partition(std::move(parts));
}

// Single lowering operator: each added i-box is weighted by
// q^(addable i-boxes strictly above - removable i-boxes strictly above).
FockVector f_once(int i, const FockVector& v, int n) {
  FockVector out;
  for (const auto& [lam, c] : v.terms()) {
    auto addable = addable_boxes(lam);
    auto removable = removable_boxes(lam);
    for (const Box& b : addable) {
      if (residue(b, n) != i) continue;
      int stat = 0;
      for (const Box& a : addable)
        if (a.row < b.row && residue(a, n) == i) ++stat;
      for (const Box& rm : removable)
        if (rm.row < b.row && residue(rm, n) == i) --stat;
      out.add(with_box(lam, b), c.shifted(stat));
    }
  }
  return out;
}

}  // namespace

FockVector f_divided_power(int i, int k, const FockVector& v, int n) {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  QFOCK_REQUIRE(i >= 0 && i < n, "residue out of range");
  QFOCK_REQUIRE(k >= 1, "divided power requires k >= 1");
  FockVector out = v;
  for (int t = 0; t < k; ++t) out = f_once(i, out, n);
  return out.div_all(q_factorial(k));
}

std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int n) {
  // The ladder through (row, col) reaches column 1 at row + (n-1)(col-1);
  // boxes on one ladder share that index and the residue (1 - index) mod n.
  std::map<long long, int> count;
  for (int row = 1; row <= mu.length(); ++row)
    for (long long col = 1; col <= mu.part(row); ++col)
      ++count[row + static_cast<long long>(n - 1) * (col - 1)];
  std::vector<std::pair<int, int>> out;
  for (const auto& [ladder, c] : count) {
    long long res = (1 - ladder) % n;
    out.emplace_back(static_cast<int>(res < 0 ? res + n : res), c);
  }
  return out;  // map iteration = increasing ladder index
}

const FockVector& LadderBasis::vector(const Partition& mu, int n) {
  QFOCK_REQUIRE(mu.is_n_regular(n), "ladder construction needs an n-regular label");
  auto key = std::make_pair(n, mu);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  FockVector v = FockVector::basis(Partition{});
  for (const auto& [res, cnt] : ladder_sequence(mu, n))
    v = f_divided_power(res, cnt, v, n);
  QFOCK_CHECK(v.coeff(mu).is_one(), "ladder product has no unit leading term");

  // Gaussian reduction: repeatedly clear the most dominant label whose
  // coefficient has a constant or negative-degree part, using the
  // bar-symmetric completion of that part.
  while (true) {
    Partition target;
    LaurentPoly correction;
    bool found = false;
    for (const auto& [p, c] : v.terms()) {
      if (p == mu || c.in_qzq()) continue;
      LaurentPoly beta;
      for (const auto& [e, a] : c.terms()) {
        if (e > 0) break;
        beta += LaurentPoly::monomial(a, e);
        if (e < 0) beta += LaurentPoly::monomial(a, -e);
      }
      target = p;
      correction = beta;
      found = true;
      break;
    }
    if (!found) break;
    QFOCK_CHECK(target.is_n_regular(n), "reduction hit a non-regular label");
    QFOCK_CHECK(revlex_less(target, mu), "reduction label does not precede mu");
    v.add_scaled(vector(target, n), -correction);
  }
  QFOCK_CHECK(v.coeff(mu).is_one(), "reduction destroyed the leading term");
  for (const auto& [p, c] : v.terms()) {
    QFOCK_CHECK(p == mu || c.in_qzq(), "reduction left a non-positive exponent");
    QFOCK_CHECK(c.has_nonneg_coeffs() && c.is_polynomial(),
                "canonical column outside N[q]");
  }
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace qfock
