#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qfock/kl.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

struct RevlexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return revlex_less(a, b);
  }
};

/// Finite linear combination of standard basis vectors |lambda>, keyed by
/// partition in revlex order; zero coefficients are never stored.
class FockVector {
 public:
  using Map = std::map<Partition, LaurentPoly, RevlexLess>;

  FockVector() = default;
  static FockVector basis(const Partition& p) {
    FockVector v;
    v.add(p, LaurentPoly(1));
    return v;
  }

  void add(const Partition& p, const LaurentPoly& c);
  void add_scaled(const FockVector& w, const LaurentPoly& c);
  LaurentPoly coeff(const Partition& p) const;
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Divide every coefficient exactly.
  FockVector div_all(const LaurentPoly& den) const;

  std::string str() const;   // one "partition: poly" term per line
  std::string json() const;  // list of {"partition": ..., "poly": {...}}

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FockVector& a, const FockVector& b) {
    return !(a == b);
  }

 private:
  Map terms_;
};

/// Square matrix of polynomials indexed by the partitions of m with at most
/// r parts, listed in revlex order (most dominant first).
class FockMatrix {
 public:
  FockMatrix(long long m, int n, int r, std::vector<Partition> index);

  long long m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Partition>& index() const { return index_; }
  int dim() const { return static_cast<int>(index_.size()); }

  const LaurentPoly& at(int row, int col) const;
  LaurentPoly& at(int row, int col);
  const LaurentPoly& at(const Partition& row, const Partition& col) const;
  int position(const Partition& p) const;  // -1 if absent

  std::string csv() const;
  std::string json() const;

 private:
  long long m_;
  int n_, r_;
  std::vector<Partition> index_;
  std::vector<LaurentPoly> entries_;
};

/// Session object for the canonical-basis layer: owns one KL engine per rank
/// and the polynomial caches that ride on them.  Not thread-safe; batch
/// drivers confine one context per worker.
class FockContext {
 public:
  KLTable& table(int r);

  /// Canonical-basis coefficient d_{lam,mu}(q) through the alcove formula:
  /// an alternating sum of normalized KL polynomials attached to
  /// lam + rho_r and mu + rho_r at level n.  Zero when the n-cores differ.
  LaurentPoly d_poly(const Partition& lam, const Partition& mu, int n, int r);
  /// Same coefficient of the conjugate pair through the inverse-parabolic
  /// route: r_poly(lam + rho_r, mu + rho_r).  Equals
  /// d_poly(lam', mu', ...) identically.
  LaurentPoly d_poly_via_r(const Partition& lam, const Partition& mu, int n, int r);

  /// d_{lam,mu} at the cheapest valid rank and route for the pair.
  LaurentPoly d_entry(const Partition& lam, const Partition& mu, int n);

  FockMatrix d_matrix(long long m, int n, int r);
  /// Inverse of the d-matrix under the reindexing convention
  /// sum_nu e_{lam',nu'}(-q) d_{nu,mu}(q) = delta; requires r >= m.
  FockMatrix e_matrix(long long m, int n, int r);

  /// Canonical-basis column with label mu' as a vector: coefficient of
  /// |lam'> is d_{lam',mu'}(q); rows run over the partitions lam of |mu|
  /// with at most max(mu_1, len(mu)) parts, which covers the support.
  FockVector gplus_vector(const Partition& mu, int n, int r);

  /// Length of the longest element of the stabilizer of the fundamental
  /// domain representative of mu + rho_r at level n.
  long long ell_mu(const Partition& mu, int n, int r);

  struct IdentityCheck {
    bool ok = false;
    LaurentPoly lhs;         // d_{lam',mu'}(q)
    LaurentPoly rhs;         // q^{l - l_mu} * d_{tilde,hat}(q^{-1})
    LaurentPoly d_inflated;  // d_{tilde(lam),hat(mu)}(q)
    long long shift = 0;     // l - l_mu
    Partition lam_tilde, mu_hat;
  };
  /// The column-reduction identity
  /// d_{lam',mu'}(q) = q^{l-l_mu} d_{tilde(lam),hat(mu)}(q^{-1}),
  /// both sides computed at rank r.
  IdentityCheck check_th2(const Partition& lam, const Partition& mu, int n, int r);
  /// The same identity specialized at q = 1.
  bool check_th1(const Partition& lam, const Partition& mu, int n, int r);

 private:
  std::map<int, std::unique_ptr<KLTable>> tables_;
};

/// Divided power f_i^(k) of the level-1 lowering operator: adds k boxes of
/// residue i ((col - row) mod n), each weighted by q^(addable i-boxes above
/// minus removable i-boxes above), then divides by the symmetric
/// q-factorial [k]!.
FockVector f_divided_power(int i, int k, const FockVector& v, int n);

/// Independent ladder-induction construction of the canonical column of an
/// n-regular label: the ladder product applied to the vacuum, then Gaussian
/// reduction by previously built columns until every off-diagonal
/// coefficient lies in qZ[q].
class LadderBasis {
 public:
  const FockVector& vector(const Partition& mu, int n);

 private:
  std::map<std::pair<int, Partition>, FockVector> memo_;
};

/// Ladder decomposition of the diagram of mu: for each ladder that meets mu,
/// its residue and the number of boxes of mu on it, in application order.
std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int n);

}  // namespace qfock
