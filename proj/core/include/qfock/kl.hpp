#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qfock/affine.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock {

/// Kazhdan-Lusztig engine for one rank r of the affine symmetric group.
///
/// Three polynomial families are exposed:
///   kl_p  -- classical P_{x,w}(q), nonnegative coefficients, constant term 1;
///   kl_h  -- the self-dual normalization q^{l(w)-l(x)} P_{x,w}(q^{-2}), which
///            is the family the alternating sums below are built from;
///   kl_q  -- the inverse family, defined by
///            sum_x kl_q(x,z)(-q) * kl_h(x,w)(q) = delta_{z,w},
///            supported on z <= x.
/// On top of these sit the level -n parabolic families on points of Z^r and
/// the alternating sums r, m, n used by the canonical-basis layer.
///
/// All caches are confined to the instance; a KLTable is not thread-safe.
/// Batch drivers use one table per worker, which is deterministic because
/// every entry is a pure function of its key.
class KLTable {
 public:
  explicit KLTable(int r);

  int rank() const { return r_; }

  LaurentPoly kl_p(const AffinePerm& x, const AffinePerm& w);
  LaurentPoly kl_h(const AffinePerm& x, const AffinePerm& w);
  LaurentPoly kl_q(const AffinePerm& x, const AffinePerm& z);
  /// Ceiling-checked variant; the value does not depend on the ceiling.
  LaurentPoly kl_q(const AffinePerm& x, const AffinePerm& z,
                   const AffinePerm& ceiling);

  /// Inverse parabolic polynomial at level -n, via minimal representatives:
  /// zero unless mu and lam lie in the same orbit with matching tau parts.
  LaurentPoly parabolic_q_minus(const PointR& mu, const PointR& lam, int n);
  /// Parabolic polynomial at level -n, defined as the inverse of the
  /// parabolic_q_minus matrix over the finite support below lam.
  LaurentPoly parabolic_p_minus(const PointR& mu, const PointR& lam, int n);

  /// Alternating sum over the finite symmetric group:
  /// sum_s (-q)^{l(s)} parabolic_q_minus(s.beta, alpha).
  /// Both points must be strictly dominant.
  LaurentPoly r_poly(const PointR& beta, const PointR& alpha, int n);
  /// sum_s (-q)^{l(w_0)-l(s)} kl_q(s*x, w_0*w); x, w minimal coset reps.
  LaurentPoly m_poly(const AffinePerm& x, const AffinePerm& w);
  /// sum_s (-q)^{l(s)} kl_h(s*x, y).
  LaurentPoly n_poly(const AffinePerm& x, const AffinePerm& y);

  /// Image of the alcove of w_alpha under the box-reflection map, by the
  /// closed form through the hat label of mu; w_alpha must be the minimal
  /// element for mu + rho_r at level n.
  AffinePerm alcove_hat(const AffinePerm& w_alpha, const Partition& mu, int n,
                        int r);
  /// Same map computed geometrically on a scaled interior point
  /// (translate, reflect, translate); property-tested against alcove_hat.
  AffinePerm alcove_hat_geometric(const Partition& mu, int n, int r);

  /// Bruhat order via cached ideal membership.
  bool leq(const AffinePerm& x, const AffinePerm& w);
  /// Bruhat ideal {x : x <= w}, sorted by length then window.
  std::vector<AffinePerm> ideal_of(const AffinePerm& w);

  /// Points mu with parabolic support below lam at level -n: the orbit
  /// image of the Bruhat ideal of the minimal element of lam.
  std::vector<PointR> parabolic_support(const PointR& lam, int n);

  size_t memo_size() const { return pmemo_.size(); }

 private:
  using Id = uint32_t;
  int r_;
  std::vector<AffinePerm> elems_;
  std::vector<long long> len_;
  std::unordered_map<AffinePerm, Id, AffinePerm::Hash> ids_;
  std::unordered_map<uint64_t, Id> smul_;  // (i, id) -> id of s_i * elem

  struct Ideal {
    std::vector<Id> sorted;  // by length, then id
    std::unordered_set<Id> members;
  };
  std::unordered_map<Id, Ideal> ideals_;
  std::unordered_map<uint64_t, LaurentPoly> pmemo_;  // extremal (x,w) pairs
  struct MuEntry {
    Id z;
    BigInt mu;
  };
  std::unordered_map<Id, std::vector<MuEntry>> murows_;
  std::unordered_map<uint64_t, LaurentPoly> qmemo_;  // (z,x) inverse entries
  std::unordered_map<std::string, LaurentPoly> pminus_memo_;

  Id intern(const AffinePerm& w);
  Id smul(int i, Id w);  // s_i * w
  const Ideal& ideal(Id w);
  const std::vector<MuEntry>& murow(Id v);
  LaurentPoly kl_p_ids(Id x, Id w);
  LaurentPoly qinv(Id z, Id x);  // inverse-matrix entry, normalized family
  unsigned left_descents(Id w);
};

}  // namespace qfock
