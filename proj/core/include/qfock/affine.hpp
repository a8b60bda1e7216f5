#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qfock/common.hpp"

namespace qfock {

/// Point of P_r = Z^r.  Also stands for its class in P_r modulo constant
/// vectors where only coordinate differences matter.
struct PointR {
  std::vector<long long> c;

  int rank() const { return static_cast<int>(c.size()); }
  bool strictly_dominant() const;
  long long sum() const;

  friend bool operator==(const PointR& a, const PointR& b) { return a.c == b.c; }
  friend bool operator!=(const PointR& a, const PointR& b) { return !(a == b); }
  friend bool operator<(const PointR& a, const PointR& b) { return a.c < b.c; }
};

/// True iff a - b is a constant vector.
bool underline_equal(const PointR& a, const PointR& b);
PointR reversed(const PointR& p);
std::ostream& operator<<(std::ostream& os, const PointR& p);

/// Element of the extended affine symmetric group on r strands, in window
/// notation: the bijection w of Z with w(i + r) = w(i) + r is stored through
/// its window [w(1), ..., w(r)].  Members of the non-extended group are the
/// windows with sum(w(i) - i) = 0; tau (window [2, ..., r+1]) has length 0.
class AffinePerm {
 public:
  AffinePerm() = default;
  static AffinePerm identity(int r);
  /// Simple reflection s_i for 0 <= i <= r-1 (indices mod r on positions).
  static AffinePerm s(int i, int r);
  /// Rotation of length zero.
  static AffinePerm tau(int r);
  static AffinePerm from_window(std::vector<long long> window);
  /// Finite permutation of {1..r} given by its one-line notation.
  static AffinePerm from_finite(const std::vector<int>& one_line);

  int rank() const { return static_cast<int>(win_.size()); }
  const std::vector<long long>& window() const { return win_; }
  long long apply(long long i) const;  // the bijection on Z

  AffinePerm inverse() const;
  friend AffinePerm operator*(const AffinePerm& u, const AffinePerm& v);

  long long length() const;
  /// tau-power a in the unique factorization w = sigma * tau^a.
  long long tau_degree() const;
  bool in_affine() const { return tau_degree() == 0; }  // member of the non-extended group
  /// Finite permutation: window is a permutation of 1..r.
  bool is_finite() const;
  /// The sigma component of w = sigma * tau^a.
  AffinePerm underline() const;
  /// Diagram automorphism: tau -> tau^{-1}, s_i -> s_{-i mod r}.
  AffinePerm sharp() const;

  bool is_identity() const;
  /// s_i * w < w?
  bool has_left_descent(int i) const;
  /// w * s_i < w?
  bool has_right_descent(int i) const;
  /// Lowest i in 0..r-1 with s_i w < w, or -1 if none.
  int first_left_descent() const;
  /// Generator indices g1..gk with w = s_{g1} * ... * s_{gk} (w in the
  /// non-extended group).
  std::vector<int> reduced_word() const;

  std::string str() const;                    // "[w1,...,wr]"
  static AffinePerm parse(const std::string& s);

  friend bool operator==(const AffinePerm& a, const AffinePerm& b) {
    return a.win_ == b.win_;
  }
  friend bool operator!=(const AffinePerm& a, const AffinePerm& b) {
    return !(a == b);
  }
  friend bool operator<(const AffinePerm& a, const AffinePerm& b) {
    return a.win_ < b.win_;
  }

  struct Hash {
    size_t operator()(const AffinePerm& w) const;
  };

 private:
  std::vector<long long> win_;
  void validate() const;
};

std::ostream& operator<<(std::ostream& os, const AffinePerm& w);

/// Level-k action on P_r: finite simple reflections permute adjacent
/// coordinates, s_0 sends (x1,...,xr) to (xr + k, x2, ..., x1 - k), and tau
/// sends it to (xr + k, x1, ..., x_{r-1}).
PointR act_level(const AffinePerm& w, int k, const PointR& p);

/// Minimal-length element whose inverse action carries p into the pinned
/// fundamental domain.
///
/// Underline mode ("tilde-underline"): element of the non-extended group
/// acting on classes modulo constants; for k > 0 the domain is
/// {x1 >= ... >= xr, x1 - xr <= k}, for k < 0 its coordinate reversal.
AffinePerm w_min_underline(const PointR& p, int k);
/// Extended mode ("hat"): element of the extended group acting on P_r itself;
/// for k > 0 the domain is {k >= x1 >= ... >= xr >= 1}, for k < 0 its
/// reversal.  underline(w_min_extended(p, k)) == w_min_underline(p, k).
AffinePerm w_min_extended(const PointR& p, int k);

/// Longest element of the standard parabolic subgroup fixing the class of nu,
/// which must lie in the closed fundamental domain for level k.  Returns the
/// element and its length.
std::pair<AffinePerm, long long> stabilizer_longest(const PointR& nu, int k);

/// Bruhat order on the non-extended group, by the descent recursion.
bool bruhat_leq(const AffinePerm& x, const AffinePerm& w);

/// Minimal-length representative of its right coset under the finite
/// symmetric subgroup: no left descent among s_1..s_{r-1}.
bool is_min_coset_rep(const AffinePerm& w);

/// All one-line windows of the finite symmetric group on r letters.
std::vector<AffinePerm> finite_symmetric_group(int r);
/// Longest element of the finite symmetric subgroup (reversal window).
AffinePerm longest_finite(int r);

}  // namespace qfock
