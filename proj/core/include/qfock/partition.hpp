#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfock/common.hpp"

namespace qfock {

/// Integer partition: weakly decreasing positive parts; the empty list is the
/// empty partition.  Carries the combinatorics that labels rows and columns of
/// the canonical-basis matrices: conjugation, dominance, n-regularity, the
/// restricted decomposition and the hat/tilde label transformations.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  long long size() const;            // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  long long part(int i) const;       // 1-based, 0 beyond the length
  bool empty() const { return parts_.empty(); }

  /// Transpose of the Young diagram.
  Partition conjugate() const;
  bool is_n_regular(int n) const;    // no part value repeated >= n times
  bool is_n_restricted(int n) const; // consecutive differences (incl. trailing) < n

  /// View as an r-vector by appending zeros; rejects length > r.
  std::vector<long long> pad_to(int r) const;

  /// Unique splitting p = mu0 + n*mu1 with mu0 n-restricted, both weakly
  /// decreasing r-vectors.
  struct RestrictedDecomp {
    std::vector<long long> mu0;
    std::vector<long long> mu1;
  };
  RestrictedDecomp restricted_decomp(int n, int r) const;

  /// 2(n-1)rho_r + reverse(mu0) + n*mu1, as a partition of size() + (n-1)r(r-1).
  Partition hat(int n, int r) const;
  /// Adds (n-1)(r-1) to each of the r padded coordinates.
  Partition tilde(int n, int r) const;

  /// Remove rim hooks of size n until none remain (computed on the abacus).
  Partition n_core(int n) const;

  /// Comma-separated decreasing integers; "[]" for the empty partition.
  std::string str() const;
  /// Accepts "6,2,1", "[]", or the empty string.
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// Container ordering (lexicographic on parts); not the dominance order.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<long long> parts_;
};

/// Dominance order: true iff every partial sum of a is <= that of b.
/// Requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

/// Strict total order listing partitions of equal size most-dominant first
/// (descending lexicographic).  Linear extension of dominance.
bool revlex_less(const Partition& a, const Partition& b);

/// All partitions of m with at most max_len parts, in revlex order.
std::vector<Partition> partitions_of(long long m, int max_len);

/// rho_r = (r-1, r-2, ..., 1, 0).
std::vector<long long> rho(int r);

/// pad_to(r) shifted by rho_r; strictly dominant whenever p is a partition.
std::vector<long long> plus_rho(const Partition& p, int r);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace qfock
