#include "qfock/kl.hpp"

#include <algorithm>
#include <sstream>

namespace qfock {

namespace {

uint64_t pair_key(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

}  // namespace

KLTable::KLTable(int r) : r_(r) {
  QFOCK_REQUIRE(r >= 2, "rank must be >= 2");
  QFOCK_REQUIRE(r <= 30, "rank too large for descent bitmasks");
}

KLTable::Id KLTable::intern(const AffinePerm& w) {
  QFOCK_REQUIRE(w.rank() == r_, "rank mismatch");
  auto it = ids_.find(w);
  if (it != ids_.end()) return it->second;
  Id id = static_cast<Id>(elems_.size());
  elems_.push_back(w);
  len_.push_back(w.length());
  ids_.emplace(w, id);
  return id;
}

KLTable::Id KLTable::smul(int i, Id w) {
  uint64_t key = pair_key(static_cast<uint32_t>(i), w);
  auto it = smul_.find(key);
  if (it != smul_.end()) return it->second;
  Id res = intern(AffinePerm::s(i, r_) * elems_[w]);
  smul_.emplace(key, res);
  return res;
}

unsigned KLTable::left_descents(Id w) {
  unsigned mask = 0;
  const AffinePerm inv = elems_[w].inverse();
  for (int i = 0; i < r_; ++i)
    if (inv.apply(i) > inv.apply(i + 1)) mask |= 1u << i;
  return mask;
}

const KLTable::Ideal& KLTable::ideal(Id wid) {
  auto it = ideals_.find(wid);
  if (it != ideals_.end()) return it->second;
  // Subword dynamic program over one reduced word: the set of subword
  // products of any reduced word is exactly the Bruhat ideal.
  std::vector<int> word = elems_[wid].reduced_word();
  std::unordered_set<Id> cur;
  cur.insert(intern(AffinePerm::identity(r_)));
  for (int g : word) {
    std::vector<Id> add;
    for (Id u : cur) {
      Id v = intern(elems_[u] * AffinePerm::s(g, r_));
      if (!cur.count(v)) add.push_back(v);
    }
    cur.insert(add.begin(), add.end());
  }
  Ideal idl;
  idl.sorted.assign(cur.begin(), cur.end());
  std::sort(idl.sorted.begin(), idl.sorted.end(), [this](Id a, Id b) {
    if (len_[a] != len_[b]) return len_[a] < len_[b];
    return elems_[a] < elems_[b];
  });
  idl.members = std::move(cur);
  return ideals_.emplace(wid, std::move(idl)).first->second;
}

bool KLTable::leq(const AffinePerm& x, const AffinePerm& w) {
  if (x.length() > w.length()) return false;
  return ideal(intern(w)).members.count(intern(x)) > 0;
}

std::vector<AffinePerm> KLTable::ideal_of(const AffinePerm& w) {
  const Ideal& idl = ideal(intern(w));
  std::vector<AffinePerm> out;
  out.reserve(idl.sorted.size());
  for (Id id : idl.sorted) out.push_back(elems_[id]);
  return out;
}

const std::vector<KLTable::MuEntry>& KLTable::murow(Id vid) {
  auto it = murows_.find(vid);
  if (it != murows_.end()) return it->second;
  std::vector<MuEntry> row;
  const long long lv = len_[vid];
  // Copy the id list: kl_p_ids below can grow the tables we iterate over.
  std::vector<Id> zs = ideal(vid).sorted;
  for (Id z : zs) {
    long long diff = lv - len_[z];
    if (diff <= 0 || diff % 2 == 0) continue;
    LaurentPoly p = kl_p_ids(z, vid);
    if (p.is_zero()) continue;
    BigInt c = p.coeff(static_cast<int>((diff - 1) / 2));
    if (c != 0) row.push_back({z, std::move(c)});
  }
  return murows_.emplace(vid, std::move(row)).first->second;
}

LaurentPoly KLTable::kl_p_ids(Id xid, Id wid) {
  if (xid == wid) return LaurentPoly(1);
  if (len_[xid] > len_[wid]) return {};
  if (!ideal(wid).members.count(xid)) return {};
  long long diff = len_[wid] - len_[xid];
  if (diff <= 2) return LaurentPoly(1);

  // Push x up until every left descent of w is a left descent of x; the
  // polynomial is unchanged along the way.
  unsigned dw = left_descents(wid);
  Id x = xid;
  while (true) {
    unsigned up = dw & ~left_descents(x);
    if (up == 0) break;
    int i = __builtin_ctz(up);
    x = smul(i, x);
    QFOCK_CHECK(ideal(wid).members.count(x), "descent lift left the ideal");
  }
  if (x == wid) return LaurentPoly(1);
  diff = len_[wid] - len_[x];
  if (diff <= 2) return LaurentPoly(1);

  uint64_t key = pair_key(x, wid);
  auto it = pmemo_.find(key);
  if (it != pmemo_.end()) return it->second;

  int s = __builtin_ctz(dw);
  Id vid = smul(s, wid);
  Id sxid = smul(s, x);
  QFOCK_CHECK(len_[vid] == len_[wid] - 1, "descent did not shorten");
  QFOCK_CHECK(len_[sxid] == len_[x] - 1, "extremal x without descent");

  // P_{x,w} = P_{sx,v} + q P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
  LaurentPoly result = kl_p_ids(sxid, vid) + kl_p_ids(x, vid).shifted(1);
  for (const MuEntry& e : murow(vid)) {
    if (!(left_descents(e.z) & (1u << s))) continue;
    long long lz = len_[e.z];
    if (lz < len_[x]) continue;
    LaurentPoly pxz = kl_p_ids(x, e.z);
    if (pxz.is_zero()) continue;
    long long exp = (len_[wid] - lz) / 2;
    QFOCK_CHECK((len_[wid] - lz) % 2 == 0, "odd exponent in correction term");
    result -= (pxz * LaurentPoly(e.mu)).shifted(static_cast<int>(exp));
  }

  QFOCK_CHECK(result.has_nonneg_coeffs(), "KL polynomial with negative coefficient");
  QFOCK_CHECK(!result.is_zero() && result.valuation() == 0 && result.coeff(0) == 1,
              "KL polynomial without unit constant term");
  QFOCK_CHECK(2 * result.degree() <= len_[wid] - len_[x] - 1,
              "KL degree bound violated");
  pmemo_.emplace(key, result);
  return result;
}

LaurentPoly KLTable::kl_p(const AffinePerm& x, const AffinePerm& w) {
  QFOCK_REQUIRE(x.in_affine() && w.in_affine(),
                "KL polynomials are indexed by the non-extended group");
  return kl_p_ids(intern(x), intern(w));
}

LaurentPoly KLTable::kl_h(const AffinePerm& x, const AffinePerm& w) {
  LaurentPoly p = kl_p(x, w);
  if (p.is_zero()) return p;
  long long diff = w.length() - x.length();
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out += LaurentPoly::monomial(c, static_cast<int>(diff - 2 * e));
  return out;
}

LaurentPoly KLTable::qinv(Id zid, Id xid) {
  // Entry [z][x] of the inverse of the normalized triangular matrix.
  if (zid == xid) return LaurentPoly(1);
  if (len_[zid] > len_[xid] || !ideal(xid).members.count(zid)) return {};
  uint64_t key = pair_key(zid, xid);
  auto it = qmemo_.find(key);
  if (it != qmemo_.end()) return it->second;

  LaurentPoly acc;
  std::vector<Id> ys = ideal(xid).sorted;
  for (Id y : ys) {
    if (y == xid || len_[y] > len_[xid]) continue;
    LaurentPoly a = qinv(zid, y);
    if (a.is_zero()) continue;
    LaurentPoly h = kl_h(elems_[y], elems_[xid]);
    if (h.is_zero()) continue;
    acc += a * h;
  }
  LaurentPoly result = -acc;
  qmemo_.emplace(key, result);
  return result;
}

LaurentPoly KLTable::kl_q(const AffinePerm& x, const AffinePerm& z) {
  QFOCK_REQUIRE(x.in_affine() && z.in_affine(),
                "inverse KL polynomials are indexed by the non-extended group");
  return qinv(intern(z), intern(x)).at_neg_q();
}

LaurentPoly KLTable::kl_q(const AffinePerm& x, const AffinePerm& z,
                          const AffinePerm& ceiling) {
  QFOCK_REQUIRE(leq(x, ceiling) && leq(z, ceiling), "arguments not below ceiling");
  return kl_q(x, z);
}

LaurentPoly KLTable::parabolic_q_minus(const PointR& mu, const PointR& lam, int n) {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  AffinePerm wmu = w_min_extended(mu, -n);
  AffinePerm wlam = w_min_extended(lam, -n);
  if (wmu.tau_degree() != wlam.tau_degree()) return {};
  PointR rep_mu = act_level(wmu.inverse(), -n, mu);
  PointR rep_lam = act_level(wlam.inverse(), -n, lam);
  if (rep_mu != rep_lam) return {};  // different orbits
  return kl_q(wmu.underline(), wlam.underline());
}

std::vector<PointR> KLTable::parabolic_support(const PointR& lam, int n) {
  AffinePerm wlam = w_min_underline(lam, -n);
  PointR base = act_level(wlam.inverse(), -n, lam);
  std::vector<PointR> pts;
  std::unordered_set<std::string> seen;
  for (const AffinePerm& x : ideal_of(wlam)) {
    PointR p = act_level(x, -n, base);
    std::ostringstream os;
    os << p;
    if (seen.insert(os.str()).second) pts.push_back(p);
  }
  return pts;
}

LaurentPoly KLTable::parabolic_p_minus(const PointR& mu, const PointR& lam, int n) {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  std::ostringstream ks;
  ks << mu << "|" << lam << "|" << n;
  auto hit = pminus_memo_.find(ks.str());
  if (hit != pminus_memo_.end()) return hit->second;

  // Solve sum_mu Qminus_{mu,alpha}(-q) Pminus_{mu,lam}(q) = delta_{alpha,lam}
  // over the finite support below lam, descending in the length of the
  // minimal representative.
  std::vector<PointR> pts = parabolic_support(lam, n);
  std::vector<long long> wlen(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    wlen[i] = w_min_underline(pts[i], -n).length();
  std::vector<size_t> order(pts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return wlen[a] > wlen[b]; });

  std::vector<LaurentPoly> sol(pts.size());
  for (size_t oi = 0; oi < order.size(); ++oi) {
    size_t a = order[oi];
    LaurentPoly rhs = (pts[a] == lam) ? LaurentPoly(1) : LaurentPoly();
    for (size_t oj = 0; oj < oi; ++oj) {
      size_t m = order[oj];
      if (sol[m].is_zero()) continue;
      LaurentPoly qm = parabolic_q_minus(pts[m], pts[a], n);
      if (qm.is_zero()) continue;
      rhs -= qm.at_neg_q() * sol[m];
    }
    sol[a] = rhs;  // diagonal coefficient is 1
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    std::ostringstream os;
    os << pts[i] << "|" << lam << "|" << n;
    pminus_memo_.emplace(os.str(), sol[i]);
  }
  auto it = pminus_memo_.find(ks.str());
  if (it != pminus_memo_.end()) return it->second;
  pminus_memo_.emplace(ks.str(), LaurentPoly());
  return {};
}

LaurentPoly KLTable::r_poly(const PointR& beta, const PointR& alpha, int n) {
  QFOCK_REQUIRE(beta.strictly_dominant() && alpha.strictly_dominant(),
                "r_poly requires strictly dominant points");
  LaurentPoly out;
  for (const AffinePerm& s : finite_symmetric_group(r_)) {
    PointR sb = act_level(s, n, beta);
    LaurentPoly qm = parabolic_q_minus(sb, alpha, n);
    if (qm.is_zero()) continue;
    LaurentPoly sign = LaurentPoly::monomial((s.length() % 2) ? -1 : 1,
                                             static_cast<int>(s.length()));
    out += sign * qm;
  }
  return out;
}

LaurentPoly KLTable::m_poly(const AffinePerm& x, const AffinePerm& w) {
  QFOCK_REQUIRE(is_min_coset_rep(x) && is_min_coset_rep(w),
                "m_poly requires minimal coset representatives");
  const AffinePerm w0 = longest_finite(r_);
  const long long lw0 = w0.length();
  const AffinePerm w0w = w0 * w;
  LaurentPoly out;
  for (const AffinePerm& s : finite_symmetric_group(r_)) {
    AffinePerm sx = s * x;
    if (sx.length() < w0w.length()) continue;
    LaurentPoly q = kl_q(sx, w0w);
    if (q.is_zero()) continue;
    long long e = lw0 - s.length();
    LaurentPoly sign = LaurentPoly::monomial((e % 2) ? -1 : 1, static_cast<int>(e));
    out += sign * q;
  }
  return out;
}

LaurentPoly KLTable::n_poly(const AffinePerm& x, const AffinePerm& y) {
  LaurentPoly out;
  const long long ly = y.length();
  for (const AffinePerm& s : finite_symmetric_group(r_)) {
    AffinePerm sx = s * x;
    if (sx.length() > ly) continue;
    LaurentPoly h = kl_h(sx, y);
    if (h.is_zero()) continue;
    LaurentPoly sign = LaurentPoly::monomial((s.length() % 2) ? -1 : 1,
                                             static_cast<int>(s.length()));
    out += sign * h;
  }
  return out;
}

AffinePerm KLTable::alcove_hat(const AffinePerm& w_alpha, const Partition& mu,
                               int n, int r) {
  QFOCK_REQUIRE(r == r_, "rank mismatch");
  PointR alpha{plus_rho(mu, r)};
  QFOCK_REQUIRE(w_alpha == w_min_underline(alpha, n),
                "w_alpha is not the minimal element of mu + rho");
  PointR xi = act_level(w_alpha.inverse(), n, alpha);
  auto [w0xi, l0] = stabilizer_longest(xi, n);
  (void)l0;
  PointR hat_rho{plus_rho(mu.hat(n, r), r)};
  return w_min_underline(hat_rho, n) * w0xi;
}

AffinePerm KLTable::alcove_hat_geometric(const Partition& mu, int n, int r) {
  QFOCK_REQUIRE(r == r_, "rank mismatch");
  // Work at level n*r on points scaled by r so the interior point of the
  // fundamental alcove is integral and never meets a wall.
  const int N = n * r;
  PointR interior;
  interior.c.resize(r);
  for (int i = 0; i < r; ++i) interior.c[i] = static_cast<long long>(n) * (r - 1 - i);

  PointR alpha{plus_rho(mu, r)};
  AffinePerm w_alpha = w_min_underline(alpha, n);
  PointR pa = act_level(w_alpha, N, interior);

  auto dec = mu.restricted_decomp(n, r);
  // B = A - n*mu1, then reflect and translate back up:
  // hat(A) = w_0(B) + 2n*rho_r + n*mu1.
  PointR b = pa;
  for (int i = 0; i < r; ++i) b.c[i] -= static_cast<long long>(r) * n * dec.mu1[i];
  PointR wb = reversed(b);
  std::vector<long long> rr = rho(r);
  for (int i = 0; i < r; ++i)
    wb.c[i] += static_cast<long long>(r) * n * (2 * rr[i] + dec.mu1[i]);

  AffinePerm what = w_min_underline(wb, N);
  PointR back = act_level(what.inverse(), N, wb);
  QFOCK_CHECK(underline_equal(back, interior), "alcove map did not land on an alcove");
  return what;
}

}  // namespace qfock
