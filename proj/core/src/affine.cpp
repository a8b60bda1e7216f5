#include "qfock/affine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace qfock {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, rem = a % b;
  return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

// Euclidean remainder in [0, b).
long long emod(long long a, long long b) { return a - b * floordiv(a, b); }

}  // namespace

bool PointR::strictly_dominant() const {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] <= c[i + 1]) return false;
  return true;
}

long long PointR::sum() const { return std::accumulate(c.begin(), c.end(), 0LL); }

bool underline_equal(const PointR& a, const PointR& b) {
  QFOCK_REQUIRE(a.rank() == b.rank(), "rank mismatch");
  if (a.rank() == 0) return true;
  long long d = a.c[0] - b.c[0];
  for (int i = 1; i < a.rank(); ++i)
    if (a.c[i] - b.c[i] != d) return false;
  return true;
}

PointR reversed(const PointR& p) {
  PointR q = p;
  std::reverse(q.c.begin(), q.c.end());
  return q;
}

std::ostream& operator<<(std::ostream& os, const PointR& p) {
  os << "(";
  for (int i = 0; i < p.rank(); ++i) os << (i ? "," : "") << p.c[i];
  return os << ")";
}

// ---------------------------------------------------------------------------

void AffinePerm::validate() const {
  const int r = rank();
  QFOCK_REQUIRE(r >= 2, "rank must be >= 2");
  std::vector<bool> seen(r, false);
  for (long long v : win_) {
    int res = static_cast<int>(emod(v, r));
    QFOCK_REQUIRE(!seen[res], "window residues must be distinct mod r");
    seen[res] = true;
  }
}

AffinePerm AffinePerm::identity(int r) {
  AffinePerm w;
  w.win_.resize(r);
  std::iota(w.win_.begin(), w.win_.end(), 1);
  w.validate();
  return w;
}

AffinePerm AffinePerm::s(int i, int r) {
  QFOCK_REQUIRE(r >= 2, "rank must be >= 2");
  QFOCK_REQUIRE(i >= 0 && i < r, "generator index out of range");
  AffinePerm w = identity(r);
  if (i >= 1) {
    std::swap(w.win_[i - 1], w.win_[i]);
  } else {
    w.win_[0] = 0;
    w.win_[r - 1] = r + 1;
  }
  return w;
}

AffinePerm AffinePerm::tau(int r) {
  QFOCK_REQUIRE(r >= 2, "rank must be >= 2");
  AffinePerm w;
  w.win_.resize(r);
  std::iota(w.win_.begin(), w.win_.end(), 2);
  return w;
}

AffinePerm AffinePerm::from_window(std::vector<long long> window) {
  AffinePerm w;
  w.win_ = std::move(window);
  w.validate();
  return w;
}

AffinePerm AffinePerm::from_finite(const std::vector<int>& one_line) {
  std::vector<long long> v(one_line.begin(), one_line.end());
  AffinePerm w = from_window(std::move(v));
  QFOCK_REQUIRE(w.is_finite(), "not a permutation of 1..r");
  return w;
}

long long AffinePerm::apply(long long i) const {
  const int r = rank();
  long long j = emod(i - 1, r) + 1;          // representative in 1..r
  long long t = (i - j) / r;                 // i = j + t*r
  return win_[static_cast<size_t>(j - 1)] + t * r;
}

AffinePerm AffinePerm::inverse() const {
  const int r = rank();
  AffinePerm out;
  out.win_.resize(r);
  for (int j = 1; j <= r; ++j) {
    long long v = win_[j - 1];
    long long res = emod(v, r);
    long long k = (res == 0) ? r : res;      // k in 1..r congruent to v
    long long t = (k - v) / r;               // v + t*r = k, so w^{-1}(k) = j + t*r
    out.win_[static_cast<size_t>(k - 1)] = j + t * r;
  }
  return out;
}

AffinePerm operator*(const AffinePerm& u, const AffinePerm& v) {
  QFOCK_REQUIRE(u.rank() == v.rank(), "rank mismatch");
  AffinePerm out;
  out.win_.resize(u.rank());
  for (int i = 1; i <= u.rank(); ++i)
    out.win_[i - 1] = u.apply(v.apply(i));
  return out;
}

long long AffinePerm::length() const {
  const int r = rank();
  long long len = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      len += std::llabs(floordiv(win_[j] - win_[i], r));
  return len;
}

long long AffinePerm::tau_degree() const {
  long long s = 0;
  for (int i = 1; i <= rank(); ++i) s += win_[i - 1] - i;
  QFOCK_CHECK(s % rank() == 0, "window sum not divisible by rank");
  return s / rank();
}

bool AffinePerm::is_finite() const {
  for (long long v : win_)
    if (v < 1 || v > rank()) return false;
  return true;
}

AffinePerm AffinePerm::underline() const {
  long long a = tau_degree();
  if (a == 0) return *this;
  const int r = rank();
  AffinePerm out;
  out.win_.resize(r);
  // sigma = w * tau^{-a}: sigma(i) = w(i - a)
  for (int i = 1; i <= r; ++i) out.win_[i - 1] = apply(i - a);
  return out;
}

AffinePerm AffinePerm::sharp() const {
  // Conjugation by the reflection i -> 1 - i of Z.
  const int r = rank();
  AffinePerm out;
  out.win_.resize(r);
  for (int i = 1; i <= r; ++i) out.win_[i - 1] = 1 - apply(1 - i);
  return out;
}

bool AffinePerm::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (win_[i - 1] != i) return false;
  return true;
}

bool AffinePerm::has_right_descent(int i) const {
  QFOCK_REQUIRE(i >= 0 && i < rank(), "generator index out of range");
  return apply(i) > apply(i + 1);
}

bool AffinePerm::has_left_descent(int i) const {
  QFOCK_REQUIRE(i >= 0 && i < rank(), "generator index out of range");
  AffinePerm inv = inverse();
  return inv.apply(i) > inv.apply(i + 1);
}

int AffinePerm::first_left_descent() const {
  AffinePerm inv = inverse();
  for (int i = 0; i < rank(); ++i)
    if (inv.apply(i) > inv.apply(i + 1)) return i;
  return -1;
}

std::vector<int> AffinePerm::reduced_word() const {
  QFOCK_REQUIRE(in_affine(), "reduced words only for the non-extended group");
  std::vector<int> word;
  AffinePerm w = *this;
  while (!w.is_identity()) {
    int i = w.first_left_descent();
    QFOCK_CHECK(i >= 0, "non-identity element without left descent");
    word.push_back(i);
    w = s(i, rank()) * w;
  }
  return word;  // w = s_{word[0]} * s_{word[1]} * ... reading left to right
}

std::string AffinePerm::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << win_[i];
  os << "]";
  return os.str();
}

AffinePerm AffinePerm::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  QFOCK_REQUIRE(t.size() >= 2 && t.front() == '[' && t.back() == ']',
                "window parse error");
  t = t.substr(1, t.size() - 2);
  std::vector<long long> v;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = t.find(',', i);
    if (j == std::string::npos) j = t.size();
    try {
      v.push_back(std::stoll(t.substr(i, j - i)));
    } catch (const std::exception&) {
      throw std::invalid_argument("window parse error");
    }
    i = j + 1;
  }
  return from_window(std::move(v));
}

size_t AffinePerm::Hash::operator()(const AffinePerm& w) const {
  size_t h = 1469598103934665603ULL;
  for (long long v : w.window()) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const AffinePerm& w) { return os << w.str(); }

// ---------------------------------------------------------------------------

PointR act_level(const AffinePerm& w, int k, const PointR& p) {
  QFOCK_REQUIRE(k != 0, "level must be nonzero");
  QFOCK_REQUIRE(w.rank() == p.rank(), "rank mismatch");
  const int r = w.rank();
  AffinePerm inv = w.inverse();
  PointR out;
  out.c.resize(r);
  for (int i = 1; i <= r; ++i) {
    long long j = inv.apply(i);
    long long j0 = emod(j - 1, r) + 1;
    long long t = (j - j0) / r;
    out.c[i - 1] = p.c[static_cast<size_t>(j0 - 1)] - t * k;
  }
  return out;
}

namespace {

// One wall-crossing step toward the level-k class domain; -1 when inside.
// For k > 0 the domain is weakly decreasing with spread <= k; for k < 0 its
// coordinate reversal.  Lowest applicable generator index first.
int toward_domain(const PointR& p, int k) {
  const int r = p.rank();
  if (k > 0) {
    if (p.c[0] - p.c[r - 1] > k) {
      bool descending = true;
      for (int i = 0; i + 1 < r; ++i)
        if (p.c[i] < p.c[i + 1]) { descending = false; break; }
      if (descending) return 0;
    }
    for (int i = 0; i + 1 < r; ++i)
      if (p.c[i] < p.c[i + 1]) return i + 1;
    return (p.c[0] - p.c[r - 1] > k) ? 0 : -1;
  }
  const int n = -k;
  if (p.c[r - 1] - p.c[0] > n) {
    bool ascending = true;
    for (int i = 0; i + 1 < r; ++i)
      if (p.c[i] > p.c[i + 1]) { ascending = false; break; }
    if (ascending) return 0;
  }
  for (int i = 0; i + 1 < r; ++i)
    if (p.c[i] > p.c[i + 1]) return i + 1;
  return (p.c[r - 1] - p.c[0] > n) ? 0 : -1;
}

}  // namespace

AffinePerm w_min_underline(const PointR& p, int k) {
  QFOCK_REQUIRE(k != 0, "level must be nonzero");
  const int r = p.rank();
  QFOCK_REQUIRE(r >= 2, "rank must be >= 2");
  AffinePerm w = AffinePerm::identity(r);
  PointR cur = p;
  long long steps = 0;
  while (true) {
    int i = toward_domain(cur, k);
    if (i < 0) break;
    AffinePerm si = AffinePerm::s(i, r);
    cur = act_level(si, k, cur);
    w = w * si;
    ++steps;
    QFOCK_CHECK(steps < (1LL << 32), "domain walk did not terminate");
  }
  QFOCK_CHECK(w.length() == steps, "domain walk produced a non-reduced word");
  return w;
}

AffinePerm w_min_extended(const PointR& p, int k) {
  QFOCK_REQUIRE(k != 0, "level must be nonzero");
  const int r = p.rank();
  AffinePerm w = w_min_underline(p, k);
  PointR cur = act_level(w.inverse(), k, p);
  const AffinePerm t = AffinePerm::tau(r);
  const AffinePerm tinv = t.inverse();
  const int n = std::abs(k);
  long long steps = 0;
  // tau-normalize the lift into the box with entries in [1, n], keeping the
  // invariant cur == act(w^{-1}, p); tau has length zero so minimality is
  // untouched.  act(tau) raises the coordinate sum by k, act(tau^{-1})
  // lowers it.
  while (true) {
    long long lo = *std::min_element(cur.c.begin(), cur.c.end());
    long long hi = *std::max_element(cur.c.begin(), cur.c.end());
    if (lo >= 1 && hi <= n) break;
    bool raise = (k > 0) ? (lo < 1) : (hi > n);
    const AffinePerm& g = raise ? t : tinv;
    cur = act_level(g, k, cur);
    w = w * g.inverse();
    ++steps;
    QFOCK_CHECK(steps < (1LL << 32), "box normalization did not terminate");
  }
  return w;
}

std::pair<AffinePerm, long long> stabilizer_longest(const PointR& nu, int k) {
  QFOCK_REQUIRE(k != 0, "level must be nonzero");
  const int r = nu.rank();
  QFOCK_REQUIRE(toward_domain(nu, k) == -1,
                "point outside the closed fundamental domain");
  const int n = std::abs(k);
  // Simple reflections fixing the class of nu.
  std::vector<bool> in_j(r, false);
  for (int i = 0; i + 1 < r; ++i)
    if (nu.c[i] == nu.c[i + 1]) in_j[i + 1] = true;
  if (k > 0) {
    if (nu.c[0] - nu.c[r - 1] == n) in_j[0] = true;
  } else {
    if (nu.c[r - 1] - nu.c[0] == n) in_j[0] = true;
  }
  int cnt = 0;
  for (bool b : in_j) cnt += b;
  QFOCK_CHECK(cnt < r, "stabilizer parabolic must be proper");

  // Decompose J into cyclically consecutive arcs of generator indices; the
  // longest element reverses the positions each arc acts on.
  AffinePerm w0 = AffinePerm::identity(r);
  long long len = 0;
  std::vector<bool> used(r, false);
  for (int i = 0; i < r; ++i) {
    if (!in_j[i] || used[i]) continue;
    int a = i;
    while (in_j[emod(a - 1, r)] && emod(a - 1, r) != i) a = static_cast<int>(emod(a - 1, r));
    int b = a;
    std::vector<int> arc{a};
    used[a] = true;
    while (in_j[emod(b + 1, r)] && !used[emod(b + 1, r)]) {
      b = static_cast<int>(emod(b + 1, r));
      arc.push_back(b);
      used[b] = true;
    }
    // Arc {a..b} (cyclically, b = a + t) acts on positions a..a+t+1 in Z; its
    // longest element maps a + j to a + t + 1 - j, extended r-periodically.
    int t = static_cast<int>(arc.size()) - 1;
    std::vector<long long> win = w0.window();
    for (int j = 0; j <= t + 1; ++j) {
      long long pos = a + j;                 // position in Z
      long long img = a + (t + 1) - j;
      long long p0 = emod(pos - 1, r) + 1;   // window slot
      long long shift = pos - p0;
      win[static_cast<size_t>(p0 - 1)] = img - shift;
    }
    AffinePerm piece = AffinePerm::from_window(std::move(win));
    // Arcs are disjoint so the pieces commute; accumulate by replacing.
    w0 = piece;
    len += static_cast<long long>(t + 1) * (t + 2) / 2;
  }
  QFOCK_CHECK(w0.length() == len, "stabilizer longest element length mismatch");
  return {w0, len};
}

namespace {

struct PairHash {
  size_t operator()(const std::pair<size_t, size_t>& p) const {
    return p.first * 1000003ULL ^ p.second;
  }
};

std::mutex bruhat_mutex;
std::unordered_map<std::string, bool> bruhat_memo;

std::string pair_key(const AffinePerm& x, const AffinePerm& w) {
  std::string k;
  for (long long v : x.window()) k += std::to_string(v) + ",";
  k += "|";
  for (long long v : w.window()) k += std::to_string(v) + ",";
  return k;
}

bool bruhat_leq_impl(const AffinePerm& x, const AffinePerm& w) {
  if (x == w || x.is_identity()) return true;
  long long lx = x.length(), lw = w.length();
  if (lx > lw) return false;
  if (lw == 0) return false;
  std::string key = pair_key(x, w);
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex);
    auto it = bruhat_memo.find(key);
    if (it != bruhat_memo.end()) return it->second;
  }
  int i = w.first_left_descent();
  AffinePerm si = AffinePerm::s(i, w.rank());
  AffinePerm sw = si * w;
  AffinePerm sx = si * x;
  bool res = sx.length() < lx ? bruhat_leq_impl(sx, sw) : bruhat_leq_impl(x, sw);
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex);
    bruhat_memo.emplace(std::move(key), res);
  }
  return res;
}

}  // namespace

bool bruhat_leq(const AffinePerm& x, const AffinePerm& w) {
  QFOCK_REQUIRE(x.rank() == w.rank(), "rank mismatch");
  QFOCK_REQUIRE(x.in_affine() && w.in_affine(),
                "Bruhat order is defined on the non-extended group");
  return bruhat_leq_impl(x, w);
}

bool is_min_coset_rep(const AffinePerm& w) {
  QFOCK_REQUIRE(w.in_affine(), "coset representatives live in the non-extended group");
  for (int i = 1; i < w.rank(); ++i)
    if (w.has_left_descent(i)) return false;
  return true;
}

std::vector<AffinePerm> finite_symmetric_group(int r) {
  std::vector<int> one_line(r);
  std::iota(one_line.begin(), one_line.end(), 1);
  std::vector<AffinePerm> out;
  do {
    out.push_back(AffinePerm::from_finite(one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

AffinePerm longest_finite(int r) {
  std::vector<long long> win(r);
  for (int i = 0; i < r; ++i) win[i] = r - i;
  return AffinePerm::from_window(std::move(win));
}

}  // namespace qfock
