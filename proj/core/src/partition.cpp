#include "qfock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qfock {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    QFOCK_REQUIRE(parts_[i] > 0, "partition parts must be positive");
    QFOCK_REQUIRE(i == 0 || parts_[i - 1] >= parts_[i],
                  "partition parts must be weakly decreasing");
  }
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Partition::part(int i) const {
  QFOCK_REQUIRE(i >= 1, "part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<long long> out(static_cast<size_t>(parts_[0]), 0);
  for (long long p : parts_)
    for (long long j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool Partition::is_n_regular(int n) const {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  for (size_t i = 0; i + n - 1 < parts_.size(); ++i)
    if (parts_[i] == parts_[i + n - 1]) return false;
  return true;
}

bool Partition::is_n_restricted(int n) const {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  for (size_t i = 0; i < parts_.size(); ++i) {
    long long next = (i + 1 < parts_.size()) ? parts_[i + 1] : 0;
    if (parts_[i] - next >= n) return false;
  }
  return true;
}

std::vector<long long> Partition::pad_to(int r) const {
  QFOCK_REQUIRE(length() <= r, "partition has more than r parts");
  std::vector<long long> v = parts_;
  v.resize(r, 0);
  return v;
}

Partition::RestrictedDecomp Partition::restricted_decomp(int n, int r) const {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  std::vector<long long> p = pad_to(r);
  // Build mu0 bottom-up from the consecutive differences reduced mod n; the
  // virtual (r+1)-th part 0 makes the splitting unique.
  std::vector<long long> mu0(r, 0);
  for (int i = r - 1; i >= 0; --i) {
    long long next = (i + 1 < r) ? p[i + 1] : 0;
    long long next0 = (i + 1 < r) ? mu0[i + 1] : 0;
    mu0[i] = next0 + (p[i] - next) % n;
  }
  std::vector<long long> mu1(r, 0);
  for (int i = 0; i < r; ++i) {
    long long d = p[i] - mu0[i];
    QFOCK_CHECK(d >= 0 && d % n == 0, "restricted decomposition failed");
    mu1[i] = d / n;
  }
  for (int i = 0; i + 1 < r; ++i)
    QFOCK_CHECK(mu1[i] >= mu1[i + 1], "mu1 not weakly decreasing");
  return {std::move(mu0), std::move(mu1)};
}

Partition Partition::hat(int n, int r) const {
  auto [mu0, mu1] = restricted_decomp(n, r);
  std::vector<long long> out(r);
  for (int i = 0; i < r; ++i)
    out[i] = 2LL * (n - 1) * (r - 1 - i) + mu0[r - 1 - i] + n * mu1[i];
  Partition h(std::move(out));
  for (int i = 0; i + 1 < h.length(); ++i)
    QFOCK_CHECK(h.parts()[i] > h.parts()[i + 1], "hat parts must be distinct");
  return h;
}

Partition Partition::tilde(int n, int r) const {
  std::vector<long long> out = pad_to(r);
  for (auto& x : out) x += static_cast<long long>(n - 1) * (r - 1);
  return Partition(std::move(out));
}

Partition Partition::n_core(int n) const {
  QFOCK_REQUIRE(n >= 2, "n must be >= 2");
  if (parts_.empty()) return {};
  const int L = length();
  // First-column hook lengths as beta numbers; sliding every bead down its
  // runner is the order-independent form of rim-hook removal.
  std::vector<long long> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = parts_[i] + (L - 1 - i);
  std::vector<int> count(n, 0);
  for (long long b : beta) ++count[static_cast<int>(b % n)];
  std::vector<long long> slid;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < count[c]; ++k) slid.push_back(c + static_cast<long long>(k) * n);
  std::sort(slid.rbegin(), slid.rend());
  std::vector<long long> out(L);
  for (int i = 0; i < L; ++i) out[i] = slid[i] - (L - 1 - i);
  return Partition(std::move(out));
}

std::string Partition::str() const {
  if (parts_.empty()) return "[]";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "[]") return {};
  std::vector<long long> v;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = t.find(',', i);
    if (j == std::string::npos) j = t.size();
    QFOCK_REQUIRE(j > i, "partition parse error");
    long long part = 0;
    try {
      part = std::stoll(t.substr(i, j - i));
    } catch (const std::exception&) {
      throw std::invalid_argument("partition parse error");
    }
    QFOCK_REQUIRE(part > 0, "partition parts must be positive");
    v.push_back(part);
    i = j + 1;
  }
  return Partition(std::move(v));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  QFOCK_REQUIRE(a.size() == b.size(), "dominance requires equal sizes");
  long long sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

bool revlex_less(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();  // descending lexicographic listing
}

namespace {

void gen_partitions(long long m, long long max_part, int max_len,
                    std::vector<long long>& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (long long p = std::min(m, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(m - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long long m, int max_len) {
  QFOCK_REQUIRE(m >= 0, "negative size");
  std::vector<Partition> out;
  std::vector<long long> cur;
  gen_partitions(m, m, max_len, cur, out);
  return out;  // the recursion emits in revlex order already
}

std::vector<long long> rho(int r) {
  QFOCK_REQUIRE(r >= 1, "rank must be positive");
  std::vector<long long> v(r);
  for (int i = 0; i < r; ++i) v[i] = r - 1 - i;
  return v;
}

std::vector<long long> plus_rho(const Partition& p, int r) {
  std::vector<long long> v = p.pad_to(r);
  for (int i = 0; i < r; ++i) v[i] += r - 1 - i;
  return v;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

}  // namespace qfock
