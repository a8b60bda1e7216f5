#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qfock/partition.hpp"

using qfock::Partition;
namespace oracle = qfock::test_oracles;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

std::vector<Partition> small_partitions(int max_m) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_m; ++m)
    for (const auto& p : qfock::partitions_of(m, m)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(P("6,2,1").parts() == std::vector<long long>{6, 2, 1});
  CHECK(P("[]").empty());
  CHECK(P("").empty());
  CHECK(P("6,2,1").str() == "6,2,1");
  CHECK(P("[]").str() == "[]");
  CHECK_THROWS_AS(P("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(P("0"), std::invalid_argument);
  CHECK_THROWS_AS(P("2,,1"), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
  CHECK(P("6,2,1").conjugate() == P("3,2,1,1,1,1"));
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(P("5").conjugate() == P("1,1,1,1,1"));
}

TEST_CASE("conjugate is an involution and reverses dominance") {
  for (const auto& a : small_partitions(7)) {
    CHECK(a.conjugate().conjugate() == a);
    for (const auto& b : small_partitions(7)) {
      if (a.size() != b.size()) continue;
      CHECK(qfock::dominance_leq(a, b) ==
            qfock::dominance_leq(b.conjugate(), a.conjugate()));
    }
  }
}

TEST_CASE("dominance examples") {
  CHECK(qfock::dominance_leq(P("1,1,1"), P("3")));
  CHECK_FALSE(qfock::dominance_leq(P("3"), P("1,1,1")));
  CHECK(qfock::dominance_leq(P("2,2"), P("3,1")));
  CHECK_THROWS_AS(qfock::dominance_leq(P("2"), P("1,1,1")), std::invalid_argument);
}

TEST_CASE("n-regularity") {
  CHECK(P("12,6,3").is_n_regular(3));
  CHECK_FALSE(P("1,1,1").is_n_regular(3));
  CHECK(Partition{}.is_n_regular(2));
  CHECK(Partition{}.is_n_regular(5));
  // regular and restricted are exchanged by conjugation
  for (const auto& p : small_partitions(8))
    for (int n : {2, 3, 4})
      CHECK(p.is_n_regular(n) == p.conjugate().is_n_restricted(n));
}

TEST_CASE("restricted decomposition golden example") {
  auto d = P("6,2,1").restricted_decomp(3, 3);
  CHECK(d.mu0 == std::vector<long long>{3, 2, 1});
  CHECK(d.mu1 == std::vector<long long>{1, 0, 0});
}

TEST_CASE("restricted decomposition properties") {
  // any n-restricted partition decomposes as (itself, 0)
  auto d = P("2,1,1").restricted_decomp(3, 4);
  CHECK(d.mu0 == std::vector<long long>{2, 1, 1, 0});
  CHECK(d.mu1 == std::vector<long long>{0, 0, 0, 0});
  auto d2 = P("3").restricted_decomp(3, 1);
  CHECK(d2.mu0 == std::vector<long long>{0});
  CHECK(d2.mu1 == std::vector<long long>{1});

  for (const auto& p : small_partitions(9)) {
    for (int n : {2, 3}) {
      int r = std::max(p.length(), 1);
      auto dec = p.restricted_decomp(n, r);
      auto padded = p.pad_to(r);
      // reconstruction, component monotonicity, restrictedness of mu0
      for (int i = 0; i < r; ++i)
        CHECK(dec.mu0[i] + n * dec.mu1[i] == padded[i]);
      for (int i = 0; i + 1 < r; ++i) {
        CHECK(dec.mu0[i] >= dec.mu0[i + 1]);
        CHECK(dec.mu1[i] >= dec.mu1[i + 1]);
        CHECK(dec.mu0[i] - dec.mu0[i + 1] < n);
      }
      CHECK(dec.mu0[r - 1] >= 0);
      CHECK(dec.mu0[r - 1] < n);

      // uniqueness against brute-force enumeration of splittings
      int found = 0;
      std::vector<long long> m0(r), m1(r);
      auto try_all = [&](auto&& self, int i) -> void {
        if (i == r) {
          for (int j = 0; j + 1 < r; ++j)
            if (m0[j] < m0[j + 1] || m0[j] - m0[j + 1] >= n || m1[j] < m1[j + 1])
              return;
          if (m0[r - 1] >= n) return;
          ++found;
          return;
        }
        for (long long a = 0; a <= padded[i]; ++a)
          if ((padded[i] - a) % n == 0) {
            m0[i] = a;
            m1[i] = (padded[i] - a) / n;
            self(self, i + 1);
          }
      };
      if (p.size() <= 6) {
        try_all(try_all, 0);
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("hat golden examples") {
  CHECK(P("6,2,1").hat(3, 3) == P("12,6,3"));
  CHECK(Partition{}.hat(3, 3) == P("8,4"));
  CHECK(P("6,2,1").hat(3, 3).size() == 9 + 2 * 3 * 2);  // m'' = 21
}

TEST_CASE("tilde golden examples") {
  CHECK(P("6,2,1").tilde(3, 3) == P("10,6,5"));
  CHECK(P("8,1").tilde(3, 3) == P("12,5,4"));
  CHECK(Partition{}.tilde(2, 2) == P("1,1"));
}

TEST_CASE("hat and tilde sizes and regularity") {
  for (const auto& p : small_partitions(8)) {
    for (int n : {2, 3}) {
      for (int r : {2, 3, 4}) {
        if (p.length() > r) continue;
        auto h = p.hat(n, r);
        auto t = p.tilde(n, r);
        long long grow = static_cast<long long>(n - 1) * r * (r - 1);
        CHECK(h.size() == p.size() + grow);
        CHECK(t.size() == p.size() + grow);
        CHECK(h.is_n_regular(n));
        // pairwise distinct parts
        for (int i = 1; i < h.length(); ++i) CHECK(h.part(i) > h.part(i + 1));
      }
    }
  }
  CHECK_THROWS_AS(P("1,1,1").hat(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(P("1,1,1").tilde(2, 2), std::invalid_argument);
}

TEST_CASE("n-core examples") {
  CHECK(P("1").n_core(2) == P("1"));
  CHECK(P("1").n_core(5) == P("1"));
  CHECK(P("2,1").n_core(3) == Partition{});
  CHECK(P("6,2,1").n_core(3) == P("7,1,1").n_core(3));
}

TEST_CASE("n-core matches rim-hook peeling in every order") {
  for (const auto& p : small_partitions(9)) {
    for (int n : {2, 3, 4}) {
      Partition core = p.n_core(n);
      for (unsigned seed : {1u, 2u, 3u, 17u})
        CHECK(oracle::peel_core(p, n, seed) == core);
      CHECK(core.n_core(n) == core);  // idempotent
      CHECK(oracle::rim_hook_removals(core, n).empty());
    }
  }
}

TEST_CASE("pad_to rejects long partitions") {
  CHECK(P("2,1").pad_to(4) == std::vector<long long>{2, 1, 0, 0});
  CHECK_THROWS_AS(P("2,1,1").pad_to(2), std::invalid_argument);
}

TEST_CASE("partition listing is revlex and extends dominance") {
  auto l9 = qfock::partitions_of(9, 9);
  CHECK(l9.size() == 30);  // number of partitions of 9
  CHECK(l9.front() == P("9"));
  CHECK(l9.back() == P("1,1,1,1,1,1,1,1,1"));
  for (size_t i = 0; i + 1 < l9.size(); ++i) CHECK(qfock::revlex_less(l9[i], l9[i + 1]));
  for (const auto& a : l9)
    for (const auto& b : l9)
      if (a != b && qfock::dominance_leq(a, b)) CHECK(qfock::revlex_less(b, a));
  CHECK(qfock::partitions_of(9, 3).size() == 12);
  CHECK(qfock::partitions_of(0, 0).size() == 1);
}

TEST_CASE("rho and plus_rho") {
  CHECK(qfock::rho(3) == std::vector<long long>{2, 1, 0});
  CHECK(qfock::plus_rho(P("6,2,1"), 3) == std::vector<long long>{8, 3, 1});
  CHECK(qfock::plus_rho(P("2"), 2) == std::vector<long long>{3, 0});
}
