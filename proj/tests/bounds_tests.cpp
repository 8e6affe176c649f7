#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "cyclrc/bounds.hpp"
#include "cyclrc/linalg.hpp"
#include "cyclrc/lrc.hpp"

using namespace cyclrc;

TEST_CASE("singleton_like") {
  CHECK(bounds::singleton_like(12, 6, 2) == 5);
  // r = k gives the classical Singleton bound
  CHECK(bounds::singleton_like(15, 4, 4) == 12);
  // with r | k the ceil form equals n - k(r+1)/r + 2
  for (std::uint64_t r = 1; r <= 4; ++r)
    for (std::uint64_t mu = 1; mu <= 3; ++mu) {
      std::uint64_t k = mu * r, n = 4 * (r + 1) * mu;
      CHECK(bounds::singleton_like(n, k, r) ==
            static_cast<long long>(n - k * (r + 1) / r + 2));
    }
  CHECK_THROWS_AS(bounds::singleton_like(5, 6, 2), std::invalid_argument);
}

TEST_CASE("kq_upper analytic fallback") {
  CHECK(bounds::kq_upper(2, 18, 4) == 12);  // via (17, 3) sphere packing
  CHECK(bounds::kq_upper(2, 11, 3) == 7);
  CHECK(bounds::kq_upper(2, 9, 1) == 9);
  CHECK(bounds::kq_upper(5, 7, 1) == 7);
  CHECK(bounds::kq_upper(2, 3, 5) == 0);   // n < d
  CHECK(bounds::kq_upper(2, 0, 4) == 0);
  CHECK(bounds::kq_upper(3, 80, 3) == 75); // big-integer path
}

TEST_CASE("kq table lookup and monotonicity") {
  bounds::KqTable t;
  t.insert(2, 10, 3, 5);
  CHECK(bounds::kq_upper(2, 10, 3, &t) == 5);
  CHECK(bounds::kq_upper(2, 11, 3, &t) == 7);  // falls through

  char path[] = "/tmp/cyclrc_kq_XXXXXX";
  int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  {
    std::ofstream out(path);
    out << "q,n,d,k\n2,10,3,5\n2,11,3,6\n2,10,4,4\n";
  }
  auto loaded = bounds::KqTable::load_csv(path);
  CHECK(loaded.size() == 3);
  CHECK(*loaded.lookup(2, 10, 3) == 5);

  {
    std::ofstream out(path);
    out << "q,n,d,k\n2,10,3,5\n2,11,3,4\n";  // k(n+1, d) < k(n, d)
  }
  CHECK_THROWS_AS(bounds::KqTable::load_csv(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "n,q,d,k\n";
  }
  CHECK_THROWS_AS(bounds::KqTable::load_csv(path), std::invalid_argument);
  std::remove(path);
  CHECK_THROWS_AS(bounds::KqTable::load_csv(path), std::invalid_argument);
}

TEST_CASE("shortening bound reproduces the published values") {
  CHECK(bounds::shortening_bound(2, 45, 4, 8).k_bound == 36);
  CHECK(bounds::shortening_bound(2, 45, 4, 8).t_min == 3);
  CHECK(bounds::shortening_bound(2, 35, 3, 3).k_bound == 25);
  CHECK(bounds::shortening_bound(2, 21, 4, 5).k_bound == 14);
  CHECK(bounds::shortening_bound(2, 45, 3, 7).k_bound == 37);
}

TEST_CASE("shortening bound monotonicity") {
  for (std::uint64_t n : {10ull, 21ull, 35ull, 63ull}) {
    for (std::uint64_t r = 1; r <= 6; ++r) {
      if (r + 1 > n) continue;
      for (std::uint64_t d = 1; d <= 6; ++d) {
        auto cur = bounds::shortening_bound(2, n, d, r).k_bound;
        CHECK(bounds::shortening_bound(2, n, d + 1, r).k_bound <= cur);
        if (r + 2 <= n)
          CHECK(bounds::shortening_bound(2, n, d, r + 1).k_bound >= cur);
      }
    }
  }
}

TEST_CASE("krawtchouk values") {
  for (std::uint64_t x = 0; x <= 10; ++x) CHECK(bounds::krawtchouk(10, 2, 0, x) == 1);
  CHECK(bounds::krawtchouk(10, 2, 1, 0) == 10);
  CHECK(bounds::krawtchouk(10, 3, 1, 0) == 20);
  // row sum identity at x = 0: sum_k K_k(0) = q^n
  mpz_class total = 0;
  for (std::uint64_t k = 0; k <= 5; ++k) total += bounds::krawtchouk(5, 2, k, 0);
  CHECK(total == 32);
}

TEST_CASE("krawtchouk agrees with generating-function extraction") {
  // K_k(x) = [z^k] (1 + (q-1)z)^(n-x) (1 - z)^x
  for (std::uint64_t q : {2ull, 3ull}) {
    for (std::uint64_t n = 1; n <= 20; n += 3) {
      for (std::uint64_t x = 0; x <= n; x += 2) {
        std::vector<mpz_class> poly{1};
        auto mul_binom = [&](long a) {  // multiply by (1 + a z)
          std::vector<mpz_class> next(poly.size() + 1, 0);
          for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * a;
          }
          poly = std::move(next);
        };
        for (std::uint64_t i = 0; i < n - x; ++i) mul_binom(static_cast<long>(q - 1));
        for (std::uint64_t i = 0; i < x; ++i) mul_binom(-1);
        for (std::uint64_t k = 0; k <= n; ++k)
          CHECK(bounds::krawtchouk(n, q, k, x) == poly[k]);
      }
    }
  }
}

TEST_CASE("lp bound reproduces the published values") {
  auto lp1 = bounds::lp_bound(2, 45, 4, 8);
  CHECK(lp1.k_bound == 38);
  CHECK(lp1.log_q == doctest::Approx(38.48).epsilon(0.001));
  CHECK(bounds::lp_bound(2, 35, 3, 3).k_bound == 29);
  CHECK(bounds::lp_bound(2, 45, 3, 7).k_bound == 39);
  CHECK(bounds::lp_bound(2, 21, 4, 5).k_bound == 15);
}

TEST_CASE("lp bound never tightens when the locality constraints relax") {
  const std::uint64_t n = 10, d = 3;
  auto loose = bounds::lp_bound(2, n, d, n - 1);
  REQUIRE(loose.feasible);
  for (std::uint64_t r : {1ull, 2ull, 4ull, 6ull}) {
    auto tight = bounds::lp_bound(2, n, d, r);
    REQUIRE(tight.feasible);
    CHECK(loose.optimum >= tight.optimum);
  }
}

TEST_CASE("lp bound input validation") {
  CHECK_THROWS_AS(bounds::lp_bound(2, 10, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(bounds::lp_bound(2, 10, 11, 3), std::invalid_argument);
  CHECK_THROWS_AS(bounds::lp_bound(2, 10, 3, 10), std::invalid_argument);
}

TEST_CASE("constructed codes satisfy all three bounds") {
  auto built = lrc::thm31_construct(13, 12, 6, 2, 0, 1, 0);
  auto d = linalg::min_weight(built.code).weight;
  CHECK(static_cast<long long>(d) == bounds::singleton_like(12, 6, 2));
  CHECK(static_cast<long long>(built.k()) <= bounds::shortening_bound(13, 12, d, 2).k_bound);
  CHECK(static_cast<long long>(built.k()) <= bounds::lp_bound(13, 12, d, 2).k_bound);
}
