#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "cyclrc/gf.hpp"

using namespace cyclrc;
using gf::Elem;

TEST_CASE("field_create basics") {
  auto f2 = gf::Field::create(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->add(1, 1) == 0);
  CHECK(f2->mul(1, 1) == 1);

  auto f64 = gf::Field::create(2, 6);
  CHECK(f64->order() == 64);
  CHECK(f64->m() == 6);

  auto f81 = gf::Field::create(3, 4);
  CHECK(f81->order() == 81);
  CHECK(f81->p() == 3);

  CHECK_THROWS_AS(gf::Field::create(6, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(gf::Field::create(2, 21), std::invalid_argument);  // over the cap
  // x^2 + 1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(gf::Field::create(2, 2, std::vector<Elem>{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gf::Field::of_order(12), std::invalid_argument);
}

TEST_CASE("field determinism and caching") {
  auto a = gf::Field::create(2, 6);
  auto b = gf::Field::create(2, 6);
  CHECK(a.get() == b.get());
  auto c = gf::Field::create(2, 6, a->modulus());
  CHECK(c.get() == a.get());
}

TEST_CASE("exhaustive inverse and generator enumeration") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {13, 1},
                      {2, 6},
                      {3, 4},
                      {2, 12}}) {
    auto f = gf::Field::create(p, m);
    const std::uint64_t q = f->order();
    std::vector<bool> seen(q, false);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      CHECK_FALSE(seen[cur]);
      seen[cur] = true;
      cur = f->mul(cur, f->generator());
    }
    CHECK(cur == 1);  // generator power cycle closes exactly at q-1
    for (std::uint64_t a = 1; a < q; ++a) {
      Elem inv = f->inv(static_cast<Elem>(a));
      CHECK(f->mul(static_cast<Elem>(a), inv) == 1);
    }
  }
}

TEST_CASE("root_of_unity") {
  auto f2 = gf::Field::create(2, 1);
  CHECK(gf::root_of_unity(f2, 1).code() == 1);

  auto f64 = gf::Field::create(2, 6);
  CHECK(gf::root_of_unity(f64, 63).code() == f64->generator());

  auto f4096 = gf::Field::create(2, 12);
  auto alpha = gf::root_of_unity(f4096, 45);
  CHECK(f4096->pow(alpha.code(), 45) == 1);
  CHECK(f4096->pow(alpha.code(), 9) != 1);
  CHECK(f4096->pow(alpha.code(), 15) != 1);

  CHECK_THROWS_AS(gf::root_of_unity(f64, 5), std::invalid_argument);  // 5 does not divide 63
}

TEST_CASE("root of unity power orders") {
  auto f = gf::Field::create(2, 12);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t n = 45;
    auto alpha = gf::root_of_unity(f, n);
    std::uint64_t k = rng() % 100 + 1;
    Elem powk = f->pow(alpha.code(), k);
    std::uint64_t expect_order = n / std::gcd(n, k);
    CHECK(f->pow(powk, expect_order) == 1);
    for (std::uint64_t ell : gf::nt::distinct_prime_factors(expect_order))
      CHECK(f->pow(powk, expect_order / ell) != 1);
  }
}

TEST_CASE("trace examples and tower composition") {
  auto f2 = gf::Field::create(2, 1);
  auto f4 = gf::Field::create(2, 2);
  auto m42 = gf::subfield_map(f2, f4);
  // T(x) = x + x^2
  CHECK(m42->trace(1) == 0);
  for (Elem x = 0; x < 4; ++x) {
    Elem direct = f4->add(x, f4->mul(x, x));
    CHECK(m42->trace(x) == m42->project(direct));
  }
  // omega with omega^2 + omega + 1 = 0 has trace 1
  Elem omega = f4->generator();
  CHECK(m42->trace(omega) == 1);

  auto f64 = gf::Field::create(2, 6);
  auto f4096 = gf::Field::create(2, 12);
  auto m12_1 = gf::subfield_map(f2, f4096);
  auto m12_6 = gf::subfield_map(f64, f4096);
  auto m6_1 = gf::subfield_map(f2, f64);
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Elem x = rng() % 4096;
    CHECK(m12_1->trace(x) == m6_1->trace(m12_6->trace(x)));
  }
}

TEST_CASE("trace is small-field linear") {
  struct Pair {
    std::uint32_t sp, sm, bp, bm;
  };
  for (auto pr : {Pair{2, 1, 2, 2}, Pair{2, 3, 2, 6}, Pair{3, 1, 3, 4}, Pair{2, 2, 2, 6}}) {
    auto small = gf::Field::create(pr.sp, pr.sm);
    auto big = gf::Field::create(pr.bp, pr.bm);
    auto map = gf::subfield_map(small, big);
    std::mt19937 rng(23);
    for (int i = 0; i < 1000; ++i) {
      Elem a = rng() % small->order(), b = rng() % small->order();
      Elem x = rng() % big->order(), y = rng() % big->order();
      Elem lhs = map->trace(big->add(big->mul(map->embed(a), x), big->mul(map->embed(b), y)));
      Elem rhs = small->add(small->mul(a, map->trace(x)), small->mul(b, map->trace(y)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("trace lands in the embedded subfield") {
  auto f8 = gf::Field::create(2, 3);
  auto f64 = gf::Field::create(2, 6);
  auto m = gf::subfield_map(f8, f64);
  for (Elem x = 0; x < 64; ++x) {
    Elem t = m->trace(x);  // project() inside would throw otherwise
    CHECK(t < 8);
    // fixed by the small-field Frobenius: T(x^q) = T(x)
    CHECK(m->trace(f64->pow(x, 8)) == t);
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  auto f4 = gf::Field::create(2, 2);
  auto f16 = gf::Field::create(2, 4);
  auto m = gf::subfield_map(f4, f16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(m->embed(f4->add(a, b)) == f16->add(m->embed(a), m->embed(b)));
      CHECK(m->embed(f4->mul(a, b)) == f16->mul(m->embed(a), m->embed(b)));
    }
  CHECK(m->embed(0) == 0);
  CHECK(m->embed(1) == 1);
}

TEST_CASE("geometric_root_sum") {
  auto f16 = gf::Field::create(2, 4);
  gf::FieldElement one(f16, 1);
  CHECK(gf::geometric_root_sum(one, 5).code() == 1);  // 5 mod 2
  CHECK(gf::geometric_root_sum(one, 4).code() == 0);  // 4 mod 2
  auto alpha = gf::root_of_unity(f16, 5);
  CHECK(gf::geometric_root_sum(alpha, 5).code() == 0);
  CHECK(gf::geometric_root_sum(alpha, 15).code() == 0);  // order divides n, alpha != 1
  gf::FieldElement bad(f16, f16->generator());
  CHECK_THROWS_AS(gf::geometric_root_sum(bad, 5), std::invalid_argument);
}

TEST_CASE("geometric_root_sum matches term-by-term summation") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 6}, {3, 4}, {5, 2}, {7, 1}}) {
    auto f = gf::Field::create(p, m);
    for (std::uint64_t n = 1; n < f->order(); ++n) {
      if ((f->order() - 1) % n != 0) continue;
      for (std::uint64_t j = 0; j < n; ++j) {
        Elem alpha = f->pow(gf::root_of_unity(f, n).code(), j);
        Elem direct = 0, cur = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
          direct = f->add(direct, cur);
          cur = f->mul(cur, alpha);
        }
        CHECK(gf::geometric_root_sum({f, alpha}, n).code() == direct);
      }
    }
  }
}

TEST_CASE("cross-field element operations are errors") {
  auto f16a = gf::Field::create(2, 4);
  auto f16b = gf::Field::create(2, 4, std::vector<Elem>{1, 0, 0, 1, 1});  // x^4 + x^3 + 1
  REQUIRE(f16a.get() != f16b.get());
  gf::FieldElement a(f16a, 3), b(f16b, 3);
  CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  gf::FieldElement c(f16a, 5);
  CHECK((a + c).code() == f16a->add(3, 5));
}

TEST_CASE("polynomials") {
  auto f = gf::Field::create(13, 1);
  gf::Poly x2p1(f, {1, 0, 1});
  gf::Poly xp5(f, {5, 1});
  auto prod = x2p1 * xp5;
  CHECK(prod.degree() == 3);
  auto [quot, rem] = prod.divmod(xp5);
  CHECK(quot == x2p1);
  CHECK(rem.is_zero());
  CHECK(xp5.divides(prod));
  CHECK_FALSE(gf::Poly(f, {1, 1}).divides(prod));

  auto xn1 = gf::Poly::xn_minus_one(f, 12);
  CHECK(xn1.degree() == 12);
  CHECK(xn1.eval(1) == 0);
  // the alpha^i are exactly the roots of x^12 - 1 over GF(13)
  auto alpha = gf::root_of_unity(f, 12);
  for (int i = 0; i < 12; ++i) CHECK(xn1.eval(f->pow(alpha.code(), i)) == 0);
}

TEST_CASE("subfield map rejects incompatible fields") {
  auto f4 = gf::Field::create(2, 2);
  auto f8 = gf::Field::create(2, 3);
  CHECK_THROWS_AS(gf::SubfieldMap(f4, f8), std::invalid_argument);  // 2 does not divide 3
  auto f9 = gf::Field::create(3, 2);
  CHECK_THROWS_AS(gf::SubfieldMap(f4, f9), std::invalid_argument);  // characteristic differs
}
