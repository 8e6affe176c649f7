#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cyclrc/cyclic.hpp"
#include "cyclrc/gf.hpp"
#include "cyclrc/linalg.hpp"

using namespace cyclrc;
using gf::Elem;

TEST_CASE("cyclotomic cosets") {
  auto cosets7 = cyclic::cyclotomic_cosets(7, 2);
  REQUIRE(cosets7.size() == 3);
  CHECK(cosets7[0] == std::vector<std::uint32_t>{0});
  CHECK(cosets7[1] == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(cosets7[2] == std::vector<std::uint32_t>{3, 5, 6});

  // n | q - 1: all singletons
  for (const auto& c : cyclic::cyclotomic_cosets(12, 13)) CHECK(c.size() == 1);

  auto cosets80 = cyclic::cyclotomic_cosets(80, 3);
  auto it = std::find_if(cosets80.begin(), cosets80.end(),
                         [](const auto& c) { return c.front() == 1; });
  REQUIRE(it != cosets80.end());
  CHECK(*it == std::vector<std::uint32_t>{1, 3, 9, 27});

  CHECK_THROWS_AS(cyclic::cyclotomic_cosets(9, 3), std::invalid_argument);
}

TEST_CASE("complete defining set") {
  auto z35 = cyclic::complete_defining_set({1, 15}, 35, 2);
  CHECK(z35.exponents.size() == 15);  // so k = 20
  auto z45 = cyclic::complete_defining_set({1}, 45, 2);
  CHECK(z45.exponents.size() == 12);  // so k = 33
  auto empty = cyclic::complete_defining_set({}, 21, 2);
  CHECK(empty.exponents.empty());
  CHECK_THROWS_AS(cyclic::complete_defining_set({35}, 35, 2), std::invalid_argument);
}

TEST_CASE("code_from_zeros examples") {
  auto f2 = gf::Field::create(2, 1);
  auto c45 = cyclic::code_from_zeros(f2, 45, {0, 3, 5, 9});
  CHECK(c45.k() == 30);
  CHECK(linalg::min_weight(c45.code, std::nullopt, {}, true).weight == 4);

  auto c63 = cyclic::code_from_zeros(f2, 63, {3, 27});
  CHECK(c63.k() == 54);
  CHECK(linalg::min_weight(c63.code, std::nullopt, {}, true).weight == 2);

  auto full = cyclic::code_from_zeros(f2, 15, {});
  CHECK(full.k() == 15);
  CHECK(linalg::min_weight(full.code).weight == 1);
}

TEST_CASE("generator polynomial structure") {
  auto f2 = gf::Field::create(2, 1);
  std::mt19937 rng(3);
  for (std::uint64_t n : {7ull, 9ull, 15ull, 21ull}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint32_t> seeds;
      for (std::uint32_t e = 0; e < n; ++e)
        if (rng() % 3 == 0) seeds.push_back(e);
      auto c = cyclic::code_from_zeros(f2, n, seeds);
      CHECK(c.k() + static_cast<std::size_t>(c.generator_poly.degree()) == n);
      CHECK(c.generator_poly.divides(gf::Poly::xn_minus_one(f2, n)));
      // roots are exactly alpha^i for i in the complete set
      for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<Elem> up(c.generator_poly.coeffs().size());
        for (std::size_t t = 0; t < up.size(); ++t)
          up[t] = c.embedding->embed(c.generator_poly.coeff(t));
        gf::Poly lifted(c.locator, up);
        Elem val = lifted.eval(c.locator->pow(c.alpha, i));
        CHECK((val == 0) == c.zeros.contains(i));
      }
      // cyclic invariance of every generator row
      for (std::size_t row = 0; row < c.k(); ++row)
        CHECK(c.code.contains(cyclic::cyclic_shift(c.code.generator().row_vec(row), 1)));
    }
  }
}

TEST_CASE("bch bound") {
  cyclic::DefiningSet d;
  d.n = 12;
  d.q = 13;
  d.exponents = {1, 2, 3, 4};
  CHECK(cyclic::bch_bound(d) == 5);

  cyclic::DefiningSet empty;
  empty.n = 12;
  empty.q = 13;
  CHECK(cyclic::bch_bound(empty) == 1);

  // step-b progression: {0, 5, 10, 3} mod 12 is a length-4 run with b = 5
  cyclic::DefiningSet step;
  step.n = 12;
  step.q = 13;
  step.exponents = {0, 3, 5, 10};
  CHECK(cyclic::bch_bound(step) >= 5);
}

TEST_CASE("bch bound below the true distance") {
  auto f2 = gf::Field::create(2, 1);
  std::mt19937 rng(5);
  for (std::uint64_t n : {7ull, 9ull, 15ull, 21ull}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint32_t> seeds;
      for (std::uint32_t e = 0; e < n; ++e)
        if (rng() % 3 == 0) seeds.push_back(e);
      auto c = cyclic::code_from_zeros(f2, n, seeds);
      if (c.k() == 0) continue;
      CHECK(cyclic::bch_bound(c.zeros) <= linalg::min_weight(c.code).weight);
    }
  }
}

TEST_CASE("dual defining set and dual code") {
  auto f2 = gf::Field::create(2, 1);
  auto c = cyclic::code_from_zeros(f2, 21, {0, 1, 7});
  auto dual_cyc = cyclic::dual_cyclic(c);
  CHECK(dual_cyc.k() == 9);
  CHECK(cyclic::coset_representatives(dual_cyc.zeros) == std::vector<std::uint32_t>{1, 3, 9});
  CHECK(dual_cyc.code.same_row_space(linalg::dual(c.code)));
}

TEST_CASE("subfield subcode") {
  auto f2 = gf::Field::create(2, 1);
  auto f64 = gf::Field::create(2, 6);

  // over GF(2^6), zeros {3, 27}: the closure over GF(2) has 9 exponents
  auto big = cyclic::code_from_zeros(f64, 63, {3, 27});
  CHECK(big.k() == 61);
  auto sub = cyclic::subfield_subcode(big, 2);
  CHECK(sub.symbol->order() == 2);
  CHECK(sub.k() == 54);

  // already closed: the subcode keeps the defining set
  auto f4 = gf::Field::create(2, 2);
  auto closed = cyclic::code_from_zeros(f4, 5, {1, 2, 3, 4});
  auto sub2 = cyclic::subfield_subcode(closed, 2);
  CHECK(sub2.zeros.exponents == closed.zeros.exponents);
  CHECK(sub2.k() == 1);

  // m = 1: the subcode is the code itself
  auto f13 = gf::Field::create(13, 1);
  auto rs = cyclic::code_from_zeros(f13, 12, {1, 2, 3, 4, 7, 10});
  auto sub3 = cyclic::subfield_subcode(rs, 13);
  CHECK(sub3.code.same_row_space(rs.code));
}

TEST_CASE("trace code") {
  auto f2 = gf::Field::create(2, 1);
  auto f4 = gf::Field::create(2, 2);
  auto m = gf::subfield_map(f2, f4);

  // the GF(2)-span {000, 111} lifted to GF(4) traces back to itself
  linalg::LinearCode span(f4, 3, {{1, 1, 1}});
  auto traced = cyclic::trace_code(span, *m);
  linalg::LinearCode expect(f2, 3, {{1, 1, 1}});
  CHECK(traced.same_row_space(expect));

  // zero code
  linalg::LinearCode zero(f4, 4, {});
  CHECK(cyclic::trace_code(zero, *m).k() == 0);
}

TEST_CASE("Delsarte duality on random cyclic codes") {
  auto f2 = gf::Field::create(2, 1);
  std::mt19937 rng(9);
  int trials = 0;
  while (trials < 50) {
    std::uint64_t n = std::vector<std::uint64_t>{7, 9, 15, 21}[rng() % 4];
    std::vector<std::uint32_t> seeds;
    for (std::uint32_t e = 0; e < n; ++e)
      if (rng() % 2 == 0) seeds.push_back(e);
    if (seeds.empty() || seeds.size() == n) continue;
    ++trials;
    const std::uint64_t m = gf::nt::mul_order_mod(2, n);
    auto big_field = gf::Field::create(2, static_cast<std::uint32_t>(m));
    auto big = cyclic::code_from_zeros(big_field, n, seeds);
    auto sub = cyclic::subfield_subcode(big, 2);
    auto lhs = linalg::dual(sub.code);
    auto rhs = cyclic::trace_code(linalg::dual(big.code), *gf::subfield_map(f2, big_field));
    CHECK(lhs.same_row_space(rhs));
  }
}

TEST_CASE("trace does not increase weight") {
  auto f2 = gf::Field::create(2, 1);
  auto f64 = gf::Field::create(2, 6);
  auto m = gf::subfield_map(f2, f64);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> v(21);
    for (auto& e : v) e = rng() % 64;
    Elem gamma = rng() % 64;
    std::vector<Elem> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = f64->mul(gamma, v[i]);
    auto y = m->trace(scaled);
    std::size_t wv = 0, wy = 0;
    for (Elem e : v) wv += e != 0;
    for (Elem e : y) wy += e != 0;
    CHECK(wy <= wv);
  }
}

TEST_CASE("irreducible codes") {
  auto simplex = cyclic::irreducible_code(2, 7);
  CHECK(simplex.n() == 7);
  CHECK(simplex.k() == 3);
  CHECK(linalg::min_weight(simplex).weight == 4);

  auto triple = cyclic::irreducible_code(2, 21, 7);
  CHECK(triple.n() == 21);
  CHECK(triple.k() == 3);
  CHECK(linalg::min_weight(triple).weight == 12);

  auto two_weight = cyclic::irreducible_code(3, 40);
  CHECK(two_weight.n() == 40);
  CHECK(two_weight.k() == 4);
  auto dist = linalg::weight_distribution(two_weight);
  CHECK(dist.counts ==
        std::map<std::size_t, std::uint64_t>{{0, 1}, {24, 40}, {30, 40}});

  CHECK_THROWS_AS(cyclic::irreducible_code(2, 21, 5), std::invalid_argument);  // 5 does not divide 21
}

TEST_CASE("binary irreducible codes of full length are constant weight") {
  for (std::uint64_t z : {2ull, 3ull, 4ull}) {
    const std::uint64_t s = (1ull << z) - 1;
    auto code = cyclic::irreducible_code(2, s);
    CHECK(code.k() == z);
    auto dist = linalg::weight_distribution(code);
    REQUIRE(dist.counts.size() == 2);
    CHECK(dist.counts.at(1ull << (z - 1)) == s);
  }
}

TEST_CASE("cyclic shift helper") {
  std::vector<Elem> v{1, 2, 3, 0};
  CHECK(cyclic::cyclic_shift(v, 1) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(cyclic::cyclic_shift(v, 4) == v);
}
