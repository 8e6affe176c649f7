#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cyclrc/bounds.hpp"
#include "cyclrc/cyclic.hpp"
#include "cyclrc/gf.hpp"
#include "cyclrc/linalg.hpp"

using namespace cyclrc;
using gf::Elem;
using linalg::LinearCode;
using linalg::Matrix;

namespace {

LinearCode random_code(std::mt19937& rng, std::uint64_t q, std::size_t n, std::size_t k) {
  auto f = gf::Field::of_order(q);
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
  for (auto& row : rows)
    for (auto& e : row) e = rng() % q;
  return LinearCode(f, n, rows);
}

// independent oracle: plain odometer over all messages, matrix-vector encode
std::size_t brute_min_weight(const LinearCode& c) {
  const auto& f = c.field();
  const std::uint64_t q = f->order();
  std::vector<Elem> msg(c.k(), 0);
  std::size_t best = SIZE_MAX;
  while (true) {
    std::size_t i = 0;
    while (i < c.k() && msg[i] == q - 1) msg[i++] = 0;
    if (i == c.k()) break;
    ++msg[i];
    auto cw = c.encode(msg);
    std::size_t w = 0;
    for (Elem e : cw) w += e != 0;
    best = std::min(best, w);
  }
  return best;
}

}  // namespace

TEST_CASE("rref basics") {
  auto f = gf::Field::create(13, 1);
  Matrix id(f, 4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  auto rr = linalg::rref(id);
  CHECK(rr.rank == 4);
  CHECK(rr.mat == id);

  Matrix zero(f, 3, 5);
  auto rz = linalg::rref(zero);
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());
}

TEST_CASE("rref of the locality parity matrix has full rank") {
  // nu x n matrix with rows (alpha^((m(r+1)+l) j))_j for n = 12, r = 2, l = 1
  auto f = gf::Field::create(13, 1);
  auto alpha = gf::root_of_unity(f, 12).code();
  const std::size_t nu = 4, n = 12, r = 2, l = 1;
  Matrix h(f, nu, n);
  for (std::size_t m = 0; m < nu; ++m)
    for (std::size_t j = 0; j < n; ++j)
      h.at(m, j) = f->pow(alpha, (m * (r + 1) + l) * j % n);
  auto rr = linalg::rref(std::move(h));
  CHECK(rr.rank == 4);
}

TEST_CASE("rref preserves the row space") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_code(rng, 3, 8, 4);
    // every original row reduces to zero against the RREF
    for (std::size_t i = 0; i < c.k(); ++i) CHECK(c.contains(c.generator().row_vec(i)));
  }
}

TEST_CASE("dual dimensions and orthogonality") {
  auto f2 = gf::Field::create(2, 1);
  auto c45 = cyclic::code_from_zeros(f2, 45, {0, 3, 5, 9});
  REQUIRE(c45.k() == 30);
  auto d45 = linalg::dual(c45.code);  // orthogonality checked inside dual()
  CHECK(d45.k() == 15);
  auto dd = linalg::dual(d45);
  CHECK(dd.same_row_space(c45.code));

  auto c21 = cyclic::code_from_zeros(f2, 21, {0, 1, 7});
  REQUIRE(c21.k() == 12);
  CHECK(linalg::dual(c21.code).k() == 9);

  // full space <-> zero code
  std::vector<std::vector<Elem>> eye(6, std::vector<Elem>(6, 0));
  for (int i = 0; i < 6; ++i) eye[i][i] = 1;
  LinearCode full(f2, 6, eye);
  auto zero = linalg::dual(full);
  CHECK(zero.k() == 0);
  CHECK(linalg::dual(zero).k() == 6);
}

TEST_CASE("min_weight examples") {
  auto f2 = gf::Field::create(2, 1);
  auto c27 = cyclic::code_from_zeros(f2, 27, {1, 9});
  CHECK(linalg::min_weight(c27.code).weight == 6);

  auto c63 = cyclic::code_from_zeros(f2, 63, {1, 9, 11, 15, 23});
  CHECK(linalg::min_weight(c63.code, std::nullopt, {}, true).weight == 3);

  // repetition code
  std::vector<std::vector<Elem>> ones(1, std::vector<Elem>(9, 1));
  LinearCode rep(f2, 9, ones);
  auto mw = linalg::min_weight(rep);
  CHECK(mw.weight == 9);
  CHECK(mw.witness == ones[0]);
}

TEST_CASE("min_weight cap semantics") {
  auto f2 = gf::Field::create(2, 1);
  auto c27 = cyclic::code_from_zeros(f2, 27, {1, 9});  // d = 6
  auto below = linalg::min_weight(c27.code, 4);
  CHECK_FALSE(below.found);
  CHECK(below.weight == 4);
  auto at = linalg::min_weight(c27.code, 6);
  CHECK(at.found);
  CHECK(at.weight == 6);
}

TEST_CASE("min_weight enumeration and support search agree") {
  std::mt19937 rng(17);
  linalg::SearchLimits force_support;
  force_support.enum_budget = 1;  // push everything into the column search
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 8 + rng() % 13;  // up to 20
      std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 12);
      auto c = random_code(rng, q, n, k);
      if (c.k() == 0) continue;
      auto by_enum = linalg::min_weight(c);
      auto by_support = linalg::min_weight(c, std::nullopt, force_support);
      CHECK(by_enum.weight == by_support.weight);
      CHECK(c.contains(by_support.witness));
      std::size_t w = 0;
      for (Elem e : by_support.witness) w += e != 0;
      CHECK(w == by_support.weight);
    }
  }
}

TEST_CASE("min_weight against an independent brute force") {
  std::mt19937 rng(29);
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 6 + rng() % 8;
      std::size_t k = 1 + rng() % 6;
      auto c = random_code(rng, q, n, k);
      if (c.k() == 0) continue;
      CHECK(linalg::min_weight(c).weight == brute_min_weight(c));
    }
  }
}

TEST_CASE("singleton bound holds on random codes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_code(rng, 3, 10 + rng() % 6, 1 + rng() % 8);
    if (c.k() == 0) continue;
    CHECK(linalg::min_weight(c).weight <= c.n() - c.k() + 1);
  }
}

TEST_CASE("weight_distribution") {
  auto f2 = gf::Field::create(2, 1);
  auto simplex = cyclic::irreducible_code(2, 7);
  auto wd = linalg::weight_distribution(simplex);
  CHECK(wd.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {4, 7}});

  // zero code
  LinearCode zero(f2, 5, {});
  CHECK(linalg::weight_distribution(zero).counts ==
        std::map<std::size_t, std::uint64_t>{{0, 1}});

  // counts sum to q^k
  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_code(rng, 3, 9, 4);
    auto dist = linalg::weight_distribution(c);
    std::uint64_t total = 0;
    for (auto& [w, cnt] : dist.counts) total += cnt;
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < c.k(); ++i) expect *= 3;
    CHECK(total == expect);
  }
}

TEST_CASE("MacWilliams transform matches the directly enumerated dual") {
  std::mt19937 rng(41);
  for (auto q : {2ull, 3ull}) {
    auto c = random_code(rng, q, 11, 5);
    if (c.k() == 0) continue;
    auto primal = linalg::weight_distribution(c);
    auto dual_direct = linalg::weight_distribution(linalg::dual(c));
    // b_j = (1/|C|) sum_i a_i K_j(i)
    mpz_class size = 1;
    for (std::size_t i = 0; i < c.k(); ++i) size *= static_cast<unsigned long>(q);
    for (std::size_t j = 0; j <= c.n(); ++j) {
      mpz_class acc = 0;
      for (auto& [i, cnt] : primal.counts)
        acc += mpz_class(static_cast<unsigned long>(cnt)) * bounds::krawtchouk(c.n(), q, j, i);
      CHECK(acc % size == 0);
      mpz_class expect = acc / size;
      std::uint64_t direct = dual_direct.counts.count(j) ? dual_direct.counts.at(j) : 0;
      CHECK(mpz_class(static_cast<unsigned long>(direct)) == expect);
    }
  }
}

TEST_CASE("per-coordinate minima are consistent with the global minimum") {
  std::mt19937 rng(43);
  auto c = random_code(rng, 2, 12, 6);
  auto per = linalg::per_coordinate_min_weight(c);
  auto global = linalg::min_weight(c);
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (!per.weight[i]) continue;
    best = std::min(best, *per.weight[i]);
    // witness is a codeword nonzero at i with the claimed weight
    CHECK(c.contains(per.witness[i]));
    CHECK(per.witness[i][i] != 0);
    std::size_t w = 0;
    for (Elem e : per.witness[i]) w += e != 0;
    CHECK(w == *per.weight[i]);
  }
  CHECK(best == global.weight);
}

TEST_CASE("budgets are enforced") {
  std::mt19937 rng(47);
  auto c = random_code(rng, 2, 20, 15);
  linalg::SearchLimits tiny;
  tiny.enum_budget = 4;
  tiny.comb_budget = 4;
  CHECK_THROWS_AS(linalg::min_weight(c, std::nullopt, tiny), linalg::BudgetExceeded);
  CHECK_THROWS_AS(linalg::weight_distribution(c, tiny), linalg::BudgetExceeded);
}

TEST_CASE("threaded enumeration is deterministic") {
  std::mt19937 rng(53);
  auto c = random_code(rng, 2, 40, 23);
  REQUIRE(c.k() == 23);
  linalg::SearchLimits one, four;
  one.threads = 1;
  four.threads = 4;
  auto a = linalg::min_weight(c, std::nullopt, one);
  auto b = linalg::min_weight(c, std::nullopt, four);
  CHECK(a.weight == b.weight);
  CHECK(a.witness == b.witness);
}

TEST_CASE("encode and contains") {
  auto f = gf::Field::create(3, 1);
  LinearCode c(f, 4, {{1, 0, 1, 2}, {0, 1, 1, 1}});
  auto cw = c.encode({2, 1});
  CHECK(c.contains(cw));
  CHECK_FALSE(c.contains({1, 1, 1, 0}));
}
