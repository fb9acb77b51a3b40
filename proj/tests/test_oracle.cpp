#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "qcommute/counting.hpp"
#include "qcommute/errors.hpp"
#include "qcommute/oracle.hpp"

using namespace qcommute;

namespace {
OracleJob job(const FieldPtr& f, unsigned n, std::uint32_t zeta_code, CountSet set,
              unsigned workers = 1) {
  OracleJob j;
  j.field = f;
  j.n = n;
  j.zeta = f->element(zeta_code);
  j.set = set;
  j.workers = workers;
  return j;
}
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("pinned counts at n = 2") {
  auto f2 = Field::make(2);
  CHECK(oracle_count(job(f2, 2, 1, CountSet::pairs)) == 88);
  CHECK(oracle_count(job(f2, 2, 1, CountSet::nonsingular)) == 36);
  CHECK(oracle_count(job(f2, 2, 1, CountSet::nilpotent)) == 28);

  auto f3 = Field::make(3);
  CHECK(oracle_count(job(f3, 2, 2, CountSet::pairs)) == 417);
  CHECK(oracle_count(job(f3, 2, 2, CountSet::nonsingular)) == 192);
  CHECK(oracle_count(job(f3, 2, 2, CountSet::nilpotent)) == 153);
}

TEST_CASE("one enumeration pass yields all three families consistently") {
  auto f3 = Field::make(3);
  for (std::uint32_t z : {1u, 2u}) {
    OracleBreakdown all = oracle_count_all(f3, 2, f3->element(z));
    CHECK(all.pairs == oracle_count(job(f3, 2, z, CountSet::pairs)));
    CHECK(all.nonsingular == oracle_count(job(f3, 2, z, CountSet::nonsingular)));
    CHECK(all.nilpotent == oracle_count(job(f3, 2, z, CountSet::nilpotent)));
  }
}

TEST_CASE("n = 1 and n = 0 boundary counts") {
  auto f5 = Field::make(5);
  // 2q - 1 pairs at n = 1 whenever ord(zeta) >= 2.
  for (std::uint32_t z : {2u, 3u, 4u}) {
    CHECK(oracle_count(job(f5, 1, z, CountSet::pairs)) == 9);
  }
  // zeta = 1: everything commutes, q^2 pairs.
  CHECK(oracle_count(job(f5, 1, 1, CountSet::pairs)) == 25);
  // Empty matrices: the single empty pair belongs to every family.
  for (CountSet s : {CountSet::pairs, CountSet::nonsingular, CountSet::nilpotent}) {
    CHECK(oracle_count(job(f5, 0, 2, s)) == 1);
  }
}

TEST_CASE("worker count never changes the result") {
  auto f3 = Field::make(3);
  const BigInt expect = oracle_count(job(f3, 2, 2, CountSet::pairs, 1));
  for (unsigned workers : {2u, 3u, 8u}) {
    CHECK(oracle_count(job(f3, 2, 2, CountSet::pairs, workers)) == expect);
  }
  auto f2 = Field::make(2);
  OracleBreakdown one = oracle_count_all(f2, 3, f2->one(), 1);
  OracleBreakdown eight = oracle_count_all(f2, 3, f2->one(), 8);
  CHECK(one.pairs == eight.pairs);
  CHECK(one.nonsingular == eight.nonsingular);
  CHECK(one.nilpotent == eight.nilpotent);
  CHECK(one.pairs == 7456);
  CHECK(one.nonsingular == 2352);
  CHECK(one.nilpotent == 1520);
}

TEST_CASE("independent naive double loop agrees") {
  auto f2 = Field::make(2);
  CHECK(oracle_naive(CountSet::pairs, f2, 2, f2->one()) == 88);
  CHECK(oracle_naive(CountSet::nonsingular, f2, 2, f2->one()) == 36);
  CHECK(oracle_naive(CountSet::nilpotent, f2, 2, f2->one()) == 28);
  auto f3 = Field::make(3);
  CHECK(oracle_naive(CountSet::pairs, f3, 2, f3->element(2)) == 417);
  auto f5 = Field::make(5);
  CHECK(oracle_naive(CountSet::pairs, f5, 1, f5->element(2)) == 9);
}

TEST_CASE("agreement with the closed forms across small fields") {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = Field::make(p, k);
    for (unsigned n = 0; n <= 2; ++n) {
      for (std::uint32_t z = 1; z < f->size(); ++z) {
        auto zeta = f->element(z);
        unsigned m = multiplicative_order(zeta);
        OracleBreakdown got = oracle_count_all(f, n, zeta);
        BigInt q(f->size());
        CHECK(got.pairs == count_pairs(n, m, q));
        CHECK(got.nonsingular == count_nonsingular(n, m, q));
        CHECK(got.nilpotent == count_nilpotent(n, q));
      }
    }
  }
}

TEST_CASE("budget refusal happens before any work") {
  auto f3 = Field::make(3);
  OracleJob j = job(f3, 2, 2, CountSet::pairs);
  j.budget = 10;  // 81 matrices needed
  CHECK_THROWS_AS((oracle_count(j)), BudgetError);
  CHECK_THROWS_AS((oracle_naive(CountSet::pairs, f3, 2, f3->element(2), 100)), BudgetError);
  // Generous budgets pass.
  j.budget = 100;
  CHECK(oracle_count(j) == 417);
}

TEST_CASE("invalid jobs are rejected") {
  auto f3 = Field::make(3);
  CHECK_THROWS_AS((oracle_count(job(f3, 2, 2, CountSet::classes))), std::invalid_argument);
  CHECK_THROWS_AS((oracle_naive(CountSet::classes, f3, 2, f3->element(2))), std::invalid_argument);
  CHECK_THROWS_AS((oracle_count(job(f3, 2, 0, CountSet::pairs))), std::invalid_argument);
  // zeta from a different field.
  OracleJob j = job(f3, 2, 2, CountSet::pairs);
  auto f5 = Field::make(5);
  j.zeta = f5->element(2);
  CHECK_THROWS_AS((oracle_count(j)), std::invalid_argument);
}

TEST_CASE("scaling factors of equal order give equal counts") {
  auto f5 = Field::make(5);
  // 2 and 3 both have order 4.
  CHECK(oracle_count(job(f5, 2, 2, CountSet::pairs)) ==
        oracle_count(job(f5, 2, 3, CountSet::pairs)));
  auto f7 = Field::make(7);
  // 3 and 5 both have order 6.
  CHECK(oracle_count(job(f7, 2, 3, CountSet::pairs)) ==
        oracle_count(job(f7, 2, 5, CountSet::pairs)));
}

TEST_CASE("twist-stable chains at n = 2 over GF(3), m = 2") {
  auto f3 = Field::make(3);
  auto chains = twist_stable_chains(f3, 2, 2);
  REQUIRE(chains.size() == 4);
  std::set<std::string> got;
  for (const auto& c : chains) got.insert(c.to_string());
  std::set<std::string> expect = {"[t^2]", "[t^2 + 1]", "[t^2 + 2]", "[t; t]"};
  CHECK(got == expect);
}

TEST_CASE("chain enumeration boundary cases") {
  auto f2 = Field::make(2);
  auto empty_total = twist_stable_chains(f2, 0, 2);
  REQUIRE(empty_total.size() == 1);
  CHECK(empty_total[0].chain.empty());
  // m = 1 fixes every class: all chains of total degree n.
  CHECK(twist_stable_chains(f2, 2, 1).size() == 6);  // q^2 + q classes
}

TEST_CASE("class enumeration equals the closed form") {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
    auto f = Field::make(p, k);
    BigInt q(f->size());
    for (unsigned n = 0; n <= 3; ++n) {
      for (unsigned m = 1; m <= 3; ++m) {
        CHECK(count_classes_by_enumeration(f, n, m) == count_classes(n, m, q));
      }
    }
  }
  auto f2 = Field::make(2);
  CHECK(count_classes_by_enumeration(f2, 4, 2) == count_classes(4, 2, BigInt(2)));
}

TEST_CASE("chain enumeration guards its feasible window") {
  auto f2 = Field::make(2);
  CHECK_THROWS_AS((twist_stable_chains(f2, 7, 1)), std::invalid_argument);
  auto f256 = Field::make(2, 8);
  CHECK_THROWS_AS((twist_stable_chains(f256, 3, 1)), std::invalid_argument);
}

}  // TEST_SUITE("oracle")
