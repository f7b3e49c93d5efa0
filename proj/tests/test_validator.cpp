#include "lawson/validator.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lawson;

namespace {

RankSequence finite(std::initializer_list<std::int64_t> ranks) {
  RankSequence out;
  for (auto r : ranks) out.push_back(ExtendedRank::finite(r));
  return out;
}

} // namespace

TEST_CASE("rank exactness") {
  CHECK(rank_exactness(finite({1, 2, 1})) == Verdict::pass);
  CHECK(rank_exactness(finite({1, 1, 1})) == Verdict::fail);
  RankSequence with_inf{ExtendedRank::finite(1), ExtendedRank::infinite(), ExtendedRank::finite(1)};
  CHECK(rank_exactness(with_inf) == Verdict::inconclusive);
  RankSequence with_unknown{ExtendedRank::unknown()};
  CHECK(rank_exactness(with_unknown) == Verdict::inconclusive);
  CHECK(rank_exactness(RankSequence{}) == Verdict::pass);
}

TEST_CASE("rank exactness is invariant under reversal") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 7), rank(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    RankSequence seq;
    for (int i = len(rng); i > 0; --i) seq.push_back(ExtendedRank::finite(rank(rng)));
    RankSequence rev(seq.rbegin(), seq.rend());
    CHECK(rank_exactness(seq) == rank_exactness(rev));
  }
}

TEST_CASE("ladder for a point blown up in P(3)") {
  auto x = Variety::blowup(Variety::proj_space(3), Variety::point(), 3);
  auto report = ladder_rank_check(x, 2, 2);
  CHECK(report.verdict == Verdict::pass);
  REQUIRE(report.lines.size() == 1);
  // b_2(X~) - b_2(P^3) = 2 - 1 and b_2(P^2) - b_2(pt) = 1 - 0
  CHECK(report.lines[0].detail == "b(X~)=2 b(X)=1 b(Y)=0 b(D)=1");
}

TEST_CASE("ladder for the quintic blowup at k = 4") {
  auto x = Variety::blowup(Variety::proj_space(5), Variety::atom(testing::AtomShelf::instance().quintic), 2);
  auto report = ladder_rank_check(x, 4, 4);
  CHECK(report.verdict == Verdict::pass);
  // both sides equal b_2(Y) = 1
  CHECK(report.lines[0].detail == "b(X~)=2 b(X)=1 b(Y)=1 b(D)=2");
}

TEST_CASE("ladder in negative degrees") {
  auto x = Variety::blowup(Variety::proj_space(3), Variety::point(), 3);
  auto report = ladder_rank_check(x, -3, -1);
  CHECK(report.verdict == Verdict::pass);
  for (const auto& l : report.lines) CHECK(l.detail == "b(X~)=0 b(X)=0 b(Y)=0 b(D)=0");
}

TEST_CASE("ladder on random blowups with fully known centers") {
  testing::TowerGenerator gen(200);
  std::uniform_int_distribution<int> dim_dist(2, 6);
  for (int i = 0; i < 200; ++i) {
    const int n = dim_dist(gen.rng);
    auto center = gen.random_center(std::min(2, n - 2));
    auto node = Variety::blowup(Variety::proj_space(n), center, n - center.dim());
    CHECK(ladder_rank_check(node, 0, 2 * n).verdict == Verdict::pass);
    CHECK(blowup_betti_check(node, 0, 2 * n).verdict == Verdict::pass);
  }
}

TEST_CASE("Dold-Thom check") {
  CHECK(dold_thom_check(Variety::proj_space(4)).verdict == Verdict::pass);
  auto p3 = Variety::proj_space(3);
  auto tower = Variety::blowup(Variety::blowup(p3, Variety::point(), 3), Variety::proj_space(1), 2);
  tower = Variety::blowup(tower, Variety::atom(testing::AtomShelf::instance().elliptic), 2);
  CHECK(dold_thom_check(tower).verdict == Verdict::pass);

  auto partial = std::make_shared<AtomDecl>();
  partial->id = "T";
  partial->dim = 3;
  partial->singular = std::vector<GroupExpr>{GroupExpr::z(), GroupExpr::zero(), GroupExpr::z()};
  auto report = dold_thom_check(Variety::atom(partial));
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK(report.lines[3].verdict == Verdict::inconclusive);
  CHECK(report.lines[2].verdict == Verdict::pass);
}

TEST_CASE("ladder with an unknown center is inconclusive") {
  auto bare = std::make_shared<AtomDecl>();
  bare->id = "S";
  bare->dim = 2;
  auto x = Variety::blowup(Variety::proj_space(4), Variety::atom(bare), 2);
  auto report = ladder_rank_check(x, 0, 8);
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK(report.lines[0].verdict == Verdict::pass);
  CHECK(report.lines[3].verdict == Verdict::inconclusive);
}

TEST_CASE("full validation passes on the random corpus") {
  for (const auto& v : testing::random_corpus(404, 60)) {
    CAPTURE(v.to_string());
    for (const auto& c : validate(v)) {
      CAPTURE(c.name);
      CHECK(c.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("verdict combination") {
  CHECK(combine(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(combine(Verdict::inconclusive, Verdict::fail) == Verdict::fail);
  CHECK(combine(Verdict::pass, Verdict::pass) == Verdict::pass);
}
