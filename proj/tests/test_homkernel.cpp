#include "lawson/homkernel.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace lawson;

namespace {

Variety P(int n) { return Variety::proj_space(n); }
Variety quintic() { return Variety::atom(testing::AtomShelf::instance().quintic); }

} // namespace

TEST_CASE("hom-kernel of the blowup of P(5) along the quintic") {
  auto x = Variety::blowup(P(5), quintic(), 2);
  Trace trace;
  auto e = hom(x, 2, 4, &trace);
  CHECK(e.to_string() == "INF_Q");
  CHECK(e.summands().front().origins == std::vector<std::string>{"blowup_1"});
  CHECK(rank_over_q(e) == ExtendedRank::infinite());
  CHECK(trace.notes.count(kNoteHomSplitting) == 1);
}

TEST_CASE("projective spaces have injective cycle class maps") {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int k = 2 * p; k <= 2 * n; ++k) {
        CHECK(hom(P(n), p, k).is_zero());
        CHECK(hom(Variety::proj_bundle(Variety::point(), n + 1), p, k).is_zero());
      }
    }
  }
}

TEST_CASE("p = 0 always vanishes") {
  for (const auto& v : testing::random_corpus(5, 30)) {
    for (int k = 0; k <= 2 * v.dim(); ++k) CHECK(hom(v, 0, k).is_zero());
  }
  CHECK(hom(quintic(), 0, 3).is_zero());
}

TEST_CASE("Griffiths groups") {
  CHECK(griffiths(P(5), 2).is_zero());
  auto g = griffiths(Variety::blowup(P(5), quintic(), 2), 2);
  CHECK(rank_over_q(g) == ExtendedRank::infinite());
  const auto& shelf = testing::AtomShelf::instance();
  CHECK(griffiths(Variety::atom(shelf.elliptic), 1).is_zero());
  CHECK(griffiths(Variety::atom(shelf.k3), 1).is_zero());
  CHECK(griffiths(quintic(), 1).to_string() == "INF_Q");
  CHECK_THROWS_AS(griffiths(P(2), 3), DomainError);
  CHECK_THROWS_AS(griffiths(P(2), -1), DomainError);
}

TEST_CASE("absent annotations are Unknown, never zero") {
  auto bare = std::make_shared<AtomDecl>();
  bare->id = "T";
  bare->dim = 4;
  auto t = Variety::atom(bare);
  CHECK(hom(t, 1, 2).to_string() == "UNKNOWN");
  CHECK(hom(t, 2, 4).to_string() == "UNKNOWN");
  CHECK(hom(t, 3, 6).is_zero());
  CHECK(hom(quintic(), 1, 3).to_string() == "UNKNOWN");
  CHECK(hom(quintic(), 1, 2).to_string() == "INF_Q");
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hom(P(5), 2, 3), DomainError);
}

TEST_CASE("forced vanishing over whole tables") {
  for (const auto& v : testing::random_corpus(77, 60)) {
    const int n = v.dim();
    for (const auto& e : hom_table(v).entries) {
      if (e.p == 0 || e.p == n - 1 || e.p == n) CHECK(e.expr.is_zero());
    }
  }
}

TEST_CASE("tower through a point and a line keeps L_1 and L_3 hom-kernels zero") {
  auto x1 = Variety::blowup(P(5), Variety::point(), 5);
  auto x2 = Variety::blowup(x1, P(1), 4);
  auto tower = unroll_tower(x2);
  REQUIRE(tower.size() == 3);
  CHECK(tower[0] == P(5));
  auto report = check_invariance(tower);
  CHECK(report.n == 5);
  CHECK(report.invariant());
  CHECK(report.non_invariant_dimensions().empty());
  for (const auto& c : report.comparisons) {
    if (c.p == 1 || c.p == 3) {
      CHECK(c.top.is_zero());
      CHECK(c.bottom.is_zero());
    }
  }
  for (const auto& e : report.extras) {
    if (e.p == 1 || e.p == 3) CHECK(e.fate != Fate::survives);
  }
}

TEST_CASE("quintic tower is a non-invariance witness at p = 2 only") {
  auto top = Variety::blowup(P(5), quintic(), 2);
  auto report = check_invariance(unroll_tower(top));
  CHECK(report.invariant());
  CHECK(report.non_invariant_dimensions() == std::vector<int>{2});
  bool saw_inf = false;
  for (const auto& c : report.comparisons) {
    if (c.p == 2 && c.k == 4) {
      CHECK(c.bottom.is_zero());
      CHECK(c.top.to_string() == "INF_Q");
      saw_inf = true;
    }
  }
  CHECK(saw_inf);
}

TEST_CASE("trivial tower is vacuously invariant") {
  auto tower = unroll_tower(P(5));
  REQUIRE(tower.size() == 1);
  auto report = check_invariance(tower);
  CHECK(report.invariant());
  CHECK(report.extras.empty());
  for (const auto& c : report.comparisons) CHECK(c.equal);
}

TEST_CASE("malformed towers") {
  std::vector<Variety> bad{P(5), P(5)};
  CHECK_THROWS_AS(check_invariance(bad), std::invalid_argument);
  std::vector<Variety> wrong_base{P(4), Variety::blowup(P(5), Variety::point(), 5)};
  CHECK_THROWS_AS(check_invariance(wrong_base), std::invalid_argument);
  CHECK_THROWS_AS(check_invariance(std::vector<Variety>{}), std::invalid_argument);
}

TEST_CASE("extra summands at p = 1 and p = n-2 die by their indices") {
  for (int n = 3; n <= 12; ++n) {
    for (int r = 2; r <= n; ++r) {
      const int center_dim = n - r;
      for (int j = 1; j <= r - 1; ++j) {
        CHECK(1 - j <= 0);
        CHECK(extra_summand_fate(1, j, center_dim) == Fate::h0_vanish);
        const int q = n - 2 - j;
        CHECK((q == center_dim || q == center_dim - 1 || q > center_dim || q <= 0));
        CHECK(extra_summand_fate(n - 2, j, center_dim) != Fate::survives);
      }
    }
  }
  CHECK(extra_summand_fate(2, 1, 3) == Fate::survives);
  CHECK(extra_summand_fate(5, 1, 3) == Fate::r4_vanish);
}

TEST_CASE("infinite annotations propagate through later constructions") {
  auto x = Variety::blowup(P(5), quintic(), 2);
  auto bundle = Variety::proj_bundle(x, 2);
  CHECK(rank_over_q(hom(bundle, 3, 6)) == ExtendedRank::infinite());
  CHECK(rank_over_q(hom(bundle, 2, 4)) == ExtendedRank::infinite());
  auto again = Variety::blowup(x, Variety::point(), 5);
  CHECK(rank_over_q(griffiths(again, 2)) == ExtendedRank::infinite());
}
