#include "delaycode/error.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/samples.hpp"
#include "support/oracles.hpp"
#include "support/random_codes.hpp"

#include <doctest.h>

using namespace delaycode;

TEST_SUITE("markov") {
  TEST_CASE("three-table tuple, uniform source") {
    const CodeTuple F = samples::three_table_tuple();
    const SourceDist mu = SourceDist::uniform(F.alphabet());
    const MarkovReport r = markov_analyze(F, mu);
    CHECK(r.regular);
    CHECK(r.pi == std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2)});
    CHECK(r.L_table == std::vector<Rational>{Rational(5, 2), Rational(3), Rational(17, 4)});
    CHECK(r.L == Rational(85, 24));
    const auto oracle = testsupport::stationary_oracle(F, mu);
    REQUIRE(oracle);
    CHECK(*oracle == r.pi);
  }

  TEST_CASE("prefix code") {
    CHECK(average_length(samples::prefix_code_tuple(), samples::prefix_code_mu()) ==
          Rational(3, 2));
  }

  TEST_CASE("non-regular tuple") {
    const Alphabet ab({"a", "b"});
    const CodeTuple F(1, ab, {std::string("0"), std::string("1")},
                      {{{BitString("0"), BitString("1")}, {0, 0}},
                       {{BitString("0"), BitString("1")}, {1, 1}}});
    CHECK_FALSE(is_regular(F));
    const MarkovReport r = markov_analyze(F, SourceDist::uniform(ab));
    CHECK_THROWS_AS(r.average_length(), NotRegularError);
    CHECK_THROWS_AS(r.stationary(), NotRegularError);
    CHECK_THROWS_AS(core_restrict(F), NotRegularError);
    CHECK(minimal_closed_sets(F) == std::vector<std::vector<int>>{{0}, {1}});
  }

  TEST_CASE("transient tables get zero weight") {
    const Alphabet ab({"a", "b"});
    const CodeTuple F(1, ab, {std::string("0"), std::string("1")},
                      {{{BitString("0"), BitString("1")}, {1, 1}},
                       {{BitString("00"), BitString("1")}, {1, 1}}});
    const MarkovReport r = markov_analyze(F, SourceDist::uniform(ab));
    CHECK(r.core == std::vector<int>{1});
    CHECK(r.pi == std::vector<Rational>{0, 1});
    CHECK(r.L == Rational(3, 2));
    CHECK(core_restrict(F).size() == 1);
    CHECK_THROWS_AS(restrict_to(F, {0}), DomainError);
  }

  TEST_CASE("potentials satisfy the balance equation") {
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 60) {
      const CodeTuple G = testsupport::random_codetuple(rng, 1, 3, 1 + checked % 4, 3);
      if (!is_regular(G)) {
        continue;
      }
      const CodeTuple F = core_restrict(G);
      const SourceDist mu = testsupport::random_mu(rng, 3);
      const MarkovReport r = markov_analyze(F, mu);
      const auto h = potentials(F, mu);
      CHECK(h[0] == 0);
      for (std::size_t a = 0; a < h.size(); ++a) {
        Rational rhs = r.L_table[a];
        for (std::size_t b = 0; b < h.size(); ++b) {
          rhs += r.Q[a][b] * (h[b] - h[a]);
        }
        CHECK(rhs == r.L);
      }
      ++checked;
    }
  }

  TEST_CASE("stationary distribution on random regular tuples") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 100) {
      const CodeTuple F = testsupport::random_codetuple(rng, 1, 2 + checked % 3, 1 + checked % 5, 3);
      if (!is_regular(F)) {
        continue;
      }
      const SourceDist mu = testsupport::random_mu(rng, static_cast<int>(F.alphabet().size()));
      const MarkovReport r = markov_analyze(F, mu);
      Rational total = 0;
      for (std::size_t j = 0; j < r.pi.size(); ++j) {
        Rational flow = 0;
        for (std::size_t i = 0; i < r.pi.size(); ++i) {
          flow += r.pi[i] * r.Q[i][j];
        }
        CHECK(flow == r.pi[j]);
        total += r.pi[j];
      }
      CHECK(total == 1);
      const auto oracle = testsupport::stationary_oracle(F, mu);
      REQUIRE(oracle);
      CHECK(*oracle == r.pi);
      ++checked;
    }
  }
}
