#include "delaycode/error.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/rct.hpp"
#include "delaycode/samples.hpp"

#include <doctest.h>

#include <random>

using namespace delaycode;

namespace {

SubsetK set2(std::vector<std::string> m) { return SubsetK::from_strings(2, m); }

const SubsetK kS00 = SubsetK::from_strings(2, {"00"});
const SubsetK kS0010 = SubsetK::from_strings(2, {"00", "10"});
const SubsetK kFull = SubsetK::full(2);

}  // namespace

TEST_SUITE("rct") {
  TEST_CASE("three-table RCT is valid") {
    for (bool overrides : {true, false}) {
      const Rct F = samples::three_table_rct(overrides);
      const ValidationReport r = validate(F, SourceDist::uniform(F.alphabet()));
      CHECK(r.all());
      CHECK(r.issues.empty());
      REQUIRE(r.L);
    }
  }

  TEST_CASE("prefix-set table") {
    const Rct F = samples::three_table_rct();
    const auto bar = [&](const SubsetK& A, const char* s) {
      const int i = F.index_of(A);
      return pref_bar_rct(F, A, F.f(i, F.alphabet().index_of(s)));
    };
    CHECK(pref_set_rct(F, kS00) == kS00);
    CHECK(pref_set_rct(F, kS0010) == kS0010);
    CHECK(pref_set_rct(F, kFull) == kFull);

    CHECK(bar(kS00, "a").empty());
    CHECK(bar(kS0010, "a") == set2({"00"}));
    CHECK(bar(kFull, "a") == set2({"00"}));

    CHECK(bar(kS00, "b").empty());
    CHECK(bar(kS0010, "b").empty());
    CHECK(bar(kFull, "b") == set2({"00"}));

    CHECK(bar(kS00, "c") == set2({"00", "10", "11"}));
    CHECK(bar(kS0010, "c") == set2({"10"}));
    CHECK(bar(kFull, "c").empty());

    CHECK(bar(kS00, "d").empty());
    CHECK(bar(kS0010, "d").empty());
    CHECK(bar(kFull, "d").empty());
  }

  TEST_CASE("direct realization snaps targets to the domain") {
    const Rct F = samples::three_table_rct();
    const CodeTuple D = direct_realization(F);
    auto target = [&](const SubsetK& A, const char* s) {
      return std::get<SubsetK>(D.id(D.tau(D.index_of(A), F.alphabet().index_of(s))));
    };
    CHECK(target(kS00, "a") == kS0010);
    CHECK(target(kS00, "b") == kS00);
    CHECK(target(kS00, "c") == kS00);
    CHECK(target(kS00, "d") == kS0010);
    CHECK(target(kS0010, "a") == kS00);
    CHECK(target(kS0010, "b") == kFull);
    CHECK(target(kS0010, "c") == kS00);
    CHECK(target(kS0010, "d") == kFull);
    CHECK(target(kFull, "a") == kS0010);
    CHECK(target(kFull, "b") == kS00);
    CHECK(target(kFull, "c") == kFull);
    CHECK(target(kFull, "d") == kFull);
    CHECK(D.f(D.index_of(kS00), 0).str() == "001");
  }

  TEST_CASE("expanded index steps follow the worked example") {
    const Rct F = samples::three_table_rct();
    ExpandedIndex x = samples::three_table_seed();
    const auto seq = F.alphabet().parse("acdb");
    const std::vector<std::string> emitted = {"1", "", "011", "1101"};
    const std::vector<std::string> states = {"{00,10}|010", "{00}|010", "{00,10}|001",
                                             "{00,01,10,11}|000"};
    for (std::size_t t = 0; t < seq.size(); ++t) {
      auto [bits, next] = expand_index_step(F, x, seq[t]);
      CHECK(bits.str() == emitted[t]);
      CHECK(state_label(next) == states[t]);
      x = next;
    }
    // the last step emits φ_001(1001)
    const ExpandedIndex s3{kS0010, PhiMap::parse("001")};
    CHECK(expand_index_step(F, s3, 1).first.str() == "1101");
  }

  TEST_CASE("expansion preserves the average length") {
    for (bool overrides : {true, false}) {
      const Rct F = samples::three_table_rct(overrides);
      const SourceDist mu = SourceDist::uniform(F.alphabet());
      const Rational Lt = average_length(direct_realization(F), mu);
      const CodeTuple E = expand_minimal(F, samples::three_table_seed());
      CHECK(is_regular(E));
      CHECK(is_extendable(E));
      CHECK(is_k_dec(E));
      CHECK(reachable_core(E).size() == static_cast<std::size_t>(E.size()));
      CHECK(average_length(E, mu) == Lt);
      const CodeTuple full = expand_full(F);
      CHECK(full.size() == 3 * 8);
      CHECK(average_length(core_restrict(full), mu) == Lt);
    }
  }

  TEST_CASE("the prefix set of an expanded state contains the image of its index") {
    const Rct F = samples::three_table_rct();
    for (int d = 0; d < F.size(); ++d) {
      for (const auto& phi : PhiMap::all(2)) {
        const ExpandedIndex seed{F.domain(d), phi};
        const CodeTuple machine = explore(F, seed).to_codetuple(F);
        const SubsetK image = apply_set(phi, F.domain(d));
        CHECK((pref_sets(machine)[0] & image) == image);
      }
    }
  }

  TEST_CASE("length invariance across maps") {
    const Rct F = samples::three_table_rct();
    std::mt19937_64 rng(13);
    for (int d = 0; d < F.size(); ++d) {
      std::vector<ExpandedIndex> states;
      for (const auto& phi : PhiMap::all(2)) {
        states.push_back({F.domain(d), phi});
      }
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> x(rng() % 20);
        for (int& s : x) {
          s = static_cast<int>(rng() % 4);
        }
        CHECK(length_invariance_check(F, x, states));
      }
    }
  }

  TEST_CASE("malformed RCTs") {
    const Alphabet ab({"a", "b"});
    const SubsetK zero = SubsetK::from_strings(1, {"0"});
    const SubsetK one = SubsetK::from_strings(1, {"1"});
    const SubsetK both = SubsetK::full(1);
    // equivalent domain elements
    CHECK_THROWS_AS(Rct(1, ab,
                        {{zero, {BitString("0"), BitString("00")}, {both, both}, {}},
                         {one, {BitString("1"), BitString("11")}, {both, both}, {}}}),
                    InvalidRctError);
    // target outside every represented class
    CHECK_THROWS_AS(Rct(1, ab, {{zero, {BitString("0"), BitString("00")}, {both, one}, {}}}),
                    InvalidRctError);
    // override that does not map the representative onto the target
    CHECK_THROWS_AS(Rct(1, ab,
                        {{zero,
                          {BitString("0"), BitString("01")},
                          {zero, one},
                          {std::nullopt, PhiMap::identity(1)}}}),
                    InvalidRctError);
    const Rct ok(1, ab, {{zero, {BitString("0"), BitString("01")}, {zero, one}, {}}});
    CHECK(ok.psi(0, 1) == PhiMap::parse("1"));
    CHECK(ok.rep(0, 1) == 0);
    CHECK_THROWS_AS(ok.index_of(both), DomainError);
  }

  TEST_CASE("validation reports each failing flag") {
    const Alphabet ab({"a", "b"});
    const SubsetK zero = SubsetK::from_strings(1, {"0"});
    const SubsetK both = SubsetK::full(1);
    // P of {0} comes out as {0,1}
    const Rct not_compliant(1, ab, {{zero, {BitString("0"), BitString("1")}, {zero, zero}, {}}});
    const ValidationReport r1 = validate(not_compliant);
    CHECK_FALSE(r1.compliant);
    CHECK(r1.k_dec);
    // a: 0 followed by {0,1} meets b: 00
    const Rct ambiguous(1, ab, {{both, {BitString("0"), BitString("00")}, {both, both}, {}}});
    CHECK_FALSE(validate(ambiguous).k_dec);
    CHECK_THROWS_AS(expand_minimal(ambiguous, {both, PhiMap::identity(1)}), InvalidRctError);
  }
}
