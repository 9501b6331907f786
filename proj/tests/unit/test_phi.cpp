#include "delaycode/error.hpp"
#include "delaycode/phi.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace delaycode;
using testsupport::ExplicitMap;

TEST_SUITE("phi") {
  TEST_CASE("worked-example applications") {
    CHECK(PhiMap::parse("101").apply(BitString("1001")).str() == "0101");
    CHECK(PhiMap::parse("010").apply(BitString("001")).str() == "011");
    CHECK(PhiMap::parse("010").str() == "010");
    CHECK(PhiMap::identity(2).apply(BitString("0110")).str() == "0110");
    CHECK_THROWS_AS(PhiMap::parse("01"), DomainError);
  }

  TEST_CASE("prefix index is length-lex") {
    CHECK(prefix_index(BitString("")) == 0);
    CHECK(prefix_index(BitString("0")) == 1);
    CHECK(prefix_index(BitString("1")) == 2);
    CHECK(prefix_index(BitString("10")) == 5);
  }

  TEST_CASE("apply agrees with the explicit bit-by-bit map") {
    for (const auto& phi : PhiMap::all(2)) {
      const ExplicitMap ref(2, phi.table(), 5);
      for (const auto& b : all_strings_up_to(5)) {
        CHECK(phi.apply(b).str() == ref(b.str()));
      }
    }
  }

  TEST_CASE("every table is a member of Phi_k") {
    for (int k = 0; k <= 2; ++k) {
      for (const auto& phi : PhiMap::all(k)) {
        auto map = [&](const std::string& x) { return phi.apply(BitString(x)).str(); };
        CHECK(testsupport::satisfies_phi_axioms(map, k, 4));
      }
    }
  }

  TEST_CASE("control bits are recovered from images") {
    // φ*(b) is the last bit of φ(b0)
    for (const auto& phi : PhiMap::all(2)) {
      for (const auto& b : all_strings_up_to(3)) {
        BitString b0 = b;
        b0.push_back(false);
        const BitString img = phi.apply(b0);
        CHECK(phi.star(b) == img[img.size() - 1]);
      }
    }
  }

  TEST_CASE("quotient, composition and inverse identities") {
    const auto maps = PhiMap::all(2);
    const auto strings = all_strings_up_to(3);
    for (const auto& phi : maps) {
      for (const auto& d : strings) {
        const PhiMap q = quotient(phi, d);
        for (const auto& b : strings) {
          CHECK(q.star(b) == phi.star(d + b));
          CHECK(phi.apply(d + b) == phi.apply(d) + q.apply(b));
        }
      }
      const PhiMap inv = invert(phi);
      CHECK(compose(phi, inv).is_identity());
      CHECK(compose(inv, phi).is_identity());
      for (const auto& b : strings) {
        CHECK(inv.star(phi.apply(b)) == phi.star(b));
      }
      for (const auto& psi : maps) {
        const PhiMap c = compose(phi, psi);
        for (const auto& b : strings) {
          CHECK(c.star(b) == (phi.star(psi.apply(b)) != psi.star(b)));
          CHECK(c.apply(b) == phi.apply(psi.apply(b)));
        }
      }
    }
  }

  TEST_CASE("quotient by a long prefix is the identity") {
    const PhiMap phi = PhiMap::parse("111");
    CHECK(quotient(phi, BitString("01")).is_identity());
    CHECK_FALSE(quotient(phi, BitString("0")).is_identity());
  }

  TEST_CASE("apply_set and embed") {
    const SubsetK A = SubsetK::from_strings(2, {"00", "10"});
    CHECK(apply_set(PhiMap::parse("010"), A) == SubsetK::from_strings(2, {"01", "10"}));
    CHECK_THROWS_AS(apply_set(PhiMap::parse("1"), A), DomainError);
    const PhiMap small = PhiMap::parse("1");
    const PhiMap big = small.embed(2);
    for (const auto& b : all_strings_up_to(4)) {
      CHECK(big.apply(b) == small.apply(b));
    }
  }

  TEST_CASE("apply_prefix computes only what is asked") {
    const PhiMap phi = PhiMap::parse("101");
    CHECK(phi.apply_prefix(BitString("1001"), 2).str() == "01");
    CHECK(phi.apply_prefix(BitString("1"), 3).str() == "0");
  }

  TEST_CASE("enumeration guard") {
    CHECK(PhiMap::all(3).size() == 128);
    CHECK_THROWS_AS(PhiMap::all(5), ResourceError);
  }
}
