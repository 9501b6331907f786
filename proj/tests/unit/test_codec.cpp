#include "delaycode/codec.hpp"
#include "delaycode/error.hpp"
#include "delaycode/reduce.hpp"
#include "delaycode/samples.hpp"
#include "support/random_codes.hpp"

#include <doctest.h>

#include <set>

using namespace delaycode;

namespace {

const SubsetK kS0010 = SubsetK::from_strings(2, {"00", "10"});

// k-bit prefixes of every expanded-machine output that starts with a
// non-empty codeword, over x ∈ S^{1..depth}.
std::set<BitString> enumerated_tails(const Rct& F, const ExpandedIndex& start, int depth) {
  std::set<BitString> out;
  const auto k = static_cast<std::size_t>(F.k());
  std::vector<std::pair<ExpandedIndex, BitString>> frontier;
  for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
    auto [bits, next] = expand_index_step(F, start, s);
    if (!bits.empty()) {
      frontier.emplace_back(next, bits);
    }
  }
  for (int d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<std::pair<ExpandedIndex, BitString>> next_frontier;
    for (const auto& [state, emitted] : frontier) {
      if (emitted.size() >= k) {
        out.insert(take_prefix(emitted, k));
        continue;
      }
      for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
        auto [bits, next] = expand_index_step(F, state, s);
        next_frontier.emplace_back(next, emitted + bits);
      }
    }
    frontier = std::move(next_frontier);
  }
  return out;
}

}  // namespace

TEST_SUITE("codec") {
  TEST_CASE("worked encode and decode") {
    const Rct F = samples::three_table_rct();
    const ExpandedIndex seed = samples::three_table_seed();
    const auto x = F.alphabet().parse("acdb");
    CHECK(encode(F, seed, x).str() == "10111101");
    CHECK(state_label(final_state(F, seed, x)) == "{00,01,10,11}|000");
    CHECK(flush(F, final_state(F, seed, x)).str() == "00");
    CHECK(decode(F, seed, BitString("1011110100")) == x);
    CHECK(encode(F, {SubsetK::from_strings(2, {"00"}), PhiMap::parse("010")}, {3}).str() == "011");
    CHECK(encode(F, seed, {}).empty());
  }

  TEST_CASE("fourth decoding step") {
    const PhiMap phi = PhiMap::parse("001");
    CHECK(invert(phi).apply(BitString("110100")).str() == "100100");
    const Rct F = samples::three_table_rct();
    CHECK(decode(F, {kS0010, phi}, BitString("110100")) == std::vector<int>{1});
  }

  TEST_CASE("flush-only input decodes to nothing") {
    const Rct F = samples::three_table_rct();
    const ExpandedIndex seed = samples::three_table_seed();
    CHECK(decode(F, seed, flush(F, seed)).empty());
  }

  TEST_CASE("flush lies in the enumerated continuation set") {
    const Rct F = samples::three_table_rct();
    for (int d = 0; d < F.size(); ++d) {
      for (const auto& phi : PhiMap::all(2)) {
        const ExpandedIndex state{F.domain(d), phi};
        const BitString c = flush(F, state);
        const auto tails = enumerated_tails(F, state, 6);
        REQUIRE_FALSE(tails.empty());
        CHECK(c == *tails.begin());
      }
    }
  }

  TEST_CASE("corrupt streams") {
    const Rct F = samples::three_table_rct();
    const ExpandedIndex seed = samples::three_table_seed();
    CHECK_THROWS_AS(decode(F, seed, BitString("1")), CorruptInputError);
    CHECK_THROWS_AS(decode(F, seed, BitString("")), CorruptInputError);
    try {
      decode(F, seed, BitString("1"));
      FAIL("expected CorruptInputError");
    } catch (const CorruptInputError& e) {
      CHECK(e.offset == 0);
    }
    // a prefix of a valid stream may stop before the last symbol is settled
    CHECK(decode(F, seed, BitString("101111010")) == F.alphabet().parse("acd"));
  }

  TEST_CASE("streaming decoder agrees with batch decoding") {
    const Rct F = samples::three_table_rct();
    const ExpandedIndex seed = samples::three_table_seed();
    const auto x = F.alphabet().parse("dcbaabcddcab");
    const BitString c = encode(F, seed, x) + flush(F, final_state(F, seed, x));
    Decoder dec(F, seed);
    std::vector<int> got;
    for (std::size_t i = 0; i < c.size(); ++i) {
      BitString one;
      one.push_back(c[i]);
      dec.feed(one);
      for (int s : dec.poll()) {
        got.push_back(s);
      }
      CHECK(dec.buffered() <= F.max_codeword_length() + 2);
    }
    for (int s : dec.finish()) {
      got.push_back(s);
    }
    CHECK(got == x);
    CHECK_THROWS_AS(dec.feed(BitString("0")), DomainError);
  }

  TEST_CASE("encoder agrees with the explored machine") {
    const Rct F = samples::three_table_rct();
    const ExpandedIndex seed = samples::three_table_seed();
    const ExpandedMachine m = explore(F, seed);
    const CodeTuple machine = m.to_codetuple(F);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> x(rng() % 30);
      for (int& s : x) {
        s = static_cast<int>(rng() % 4);
      }
      CHECK(encode(F, seed, x) == f_star(machine, 0, x));
    }
  }

  TEST_CASE("roundtrip on reduced random codes") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
      const int k = trial % 4;
      const CodeTuple G =
          testsupport::random_valid_codetuple(rng, k, 2 + trial % 3, 1 + trial % 3, 4);
      const Rct F = to_rct(G, SourceDist::uniform(G.alphabet())).rct;
      const ExpandedIndex seed{F.domain(0), PhiMap::identity(k)};
      std::vector<int> x(rng() % 51);
      for (int& s : x) {
        s = static_cast<int>(rng() % F.alphabet().size());
      }
      const BitString c = encode(F, seed, x) + flush(F, final_state(F, seed, x));
      CHECK(decode(F, seed, c) == x);
    }
  }

  TEST_CASE("ambiguous code is detected") {
    const Alphabet ab({"a", "b"});
    const SubsetK both = SubsetK::full(1);
    const Rct F(1, ab, {{both, {BitString("0"), BitString("0")}, {both, both}, {}}});
    CHECK_THROWS_AS(decode(F, {both, PhiMap::identity(1)}, BitString("00")), InvalidCodeError);
  }

  TEST_CASE("flush needs a non-empty continuation") {
    const Alphabet ab({"a", "b"});
    const SubsetK zero = SubsetK::from_strings(1, {"0"});
    const Rct F(1, ab, {{zero, {BitString(""), BitString("")}, {zero, zero}, {}}});
    CHECK_THROWS_AS(flush(F, {zero, PhiMap::identity(1)}), FlushError);
  }
}
