// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if
// any criterion fails.

#include "commands.hpp"
#include "delaycode/codec.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/orbit.hpp"
#include "delaycode/reduce.hpp"
#include "delaycode/samples.hpp"
#include "delaycode/search.hpp"
#include "support/oracles.hpp"
#include "support/random_codes.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace delaycode;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) {
      failures.push_back(what);
    }
  }
  void within(Clock::time_point t0, double limit, const std::string& what) {
    const double s = seconds_since(t0);
    require(s < limit, what + " took " + std::to_string(s) + " s, limit " +
                           std::to_string(limit) + " s");
  }
};

std::vector<int> random_payload(std::mt19937_64& rng, std::size_t symbols, std::size_t max_len) {
  std::vector<int> x(rng() % (max_len + 1));
  for (int& s : x) {
    s = static_cast<int>(rng() % symbols);
  }
  return x;
}

void ac1(Check& c) {
  const std::vector<std::string> a = {"2",         "3",         "6",
                                      "21",        "231",       "26796",
                                      "359026206", "64449908476890321"};
  const std::vector<std::string> restricted = {"1",         "3",         "15",
                                               "210",       "26565",     "358999410",
                                               "64449908117864115"};
  auto t0 = Clock::now();
  for (int k = 0; k <= 7; ++k) {
    c.require(count_classes(k).str() == a[static_cast<std::size_t>(k)],
              "a_" + std::to_string(k) + " = " + count_classes(k).str());
  }
  for (int k = 1; k <= 7; ++k) {
    c.require(count_classes_restricted(k).str() == restricted[static_cast<std::size_t>(k - 1)],
              "a'_" + std::to_string(k));
  }
  c.within(t0, 0.001 * 15, "closed-form counts");

  t0 = Clock::now();
  const ClassCheck k3 = verify_classes(3);
  c.require(k3.ok() && k3.subsets == 256 && k3.groups == 21 && k3.orbit_check_done,
            "k=3 brute force");
  c.within(t0, 1.0, "k=3 brute force");

  t0 = Clock::now();
  const ClassCheck k4 = verify_classes(4);
  c.require(k4.ok() && k4.subsets == 65536 && k4.groups == 231, "k=4 brute force");
  c.within(t0, 30.0, "k=4 brute force");
}

void ac2(Check& c) {
  const CodeTuple T = samples::three_table_tuple();
  c.require(f_star(T, 0, T.alphabet().parse("badb")).str() == "1000001111110", "f*_0(badb)");

  const Rct F = samples::three_table_rct();
  const ExpandedIndex seed = samples::three_table_seed();
  const auto x = F.alphabet().parse("acdb");
  c.require(encode(F, seed, x).str() == "10111101", "encode(acdb)");
  c.require(decode(F, seed, BitString("1011110100")) == x, "decode(1011110100)");
  c.require(PhiMap::parse("101").apply(BitString("1001")).str() == "0101", "φ101(1001)");
  c.require(PhiMap::parse("010").apply(BitString("001")).str() == "011", "φ010(001)");

  const std::vector<std::string> emitted = {"1", "", "011", "1101"};
  const std::vector<std::string> states = {"{00,10}|010", "{00}|010", "{00,10}|001",
                                           "{00,01,10,11}|000"};
  ExpandedIndex state = seed;
  for (std::size_t t = 0; t < x.size(); ++t) {
    auto [bits, next] = expand_index_step(F, state, x[t]);
    c.require(bits.str() == emitted[t] && state_label(next) == states[t],
              "step " + std::to_string(t + 1) + ": " + bits.str() + " " + state_label(next));
    state = next;
  }
}

void ac3(Check& c) {
  const Rct F = samples::three_table_rct();
  const auto set = [](std::vector<std::string> m) { return SubsetK::from_strings(2, m); };
  const SubsetK s00 = set({"00"});
  const SubsetK s0010 = set({"00", "10"});
  const SubsetK full = SubsetK::full(2);
  for (const auto& A : {s00, s0010, full}) {
    c.require(pref_set_rct(F, A) == A, "P of " + A.str());
  }
  struct Cell {
    SubsetK A;
    const char* symbol;
    SubsetK expected;
  };
  const std::vector<Cell> cells = {
      {s00, "a", {}},          {s0010, "a", set({"00"})}, {full, "a", set({"00"})},
      {s00, "b", {}},          {s0010, "b", {}},          {full, "b", set({"00"})},
      {s00, "c", set({"00", "10", "11"})}, {s0010, "c", set({"10"})}, {full, "c", {}},
      {s00, "d", {}},          {s0010, "d", {}},          {full, "d", {}},
  };
  for (const auto& cell : cells) {
    const int i = F.index_of(cell.A);
    const int s = F.alphabet().index_of(cell.symbol);
    const SubsetK got = pref_bar_rct(F, cell.A, F.f(i, s));
    c.require(got.mask() == cell.expected.mask(),
              std::string("P-bar at ") + cell.A.str() + ", " + cell.symbol + " = " + got.str());
  }
}

void check_phi_triple(Check& c, const PhiMap& phi, const PhiMap& psi, const BitString& d,
                      const std::vector<BitString>& strings) {
  const PhiMap q = quotient(phi, d);
  const PhiMap comp = compose(phi, psi);
  const PhiMap inv = invert(phi);
  for (const auto& b : strings) {
    c.require(phi.apply(d + b) == phi.apply(d) + q.apply(b), "quotient factorization");
    c.require(q.star(b) == phi.star(d + b), "quotient table");
    c.require(comp.star(b) == (phi.star(psi.apply(b)) != psi.star(b)), "composition table");
    c.require(comp.apply(b) == phi.apply(psi.apply(b)), "composition");
    c.require(inv.apply(phi.apply(b)) == b, "inverse");
  }
  c.require(compose(phi, inv).is_identity() && compose(inv, phi).is_identity(), "inverse");
  c.require(compose(phi, PhiMap::identity(phi.k())) == phi, "identity");
}

void check_reconstruction(Check& c, const PhiMap& phi, std::size_t n) {
  const ExplicitMap ref(phi.k(), phi.table(), static_cast<int>(n));
  for (const auto& b : all_strings_up_to(n)) {
    c.require(phi.apply(b).str() == ref(b.str()), "reconstruction of " + phi.str());
  }
}

void ac4(Check& c) {
  const auto t0 = Clock::now();
  const auto maps2 = PhiMap::all(2);
  const auto short_strings = all_strings_up_to(3);
  for (const auto& phi : maps2) {
    check_reconstruction(c, phi, 5);
    for (const auto& psi : maps2) {
      for (const auto& d : short_strings) {
        check_phi_triple(c, phi, psi, d, short_strings);
      }
      for (const auto& chi : maps2) {
        c.require(compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi)),
                  "associativity");
      }
    }
  }

  const auto maps3 = PhiMap::all(3);
  c.require(maps3.size() == 128, "|Φ_3|");
  std::mt19937_64 rng(41);
  for (const auto& phi : maps3) {
    check_reconstruction(c, phi, 5);
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const PhiMap& phi = maps3[rng() % maps3.size()];
    const PhiMap& psi = maps3[rng() % maps3.size()];
    const PhiMap& chi = maps3[rng() % maps3.size()];
    const BitString& d = short_strings[rng() % short_strings.size()];
    check_phi_triple(c, phi, psi, d, short_strings);
    c.require(compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi)),
              "associativity");
  }
  c.within(t0, 10.0, "Φ_k checks");
}

void ac5(Check& c) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 3;
    const int symbols = 2 + static_cast<int>(rng() % 2);
    const int tables = 1 + static_cast<int>(rng() % 3);
    const CodeTuple F = random_codetuple(rng, k, symbols, tables, 3);
    const auto P = pref_sets(F);
    for (int i = 0; i < F.size(); ++i) {
      // every f* that reaches k bits does so within |F|·k + 1 symbols
      c.require(as_strings(P[static_cast<std::size_t>(i)]) ==
                    enumerate_pref_set(F, i, k, F.size() * (k + 1) + 1),
                "trial " + std::to_string(trial) + " table " + std::to_string(i));
    }
  }
  c.within(t0, 30.0, "prefix-set oracle");
}

void ac6(Check& c) {
  const CodeTuple F = samples::three_table_tuple();
  const SourceDist mu = SourceDist::uniform(F.alphabet());
  const MarkovReport r = markov_analyze(F, mu);
  const std::vector<Rational> pi = {Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  c.require(r.pi == pi, "π of the three-table tuple");
  c.require(r.L == Rational(85, 24), "L of the three-table tuple");
  const auto oracle = stationary_oracle(F, mu);
  c.require(oracle && *oracle == pi, "independent solve");

  std::mt19937_64 rng(61);
  int done = 0;
  while (done < 200) {
    const int symbols = 2 + static_cast<int>(rng() % 3);
    const CodeTuple G = random_codetuple(rng, static_cast<int>(rng() % 3), symbols,
                                         1 + static_cast<int>(rng() % 4), 3);
    if (!is_regular(G)) {
      continue;
    }
    ++done;
    const SourceDist m = random_mu(rng, symbols);
    const auto p = markov_analyze(G, m).pi;
    Rational total = 0;
    for (const auto& v : p) {
      total += v;
    }
    c.require(total == 1, "Σπ = 1");
    for (int j = 0; j < G.size(); ++j) {
      Rational flow = 0;
      for (int i = 0; i < G.size(); ++i) {
        for (int s = 0; s < symbols; ++s) {
          if (G.tau(i, s) == j) {
            flow += p[static_cast<std::size_t>(i)] * m[s];
          }
        }
      }
      c.require(flow == p[static_cast<std::size_t>(j)], "πQ = π");
    }
  }
}

void ac7(Check& c) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = trial % 4;
    const int symbols = 2 + static_cast<int>(rng() % 3);
    const CodeTuple G =
        random_valid_codetuple(rng, k, symbols, 1 + static_cast<int>(rng() % 3), 4);
    const Rct F = to_rct(G, random_mu(rng, symbols)).rct;
    const ExpandedIndex seed{F.domain(static_cast<int>(rng() % static_cast<unsigned>(F.size()))),
                             PhiMap(k, rng() & ((std::uint64_t{1} << ((1 << k) - 1)) - 1))};
    const auto x = random_payload(rng, F.alphabet().size(), 50);
    const BitString bits = encode(F, seed, x) + flush(F, final_state(F, seed, x));
    c.require(decode(F, seed, bits) == x, "roundtrip trial " + std::to_string(trial));
  }
  c.within(t0, 60.0, "roundtrips");
}

void ac8(Check& c) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = trial % 3;
    const int symbols = 2 + static_cast<int>(rng() % 3);
    const CodeTuple F =
        random_valid_codetuple(rng, k, symbols, 1 + static_cast<int>(rng() % 4), 4);
    const SourceDist mu = random_mu(rng, symbols);
    const Reduction r = to_rct(F, mu);
    const std::string tag = "trial " + std::to_string(trial);
    c.require(validate(r.rct, mu).all(), tag + ": validation");
    c.require(r.L_output <= average_length(F, mu), tag + ": L~ ≤ L");
    c.require(r.trace.monotone(), tag + ": monotone trace");
    c.require(BigInt(r.rct.size()) <= count_classes(k), tag + ": domain size");
    const CodeTuple E = expand_minimal(r.rct, {r.rct.domain(0), PhiMap::identity(k)});
    c.require(average_length(E, mu) == r.L_output, tag + ": expansion length");
  }
  const CodeTuple M = samples::mirror_pair();
  const SourceDist mu = SourceDist::uniform(M.alphabet());
  const Reduction r = to_rct(M, mu);
  c.require(r.rct.size() == 1 && r.L_output == average_length(M, mu), "mirror pair");
}

void ac9(Check& c) {
  const Rct F = samples::three_table_rct();
  const CodeTuple D = direct_realization(F);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_payload(rng, F.alphabet().size(), 40);
    for (int d = 0; d < F.size(); ++d) {
      const std::size_t direct = f_star(D, D.index_of(F.domain(d)), x).size();
      for (const auto& phi : PhiMap::all(2)) {
        c.require(encode(F, {F.domain(d), phi}, x).size() == direct,
                  "length at " + F.domain(d).str() + "|" + phi.str());
      }
    }
  }
}

void ac10(Check& c) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int symbols = 2 + trial % 2;
    const SourceDist mu = random_mu(rng, symbols);
    std::string mu_text;
    for (int s = 0; s < symbols; ++s) {
      mu_text += (s == 0 ? "" : ",") + to_fraction(mu[s]);
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"micro-search", "--mu", mu_text, "--max-len", "3"}, out, err);
    c.require(code == 0 && out.str().find("matches huffman: yes") != std::string::npos,
              "μ = " + mu_text);
  }
  c.within(t0, 300.0, "micro-search");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"AC1 orbit counts", ac1},
      {"AC2 golden traces", ac2},
      {"AC3 prefix-set table", ac3},
      {"AC4 Φ_k calculus", ac4},
      {"AC5 prefix sets vs enumeration", ac5},
      {"AC6 exact Markov analysis", ac6},
      {"AC7 encode/decode roundtrip", ac7},
      {"AC8 reduction contract", ac8},
      {"AC9 length invariance", ac9},
      {"AC10 micro-search matches Huffman", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto t0 = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << name << " (" << s << " s)";
    for (const auto& f : c.failures) {
      std::cout << "\n    " << f;
    }
    std::cout << std::endl;
    failed += c.failures.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
