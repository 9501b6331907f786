#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/phi.hpp"
#include "delaycode/subset.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace delaycode {

struct RctTable {
  SubsetK A;
  std::vector<BitString> f;                // per symbol
  std::vector<SubsetK> tau;                // per symbol, any set in a represented class
  std::vector<std::optional<PhiMap>> psi;  // optional per-symbol override, may be empty
};

/// A reduced code-tuple. Domain elements are pairwise inequivalent and act
/// as the representatives of their classes; every target τ̃_A(s) must be
/// equivalent to exactly one of them. ψ_{A,s} maps that representative onto
/// τ̃_A(s): transport(rep, target) unless overridden.
class Rct {
 public:
  Rct(int k, Alphabet alphabet, std::vector<RctTable> tables);

  int k() const { return k_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(tables_.size()); }
  const RctTable& table(int i) const { return tables_[static_cast<std::size_t>(i)]; }
  const std::vector<RctTable>& tables() const { return tables_; }
  const SubsetK& domain(int i) const { return table(i).A; }
  const BitString& f(int i, int s) const { return table(i).f[static_cast<std::size_t>(s)]; }
  const SubsetK& tau(int i, int s) const { return table(i).tau[static_cast<std::size_t>(s)]; }
  /// Domain position of the representative of τ̃_i(s).
  int rep(int i, int s) const { return rep_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]; }
  const PhiMap& psi(int i, int s) const {
    return psi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
  }
  bool has_psi_override(int i, int s) const;
  /// DomainError if A is not a domain element.
  int index_of(const SubsetK& A) const;
  std::size_t max_codeword_length() const;

 private:
  int k_;
  Alphabet alphabet_;
  std::vector<RctTable> tables_;
  std::vector<std::vector<int>> rep_;
  std::vector<std::vector<PhiMap>> psi_;
};

/// ∪_s [f̃_A(s) τ̃_A(s)]_k.
SubsetK pref_set_rct(const Rct& F, const SubsetK& A);
/// ∪_{s: f̃_A(s) ≻ b} [b^{-1} f̃_A(s) τ̃_A(s)]_k.
SubsetK pref_bar_rct(const Rct& F, const SubsetK& A, const BitString& b);

struct ValidationReport {
  bool compliant = false;
  bool extendable = false;
  bool k_dec = false;
  bool regular = false;
  std::optional<Rational> L;  // set when regular and a distribution was given
  std::vector<std::string> issues;
  bool all() const { return compliant && extendable && k_dec && regular; }
};

ValidationReport validate(const Rct& F, const std::optional<SourceDist>& mu = std::nullopt);

/// The code-tuple on the same domain with each target snapped to its representative.
CodeTuple direct_realization(const Rct& F);

/// A table of the expanded machine: a domain element and a member of Φ_k.
struct ExpandedIndex {
  SubsetK A;
  PhiMap phi;
  friend bool operator==(const ExpandedIndex&, const ExpandedIndex&) = default;
  friend std::strong_ordering operator<=>(const ExpandedIndex&, const ExpandedIndex&) = default;
};

/// "{00,10}|101"
std::string state_label(const ExpandedIndex& x);

/// Emits φ(f̃_A(s)) and moves to (rep(τ̃_A(s)), φ|_{f̃_A(s)} ∘ ψ_{A,s}).
std::pair<BitString, ExpandedIndex> expand_index_step(const Rct& F, const ExpandedIndex& state,
                                                      int s);

/// The part of the expanded machine reachable from a seed, in BFS order.
struct ExpandedMachine {
  std::vector<ExpandedIndex> states;
  std::vector<std::vector<int>> next;        // next[state][s]
  std::vector<std::vector<BitString>> emit;  // emit[state][s]
  int index_of(const ExpandedIndex& x) const;
  /// As a code-tuple with label ids (state_label), tables in BFS order.
  CodeTuple to_codetuple(const Rct& F) const;
};

ExpandedMachine explore(const Rct& F, const ExpandedIndex& seed);

/// A regular, extendable, k-bit delay decodable code-tuple with the same
/// average length as F: the bottom component of the reachable expanded
/// machine that contains the smallest state, tables sorted by state.
/// InvalidRctError unless all four validation flags hold.
CodeTuple expand_minimal(const Rct& F, const ExpandedIndex& seed);

/// Every state of [F̃]×Φ_k; guarded at |domain|·2^(2^k-1) ≤ 2^20.
CodeTuple expand_full(const Rct& F);

/// True iff every state emits the same number of bits for x and that number
/// equals the direct realization's. All states must share one domain element.
bool length_invariance_check(const Rct& F, const std::vector<int>& x,
                             const std::vector<ExpandedIndex>& states);

}  // namespace delaycode
