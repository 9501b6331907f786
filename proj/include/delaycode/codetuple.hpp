#pragma once

#include "delaycode/bits.hpp"
#include "delaycode/rational.hpp"
#include "delaycode/subset.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace delaycode {

/// Source alphabet: at least two distinct, non-empty symbol names. Symbols
/// are referred to by their position everywhere else.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(int s) const { return symbols_[static_cast<std::size_t>(s)]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  int index_of(std::string_view name) const;

  /// Whitespace-separated names if the text contains whitespace, otherwise
  /// one character per symbol (only when every name is a single character).
  std::vector<int> parse(std::string_view text) const;
  /// Concatenated when every name is one character, space-separated otherwise.
  std::string format(const std::vector<int>& seq) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// Exact probabilities, one per symbol; each in (0,1), summing to 1.
class SourceDist {
 public:
  SourceDist() = default;
  SourceDist(const Alphabet& alphabet, std::vector<Rational> p);
  static SourceDist uniform(const Alphabet& alphabet);

  std::size_t size() const { return p_.size(); }
  const Rational& operator[](int s) const { return p_[static_cast<std::size_t>(s)]; }
  const std::vector<Rational>& values() const { return p_; }

 private:
  std::vector<Rational> p_;
};

/// A code table index: a subset of C^k or an opaque label.
using TableId = std::variant<SubsetK, std::string>;
std::string id_str(const TableId& id);

struct Table {
  std::vector<BitString> f;  // per symbol
  std::vector<int> tau;      // per symbol, position in the domain
  friend bool operator==(const Table&, const Table&) = default;
};

/// A code-tuple: tables f_i with next-table maps τ_i, all targets in the domain.
class CodeTuple {
 public:
  CodeTuple(int k, Alphabet alphabet, std::vector<TableId> ids, std::vector<Table> tables);

  int k() const { return k_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(tables_.size()); }
  const TableId& id(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  const std::vector<TableId>& ids() const { return ids_; }
  const Table& table(int i) const { return tables_[static_cast<std::size_t>(i)]; }
  const std::vector<Table>& tables() const { return tables_; }
  const BitString& f(int i, int s) const { return table(i).f[static_cast<std::size_t>(s)]; }
  int tau(int i, int s) const { return table(i).tau[static_cast<std::size_t>(s)]; }
  /// Position of `id` in the domain; DomainError if absent.
  int index_of(const TableId& id) const;
  std::size_t max_codeword_length() const;

 private:
  int k_;
  Alphabet alphabet_;
  std::vector<TableId> ids_;
  std::vector<Table> tables_;
};

/// f*_i(x): the codeword sequence for x when x_1 is encoded with table i.
BitString f_star(const CodeTuple& F, int i, const std::vector<int>& x);
/// τ*_i(x): the table used after encoding x from table i.
int tau_star(const CodeTuple& F, int i, const std::vector<int>& x);

/// levels[j][i] = P^j of table i for j = 0..max_level: the j-bit strings
/// that prefix some f*_i(x). Level j is the least fixpoint of
///   P^j_i = ∪_s [ f_i(s) · P^{max(0, j-|f_i(s)|)}_{τ_i(s)} ]_j
/// over the already computed lower levels.
using PrefLevels = std::vector<std::vector<SubsetK>>;
PrefLevels pref_levels(const CodeTuple& F, int max_level);

/// P^k for every table.
std::vector<SubsetK> pref_sets(const CodeTuple& F);

/// P̄^k_i(b): k-bit continuations after b through codewords strictly longer
/// than b. `levels` must reach level k.
SubsetK pref_bar(const CodeTuple& F, const PrefLevels& levels, int i, const BitString& b);
SubsetK pref_bar(const CodeTuple& F, int i, const BitString& b);

struct KDecViolation {
  int table = 0;
  int symbol = 0;
  int other = -1;  // -1 for condition (a), the second symbol for (b)
  SubsetK overlap;
};

struct KDecReport {
  bool ok = true;
  std::vector<KDecViolation> violations;
};

KDecReport check_k_dec(const CodeTuple& F);
bool is_k_dec(const CodeTuple& F);
/// Every table has a non-empty P^1.
bool is_extendable(const CodeTuple& F);

/// The k-bit tail appended after encoding that ends at table i: the
/// smallest member of P̄^k_i(λ). Continuations through non-empty codewords
/// only, so no symbol with an empty codeword can also match the tail.
/// FlushError when that set is empty (every codeword of table i is λ).
BitString terminating_tail(const CodeTuple& F, const PrefLevels& levels, int i);

/// Decodes f*_{i0}(x) followed by a k-bit tail. CorruptInputError if the
/// stream does not end with exactly k unconsumed bits; InvalidCodeError if
/// two symbols match at some step.
std::vector<int> decode_codetuple(const CodeTuple& F, int i0, const BitString& c);

}  // namespace delaycode
