#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/rational.hpp"
#include "delaycode/rct.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace delaycode {

enum class StepKind { kCoreRestrict, kMerge, kRelabel, kFinalize };
std::string step_kind_name(StepKind kind);

struct TraceStep {
  StepKind kind = StepKind::kCoreRestrict;
  std::string detail;
  std::optional<std::pair<TableId, TableId>> merged;  // (kept, dropped)
  std::vector<Rational> potentials;                   // in table order, when used
  Rational L_before;
  Rational L_after;
  std::optional<bool> k_dec;  // decodability of the intermediate tuple
  std::size_t tables_after = 0;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  /// L never increases from one step to the next.
  bool monotone() const;
};

/// Merges tables that share a P^k set, then relabels every table by its
/// P^k set (tables sorted by label). Each merge redirects edges into the
/// group to its minimum-potential member (ties: smallest id) and drops
/// whatever leaves R_F. NotRegularError for non-regular F.
CodeTuple relabel_by_prefsets(const CodeTuple& F, const SourceDist& mu,
                              ReductionTrace* trace = nullptr);

/// Redirects every edge into the class of B (restricted to the domain) to
/// the member of minimum potential, ties to the smallest label. The result
/// is not core-restricted. DomainError unless F is irreducible, labelled by
/// subsets, and B, B2 are distinct equivalent domain labels.
CodeTuple merge_equivalent_step(const CodeTuple& F, const SourceDist& mu, const SubsetK& B,
                                const SubsetK& B2);

struct Reduction {
  Rct rct;
  ReductionTrace trace;
  Rational L_input;
  Rational L_output;
};

/// An RCT with average length at most L(F). F must be regular, extendable
/// and k-bit delay decodable, else DomainError. InternalError if the result
/// fails validation or L increased anywhere.
Reduction to_rct(const CodeTuple& F, const SourceDist& mu);

}  // namespace delaycode
