#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/graph.hpp"
#include "delaycode/rational.hpp"

#include <vector>

namespace delaycode {

struct MarkovReport {
  std::vector<std::vector<Rational>> Q;  // Q[i][j] = Σ_{s: τ_i(s)=j} μ(s)
  std::vector<Rational> L_table;         // L_i = Σ_s |f_i(s)| μ(s)
  std::vector<int> core;                 // R_F, ascending
  bool regular = false;
  std::vector<Rational> pi;  // empty unless regular
  Rational L;                // zero unless regular

  const std::vector<Rational>& stationary() const;
  const Rational& average_length() const;
};

/// Transition graph i → τ_i(s).
Digraph transition_graph(const CodeTuple& F);

/// R_F: tables reachable from every table.
std::vector<int> reachable_core(const CodeTuple& F);
bool is_regular(const CodeTuple& F);

/// Q, L_i and R_F always; π and L exactly when R_F is non-empty. π is zero
/// outside R_F and solved on R_F, which is closed.
MarkovReport markov_analyze(const CodeTuple& F, const SourceDist& mu);

/// L(F); NotRegularError when F is not regular.
Rational average_length(const CodeTuple& F, const SourceDist& mu);

/// The sub-tuple on `keep` (ascending positions). DomainError unless `keep`
/// is non-empty and closed under τ.
CodeTuple restrict_to(const CodeTuple& F, const std::vector<int>& keep);

/// Restriction to R_F. NotRegularError when R_F is empty.
CodeTuple core_restrict(const CodeTuple& F);

/// Minimal non-empty closed sets: the bottom strongly connected components
/// of the transition graph, ordered by smallest member.
std::vector<std::vector<int>> minimal_closed_sets(const CodeTuple& F);

/// h with L = L_A + Σ_{A'} Q_{A,A'} (h_{A'} - h_A) for every table, anchored
/// at h = 0 on the first table. NotRegularError for non-regular F.
std::vector<Rational> potentials(const CodeTuple& F, const SourceDist& mu);

}  // namespace delaycode
