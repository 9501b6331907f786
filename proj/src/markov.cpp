#include "delaycode/markov.hpp"

#include "delaycode/error.hpp"

#include <algorithm>

namespace delaycode {

const std::vector<Rational>& MarkovReport::stationary() const {
  if (!regular) {
    throw NotRegularError("code-tuple is not regular: no unique stationary distribution");
  }
  return pi;
}

const Rational& MarkovReport::average_length() const {
  if (!regular) {
    throw NotRegularError("code-tuple is not regular: average length undefined");
  }
  return L;
}

Digraph transition_graph(const CodeTuple& F) {
  Digraph g(static_cast<std::size_t>(F.size()));
  for (int i = 0; i < F.size(); ++i) {
    auto& out = g[static_cast<std::size_t>(i)];
    out = F.table(i).tau;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

std::vector<int> reachable_core(const CodeTuple& F) {
  const Digraph g = transition_graph(F);
  std::vector<bool> common(g.size(), true);
  for (int i = 0; i < F.size(); ++i) {
    const auto seen = reachable_from(g, i);
    for (std::size_t v = 0; v < g.size(); ++v) {
      common[v] = common[v] && seen[v];
    }
  }
  std::vector<int> core;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (common[v]) {
      core.push_back(static_cast<int>(v));
    }
  }
  return core;
}

bool is_regular(const CodeTuple& F) { return !reachable_core(F).empty(); }

MarkovReport markov_analyze(const CodeTuple& F, const SourceDist& mu) {
  const int n = F.size();
  const int symbols = static_cast<int>(F.alphabet().size());
  if (static_cast<int>(mu.size()) != symbols) {
    throw DomainError("distribution does not match the alphabet");
  }
  MarkovReport r;
  r.Q.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  r.L_table.assign(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < symbols; ++s) {
      r.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(F.tau(i, s))] += mu[s];
      r.L_table[static_cast<std::size_t>(i)] += mu[s] * static_cast<long>(F.f(i, s).size());
    }
  }
  r.core = reachable_core(F);
  r.regular = !r.core.empty();
  if (!r.regular) {
    return r;
  }

  // π on the core: Σ_i π_i Q_ij = π_j for each core j, one row replaced by Σπ = 1.
  const std::size_t m = r.core.size();
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m));
  std::vector<Rational> b(m);
  for (std::size_t row = 0; row < m; ++row) {
    const auto j = static_cast<std::size_t>(r.core[row]);
    for (std::size_t col = 0; col < m; ++col) {
      const auto i = static_cast<std::size_t>(r.core[col]);
      A[row][col] = r.Q[i][j] - (i == j ? 1 : 0);
    }
  }
  std::fill(A[0].begin(), A[0].end(), Rational(1));
  b[0] = 1;
  const auto solved = solve_unique(A, b);
  if (!solved) {
    throw InternalError("stationary equations on R_F are singular");
  }
  r.pi.assign(static_cast<std::size_t>(n), Rational(0));
  r.L = 0;
  for (std::size_t col = 0; col < m; ++col) {
    const auto i = static_cast<std::size_t>(r.core[col]);
    r.pi[i] = (*solved)[col];
    r.L += r.pi[i] * r.L_table[i];
  }
  return r;
}

Rational average_length(const CodeTuple& F, const SourceDist& mu) {
  return markov_analyze(F, mu).average_length();
}

CodeTuple restrict_to(const CodeTuple& F, const std::vector<int>& keep) {
  if (keep.empty()) {
    throw DomainError("restriction to an empty set of tables");
  }
  std::vector<int> pos(static_cast<std::size_t>(F.size()), -1);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    pos[static_cast<std::size_t>(keep[j])] = static_cast<int>(j);
  }
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (int i : keep) {
    Table t = F.table(i);
    for (int& target : t.tau) {
      target = pos[static_cast<std::size_t>(target)];
      if (target < 0) {
        throw DomainError("restriction set is not closed: table " + id_str(F.id(i)) +
                          " leaves it");
      }
    }
    ids.push_back(F.id(i));
    tables.push_back(std::move(t));
  }
  return CodeTuple(F.k(), F.alphabet(), std::move(ids), std::move(tables));
}

CodeTuple core_restrict(const CodeTuple& F) {
  const auto core = reachable_core(F);
  if (core.empty()) {
    throw NotRegularError("code-tuple is not regular: R_F is empty");
  }
  return restrict_to(F, core);
}

std::vector<std::vector<int>> minimal_closed_sets(const CodeTuple& F) {
  return bottom_components(transition_graph(F));
}

std::vector<Rational> potentials(const CodeTuple& F, const SourceDist& mu) {
  const MarkovReport r = markov_analyze(F, mu);
  const Rational& L = r.average_length();
  const auto n = static_cast<std::size_t>(F.size());
  if (n == 1) {
    return {Rational(0)};
  }
  // unknowns h_1..h_{n-1}; row A: Σ_{A'} Q_{A,A'} h_{A'} - h_A = L - L_A
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n - 1));
  std::vector<Rational> b(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t col = 1; col < n; ++col) {
      A[a][col - 1] = r.Q[a][col] - (a == col ? 1 : 0);
    }
    b[a] = L - r.L_table[a];
  }
  const auto solved = solve_unique(A, b);
  if (!solved) {
    throw InternalError("potential equations have no unique solution");
  }
  std::vector<Rational> h(n);
  for (std::size_t col = 1; col < n; ++col) {
    h[col] = (*solved)[col - 1];
  }
  return h;
}

}  // namespace delaycode
