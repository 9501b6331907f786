#include "delaycode/rct.hpp"

#include "delaycode/error.hpp"
#include "delaycode/graph.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace delaycode {

Rct::Rct(int k, Alphabet alphabet, std::vector<RctTable> tables)
    : k_(k), alphabet_(std::move(alphabet)), tables_(std::move(tables)) {
  if (k_ < 0 || k_ > kMaxSubsetK) {
    throw InvalidRctError("k = " + std::to_string(k_) + " outside 0..6");
  }
  if (tables_.empty()) {
    throw InvalidRctError("RCT needs at least one table");
  }
  const std::size_t symbols = alphabet_.size();
  std::vector<SubsetK> canons;
  for (const auto& t : tables_) {
    if (t.A.k() != k_) {
      throw InvalidRctError("domain element " + t.A.str() + " is not a subset of C^" +
                            std::to_string(k_));
    }
    if (t.f.size() != symbols || t.tau.size() != symbols) {
      throw InvalidRctError("table " + t.A.str() + " does not cover every symbol");
    }
    if (!t.psi.empty() && t.psi.size() != symbols) {
      throw InvalidRctError("table " + t.A.str() + " has a malformed psi list");
    }
    canons.push_back(canonicalize(t.A).canon);
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    for (std::size_t j = i + 1; j < tables_.size(); ++j) {
      if (canons[i] == canons[j]) {
        throw InvalidRctError("domain elements " + tables_[i].A.str() + " and " +
                              tables_[j].A.str() + " are equivalent");
      }
    }
  }
  rep_.resize(tables_.size());
  psi_.resize(tables_.size());
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& t = tables_[i];
    for (std::size_t s = 0; s < symbols; ++s) {
      const SubsetK& target = t.tau[s];
      if (target.k() != k_) {
        throw InvalidRctError("target " + target.str() + " is not a subset of C^" +
                              std::to_string(k_));
      }
      const SubsetK c = canonicalize(target).canon;
      const auto it = std::find(canons.begin(), canons.end(), c);
      if (it == canons.end()) {
        throw InvalidRctError("target " + target.str() + " of table " + t.A.str() +
                              " is not equivalent to any domain element");
      }
      const auto r = static_cast<std::size_t>(it - canons.begin());
      rep_[i].push_back(static_cast<int>(r));
      if (!t.psi.empty() && t.psi[s]) {
        const PhiMap& given = *t.psi[s];
        if (given.k() != k_ || apply_set(given, tables_[r].A) != target) {
          throw InvalidRctError("psi override " + given.str() + " for table " + t.A.str() +
                                " symbol '" + alphabet_.name(static_cast<int>(s)) +
                                "' does not map " + tables_[r].A.str() + " onto " +
                                target.str());
        }
        psi_[i].push_back(given);
      } else {
        psi_[i].push_back(transport(tables_[r].A, target));
      }
    }
  }
}

bool Rct::has_psi_override(int i, int s) const {
  const auto& p = table(i).psi;
  return !p.empty() && p[static_cast<std::size_t>(s)].has_value();
}

int Rct::index_of(const SubsetK& A) const {
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].A == A) {
      return static_cast<int>(i);
    }
  }
  throw DomainError(A.str() + " is not in the RCT domain");
}

std::size_t Rct::max_codeword_length() const {
  std::size_t m = 0;
  for (const auto& t : tables_) {
    for (const auto& w : t.f) {
      m = std::max(m, w.size());
    }
  }
  return m;
}

SubsetK pref_set_rct(const Rct& F, const SubsetK& A) {
  const int i = F.index_of(A);
  SubsetK acc(F.k(), 0);
  for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
    acc = acc | prefix_cat(F.f(i, s), F.tau(i, s), F.k());
  }
  return acc;
}

SubsetK pref_bar_rct(const Rct& F, const SubsetK& A, const BitString& b) {
  const int i = F.index_of(A);
  SubsetK acc(F.k(), 0);
  for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
    if (is_proper_prefix(b, F.f(i, s))) {
      acc = acc | prefix_cat(residual(b, F.f(i, s)), F.tau(i, s), F.k());
    }
  }
  return acc;
}

CodeTuple direct_realization(const Rct& F) {
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (int i = 0; i < F.size(); ++i) {
    ids.emplace_back(F.domain(i));
    Table t;
    t.f = F.table(i).f;
    for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
      t.tau.push_back(F.rep(i, s));
    }
    tables.push_back(std::move(t));
  }
  return CodeTuple(F.k(), F.alphabet(), std::move(ids), std::move(tables));
}

ValidationReport validate(const Rct& F, const std::optional<SourceDist>& mu) {
  ValidationReport r;
  const int symbols = static_cast<int>(F.alphabet().size());

  r.compliant = true;
  r.extendable = true;
  r.k_dec = true;
  for (int i = 0; i < F.size(); ++i) {
    const SubsetK& A = F.domain(i);
    const SubsetK P = pref_set_rct(F, A);
    if (P != A) {
      r.compliant = false;
      r.issues.push_back("not compliant: prefix set of " + A.str() + " is " + P.str());
    }
    if (A.empty()) {
      r.extendable = false;
      r.issues.push_back("not extendable: domain contains the empty set");
    }
    for (int s = 0; s < symbols; ++s) {
      const SubsetK overlap = F.tau(i, s) & pref_bar_rct(F, A, F.f(i, s));
      if (!overlap.empty()) {
        r.k_dec = false;
        r.issues.push_back("not " + std::to_string(F.k()) + "-bit delay decodable: table " +
                           A.str() + " symbol '" + F.alphabet().name(s) + "' target meets " +
                           "longer-codeword continuations in " + overlap.str());
      }
      for (int t = s + 1; t < symbols; ++t) {
        if (F.f(i, s) != F.f(i, t)) {
          continue;
        }
        const SubsetK both = F.tau(i, s) & F.tau(i, t);
        if (!both.empty()) {
          r.k_dec = false;
          r.issues.push_back("not " + std::to_string(F.k()) + "-bit delay decodable: table " +
                             A.str() + " symbols '" + F.alphabet().name(s) + "' and '" +
                             F.alphabet().name(t) + "' share a codeword and targets overlap in " +
                             both.str());
        }
      }
    }
  }

  const CodeTuple direct = direct_realization(F);
  r.regular = is_regular(direct);
  if (!r.regular) {
    r.issues.push_back("not regular: direct realization has an empty reachable core");
  } else if (mu) {
    r.L = average_length(direct, *mu);
  }
  return r;
}

std::string state_label(const ExpandedIndex& x) { return x.A.str() + "|" + x.phi.str(); }

std::pair<BitString, ExpandedIndex> expand_index_step(const Rct& F, const ExpandedIndex& state,
                                                      int s) {
  if (s < 0 || s >= static_cast<int>(F.alphabet().size())) {
    throw DomainError("symbol index " + std::to_string(s) + " out of range");
  }
  const int i = F.index_of(state.A);
  const BitString& w = F.f(i, s);
  ExpandedIndex next{F.domain(F.rep(i, s)), compose(quotient(state.phi, w), F.psi(i, s))};
  return {state.phi.apply(w), std::move(next)};
}

int ExpandedMachine::index_of(const ExpandedIndex& x) const {
  const auto it = std::find(states.begin(), states.end(), x);
  if (it == states.end()) {
    throw DomainError("state " + state_label(x) + " not in the explored machine");
  }
  return static_cast<int>(it - states.begin());
}

CodeTuple ExpandedMachine::to_codetuple(const Rct& F) const {
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (std::size_t v = 0; v < states.size(); ++v) {
    ids.emplace_back(state_label(states[v]));
    tables.push_back({emit[v], next[v]});
  }
  return CodeTuple(F.k(), F.alphabet(), std::move(ids), std::move(tables));
}

namespace {

void check_seed(const Rct& F, const ExpandedIndex& seed) {
  F.index_of(seed.A);
  if (seed.phi.k() != F.k()) {
    throw DomainError("seed map has k = " + std::to_string(seed.phi.k()) + ", RCT has k = " +
                      std::to_string(F.k()));
  }
}

}  // namespace

ExpandedMachine explore(const Rct& F, const ExpandedIndex& seed) {
  check_seed(F, seed);
  const int symbols = static_cast<int>(F.alphabet().size());
  ExpandedMachine m;
  std::map<ExpandedIndex, int> seen;
  std::deque<int> queue;
  seen.emplace(seed, 0);
  m.states.push_back(seed);
  queue.push_back(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    std::vector<int> next;
    std::vector<BitString> emit;
    for (int s = 0; s < symbols; ++s) {
      auto [bits, to] = expand_index_step(F, m.states[static_cast<std::size_t>(v)], s);
      auto [it, fresh] = seen.emplace(to, static_cast<int>(m.states.size()));
      if (fresh) {
        m.states.push_back(to);
        queue.push_back(it->second);
      }
      next.push_back(it->second);
      emit.push_back(std::move(bits));
    }
    // FIFO order means states are finished in index order
    m.next.push_back(std::move(next));
    m.emit.push_back(std::move(emit));
  }
  return m;
}

CodeTuple expand_minimal(const Rct& F, const ExpandedIndex& seed) {
  const ValidationReport report = validate(F);
  if (!report.all()) {
    std::string why;
    for (const auto& issue : report.issues) {
      why += "\n  " + issue;
    }
    throw InvalidRctError("RCT fails validation:" + why);
  }
  const ExpandedMachine m = explore(F, seed);
  const CodeTuple reachable = m.to_codetuple(F);
  const auto bottoms = minimal_closed_sets(reachable);
  // the component holding the smallest state
  const std::vector<int>* chosen = nullptr;
  const ExpandedIndex* best = nullptr;
  for (const auto& comp : bottoms) {
    for (int v : comp) {
      const ExpandedIndex& x = m.states[static_cast<std::size_t>(v)];
      if (best == nullptr || x < *best) {
        best = &x;
        chosen = &comp;
      }
    }
  }
  std::vector<int> keep = *chosen;
  std::sort(keep.begin(), keep.end(), [&](int a, int b) {
    return m.states[static_cast<std::size_t>(a)] < m.states[static_cast<std::size_t>(b)];
  });
  // restrict_to expects positions in the order they should appear
  std::vector<int> pos(m.states.size(), -1);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    pos[static_cast<std::size_t>(keep[j])] = static_cast<int>(j);
  }
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (int v : keep) {
    Table t = reachable.table(v);
    for (int& target : t.tau) {
      target = pos[static_cast<std::size_t>(target)];
    }
    ids.push_back(reachable.id(v));
    tables.push_back(std::move(t));
  }
  return CodeTuple(F.k(), F.alphabet(), std::move(ids), std::move(tables));
}

CodeTuple expand_full(const Rct& F) {
  const std::uint64_t maps = std::uint64_t{1} << ((1U << F.k()) - 1);
  const std::uint64_t total = maps * static_cast<std::uint64_t>(F.size());
  if (total > (std::uint64_t{1} << 20) && !guard_override()) {
    throw ResourceError("full expansion would have " + std::to_string(total) +
                        " tables (limit 2^20)");
  }
  std::vector<ExpandedIndex> states;
  for (int i = 0; i < F.size(); ++i) {
    for (std::uint64_t t = 0; t < maps; ++t) {
      states.push_back({F.domain(i), PhiMap(F.k(), t)});
    }
  }
  std::sort(states.begin(), states.end());
  std::map<ExpandedIndex, int> pos;
  for (std::size_t v = 0; v < states.size(); ++v) {
    pos.emplace(states[v], static_cast<int>(v));
  }
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (const auto& x : states) {
    Table t;
    for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
      auto [bits, to] = expand_index_step(F, x, s);
      t.f.push_back(std::move(bits));
      t.tau.push_back(pos.at(to));
    }
    ids.emplace_back(state_label(x));
    tables.push_back(std::move(t));
  }
  return CodeTuple(F.k(), F.alphabet(), std::move(ids), std::move(tables));
}

bool length_invariance_check(const Rct& F, const std::vector<int>& x,
                             const std::vector<ExpandedIndex>& states) {
  if (states.empty()) {
    return true;
  }
  for (const auto& st : states) {
    if (st.A != states.front().A) {
      throw DomainError("length_invariance_check: states must share one domain element");
    }
  }
  const CodeTuple direct = direct_realization(F);
  const std::size_t expected = f_star(direct, F.index_of(states.front().A), x).size();
  for (const auto& st : states) {
    check_seed(F, st);
    ExpandedIndex cur = st;
    std::size_t len = 0;
    for (int s : x) {
      auto [bits, to] = expand_index_step(F, cur, s);
      len += bits.size();
      cur = std::move(to);
    }
    if (len != expected) {
      return false;
    }
  }
  return true;
}

}  // namespace delaycode
