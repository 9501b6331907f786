#include "delaycode/reduce.hpp"

#include "delaycode/error.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace delaycode {

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kCoreRestrict:
      return "core-restrict";
    case StepKind::kMerge:
      return "merge";
    case StepKind::kRelabel:
      return "relabel";
    case StepKind::kFinalize:
      return "finalize";
  }
  return "unknown";
}

bool ReductionTrace::monotone() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const TraceStep& s) { return s.L_after <= s.L_before; });
}

namespace {

// Every τ target in `group` becomes `to`.
CodeTuple redirect(const CodeTuple& F, const std::vector<int>& group, int to) {
  std::vector<Table> tables = F.tables();
  for (auto& t : tables) {
    for (int& target : t.tau) {
      if (std::find(group.begin(), group.end(), target) != group.end()) {
        target = to;
      }
    }
  }
  return CodeTuple(F.k(), F.alphabet(), F.ids(), std::move(tables));
}

// Minimum potential within `group`, ties to the smallest id.
int argmin_potential(const CodeTuple& F, const std::vector<Rational>& h,
                     const std::vector<int>& group) {
  int best = group.front();
  for (int i : group) {
    const auto hi = h[static_cast<std::size_t>(i)];
    const auto hb = h[static_cast<std::size_t>(best)];
    if (hi < hb || (hi == hb && F.id(i) < F.id(best))) {
      best = i;
    }
  }
  return best;
}

std::string join_ids(const CodeTuple& F, const std::vector<int>& group) {
  std::string out;
  for (int i : group) {
    out += (out.empty() ? "" : ", ") + id_str(F.id(i));
  }
  return out;
}

CodeTuple restrict_traced(const CodeTuple& F, const SourceDist& mu, ReductionTrace* trace) {
  CodeTuple G = core_restrict(F);
  if (trace != nullptr && G.size() != F.size()) {
    const Rational L = average_length(F, mu);
    trace->steps.push_back({StepKind::kCoreRestrict,
                            "dropped " + std::to_string(F.size() - G.size()) +
                                " table(s) outside R_F",
                            std::nullopt, {}, L, L, is_k_dec(G),
                            static_cast<std::size_t>(G.size())});
  }
  return G;
}

}  // namespace

CodeTuple relabel_by_prefsets(const CodeTuple& F, const SourceDist& mu, ReductionTrace* trace) {
  CodeTuple G = restrict_traced(F, mu, trace);
  for (;;) {
    const auto P = pref_sets(G);
    std::map<SubsetK, std::vector<int>> groups;
    for (int i = 0; i < G.size(); ++i) {
      groups[P[static_cast<std::size_t>(i)]].push_back(i);
    }
    const auto dup = std::find_if(groups.begin(), groups.end(),
                                  [](const auto& g) { return g.second.size() > 1; });
    if (dup == groups.end()) {
      break;
    }
    const Rational before = average_length(G, mu);
    const auto h = potentials(G, mu);
    const int keep = argmin_potential(G, h, dup->second);
    CodeTuple merged = core_restrict(redirect(G, dup->second, keep));
    if (trace != nullptr) {
      TraceStep step{StepKind::kMerge,
                     "tables " + join_ids(G, dup->second) + " share P^k = " + dup->first.str() +
                         "; kept " + id_str(G.id(keep)),
                     std::nullopt, h, before, average_length(merged, mu), is_k_dec(merged),
                     static_cast<std::size_t>(merged.size())};
      const int other = dup->second.front() == keep ? dup->second[1] : dup->second.front();
      step.merged = std::make_pair(G.id(keep), G.id(other));
      trace->steps.push_back(std::move(step));
    }
    G = std::move(merged);
  }

  const auto P = pref_sets(G);
  std::vector<int> order(static_cast<std::size_t>(G.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return P[static_cast<std::size_t>(a)] < P[static_cast<std::size_t>(b)];
  });
  std::vector<int> pos(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    pos[static_cast<std::size_t>(order[j])] = static_cast<int>(j);
  }
  std::vector<TableId> ids;
  std::vector<Table> tables;
  for (int i : order) {
    Table t = G.table(i);
    for (int& target : t.tau) {
      target = pos[static_cast<std::size_t>(target)];
    }
    ids.emplace_back(P[static_cast<std::size_t>(i)]);
    tables.push_back(std::move(t));
  }
  CodeTuple out(G.k(), G.alphabet(), std::move(ids), std::move(tables));
  if (trace != nullptr) {
    const Rational L = average_length(out, mu);
    trace->steps.push_back({StepKind::kRelabel, "tables relabelled by their P^k sets",
                            std::nullopt, {}, L, L, std::nullopt,
                            static_cast<std::size_t>(out.size())});
  }
  return out;
}

CodeTuple merge_equivalent_step(const CodeTuple& F, const SourceDist& mu, const SubsetK& B,
                                const SubsetK& B2) {
  if (B == B2) {
    throw DomainError("merge needs two distinct labels");
  }
  if (reachable_core(F).size() != static_cast<std::size_t>(F.size())) {
    throw DomainError("merge needs an irreducible code-tuple");
  }
  for (const auto& id : F.ids()) {
    if (!std::holds_alternative<SubsetK>(id)) {
      throw DomainError("merge needs tables labelled by subsets, found " + id_str(id));
    }
  }
  F.index_of(B);
  F.index_of(B2);
  if (!equivalent(B, B2)) {
    throw DomainError(B.str() + " and " + B2.str() + " are not equivalent");
  }
  std::vector<int> group;
  for (int i = 0; i < F.size(); ++i) {
    if (equivalent(std::get<SubsetK>(F.id(i)), B)) {
      group.push_back(i);
    }
  }
  const auto h = potentials(F, mu);
  return redirect(F, group, argmin_potential(F, h, group));
}

Reduction to_rct(const CodeTuple& F, const SourceDist& mu) {
  if (!is_regular(F)) {
    throw DomainError("input is not regular");
  }
  if (!is_extendable(F)) {
    throw DomainError("input is not extendable");
  }
  if (!is_k_dec(F)) {
    throw DomainError("input is not " + std::to_string(F.k()) + "-bit delay decodable");
  }
  const Rational L_input = average_length(F, mu);
  ReductionTrace trace;
  CodeTuple G = relabel_by_prefsets(F, mu, &trace);

  // targets as P^k labels; these become τ̃ and survive the merges below
  std::map<SubsetK, std::vector<SubsetK>> tau_label;
  for (int i = 0; i < G.size(); ++i) {
    auto& row = tau_label[std::get<SubsetK>(G.id(i))];
    for (int t : G.table(i).tau) {
      row.push_back(std::get<SubsetK>(G.id(t)));
    }
  }

  for (;;) {
    std::optional<std::pair<SubsetK, SubsetK>> pair;
    for (int i = 0; i < G.size() && !pair; ++i) {
      for (int j = i + 1; j < G.size() && !pair; ++j) {
        const auto& a = std::get<SubsetK>(G.id(i));
        const auto& b = std::get<SubsetK>(G.id(j));
        if (equivalent(a, b)) {
          pair = std::make_pair(a, b);
        }
      }
    }
    if (!pair) {
      break;
    }
    const Rational before = average_length(G, mu);
    const auto h = potentials(G, mu);
    CodeTuple merged = core_restrict(merge_equivalent_step(G, mu, pair->first, pair->second));
    // the survivor of the class is whichever of the two remains
    const bool first_kept = std::find(merged.ids().begin(), merged.ids().end(),
                                      TableId(pair->first)) != merged.ids().end();
    TraceStep step{StepKind::kMerge,
                   "merged equivalent " + pair->first.str() + " and " + pair->second.str(),
                   first_kept ? std::make_pair(TableId(pair->first), TableId(pair->second))
                              : std::make_pair(TableId(pair->second), TableId(pair->first)),
                   h,
                   before,
                   average_length(merged, mu),
                   is_k_dec(merged),
                   static_cast<std::size_t>(merged.size())};
    trace.steps.push_back(std::move(step));
    if (merged.size() >= G.size()) {
      throw InternalError("merge did not shrink the reachable core");
    }
    G = std::move(merged);
  }

  std::vector<RctTable> tables;
  for (int i = 0; i < G.size(); ++i) {
    const auto& A = std::get<SubsetK>(G.id(i));
    tables.push_back({A, G.table(i).f, tau_label.at(A), {}});
  }
  Rct rct(G.k(), G.alphabet(), std::move(tables));
  const ValidationReport report = validate(rct, mu);
  if (!report.all()) {
    std::string why;
    for (const auto& issue : report.issues) {
      why += "; " + issue;
    }
    throw InternalError("reduced RCT failed validation" + why);
  }
  const Rational before = average_length(G, mu);
  trace.steps.push_back({StepKind::kFinalize,
                         "assembled RCT with " + std::to_string(rct.size()) + " table(s)",
                         std::nullopt, {}, before, *report.L, true,
                         static_cast<std::size_t>(rct.size())});
  if (!trace.monotone() || *report.L > L_input) {
    throw InternalError("average length increased during reduction");
  }
  return {std::move(rct), std::move(trace), L_input, *report.L};
}

}  // namespace delaycode
