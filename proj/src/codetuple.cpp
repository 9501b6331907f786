#include "delaycode/codetuple.hpp"

#include "delaycode/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace delaycode {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw DomainError("alphabet needs at least two symbols");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) {
      throw DomainError("empty symbol name");
    }
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw DomainError("symbol name '" + s + "' contains whitespace");
      }
    }
    if (!seen.insert(s).second) {
      throw DomainError("duplicate symbol '" + s + "'");
    }
  }
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) {
      return static_cast<int>(i);
    }
  }
  throw DomainError("unknown symbol '" + std::string(name) + "'");
}

namespace {

bool single_char_names(const std::vector<std::string>& symbols) {
  return std::all_of(symbols.begin(), symbols.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

}  // namespace

std::vector<int> Alphabet::parse(std::string_view text) const {
  std::vector<int> out;
  const bool spaced = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
  if (spaced || !single_char_names(symbols_)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j > i) {
        out.push_back(index_of(text.substr(i, j - i)));
      }
      i = j;
    }
    return out;
  }
  for (char c : text) {
    out.push_back(index_of(std::string_view(&c, 1)));
  }
  return out;
}

std::string Alphabet::format(const std::vector<int>& seq) const {
  const bool compact = single_char_names(symbols_);
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += name(seq[i]);
  }
  return out;
}

SourceDist::SourceDist(const Alphabet& alphabet, std::vector<Rational> p) : p_(std::move(p)) {
  if (p_.size() != alphabet.size()) {
    throw DomainError("distribution has " + std::to_string(p_.size()) + " entries for " +
                      std::to_string(alphabet.size()) + " symbols");
  }
  Rational total = 0;
  for (std::size_t s = 0; s < p_.size(); ++s) {
    if (p_[s] <= 0 || p_[s] >= 1) {
      throw DomainError("probability of '" + alphabet.name(static_cast<int>(s)) +
                        "' must lie strictly between 0 and 1, got " + to_fraction(p_[s]));
    }
    total += p_[s];
  }
  if (total != 1) {
    throw DomainError("probabilities sum to " + to_fraction(total) + ", not 1");
  }
}

SourceDist SourceDist::uniform(const Alphabet& alphabet) {
  const Rational each(1, static_cast<long>(alphabet.size()));
  return SourceDist(alphabet, std::vector<Rational>(alphabet.size(), each));
}

std::string id_str(const TableId& id) {
  if (const auto* set = std::get_if<SubsetK>(&id)) {
    return set->str();
  }
  return std::get<std::string>(id);
}

CodeTuple::CodeTuple(int k, Alphabet alphabet, std::vector<TableId> ids, std::vector<Table> tables)
    : k_(k), alphabet_(std::move(alphabet)), ids_(std::move(ids)), tables_(std::move(tables)) {
  if (k_ < 0 || k_ > kMaxSubsetK) {
    throw DomainError("k = " + std::to_string(k_) + " outside 0..6");
  }
  if (tables_.empty()) {
    throw DomainError("code-tuple needs at least one table");
  }
  if (ids_.size() != tables_.size()) {
    throw DomainError("table id count does not match table count");
  }
  std::set<TableId> seen(ids_.begin(), ids_.end());
  if (seen.size() != ids_.size()) {
    throw DomainError("duplicate table ids");
  }
  const int n = static_cast<int>(tables_.size());
  for (const auto& t : tables_) {
    if (t.f.size() != alphabet_.size() || t.tau.size() != alphabet_.size()) {
      throw DomainError("table does not cover every symbol");
    }
    for (int target : t.tau) {
      if (target < 0 || target >= n) {
        throw DomainError("transition target outside the domain");
      }
    }
  }
}

int CodeTuple::index_of(const TableId& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) {
      return static_cast<int>(i);
    }
  }
  throw DomainError("unknown table id " + id_str(id));
}

std::size_t CodeTuple::max_codeword_length() const {
  std::size_t m = 0;
  for (const auto& t : tables_) {
    for (const auto& w : t.f) {
      m = std::max(m, w.size());
    }
  }
  return m;
}

namespace {

void require_table(const CodeTuple& F, int i) {
  if (i < 0 || i >= F.size()) {
    throw DomainError("table index " + std::to_string(i) + " out of range");
  }
}

void require_symbol(const CodeTuple& F, int s) {
  if (s < 0 || s >= static_cast<int>(F.alphabet().size())) {
    throw DomainError("symbol index " + std::to_string(s) + " out of range");
  }
}

}  // namespace

BitString f_star(const CodeTuple& F, int i, const std::vector<int>& x) {
  require_table(F, i);
  BitString out;
  for (int s : x) {
    require_symbol(F, s);
    out.append(F.f(i, s));
    i = F.tau(i, s);
  }
  return out;
}

int tau_star(const CodeTuple& F, int i, const std::vector<int>& x) {
  require_table(F, i);
  for (int s : x) {
    require_symbol(F, s);
    i = F.tau(i, s);
  }
  return i;
}

PrefLevels pref_levels(const CodeTuple& F, int max_level) {
  if (max_level < 0 || max_level > kMaxSubsetK) {
    throw DomainError("prefix level outside 0..6");
  }
  const int n = F.size();
  const int symbols = static_cast<int>(F.alphabet().size());
  PrefLevels levels;
  levels.emplace_back(static_cast<std::size_t>(n), SubsetK(0, 1));
  for (int j = 1; j <= max_level; ++j) {
    levels.emplace_back(static_cast<std::size_t>(n), SubsetK(j, 0));
    auto& cur = levels.back();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        SubsetK acc = cur[static_cast<std::size_t>(i)];
        for (int s = 0; s < symbols; ++s) {
          const BitString& w = F.f(i, s);
          const int below = std::max(0, j - static_cast<int>(w.size()));
          const SubsetK& next =
              levels[static_cast<std::size_t>(below)][static_cast<std::size_t>(F.tau(i, s))];
          acc = acc | prefix_cat(w, next, j);
        }
        if (acc != cur[static_cast<std::size_t>(i)]) {
          cur[static_cast<std::size_t>(i)] = acc;
          changed = true;
        }
      }
    }
  }
  return levels;
}

std::vector<SubsetK> pref_sets(const CodeTuple& F) {
  return pref_levels(F, F.k()).back();
}

SubsetK pref_bar(const CodeTuple& F, const PrefLevels& levels, int i, const BitString& b) {
  require_table(F, i);
  const int k = F.k();
  if (static_cast<int>(levels.size()) <= k) {
    throw DomainError("pref_bar: prefix levels do not reach k");
  }
  SubsetK acc(k, 0);
  for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
    const BitString& w = F.f(i, s);
    if (!is_proper_prefix(b, w)) {
      continue;
    }
    const BitString rest = residual(b, w);
    const int below = std::max(0, k - static_cast<int>(rest.size()));
    acc = acc | prefix_cat(rest, levels[static_cast<std::size_t>(below)]
                                       [static_cast<std::size_t>(F.tau(i, s))],
                           k);
  }
  return acc;
}

SubsetK pref_bar(const CodeTuple& F, int i, const BitString& b) {
  return pref_bar(F, pref_levels(F, F.k()), i, b);
}

KDecReport check_k_dec(const CodeTuple& F) {
  KDecReport report;
  const PrefLevels levels = pref_levels(F, F.k());
  const auto& P = levels.back();
  const int symbols = static_cast<int>(F.alphabet().size());
  for (int i = 0; i < F.size(); ++i) {
    for (int s = 0; s < symbols; ++s) {
      const SubsetK overlap =
          P[static_cast<std::size_t>(F.tau(i, s))] & pref_bar(F, levels, i, F.f(i, s));
      if (!overlap.empty()) {
        report.violations.push_back({i, s, -1, overlap});
      }
    }
    for (int s = 0; s < symbols; ++s) {
      for (int t = s + 1; t < symbols; ++t) {
        if (F.f(i, s) != F.f(i, t)) {
          continue;
        }
        const SubsetK overlap =
            P[static_cast<std::size_t>(F.tau(i, s))] & P[static_cast<std::size_t>(F.tau(i, t))];
        if (!overlap.empty()) {
          report.violations.push_back({i, s, t, overlap});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool is_k_dec(const CodeTuple& F) { return check_k_dec(F).ok; }

bool is_extendable(const CodeTuple& F) {
  const auto levels = pref_levels(F, 1);
  return std::none_of(levels[1].begin(), levels[1].end(),
                      [](const SubsetK& p) { return p.empty(); });
}

BitString terminating_tail(const CodeTuple& F, const PrefLevels& levels, int i) {
  const SubsetK tails = pref_bar(F, levels, i, BitString());
  if (tails.empty()) {
    throw FlushError("no k-bit tail can terminate decoding at table " + id_str(F.id(i)));
  }
  return tails.min_member();
}

std::vector<int> decode_codetuple(const CodeTuple& F, int i0, const BitString& c) {
  require_table(F, i0);
  const int k = F.k();
  const auto P = pref_sets(F);
  const int symbols = static_cast<int>(F.alphabet().size());
  std::vector<int> out;
  std::size_t pos = 0;
  int state = i0;
  // tables entered without consuming a bit since the last advance; a repeat
  // means the empty-codeword transitions cycle on this input
  std::vector<bool> visited(static_cast<std::size_t>(F.size()), false);
  visited[static_cast<std::size_t>(state)] = true;
  for (;;) {
    int match = -1;
    for (int s = 0; s < symbols; ++s) {
      const BitString& w = F.f(state, s);
      if (pos + w.size() + static_cast<std::size_t>(k) > c.size()) {
        continue;
      }
      bool prefix_ok = true;
      for (std::size_t t = 0; t < w.size() && prefix_ok; ++t) {
        prefix_ok = c[pos + t] == w[t];
      }
      if (!prefix_ok) {
        continue;
      }
      std::uint64_t look = 0;
      for (int t = 0; t < k; ++t) {
        look = (look << 1) | (c[pos + w.size() + static_cast<std::size_t>(t)] ? 1U : 0U);
      }
      if (!P[static_cast<std::size_t>(F.tau(state, s))].contains_value(look)) {
        continue;
      }
      if (match != -1) {
        throw InvalidCodeError("symbols '" + F.alphabet().name(match) + "' and '" +
                               F.alphabet().name(s) + "' both match at bit offset " +
                               std::to_string(pos));
      }
      match = s;
    }
    if (match == -1) {
      break;
    }
    out.push_back(match);
    const std::size_t len = F.f(state, match).size();
    state = F.tau(state, match);
    if (len > 0) {
      pos += len;
      std::fill(visited.begin(), visited.end(), false);
    } else if (visited[static_cast<std::size_t>(state)]) {
      throw InvalidCodeError("empty-codeword transitions cycle at bit offset " +
                             std::to_string(pos));
    }
    visited[static_cast<std::size_t>(state)] = true;
  }
  if (c.size() - pos != static_cast<std::size_t>(k)) {
    throw CorruptInputError("expected exactly " + std::to_string(k) + " trailing bits, found " +
                                std::to_string(c.size() - pos),
                            pos);
  }
  return out;
}

}  // namespace delaycode
