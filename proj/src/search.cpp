#include "delaycode/search.hpp"

#include "delaycode/error.hpp"

#include <functional>
#include <map>
#include <queue>

namespace delaycode {

Rational huffman_length(std::vector<Rational> p) {
  std::priority_queue<Rational, std::vector<Rational>, std::greater<>> heap(p.begin(), p.end());
  Rational total = 0;
  while (heap.size() > 1) {
    Rational a = heap.top();
    heap.pop();
    Rational b = heap.top();
    heap.pop();
    total += a + b;
    heap.push(a + b);
  }
  return total;
}

namespace {

struct Assignment {
  std::vector<BitString> f;
  std::vector<SubsetK> tau;
};

// Compliance and 1-bit delay decodability only look at the table itself.
bool table_ok(const SubsetK& A, const Assignment& a) {
  const std::size_t n = a.f.size();
  SubsetK P(1, 0);
  for (std::size_t s = 0; s < n; ++s) {
    P = P | prefix_cat(a.f[s], a.tau[s], 1);
  }
  if (P != A) {
    return false;
  }
  for (std::size_t s = 0; s < n; ++s) {
    SubsetK bar(1, 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (is_proper_prefix(a.f[s], a.f[t])) {
        bar = bar | prefix_cat(residual(a.f[s], a.f[t]), a.tau[t], 1);
      }
      if (t > s && a.f[s] == a.f[t] && !(a.tau[s] & a.tau[t]).empty()) {
        return false;
      }
    }
    if (!(a.tau[s] & bar).empty()) {
      return false;
    }
  }
  return true;
}

// (symbols whose target lies in the other class, codeword lengths)
using Key = std::pair<unsigned, std::vector<std::size_t>>;

std::map<Key, Assignment> enumerate_tables(const SubsetK& A, const std::vector<SubsetK>& domain,
                                           int symbols, int max_len, std::size_t& count) {
  std::vector<BitString> words = all_strings_up_to(static_cast<std::size_t>(max_len));
  std::vector<SubsetK> targets;
  for (std::uint64_t m = 1; m <= 3; ++m) {
    const SubsetK T(1, m);
    for (const auto& D : domain) {
      if ((T.size() == 1) == (D.size() == 1)) {
        targets.push_back(T);
      }
    }
  }
  const bool own_single = A.size() == 1;
  std::map<Key, Assignment> out;
  Assignment a{std::vector<BitString>(static_cast<std::size_t>(symbols)),
               std::vector<SubsetK>(static_cast<std::size_t>(symbols))};
  std::function<void(int)> rec = [&](int s) {
    if (s == symbols) {
      if (!table_ok(A, a)) {
        return;
      }
      ++count;
      Key key;
      for (int t = 0; t < symbols; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        if ((a.tau[idx].size() == 1) != own_single) {
          key.first |= 1U << t;
        }
        key.second.push_back(a.f[idx].size());
      }
      out.emplace(std::move(key), a);
      return;
    }
    for (const auto& w : words) {
      for (const auto& T : targets) {
        a.f[static_cast<std::size_t>(s)] = w;
        a.tau[static_cast<std::size_t>(s)] = T;
        rec(s + 1);
      }
    }
  };
  rec(0);
  return out;
}

Rational table_length(const SourceDist& mu, const Key& key) {
  Rational L = 0;
  for (std::size_t s = 0; s < key.second.size(); ++s) {
    L += mu[static_cast<int>(s)] * static_cast<long>(key.second[s]);
  }
  return L;
}

Rational mask_weight(const SourceDist& mu, unsigned mask) {
  Rational w = 0;
  for (int s = 0; s < static_cast<int>(mu.size()); ++s) {
    if ((mask >> s) & 1U) {
      w += mu[s];
    }
  }
  return w;
}

}  // namespace

MicroSearchResult micro_search(const SourceDist& mu, const Alphabet& alphabet, int max_len) {
  const int symbols = static_cast<int>(alphabet.size());
  if (mu.size() != alphabet.size()) {
    throw DomainError("distribution does not match the alphabet");
  }
  if (max_len < 0) {
    throw DomainError("max_len must be non-negative");
  }
  if ((max_len > 4 || symbols > 3) && !guard_override()) {
    throw ResourceError("micro-search is limited to max_len <= 4 and at most 3 symbols");
  }
  MicroSearchResult result;
  result.huffman = huffman_length(mu.values());

  const SubsetK zero(1, 1);
  const SubsetK one(1, 2);
  const SubsetK both(1, 3);
  const std::vector<std::vector<SubsetK>> domains = {
      {zero}, {one}, {both}, {zero, both}, {one, both}};

  for (const auto& domain : domains) {
    std::vector<std::map<Key, Assignment>> per_table;
    for (const auto& A : domain) {
      per_table.push_back(enumerate_tables(A, domain, symbols, max_len, result.table_assignments));
    }
    std::optional<Rational> best;
    std::vector<const Assignment*> chosen;
    if (domain.size() == 1) {
      for (const auto& [key, a] : per_table[0]) {
        const Rational L = table_length(mu, key);
        if (!best || L < *best) {
          best = L;
          chosen = {&a};
        }
      }
    } else {
      for (const auto& [k1, a1] : per_table[0]) {
        const Rational p = mask_weight(mu, k1.first);
        const Rational L1 = table_length(mu, k1);
        for (const auto& [k2, a2] : per_table[1]) {
          const Rational q = mask_weight(mu, k2.first);
          if (p == 0 && q == 0) {
            continue;  // two closed tables: not regular
          }
          const Rational L = (q * L1 + p * table_length(mu, k2)) / (p + q);
          if (!best || L < *best) {
            best = L;
            chosen = {&a1, &a2};
          }
        }
      }
    }
    if (!best || (result.best && *best >= result.L)) {
      continue;
    }
    std::vector<RctTable> tables;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      tables.push_back({domain[i], chosen[i]->f, chosen[i]->tau, {}});
    }
    Rct rct(1, alphabet, std::move(tables));
    const ValidationReport report = validate(rct, mu);
    if (!report.all() || *report.L != *best) {
      throw InternalError("micro-search candidate disagrees with full validation");
    }
    result.best = std::move(rct);
    result.L = *best;
  }
  return result;
}

}  // namespace delaycode
