#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/rational.hpp"
#include "delaycode/rct.hpp"

#include <optional>
#include <vector>

namespace delaycode {

/// Average codeword length of a binary Huffman code for `p`: the sum of
/// the weights of every merged node.
Rational huffman_length(std::vector<Rational> p);

struct MicroSearchResult {
  std::optional<Rct> best;  // empty when no valid RCT exists within the bounds
  Rational L;
  Rational huffman;
  std::size_t table_assignments = 0;  // valid single-table assignments seen
};

/// Exhaustive search over 1-bit delay RCTs whose domain is a set of
/// pairwise inequivalent non-empty subsets of C^1 and whose codewords have
/// at most `max_len` bits. Returns one of minimum average length.
/// Guards: max_len ≤ 4 and at most 3 symbols.
MicroSearchResult micro_search(const SourceDist& mu, const Alphabet& alphabet, int max_len);

}  // namespace delaycode
