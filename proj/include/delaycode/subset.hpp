#pragma once

#include "delaycode/bits.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace delaycode {

inline constexpr int kMaxSubsetK = 6;

/// A subset of C^k, the k-bit strings. Bit v of the mask is set when the
/// member whose big-endian value is v is present, so members starting with 0
/// occupy the low half. k is limited to 6 (64 possible members).
///
/// Ordering: smaller sets first; equal sizes compare lexicographically on
/// the sorted member lists.
class SubsetK {
 public:
  SubsetK() = default;
  SubsetK(int k, std::uint64_t mask);

  static SubsetK from_members(int k, const std::vector<BitString>& members);
  static SubsetK from_strings(int k, const std::vector<std::string>& members);
  static SubsetK full(int k);

  int k() const { return k_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(const BitString& b) const;
  bool contains_value(std::uint64_t v) const { return ((mask_ >> v) & 1U) != 0; }

  /// Sorted ascending.
  std::vector<BitString> members() const;
  /// The smallest member; throws DomainError when empty.
  BitString min_member() const;

  /// A_b = { p : bp ∈ A }, a subset of C^{k-1}.
  SubsetK child(bool bit) const;
  /// 0·a0 ∪ 1·a1.
  static SubsetK join(const SubsetK& a0, const SubsetK& a1);

  /// "{00,10}", "∅".
  std::string str() const;

  SubsetK operator&(const SubsetK& other) const;
  SubsetK operator|(const SubsetK& other) const;

  friend bool operator==(const SubsetK&, const SubsetK&) = default;
  friend std::strong_ordering operator<=>(const SubsetK& a, const SubsetK& b);

 private:
  int k_ = 0;
  std::uint64_t mask_ = 0;
};

/// Mask with every member of C^k present. Throws DomainError for k outside 0..6.
std::uint64_t universe_mask(int k);

/// [b·A]_j for A ⊆ C^m: every string b·a truncated to j bits.
/// Requires j ≤ |b| + m; the result is empty when A is.
SubsetK prefix_cat(const BitString& b, const SubsetK& A, int j);

}  // namespace delaycode
