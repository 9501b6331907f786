#pragma once

#include "delaycode/bits.hpp"
#include "delaycode/subset.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace delaycode {

/// Position of a prefix p (|p| < k) in the φ* table: 2^|p| - 1 + value(p).
/// Length-lex order λ, 0, 1, 00, 01, 10, 11, ...
std::uint64_t prefix_index(const BitString& p);

/// A member of Φ_k, stored as its φ* table: one control bit per prefix
/// b ∈ C^{≤k-1}. Bit i of the output is b_i ⊕ φ*([b]_{i-1}); φ* is zero on
/// prefixes of length ≥ k, so everything past the first k bits passes
/// through unchanged. Every table of length 2^k - 1 is a valid member.
class PhiMap {
 public:
  PhiMap() = default;
  PhiMap(int k, std::uint64_t table);

  static PhiMap identity(int k);
  /// Table bits in length-lex order, e.g. "101" is φ_{101} for k = 2.
  /// The length must be 2^k - 1 for some k.
  static PhiMap parse(std::string_view text);
  /// All 2^(2^k - 1) members; k ≤ 4.
  static std::vector<PhiMap> all(int k);

  int k() const { return k_; }
  std::uint64_t table() const { return table_; }
  std::size_t table_size() const { return (std::size_t{1} << k_) - 1; }

  /// φ*(p); zero when |p| ≥ k.
  bool star(const BitString& p) const;
  bool star_at(std::uint64_t index) const { return ((table_ >> index) & 1U) != 0; }

  BitString apply(const BitString& b) const;
  /// Same as apply but only computes the first `limit` output bits.
  BitString apply_prefix(const BitString& b, std::size_t limit) const;
  /// Applies to a k-bit string given by value.
  std::uint64_t apply_value(std::uint64_t v) const;

  /// The same map viewed as a member of Φ_larger (table padded with zeros).
  PhiMap embed(int larger) const;

  bool is_identity() const { return table_ == 0; }
  std::string str() const;

  friend bool operator==(const PhiMap&, const PhiMap&) = default;
  friend std::strong_ordering operator<=>(const PhiMap&, const PhiMap&);

 private:
  int k_ = 0;
  std::uint64_t table_ = 0;
};

/// φ ∘ ψ: apply ψ first.
PhiMap compose(const PhiMap& phi, const PhiMap& psi);
PhiMap invert(const PhiMap& phi);
/// φ|_d, the map with φ(db) = φ(d)·φ|_d(b).
PhiMap quotient(const PhiMap& phi, const BitString& d);
/// Element-wise image of A ⊆ C^k.
SubsetK apply_set(const PhiMap& phi, const SubsetK& A);

}  // namespace delaycode
