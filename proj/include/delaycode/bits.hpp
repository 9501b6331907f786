#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace delaycode {

/// A finite string over {0,1}. Codewords, codeword streams and members of
/// C^k are all BitStrings. Ordered length-lex: shorter strings first, then
/// lexicographically.
class BitString {
 public:
  BitString() = default;

  /// Parses ASCII '0'/'1' text; the empty string is the empty sequence.
  explicit BitString(std::string_view text);

  /// The `length`-bit big-endian encoding of `value`.
  static BitString from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitString& other);

  /// Big-endian numeric value; requires size() <= 64.
  std::uint64_t value() const;

  /// ASCII form; empty for the empty sequence.
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::vector<std::uint8_t> bits_;
};

/// [x]_k: the first k symbols. Throws DomainError when k > |x|.
BitString take_prefix(const BitString& x, std::size_t k);

/// suff^k(x): x without its first k symbols. Throws DomainError when |x| < k.
BitString drop_prefix(const BitString& x, std::size_t k);

/// x^{-1} y: the z with xz = y. Throws DomainError unless x is a prefix of y.
BitString residual(const BitString& x, const BitString& y);

BitString concat(const BitString& x, const BitString& y);
inline BitString operator+(const BitString& x, const BitString& y) { return concat(x, y); }

/// x ⪯ y
bool is_prefix(const BitString& x, const BitString& y);
/// x ≺ y
bool is_proper_prefix(const BitString& x, const BitString& y);

/// Human-readable form: "λ" for the empty sequence, otherwise the bits.
std::string display(const BitString& x);

/// All strings of length exactly `length`, in increasing order.
std::vector<BitString> all_strings(std::size_t length);

/// All strings of length at most `max_length`, in length-lex order.
std::vector<BitString> all_strings_up_to(std::size_t max_length);

}  // namespace delaycode
