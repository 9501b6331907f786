#include "delaycode/bits.hpp"

#include "delaycode/error.hpp"

#include <algorithm>

namespace delaycode {

BitString::BitString(std::string_view text) {
  bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError("bit string may only contain '0' and '1': '" + std::string(text) + "'");
    }
    bits_.push_back(c == '1' ? 1 : 0);
  }
}

BitString BitString::from_value(std::uint64_t value, std::size_t length) {
  BitString out;
  out.bits_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.bits_[length - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::uint64_t BitString::value() const {
  if (bits_.size() > 64) {
    throw DomainError("bit string too long for a 64-bit value");
  }
  std::uint64_t v = 0;
  for (auto b : bits_) {
    v = (v << 1) | b;
  }
  return v;
}

std::string BitString::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) {
      out[i] = '1';
    }
  }
  return out;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    return a.size() <=> b.size();
  }
  return std::lexicographical_compare_three_way(a.bits_.begin(), a.bits_.end(), b.bits_.begin(),
                                                b.bits_.end());
}

BitString take_prefix(const BitString& x, std::size_t k) {
  if (k > x.size()) {
    throw DomainError("take_prefix: k = " + std::to_string(k) + " exceeds length " +
                      std::to_string(x.size()));
  }
  BitString out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(x[i]);
  }
  return out;
}

BitString drop_prefix(const BitString& x, std::size_t k) {
  if (k > x.size()) {
    throw DomainError("drop_prefix: k = " + std::to_string(k) + " exceeds length " +
                      std::to_string(x.size()));
  }
  BitString out;
  for (std::size_t i = k; i < x.size(); ++i) {
    out.push_back(x[i]);
  }
  return out;
}

bool is_prefix(const BitString& x, const BitString& y) {
  if (x.size() > y.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) {
      return false;
    }
  }
  return true;
}

bool is_proper_prefix(const BitString& x, const BitString& y) {
  return x.size() < y.size() && is_prefix(x, y);
}

BitString residual(const BitString& x, const BitString& y) {
  if (!is_prefix(x, y)) {
    throw DomainError("residual: '" + x.str() + "' is not a prefix of '" + y.str() + "'");
  }
  return drop_prefix(y, x.size());
}

BitString concat(const BitString& x, const BitString& y) {
  BitString out = x;
  out.append(y);
  return out;
}

std::string display(const BitString& x) { return x.empty() ? "λ" : x.str(); }

std::vector<BitString> all_strings(std::size_t length) {
  if (length >= 63) {
    throw ResourceError("all_strings: length too large");
  }
  std::vector<BitString> out;
  const std::uint64_t count = std::uint64_t{1} << length;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    out.push_back(BitString::from_value(v, length));
  }
  return out;
}

std::vector<BitString> all_strings_up_to(std::size_t max_length) {
  std::vector<BitString> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto level = all_strings(len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace delaycode
