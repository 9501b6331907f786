#include "delaycode/subset.hpp"

#include "delaycode/error.hpp"

#include <bit>

namespace delaycode {

std::uint64_t universe_mask(int k) {
  if (k < 0 || k > kMaxSubsetK) {
    throw DomainError("subset length k = " + std::to_string(k) + " outside 0..6");
  }
  const std::uint64_t width = std::uint64_t{1} << k;
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

SubsetK::SubsetK(int k, std::uint64_t mask) : k_(k), mask_(mask) {
  if ((mask & ~universe_mask(k)) != 0) {
    throw DomainError("subset mask has members outside C^" + std::to_string(k));
  }
}

SubsetK SubsetK::from_members(int k, const std::vector<BitString>& members) {
  std::uint64_t mask = 0;
  universe_mask(k);
  for (const auto& m : members) {
    if (static_cast<int>(m.size()) != k) {
      throw DomainError("member '" + m.str() + "' does not have length " + std::to_string(k));
    }
    mask |= std::uint64_t{1} << m.value();
  }
  return SubsetK(k, mask);
}

SubsetK SubsetK::from_strings(int k, const std::vector<std::string>& members) {
  std::vector<BitString> bits;
  bits.reserve(members.size());
  for (const auto& m : members) {
    bits.emplace_back(m);
  }
  return from_members(k, bits);
}

SubsetK SubsetK::full(int k) { return SubsetK(k, universe_mask(k)); }

int SubsetK::size() const { return std::popcount(mask_); }

bool SubsetK::contains(const BitString& b) const {
  return static_cast<int>(b.size()) == k_ && contains_value(b.value());
}

std::vector<BitString> SubsetK::members() const {
  std::vector<BitString> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(BitString::from_value(static_cast<std::uint64_t>(std::countr_zero(m)),
                                        static_cast<std::size_t>(k_)));
  }
  return out;
}

BitString SubsetK::min_member() const {
  if (mask_ == 0) {
    throw DomainError("min_member of an empty set");
  }
  return BitString::from_value(static_cast<std::uint64_t>(std::countr_zero(mask_)),
                               static_cast<std::size_t>(k_));
}

SubsetK SubsetK::child(bool bit) const {
  if (k_ == 0) {
    throw DomainError("child of a subset of C^0");
  }
  const unsigned half = 1U << (k_ - 1);
  const std::uint64_t low = universe_mask(k_ - 1);
  return SubsetK(k_ - 1, bit ? (mask_ >> half) & low : mask_ & low);
}

SubsetK SubsetK::join(const SubsetK& a0, const SubsetK& a1) {
  if (a0.k_ != a1.k_) {
    throw DomainError("join of subsets with different k");
  }
  const unsigned half = 1U << a0.k_;
  return SubsetK(a0.k_ + 1, a0.mask_ | (a1.mask_ << half));
}

std::string SubsetK::str() const {
  if (mask_ == 0) {
    return "∅";
  }
  std::string out = "{";
  bool first = true;
  for (const auto& m : members()) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += display(m);
  }
  return out + "}";
}

SubsetK SubsetK::operator&(const SubsetK& other) const {
  if (k_ != other.k_) {
    throw DomainError("intersection of subsets with different k");
  }
  return SubsetK(k_, mask_ & other.mask_);
}

SubsetK SubsetK::operator|(const SubsetK& other) const {
  if (k_ != other.k_) {
    throw DomainError("union of subsets with different k");
  }
  return SubsetK(k_, mask_ | other.mask_);
}

std::strong_ordering operator<=>(const SubsetK& a, const SubsetK& b) {
  if (a.k_ != b.k_) {
    return a.k_ <=> b.k_;
  }
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) {
    return sa <=> sb;
  }
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) {
    return std::strong_ordering::equal;
  }
  // The first differing position of the sorted lists holds the smallest
  // member of the symmetric difference; whoever owns it sorts first.
  const std::uint64_t low = diff & (~diff + 1);
  return (low & a.mask_) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

SubsetK prefix_cat(const BitString& b, const SubsetK& A, int j) {
  const int blen = static_cast<int>(b.size());
  if (j < 0 || j > blen + A.k()) {
    throw DomainError("prefix_cat: target length " + std::to_string(j) + " exceeds |b| + m");
  }
  if (A.empty()) {
    return SubsetK(j, 0);
  }
  if (j <= blen) {
    return SubsetK::from_members(j, {take_prefix(b, static_cast<std::size_t>(j))});
  }
  // j > |b|: b followed by the first (j - |b|) bits of each member
  const int tail = j - blen;
  const std::uint64_t head = b.value() << tail;
  std::uint64_t mask = 0;
  for (std::uint64_t m = A.mask(); m != 0; m &= m - 1) {
    const auto v = static_cast<std::uint64_t>(std::countr_zero(m));
    mask |= std::uint64_t{1} << (head | (v >> (A.k() - tail)));
  }
  return SubsetK(j, mask);
}

}  // namespace delaycode
