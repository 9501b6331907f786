#include "delaycode/phi.hpp"

#include "delaycode/error.hpp"

#include <algorithm>
#include <bit>

namespace delaycode {

namespace {

std::uint64_t table_mask(int k) {
  if (k < 0 || k > kMaxSubsetK) {
    throw DomainError("PhiMap k = " + std::to_string(k) + " outside 0..6");
  }
  return (std::uint64_t{1} << ((1U << k) - 1)) - 1;
}

void require_same_k(const PhiMap& a, const PhiMap& b, const char* what) {
  if (a.k() != b.k()) {
    throw DomainError(std::string(what) + ": mismatched k (" + std::to_string(a.k()) + " vs " +
                      std::to_string(b.k()) + ")");
  }
}

}  // namespace

std::uint64_t prefix_index(const BitString& p) {
  if (p.size() >= 63) {
    throw DomainError("prefix_index: prefix too long");
  }
  return (std::uint64_t{1} << p.size()) - 1 + p.value();
}

PhiMap::PhiMap(int k, std::uint64_t table) : k_(k), table_(table) {
  if ((table & ~table_mask(k)) != 0) {
    throw DomainError("PhiMap table wider than 2^k - 1 bits");
  }
}

PhiMap PhiMap::identity(int k) { return PhiMap(k, 0); }

PhiMap PhiMap::parse(std::string_view text) {
  const std::size_t n = text.size() + 1;
  if (!std::has_single_bit(n)) {
    throw DomainError("PhiMap table length " + std::to_string(text.size()) +
                      " is not 2^k - 1");
  }
  const int k = std::countr_zero(n);
  const BitString bits(text);
  std::uint64_t table = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      table |= std::uint64_t{1} << i;
    }
  }
  return PhiMap(k, table);
}

std::vector<PhiMap> PhiMap::all(int k) {
  if (k > 4 && !guard_override()) {
    throw ResourceError("PhiMap::all is limited to k <= 4");
  }
  const std::uint64_t count = table_mask(k) + 1;
  std::vector<PhiMap> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    out.emplace_back(k, t);
  }
  return out;
}

bool PhiMap::star(const BitString& p) const {
  if (static_cast<int>(p.size()) >= k_) {
    return false;
  }
  return star_at(prefix_index(p));
}

BitString PhiMap::apply_prefix(const BitString& b, std::size_t limit) const {
  const std::size_t n = std::min(limit, b.size());
  BitString out;
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool bit = b[i];
    if (static_cast<int>(i) < k_) {
      out.push_back(bit != star_at(idx));
      idx = 2 * idx + 1 + (bit ? 1 : 0);
    } else {
      out.push_back(bit);
    }
  }
  return out;
}

BitString PhiMap::apply(const BitString& b) const { return apply_prefix(b, b.size()); }

std::uint64_t PhiMap::apply_value(std::uint64_t v) const {
  std::uint64_t out = 0;
  std::uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    const std::uint64_t bit = (v >> i) & 1U;
    out = (out << 1) | (bit ^ (star_at(idx) ? 1U : 0U));
    idx = 2 * idx + 1 + bit;
  }
  return out;
}

PhiMap PhiMap::embed(int larger) const {
  if (larger < k_) {
    throw DomainError("embed: target k smaller than source k");
  }
  return PhiMap(larger, table_);
}

std::string PhiMap::str() const {
  std::string out(table_size(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (star_at(i)) {
      out[i] = '1';
    }
  }
  return out;
}

std::strong_ordering operator<=>(const PhiMap& a, const PhiMap& b) {
  if (a.k() != b.k()) {
    return a.k() <=> b.k();
  }
  return a.str() <=> b.str();
}

PhiMap compose(const PhiMap& phi, const PhiMap& psi) {
  require_same_k(phi, psi, "compose");
  std::uint64_t table = 0;
  for (std::size_t len = 0; static_cast<int>(len) < phi.k(); ++len) {
    for (const auto& p : all_strings(len)) {
      const bool bit = phi.star(psi.apply(p)) != psi.star(p);
      if (bit) {
        table |= std::uint64_t{1} << prefix_index(p);
      }
    }
  }
  return PhiMap(phi.k(), table);
}

PhiMap invert(const PhiMap& phi) {
  std::uint64_t table = 0;
  for (std::size_t len = 0; static_cast<int>(len) < phi.k(); ++len) {
    for (const auto& p : all_strings(len)) {
      if (phi.star(p)) {
        table |= std::uint64_t{1} << prefix_index(phi.apply(p));
      }
    }
  }
  return PhiMap(phi.k(), table);
}

PhiMap quotient(const PhiMap& phi, const BitString& d) {
  if (static_cast<int>(d.size()) >= phi.k()) {
    return PhiMap::identity(phi.k());
  }
  std::uint64_t table = 0;
  for (std::size_t len = 0; static_cast<int>(len) < phi.k(); ++len) {
    for (const auto& p : all_strings(len)) {
      if (phi.star(d + p)) {
        table |= std::uint64_t{1} << prefix_index(p);
      }
    }
  }
  return PhiMap(phi.k(), table);
}

SubsetK apply_set(const PhiMap& phi, const SubsetK& A) {
  if (A.k() != phi.k()) {
    throw DomainError("apply_set: subset members have length " + std::to_string(A.k()) +
                      ", map has k = " + std::to_string(phi.k()));
  }
  std::uint64_t mask = 0;
  for (std::uint64_t m = A.mask(); m != 0; m &= m - 1) {
    const auto v = static_cast<std::uint64_t>(std::countr_zero(m));
    mask |= std::uint64_t{1} << phi.apply_value(v);
  }
  return SubsetK(A.k(), mask);
}

}  // namespace delaycode
