#include "delaycode/orbit.hpp"

#include "delaycode/error.hpp"

#include <algorithm>
#include <set>

namespace delaycode {

namespace {

// Moves a child's φ* table (k-1) under prefix `bit` of a parent table (k).
// Child index 2^l - 1 + v becomes 2^(l+1) - 1 + bit·2^l + v.
std::uint64_t lift_table(const PhiMap& child, bool bit) {
  std::uint64_t out = 0;
  for (int l = 0; l < child.k(); ++l) {
    const std::uint64_t width = std::uint64_t{1} << l;
    for (std::uint64_t v = 0; v < width; ++v) {
      if (child.star_at(width - 1 + v)) {
        out |= std::uint64_t{1} << (2 * width - 1 + (bit ? width : 0) + v);
      }
    }
  }
  return out;
}

}  // namespace

CanonWitness canonicalize(const SubsetK& A) {
  if (A.k() == 0) {
    return {A, PhiMap::identity(0)};
  }
  const CanonWitness w0 = canonicalize(A.child(false));
  const CanonWitness w1 = canonicalize(A.child(true));
  const bool swap = w1.canon < w0.canon;
  const CanonWitness& low = swap ? w1 : w0;
  const CanonWitness& high = swap ? w0 : w1;
  std::uint64_t table = swap ? 1U : 0U;
  table |= lift_table(low.psi, false);
  table |= lift_table(high.psi, true);
  return {SubsetK::join(low.canon, high.canon), PhiMap(A.k(), table)};
}

bool equivalent(const SubsetK& A, const SubsetK& B) {
  if (A.k() != B.k()) {
    throw DomainError("equivalent: mismatched k");
  }
  return canonicalize(A).canon == canonicalize(B).canon;
}

PhiMap transport(const SubsetK& B, const SubsetK& T) {
  if (B.k() != T.k()) {
    throw DomainError("transport: mismatched k");
  }
  const CanonWitness wb = canonicalize(B);
  const CanonWitness wt = canonicalize(T);
  if (wb.canon != wt.canon) {
    throw DomainError("transport: " + B.str() + " and " + T.str() + " are not equivalent");
  }
  return compose(wt.psi, invert(wb.psi));
}

BigInt count_classes(int k) {
  if (k < 0) {
    throw DomainError("count_classes: k must be non-negative");
  }
  // a_k has about 2^k decimal digits
  if (k > 16 && !guard_override()) {
    throw ResourceError("count_classes is limited to k <= 16");
  }
  BigInt a = 2;
  for (int i = 1; i <= k; ++i) {
    a = a * (a + 1) / 2;
  }
  return a;
}

BigInt count_classes_restricted(int k) {
  if (k < 1) {
    throw DomainError("count_classes_restricted: k must be at least 1");
  }
  const BigInt a = count_classes(k - 1);
  return a * (a - 1) / 2;
}

std::vector<SubsetK> enumerate_classes(int k) {
  if (k < 0) {
    throw DomainError("enumerate_classes: k must be non-negative");
  }
  if (k > 4 && !guard_override()) {
    throw ResourceError("enumerate_classes is limited to k <= 4");
  }
  std::vector<SubsetK> reps = {SubsetK(0, 0), SubsetK(0, 1)};
  for (int level = 1; level <= k; ++level) {
    std::vector<SubsetK> next;
    next.reserve(reps.size() * (reps.size() + 1) / 2);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i; j < reps.size(); ++j) {
        next.push_back(SubsetK::join(reps[i], reps[j]));
      }
    }
    std::sort(next.begin(), next.end());
    reps = std::move(next);
  }
  return reps;
}

ClassCheck verify_classes(int k) {
  if (k < 0) {
    throw DomainError("verify_classes: k must be non-negative");
  }
  if (k > 4 && !guard_override()) {
    throw ResourceError("verify_classes is limited to k <= 4");
  }
  ClassCheck check;
  check.k = k;
  const std::uint64_t universe = universe_mask(k);
  const std::uint64_t count = universe == ~std::uint64_t{0} ? 0 : universe + 1;

  std::vector<std::uint64_t> canon_of(count);
  std::set<SubsetK> canons;
  for (std::uint64_t m = 0; m < count; ++m) {
    const SubsetK c = canonicalize(SubsetK(k, m)).canon;
    canon_of[m] = c.mask();
    canons.insert(c);
  }
  check.subsets = count;
  check.groups = canons.size();
  check.matches_recurrence = BigInt(check.groups) == count_classes(k);
  const auto listed = enumerate_classes(k);
  check.matches_enumeration =
      std::vector<SubsetK>(canons.begin(), canons.end()) == listed;

  if (k <= 3) {
    // Orbit of each subset under the full group; two subsets share a
    // canonical form exactly when one lies in the other's orbit.
    check.orbit_check_done = true;
    check.matches_orbits = true;
    const auto maps = PhiMap::all(k);
    for (std::uint64_t m = 0; m < count && check.matches_orbits; ++m) {
      std::vector<bool> in_orbit(count, false);
      for (const auto& phi : maps) {
        in_orbit[apply_set(phi, SubsetK(k, m)).mask()] = true;
      }
      for (std::uint64_t other = 0; other < count; ++other) {
        if (in_orbit[other] != (canon_of[other] == canon_of[m])) {
          check.matches_orbits = false;
          break;
        }
      }
    }
  }
  return check;
}

}  // namespace delaycode
