#pragma once

#include "delaycode/phi.hpp"
#include "delaycode/rational.hpp"
#include "delaycode/subset.hpp"

#include <vector>

namespace delaycode {

/// Canonical representative of A's class under Φ_k, with psi(canon) = A.
struct CanonWitness {
  SubsetK canon;
  PhiMap psi;
};

/// Splits A = 0A_0 ∪ 1A_1, canonicalizes both halves and puts the smaller
/// half under 0 (no swap on ties). The witness records the swap bit at each
/// node as its φ* entry.
CanonWitness canonicalize(const SubsetK& A);

bool equivalent(const SubsetK& A, const SubsetK& B);

/// A deterministic φ with φ(B) = T. Throws DomainError when B and T are
/// not equivalent.
PhiMap transport(const SubsetK& B, const SubsetK& T);

/// a_0 = 2, a_k = a_{k-1}(a_{k-1}+1)/2. k ≤ 16.
BigInt count_classes(int k);
/// a_{k-1}(a_{k-1}-1)/2 for k ≥ 1: classes whose two halves are inequivalent.
BigInt count_classes_restricted(int k);

/// All canonical representatives, sorted. k ≤ 4.
std::vector<SubsetK> enumerate_classes(int k);

struct ClassCheck {
  int k = 0;
  std::size_t subsets = 0;
  std::size_t groups = 0;        // distinct canonical forms over every subset
  bool matches_recurrence = false;
  bool matches_enumeration = false;
  bool orbit_check_done = false;  // explicit orbits under every φ (k ≤ 3)
  bool matches_orbits = false;
  bool ok() const {
    return matches_recurrence && matches_enumeration && (!orbit_check_done || matches_orbits);
  }
};

/// Canonicalizes all 2^(2^k) subsets and compares the grouping with the
/// recurrence and with enumerate_classes. For k ≤ 3 the grouping is also
/// compared with orbits computed by applying every member of Φ_k. k ≤ 4.
ClassCheck verify_classes(int k);

}  // namespace delaycode
