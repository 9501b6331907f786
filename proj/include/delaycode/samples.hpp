#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/rct.hpp"

namespace delaycode::samples {

/// Three-table 2-bit delay code-tuple over {a,b,c,d}, tables labelled 0, 1, 2.
CodeTuple three_table_tuple();

/// Three-table RCT over {a,b,c,d} on the domain {00}, {00,10}, C^2. With
/// `psi_overrides` every ψ is pinned to the worked-example choice; without,
/// ψ comes from transport().
Rct three_table_rct(bool psi_overrides = true);
/// (C^2, φ_000)
ExpandedIndex three_table_seed();

/// Two tables with every codeword empty: not extendable.
CodeTuple all_empty_tuple();

/// {a:0, b:10, c:11} as a one-table tuple with k = 1, μ = (1/2, 1/4, 1/4).
CodeTuple prefix_code_tuple();
SourceDist prefix_code_mu();

/// k = 1, two tables that are bit-flipped copies of each other with
/// crossed targets.
CodeTuple mirror_pair();

}  // namespace delaycode::samples
