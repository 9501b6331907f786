#pragma once

#include <vector>

namespace delaycode {

/// Adjacency lists over nodes 0..n-1. Duplicate edges are harmless.
using Digraph = std::vector<std::vector<int>>;

/// Nodes reachable from `start`, including start itself.
std::vector<bool> reachable_from(const Digraph& g, int start);

/// Strongly connected components (Tarjan). comp[v] is the component id;
/// components are numbered in reverse topological order of the condensation.
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};
SccResult strongly_connected_components(const Digraph& g);

/// Components with no edge leaving them; each sorted ascending, and the list
/// ordered by smallest member.
std::vector<std::vector<int>> bottom_components(const Digraph& g);

}  // namespace delaycode
