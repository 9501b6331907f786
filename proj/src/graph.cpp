#include "delaycode/graph.hpp"

#include <algorithm>

namespace delaycode {

std::vector<bool> reachable_from(const Digraph& g, int start) {
  std::vector<bool> seen(g.size(), false);
  std::vector<int> stack = {start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

SccResult strongly_connected_components(const Digraph& g) {
  const int n = static_cast<int>(g.size());
  SccResult out;
  out.comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int counter = 0;

  // iterative Tarjan: (node, next edge position)
  std::vector<std::pair<int, std::size_t>> work;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) {
      continue;
    }
    work.emplace_back(root, 0);
    while (!work.empty()) {
      auto& [v, pos] = work.back();
      const auto vi = static_cast<std::size_t>(v);
      if (pos == 0 && index[vi] == -1) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = true;
      }
      if (pos < g[vi].size()) {
        const int w = g[vi][pos++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          work.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          out.comp[static_cast<std::size_t>(w)] = out.count;
        } while (w != v);
        ++out.count;
      }
      const int finished = v;
      work.pop_back();
      if (!work.empty()) {
        const auto parent = static_cast<std::size_t>(work.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> bottom_components(const Digraph& g) {
  const SccResult scc = strongly_connected_components(g);
  std::vector<bool> leaves(static_cast<std::size_t>(scc.count), false);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int w : g[v]) {
      if (scc.comp[v] != scc.comp[static_cast<std::size_t>(w)]) {
        leaves[static_cast<std::size_t>(scc.comp[v])] = true;
      }
    }
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(scc.count));
  for (std::size_t v = 0; v < g.size(); ++v) {
    groups[static_cast<std::size_t>(scc.comp[v])].push_back(static_cast<int>(v));
  }
  std::vector<std::vector<int>> out;
  for (int c = 0; c < scc.count; ++c) {
    if (!leaves[static_cast<std::size_t>(c)]) {
      out.push_back(groups[static_cast<std::size_t>(c)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace delaycode
