#include "cova/sima.hpp"

#include <algorithm>
#include <stdexcept>

#include "cova/transform.hpp"
#include "cova/validate.hpp"

namespace cova {

std::size_t CoverGraph::edge_count() const {
  std::size_t endpoints = 0;
  for (const auto& list : adj) endpoints += list.size();
  return endpoints / 2;
}

CoverGraph build_cover_graph(const CoverArray& cp) {
  const int n = static_cast<int>(cp.values.size());
  CoverGraph g{n, std::vector<std::vector<int>>(n)};
  for (int i = 1; i <= n; ++i) {
    const int c = cp.values[i - 1];
    if (c < 0 || c >= i)
      throw std::invalid_argument("build_cover_graph: entry at position " +
                                  std::to_string(i) + " out of range");
    for (int j = 1; j <= c; ++j) {
      const int u = j, v = i - c + j;
      if (u == v) continue;
      g.adj[u - 1].push_back(v);
      g.adj[v - 1].push_back(u);
    }
  }
  return g;
}

ComponentLabeling connected_components(const CoverGraph& g) {
  ComponentLabeling out;
  out.label.assign(g.n, -1);
  std::vector<int> stack;
  for (int i = 1; i <= g.n; ++i) {
    if (out.label[i - 1] != -1) continue;
    const int id = static_cast<int>(out.components.size());
    out.components.emplace_back();
    stack.push_back(i);
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      if (out.label[p - 1] != -1) continue;
      out.label[p - 1] = id;
      out.components[id].push_back(p);
      for (int j : g.adj[p - 1])
        if (out.label[j - 1] == -1) stack.push_back(j);
    }
    std::sort(out.components[id].begin(), out.components[id].end());
  }
  return out;
}

InferenceResult infer(const CoverArray& c) {
  const auto pre = structural_check(c.values);
  if (!pre.valid)
    throw InvalidCoverArrayError(
        "infer: structural precheck failed at position " +
            std::to_string(pre.pos_i),
        pre.pos_i);

  const CoverArray cp = prune(max_to_min(c));
  const CoverGraph g = build_cover_graph(cp);
  const int n = g.n;

  InferenceResult r;
  r.text.assign(n, '\0');
  r.borders.values.assign(n, 0);
  r.components.label.assign(n, -1);
  std::vector<int> stack;
  char ch = 'a';
  for (int i = 1; i <= n; ++i) {
    if (r.text[i - 1] == '\0') {
      stack.push_back(i);
      ++r.stats.stack_pushes;
      if (i > 1 && cp.values[i - 1] == 0) {
        // Component start: pick the character that keeps B[i] <= B[i-1].
        ch = (r.text[r.borders.values[i - 2]] == 'a') ? 'b' : 'a';
      }
      const int id = static_cast<int>(r.components.components.size());
      r.components.components.emplace_back();
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        if (r.text[p - 1] == '\0') {
          r.components.label[p - 1] = id;
          r.components.components[id].push_back(p);
        }
        r.text[p - 1] = ch;
        for (int j : g.adj[p - 1]) {
          if (r.text[j - 1] == '\0') {
            stack.push_back(j);
            ++r.stats.stack_pushes;
          }
        }
      }
      std::sort(r.components.components[id].begin(),
                r.components.components[id].end());
    }
    r.borders.values[i - 1] =
        border_extend(r.text, r.borders.values, i, &r.stats.border_fallbacks);
  }
  return r;
}

}  // namespace cova
