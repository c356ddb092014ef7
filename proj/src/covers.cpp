#include "cova/covers.hpp"

#include <stdexcept>

namespace cova {

bool is_cover(int len, const Text& x) {
  const int n = static_cast<int>(x.size());
  if (len < 1 || len > n)
    throw std::invalid_argument("is_cover: length " + std::to_string(len) +
                                " out of range 1.." + std::to_string(n));
  if (len == n) return false;  // a string is not its own cover
  if (x.compare(0, len, x, n - len, len) != 0) return false;  // not a border
  int covered_to = 0;  // rightmost position tiled so far
  for (int i = 1; i + len - 1 <= n; ++i) {
    if (x.compare(i - 1, len, x, 0, len) == 0) {
      if (i > covered_to + 1) return false;  // permanent gap at covered_to+1
      covered_to = i + len - 1;
    }
  }
  return covered_to == n;
}

std::vector<int> list_all_covers(const Text& x) {
  std::vector<int> out;
  const int n = static_cast<int>(x.size());
  for (int l = 1; l < n; ++l)
    if (is_cover(l, x)) out.push_back(l);
  return out;
}

CoverArray minimal_cover_array_oracle(const Text& x) {
  const int n = static_cast<int>(x.size());
  CoverArray c{std::vector<int>(n, 0), CoverKind::minimal};
  for (int i = 1; i <= n; ++i) {
    const Text prefix = x.substr(0, i);
    auto covers = list_all_covers(prefix);
    if (!covers.empty()) c.values[i - 1] = covers.front();
  }
  return c;
}

CoverArray maximal_cover_array_oracle(const Text& x) {
  const int n = static_cast<int>(x.size());
  CoverArray c{std::vector<int>(n, 0), CoverKind::maximal};
  for (int i = 1; i <= n; ++i) {
    const Text prefix = x.substr(0, i);
    auto covers = list_all_covers(prefix);
    if (!covers.empty()) c.values[i - 1] = covers.back();
  }
  return c;
}

CoverArray minimal_cover_array(const Text& x) {
  const int n = static_cast<int>(x.size());
  CoverArray c{std::vector<int>(n, 0), CoverKind::minimal};
  const BorderArray border = border_array(x);
  // shortest[i] = length of the shortest cover of x[1..i], or i itself when
  // the prefix is superprimitive; reach[m] = end of the latest occurrence of
  // x[1..m] that extends a contiguous tiling by x[1..m].
  std::vector<int> shortest(n + 1, 0), reach(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int b = border.values[i - 1];
    if (b > 0 && reach[shortest[b]] >= i - shortest[b]) {
      shortest[i] = shortest[b];
      reach[shortest[i]] = i;
      c.values[i - 1] = shortest[i];
    } else {
      shortest[i] = i;
      reach[i] = i;
    }
  }
  return c;
}

}  // namespace cova
