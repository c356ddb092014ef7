#include "cova/core.hpp"

#include <array>

namespace cova {

int border_extend(const Text& x, const std::vector<int>& b, int pos,
                  std::uint64_t* steps) {
  if (pos == 1) return 0;
  int l = b[pos - 2] + 1;
  while (l != 0) {
    if (x[pos - 1] == x[l - 1]) return l;
    l = (l == 1) ? 0 : b[l - 2] + 1;
    if (steps) ++*steps;
  }
  return x[pos - 1] == x[0] ? 1 : 0;
}

BorderArray border_array(const Text& x) {
  const int n = static_cast<int>(x.size());
  BorderArray b;
  b.values.resize(n);
  for (int i = 1; i <= n; ++i) b.values[i - 1] = border_extend(x, b.values, i);
  return b;
}

int alphabet_size(const Text& x) {
  std::array<bool, 256> seen{};
  int count = 0;
  for (unsigned char c : x) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace cova
