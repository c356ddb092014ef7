#include "cova/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace cova {

namespace {

void require_in_range(const std::vector<int>& v, const char* who) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || v[i] > static_cast<int>(i))
      throw std::invalid_argument(std::string(who) + ": entry at position " +
                                  std::to_string(i + 1) + " out of range");
}

}  // namespace

CoverArray max_to_min(const CoverArray& c) {
  require_in_range(c.values, "max_to_min");
  std::vector<int> v = c.values;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && v[v[i] - 1] != 0) v[i] = v[v[i] - 1];
  return {std::move(v), CoverKind::minimal};
}

CoverArray prune(const CoverArray& c) {
  require_in_range(c.values, "prune");
  std::vector<int> v = c.values;
  int l = 0;
  for (int i = static_cast<int>(v.size()); i >= 1; --i) {
    const int orig = v[i - 1];
    if (l >= orig) v[i - 1] = 0;
    l = std::max(0, std::max(l, orig) - 1);
  }
  return {std::move(v), CoverKind::pruned};
}

}  // namespace cova
