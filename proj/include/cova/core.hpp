#ifndef COVA_CORE_HPP
#define COVA_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cova {

// A text is a sequence of lowercase letters 'a'..'z'. All documented
// positions are 1-based: position i of x is x[i-1] in storage.
using Text = std::string;

// B[i] = length of the longest proper border of x[1..i], stored at values[i-1].
struct BorderArray {
  std::vector<int> values;

  bool operator==(const BorderArray&) const = default;
};

enum class CoverKind { minimal, maximal, pruned, unknown };

// C[i] = length of the shortest (minimal), longest (maximal) or pruned
// cover of x[1..i], 0 when the prefix is superprimitive; stored at values[i-1].
struct CoverArray {
  std::vector<int> values;
  CoverKind kind = CoverKind::unknown;

  bool operator==(const CoverArray& o) const { return values == o.values; }
};

// Single incremental step of the failure-function computation: given
// B[1..pos-1] in b[0..pos-2] and the text built up to position pos,
// returns B[pos]. The fallback walk exits to an explicit l=0 comparison
// against x[1]; B[0] is never read. If steps is non-null, every fallback
// hop is counted into it.
int border_extend(const Text& x, const std::vector<int>& b, int pos,
                  std::uint64_t* steps = nullptr);

// Longest-border array of x in one left-to-right pass. Empty text gives
// an empty array.
BorderArray border_array(const Text& x);

// Number of distinct symbols in x; 0 for the empty text.
int alphabet_size(const Text& x);

}  // namespace cova

#endif
