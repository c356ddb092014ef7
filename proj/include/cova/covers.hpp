#ifndef COVA_COVERS_HPP
#define COVA_COVERS_HPP

#include "cova/core.hpp"

namespace cova {

// True iff x[1..len] is a proper cover of x: a border whose occurrences
// tile every position. Direct O(n*len) scan; this is the ground-truth
// oracle for the covering relation. Throws std::invalid_argument when
// len is outside 1..|x|.
bool is_cover(int len, const Text& x);

// All cover lengths of x, ascending. Empty for superprimitive strings.
std::vector<int> list_all_covers(const Text& x);

// Brute-force minimal cover array: C[i] = shortest cover of x[1..i] or 0.
CoverArray minimal_cover_array_oracle(const Text& x);

// Brute-force maximal cover array: C[i] = longest cover of x[1..i] or 0.
CoverArray maximal_cover_array_oracle(const Text& x);

// Linear-time minimal cover array. Output contract is identical to
// minimal_cover_array_oracle; correctness is pinned by oracle equivalence
// in the test suite.
CoverArray minimal_cover_array(const Text& x);

}  // namespace cova

#endif
