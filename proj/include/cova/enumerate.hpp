#ifndef COVA_ENUMERATE_HPP
#define COVA_ENUMERATE_HPP

#include <functional>
#include <set>

#include "cova/core.hpp"

namespace cova {

// Visits every canonical string of length n over at most k symbols in
// lexicographic order. Canonical: each new symbol first appears in
// alphabetical order, so every string over <= k symbols is a relabeling
// of exactly one visited string. Bounds: 1 <= n <= 20, 1 <= k <= 26.
void for_each_canonical_string(int n, int k,
                               const std::function<void(const Text&)>& fn);

// Materialized variant of for_each_canonical_string.
std::vector<Text> canonical_strings(int n, int k);

// Deduplicated set of minimal cover arrays over canonical_strings(n, k),
// in lexicographic order on values.
std::set<std::vector<int>> distinct_cover_arrays(int n, int k);

// Ground-truth set of valid minimal cover arrays of length n, sorted.
// Bounds: 1 <= n <= 14.
std::vector<std::vector<int>> all_valid_cover_arrays(int n);

// F(1) = "a", F(2) = "ab", F(i) = F(i-1) . F(i-2). Bounds: 1 <= i <= 34.
Text fibonacci_word(int i);

}  // namespace cova

#endif
