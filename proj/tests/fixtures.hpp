#ifndef COVA_TESTS_FIXTURES_HPP
#define COVA_TESTS_FIXTURES_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cova/core.hpp"

namespace fixtures {

// 23-symbol example string whose minimal/maximal cover arrays are known.
inline cova::Text example23() {
  return "abaaba" "baabaa" "babaab" "ababa";
}

inline std::vector<int> example23_maximal() {
  return {0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 6, 0, 5, 6, 0, 8, 9, 10, 11, 0, 8, 0, 3};
}

// Reference minimal row; position 17 is inconsistent with the same
// source's maximal row (the true value there is 9, see *_corrected).
inline std::vector<int> example23_minimal_printed() {
  return {0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 3, 0, 5, 3, 0, 3, 0, 5, 3, 0, 3, 0, 3};
}

inline std::vector<int> example23_minimal_corrected() {
  auto v = example23_minimal_printed();
  v[16] = 9;
  return v;
}

// 24-position prune example: minimal row and its pruned form.
inline std::vector<int> prune24_minimal() {
  return {0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 3, 7, 3, 9, 5, 3, 0, 5, 3, 0, 3, 9, 5, 3};
}

inline std::vector<int> prune24_pruned() {
  return {0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 9, 5, 0, 0, 0, 0, 0, 0, 9, 5, 3};
}

// 13-position worked inference example.
inline std::vector<int> run13_cover() {
  return {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0};
}

inline cova::Text run13_string() { return "aabbbbaabbbbb"; }

inline std::vector<int> run13_border() {
  return {0, 1, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 0};
}

inline std::vector<std::vector<int>> run13_components() {
  return {{1, 2, 7, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}, {13}};
}

// All 24 valid length-8 minimal cover arrays with the strings the
// inference must produce, in array-lexicographic order.
inline std::vector<std::pair<std::vector<int>, cova::Text>> length8_cases() {
  return {
      {{0, 0, 0, 0, 0, 0, 0, 0}, "abbbbbbb"},
      {{0, 0, 0, 0, 0, 0, 0, 4}, "abbbabbb"},
      {{0, 0, 0, 0, 0, 3, 0, 0}, "abbabbbb"},
      {{0, 0, 0, 0, 0, 3, 0, 3}, "abaababa"},
      {{0, 0, 0, 0, 0, 3, 4, 0}, "abbabbaa"},
      {{0, 0, 0, 0, 0, 3, 4, 5}, "abbabbab"},
      {{0, 0, 0, 2, 0, 0, 0, 0}, "ababbbbb"},
      {{0, 0, 0, 2, 3, 0, 0, 0}, "ababaaaa"},
      {{0, 0, 0, 2, 3, 0, 0, 3}, "ababaaba"},
      {{0, 0, 0, 2, 3, 2, 0, 0}, "abababbb"},
      {{0, 0, 0, 2, 3, 2, 3, 0}, "abababaa"},
      {{0, 0, 0, 2, 3, 2, 3, 2}, "abababab"},
      {{0, 1, 0, 0, 0, 0, 0, 0}, "aabbbbbb"},
      {{0, 1, 0, 0, 0, 0, 0, 4}, "aabbaabb"},
      {{0, 1, 0, 0, 0, 3, 0, 0}, "aabaabbb"},
      {{0, 1, 0, 0, 0, 3, 4, 0}, "aabaabab"},
      {{0, 1, 0, 0, 0, 3, 4, 5}, "aabaabaa"},
      {{0, 1, 1, 0, 0, 0, 0, 0}, "aaabbbbb"},
      {{0, 1, 1, 0, 0, 0, 0, 4}, "aaabaaab"},
      {{0, 1, 1, 1, 0, 0, 0, 0}, "aaaabbbb"},
      {{0, 1, 1, 1, 1, 0, 0, 0}, "aaaaabbb"},
      {{0, 1, 1, 1, 1, 1, 0, 0}, "aaaaaabb"},
      {{0, 1, 1, 1, 1, 1, 1, 0}, "aaaaaaab"},
      {{0, 1, 1, 1, 1, 1, 1, 1}, "aaaaaaaa"},
  };
}

// Quadratic longest-border oracle, independent of the library path.
inline std::vector<int> brute_border_array(const cova::Text& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> b(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int l = i - 1; l >= 1; --l) {
      if (x.compare(0, l, x, i - l, l) == 0) {
        b[i - 1] = l;
        break;
      }
    }
  }
  return b;
}

// Visits all 2^n strings over {a, b} of length exactly n.
inline void for_each_binary_string(int n,
                                   const std::function<void(const cova::Text&)>& fn) {
  cova::Text buf(n, 'a');
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    for (int i = 0; i < n; ++i) buf[i] = (mask >> i & 1) ? 'b' : 'a';
    fn(buf);
  }
}

}  // namespace fixtures

#endif
