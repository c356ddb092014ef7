#include "cova/enumerate.hpp"

#include <stdexcept>

#include "cova/covers.hpp"

namespace cova {

namespace {

void visit_canonical(Text& buf, int pos, int used, int k,
                     const std::function<void(const Text&)>& fn) {
  const int n = static_cast<int>(buf.size());
  if (pos == n) {
    fn(buf);
    return;
  }
  const int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    buf[pos] = static_cast<char>('a' + c);
    visit_canonical(buf, pos + 1, std::max(used, c + 1), k, fn);
  }
}

}  // namespace

void for_each_canonical_string(int n, int k,
                               const std::function<void(const Text&)>& fn) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("canonical_strings: n out of range 1..20");
  if (k < 1 || k > 26)
    throw std::invalid_argument("canonical_strings: k out of range 1..26");
  Text buf(n, 'a');
  visit_canonical(buf, 0, 0, k, fn);
}

std::vector<Text> canonical_strings(int n, int k) {
  std::vector<Text> out;
  for_each_canonical_string(n, k, [&](const Text& x) { out.push_back(x); });
  return out;
}

std::set<std::vector<int>> distinct_cover_arrays(int n, int k) {
  std::set<std::vector<int>> out;
  for_each_canonical_string(
      n, k, [&](const Text& x) { out.insert(minimal_cover_array(x).values); });
  return out;
}

std::vector<std::vector<int>> all_valid_cover_arrays(int n) {
  if (n < 1 || n > 14)
    throw std::invalid_argument("all_valid_cover_arrays: n out of range 1..14");
  const auto set = distinct_cover_arrays(n, 2);
  return {set.begin(), set.end()};
}

Text fibonacci_word(int i) {
  if (i < 1 || i > 34)
    throw std::invalid_argument("fibonacci_word: index out of range 1..34");
  if (i == 1) return "a";
  Text prev = "a", cur = "ab";
  for (int j = 3; j <= i; ++j) {
    Text next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace cova
