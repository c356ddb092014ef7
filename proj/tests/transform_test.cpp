#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cova/covers.hpp"
#include "cova/enumerate.hpp"
#include "cova/sima.hpp"
#include "cova/transform.hpp"
#include "fixtures.hpp"

using namespace cova;

namespace {

CoverArray mk(std::vector<int> v, CoverKind k = CoverKind::unknown) {
  return CoverArray{std::move(v), k};
}

}  // namespace

TEST_CASE("max_to_min on the 23-symbol example's maximal row") {
  const auto out = max_to_min(mk(fixtures::example23_maximal(), CoverKind::maximal));
  CHECK(out.values == fixtures::example23_minimal_corrected());
  CHECK(out.kind == CoverKind::minimal);
}

TEST_CASE("max_to_min leaves zero and minimal arrays unchanged") {
  CHECK(max_to_min(mk({0, 0, 0, 0, 0})).values == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(max_to_min(mk(fixtures::run13_cover())).values == fixtures::run13_cover());
}

TEST_CASE("max_to_min is idempotent and fixes computed minimal arrays") {
  for (int n = 1; n <= 10; ++n) {
    fixtures::for_each_binary_string(n, [](const Text& x) {
      const auto c = minimal_cover_array(x);
      REQUIRE(max_to_min(c).values == c.values);
      const auto mx = maximal_cover_array_oracle(x);
      const auto once = max_to_min(mx);
      REQUIRE(max_to_min(once).values == once.values);
      REQUIRE(once.values == c.values);
    });
  }
}

TEST_CASE("prune reproduces the reference 24-position example") {
  const auto out = prune(mk(fixtures::prune24_minimal(), CoverKind::minimal));
  CHECK(out.values == fixtures::prune24_pruned());
  CHECK(out.kind == CoverKind::pruned);
}

TEST_CASE("prune fixed points") {
  CHECK(prune(mk(fixtures::run13_cover())).values == fixtures::run13_cover());
  CHECK(prune(mk({0, 0, 0})).values == std::vector<int>{0, 0, 0});
}

TEST_CASE("prune is idempotent") {
  for (const auto& c : all_valid_cover_arrays(10)) {
    const auto once = prune(mk(c)).values;
    REQUIRE(prune(mk(once)).values == once);
  }
}

TEST_CASE("pruned array element sum is at most 2n") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& c : all_valid_cover_arrays(n)) {
      const auto p = prune(mk(c)).values;
      const long sum = std::accumulate(p.begin(), p.end(), 0L);
      REQUIRE(sum <= 2L * n);
    }
  }
  for (int i = 4; i <= 25; ++i) {
    const auto c = minimal_cover_array(fibonacci_word(i));
    const auto p = prune(c).values;
    const long sum = std::accumulate(p.begin(), p.end(), 0L);
    REQUIRE(sum <= 2L * static_cast<long>(p.size()));
  }
}

TEST_CASE("pruning preserves cover-graph components") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& c : all_valid_cover_arrays(n)) {
      const auto full = connected_components(build_cover_graph(mk(c)));
      const auto pruned_cc = connected_components(build_cover_graph(prune(mk(c))));
      REQUIRE(full.components == pruned_cc.components);
    }
  }
}

TEST_CASE("transforms reject out-of-range entries") {
  CHECK_THROWS_AS(max_to_min(mk({0, 2})), std::invalid_argument);
  CHECK_THROWS_AS(prune(mk({0, -1})), std::invalid_argument);
}
