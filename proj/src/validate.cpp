#include "cova/validate.hpp"

#include "cova/covers.hpp"
#include "cova/sima.hpp"

namespace cova {

ValidationReport structural_check(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  if (n < 1) return ValidationReport::fail("structural_check", 0);
  if (c[0] != 0) return ValidationReport::fail("structural_check", 1);
  for (int i = 2; i <= n; ++i)
    if (c[i - 1] < 0 || c[i - 1] >= i)
      return ValidationReport::fail("structural_check", i);
  return ValidationReport::ok();
}

ValidationReport check_offset_gap(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 2; i <= n; ++i) {
    if (c[i - 1] == 0) continue;
    for (int j = 1; j < i; ++j) {
      if (c[j - 1] == 0) continue;
      const int oi = i - c[i - 1], oj = j - c[j - 1];
      if (oj < oi && 2 * (oi - oj) <= c[j - 1])
        return ValidationReport::fail("check_offset_gap", i, j);
    }
  }
  return ValidationReport::ok();
}

ValidationReport check_induced_values(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 2; i <= n; ++i) {
    if (c[i - 1] == 0) continue;
    for (int j = 1; j < i; ++j) {
      if (c[j - 1] == 0) continue;
      const int oi = i - c[i - 1], oj = j - c[j - 1];
      if (oj < oi) continue;
      // The occurrence of j's cover, transported into the prefix copy of
      // i's cover, ends at r = j - (i - C[i]).
      const int r = j - oi;
      if (r < 1) continue;
      if (oi == oj) {
        if (c[r - 1] != 0)
          return ValidationReport::fail("check_induced_values", i, j);
      } else {  // oi < oj
        if (c[r - 1] != c[j - 1])
          return ValidationReport::fail("check_induced_values", i, j);
      }
    }
  }
  return ValidationReport::ok();
}

ValidationReport validate(const std::vector<int>& c) {
  auto report = structural_check(c);
  if (!report.valid) return report;
  report = check_offset_gap(c);
  if (!report.valid) return report;
  report = check_induced_values(c);
  if (!report.valid) return report;

  const InferenceResult inferred = infer(CoverArray{c, CoverKind::unknown});
  const CoverArray back = minimal_cover_array(inferred.text);
  if (back.values != c) {
    int pos = 1;
    while (back.values[pos - 1] == c[pos - 1]) ++pos;
    return ValidationReport::fail("round_trip", pos);
  }
  auto ok = ValidationReport::ok();
  ok.witness = inferred.text;
  return ok;
}

}  // namespace cova
