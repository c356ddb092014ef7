#ifndef COVA_VALIDATE_HPP
#define COVA_VALIDATE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "cova/core.hpp"

namespace cova {

class InvalidCoverArrayError : public std::invalid_argument {
 public:
  InvalidCoverArrayError(const std::string& msg, int position)
      : std::invalid_argument(msg), position_(position) {}

  int position() const { return position_; }

 private:
  int position_;
};

struct ValidationReport {
  bool valid = false;
  std::string violated;       // predicate name, empty when valid
  int pos_i = 0, pos_j = 0;   // 1-based witnesses of the violation, 0 = unused
  std::optional<Text> witness;  // inferred string, present iff valid

  static ValidationReport ok() { return {true, "", 0, 0, std::nullopt}; }
  static ValidationReport fail(std::string predicate, int i, int j = 0) {
    return {false, std::move(predicate), i, j, std::nullopt};
  }
};

// Range sanity: n >= 1, C[1] = 0, 0 <= C[i] < i. First failure reported.
ValidationReport structural_check(const std::vector<int>& c);

// Necessary condition on cover offsets: for j < i with both entries
// nonzero and j-C[j] < i-C[i], (i-C[i]) - (j-C[j]) > C[j]/2 must hold
// strictly. O(n^2) scan; a desk-scale rejector, not the linear validator.
ValidationReport check_offset_gap(const std::vector<int>& c);

// Necessary condition on induced entries: for j < i with both entries
// nonzero and j-C[j] >= i-C[i], let r = j-(i-C[i]); when r >= 1,
// equal offsets force C[r] = 0 and j-C[j] > i-C[i] forces C[r] = C[j].
// Pairs with r < 1 are skipped.
ValidationReport check_induced_values(const std::vector<int>& c);

// Full decision procedure: structural check, the two fast rejectors,
// then the authoritative round trip — infer a witness and accept iff its
// minimal cover array equals the input.
ValidationReport validate(const std::vector<int>& c);

}  // namespace cova

#endif
