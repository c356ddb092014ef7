#ifndef COVA_TRANSFORM_HPP
#define COVA_TRANSFORM_HPP

#include "cova/core.hpp"

namespace cova {

// Single left-to-right pass: whenever C[i] != 0 and C[C[i]] != 0, C[i] is
// replaced by C[C[i]], reading the already-updated array (well defined
// since C[i] < i). Maps a maximal cover array to the minimal one and
// fixes every minimal array. Throws std::invalid_argument when some
// entry violates 0 <= C[i] < i.
CoverArray max_to_min(const CoverArray& c);

// Right-to-left pass zeroing every totally covered position; the result
// is the pruned minimal cover array, whose element sum is at most 2n.
// Idempotent. Same range requirement as max_to_min.
CoverArray prune(const CoverArray& c);

}  // namespace cova

#endif
