#pragma once

#include <span>

namespace uoms::eval {

// Label-using metrics, all in [0,1] and invariant to strictly increasing
// score transforms. Ties are handled by the exact expectation over random
// orderings within each tied block, so results are deterministic.
// All three throw DegenerateLabels unless both classes are present.

// Mean over positives of the precision at that positive's rank.
double average_precision(std::span<const double> scores, std::span<const int> labels);

// Rank-sum (Mann-Whitney) identity with fractional-rank tie correction.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

// Positives among the top k over k; a tied block straddling the boundary
// contributes its expected share. Throws BadK unless 1 <= k <= n.
double precision_at_k(std::span<const double> scores, std::span<const int> labels,
                      std::size_t k);

} // namespace uoms::eval
