#pragma once

#include <span>
#include <vector>

namespace accnote::metrics {

/// Rescales a 1..5 agreement rating to [0, 1] via (ur - 1) / 4. Throws
/// std::out_of_range for anything else.
double normalize_user_rating(int rating);

/// 1-based ranks with ties sharing the average of the positions they span.
std::vector<double> average_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;
  /// False when either side is constant; rho is then 0, never NaN.
  bool defined = false;
};

/// Pearson correlation of the average ranks. Throws std::invalid_argument for
/// unequal lengths or fewer than three pairs.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace accnote::metrics
