#pragma once

#include <cstddef>
#include <span>

#include "accnote/data_model.hpp"

namespace accnote::metrics {

/// Binary detection scores with Deceptive as the positive class. Ratios with
/// a zero denominator are reported as 0 and flagged undefined.
struct DetectionReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  bool precision_defined = false;
  bool recall_defined = false;
  bool f1_defined = false;

  std::size_t total() const { return tp + fp + fn + tn; }
};

DetectionReport detection_from_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn);

/// Throws std::invalid_argument for unequal lengths or empty input.
DetectionReport detection_report(std::span<const Label> predictions, std::span<const Label> golds);

}  // namespace accnote::metrics
