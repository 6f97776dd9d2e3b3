#include "accnote/metrics/detection.hpp"

#include <stdexcept>

namespace accnote::metrics {

DetectionReport detection_from_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
  DetectionReport r{tp, fp, fn, tn};
  if (tp + fp > 0) {
    r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    r.precision_defined = true;
  }
  if (tp + fn > 0) {
    r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    r.recall_defined = true;
  }
  r.f1_defined = r.precision_defined && r.recall_defined;
  if (r.f1_defined && r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  if (r.total() > 0) r.accuracy = static_cast<double>(tp + tn) / static_cast<double>(r.total());
  return r;
}

DetectionReport detection_report(std::span<const Label> predictions, std::span<const Label> golds) {
  if (predictions.size() != golds.size()) throw std::invalid_argument("detection: length mismatch");
  if (predictions.empty()) throw std::invalid_argument("detection: no predictions");
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool predicted = predictions[i] == Label::kDeceptive;
    const bool actual = golds[i] == Label::kDeceptive;
    if (predicted && actual) ++tp;
    else if (predicted) ++fp;
    else if (actual) ++fn;
    else ++tn;
  }
  return detection_from_counts(tp, fp, fn, tn);
}

}  // namespace accnote::metrics
