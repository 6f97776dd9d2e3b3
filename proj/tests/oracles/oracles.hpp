#pragma once

// Slow, definitional reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracle {

inline bool is_subsequence(const std::vector<std::string>& sub, const std::vector<std::string>& seq) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < seq.size() && j < sub.size(); ++i) {
    if (seq[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

/// Longest common subsequence by enumerating every subsequence of `a`.
inline std::size_t brute_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t best = 0;
  const std::size_t n = a.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
  }
  return best;
}

inline double rouge_l(const std::vector<std::string>& cand, const std::vector<std::string>& ref) {
  if (cand.empty() || ref.empty()) return 0.0;
  const double l = static_cast<double>(brute_lcs(cand, ref));
  if (l == 0.0) return 0.0;
  const double p = l / static_cast<double>(cand.size());
  const double r = l / static_cast<double>(ref.size());
  return 2.0 * p * r / (p + r);
}

/// Rank = (number of smaller values) + (number of equal values + 1) / 2.
inline std::vector<double> count_ranks(const std::vector<double>& v) {
  std::vector<double> ranks;
  for (double x : v) {
    double less = 0, equal = 0;
    for (double y : v) {
      if (y < x) ++less;
      if (y == x) ++equal;
    }
    ranks.push_back(less + (equal + 1.0) / 2.0);
  }
  return ranks;
}

/// 1 - 6 sum d^2 / (n (n^2 - 1)); valid only without ties.
inline double spearman_no_ties(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = count_ranks(x);
  const auto ry = count_ranks(y);
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

/// Pearson correlation of count-based ranks (handles ties).
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = count_ranks(x);
  const auto ry = count_ranks(y);
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sx += rx[i];
    sy += ry[i];
  }
  double num = 0, dx2 = 0, dy2 = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - sx / n) * (ry[i] - sy / n);
    dx2 += (rx[i] - sx / n) * (rx[i] - sx / n);
    dy2 += (ry[i] - sy / n) * (ry[i] - sy / n);
  }
  return num / std::sqrt(dx2 * dy2);
}

struct Detection {
  double precision, recall, f1, accuracy;
};

inline Detection detection(double tp, double fp, double fn, double tn) {
  Detection d{};
  d.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  d.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  d.f1 = tp > 0 ? 2.0 * tp / (2.0 * tp + fp + fn) : 0.0;
  d.accuracy = (tp + tn) / (tp + fp + fn + tn);
  return d;
}

/// Clipped n-gram precision for one order, counted with plain loops.
inline std::pair<int, int> clipped_matches(const std::vector<std::string>& c, const std::vector<std::string>& r,
                                           std::size_t n) {
  std::map<std::vector<std::string>, int> cc, rc;
  for (std::size_t i = 0; i + n <= c.size(); ++i) ++cc[{c.begin() + i, c.begin() + i + n}];
  for (std::size_t i = 0; i + n <= r.size(); ++i) ++rc[{r.begin() + i, r.begin() + i + n}];
  int m = 0, t = 0;
  for (auto& [g, k] : cc) {
    t += k;
    m += std::min(k, rc.count(g) ? rc[g] : 0);
  }
  return {m, t};
}

}  // namespace oracle
