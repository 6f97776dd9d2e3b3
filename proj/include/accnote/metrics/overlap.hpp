#pragma once

#include <span>
#include <string>
#include <string_view>

namespace accnote::metrics {

/// Length of the longest common subsequence of two token sequences.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

/// LCS-based F1 over token sequences: P = L/|candidate|, R = L/|reference|,
/// F = 2PR/(P+R). Zero when either side is empty or nothing is shared.
double rouge_l_tokens(std::span<const std::string> candidate, std::span<const std::string> reference);
double rouge_l(std::string_view candidate, std::string_view reference);

/// Smoothed sentence BLEU.
///
/// Geometric mean of clipped n-gram precisions for n = 1..max_n, times the
/// brevity penalty exp(1 - |ref|/|cand|) (capped at 1). An order with no
/// matching n-gram contributes kZeroMatchEpsilon / max(total, 1) instead of 0,
/// so short notes without 4-gram overlap still score above zero. An empty
/// candidate or reference scores 0.
inline constexpr double kZeroMatchEpsilon = 0.1;
double bleu_tokens(std::span<const std::string> candidate, std::span<const std::string> reference,
                   int max_n = 4);
double bleu(std::string_view candidate, std::string_view reference, int max_n = 4);

}  // namespace accnote::metrics
