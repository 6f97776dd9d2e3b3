#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace accnote::metrics {

/// Lowercased tokens split on maximal runs of non-alphanumeric characters.
/// Digits are kept; bytes of multi-byte UTF-8 sequences count as word
/// characters so non-English words survive intact.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace accnote::metrics
