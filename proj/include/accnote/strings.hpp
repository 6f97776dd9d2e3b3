#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace accnote {

std::string_view trim(std::string_view text);
std::string to_lower(std::string_view text);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view text, std::string_view prefix);

}  // namespace accnote
