#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace accnote {

/// True when the text has a URI scheme followed by "://" and a non-empty host.
bool is_absolute_url(std::string_view url);

/// True when the URL uses http or https.
bool is_http_url(std::string_view url);

/// Drops a leading "scheme://" if present.
std::string_view strip_scheme(std::string_view url);

struct UrlSplit {
  /// Remaining prose with URLs removed and whitespace collapsed.
  std::string prose;
  /// URLs in order of appearance (http(s):// or www. prefixed).
  std::vector<std::string> urls;
};

/// Separates inline links from the prose of a Community Note.
UrlSplit split_urls(std::string_view text);

}  // namespace accnote
