#include "accnote/url.hpp"

#include <cctype>

#include "accnote/strings.hpp"

namespace accnote {
namespace {

std::size_t scheme_end(std::string_view url) {
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." )
  if (url.empty() || !std::isalpha(static_cast<unsigned char>(url[0]))) return std::string_view::npos;
  std::size_t i = 1;
  while (i < url.size()) {
    const auto c = static_cast<unsigned char>(url[i]);
    if (std::isalnum(c) || c == '+' || c == '-' || c == '.') {
      ++i;
      continue;
    }
    break;
  }
  if (url.substr(i, 3) != "://") return std::string_view::npos;
  return i;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_absolute_url(std::string_view url) {
  const auto end = scheme_end(url);
  if (end == std::string_view::npos) return false;
  auto authority = url.substr(end + 3);
  authority = authority.substr(0, authority.find_first_of("/?#"));
  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  std::string_view host = authority;
  if (!host.empty() && host.front() == '[') {
    host = host.substr(0, host.find(']') + 1);
  } else {
    host = host.substr(0, host.find(':'));
  }
  if (host.empty()) return false;
  for (char c : host) {
    if (is_space(c)) return false;
  }
  return true;
}

bool is_http_url(std::string_view url) {
  return (istarts_with(url, "http://") || istarts_with(url, "https://")) && is_absolute_url(url);
}

std::string_view strip_scheme(std::string_view url) {
  const auto end = scheme_end(url);
  if (end == std::string_view::npos) return url;
  return url.substr(end + 3);
}

UrlSplit split_urls(std::string_view text) {
  UrlSplit out;
  std::string prose;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool word_start = i == 0 || is_space(text[i - 1]) || text[i - 1] == '(';
    const auto rest = text.substr(i);
    if (word_start && (istarts_with(rest, "http://") || istarts_with(rest, "https://") ||
                       istarts_with(rest, "www."))) {
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      auto url = text.substr(i, j - i);
      // Sentence punctuation glued to the end of a link is not part of it.
      while (!url.empty() && std::string_view(".,;:!?)\"'").find(url.back()) != std::string_view::npos) {
        url.remove_suffix(1);
      }
      out.urls.emplace_back(url);
      prose.append(text.substr(i + url.size(), j - i - url.size()));
      i = j;
      continue;
    }
    prose.push_back(text[i]);
    ++i;
  }
  // Collapse whitespace runs; punctuation left behind by a removed link closes up on the prior word.
  std::string collapsed;
  bool pending_space = false;
  for (char c : trim(prose)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    const bool closing = std::string_view(".,;:!?)").find(c) != std::string_view::npos;
    if (pending_space && !collapsed.empty() && !closing) collapsed.push_back(' ');
    pending_space = false;
    collapsed.push_back(c);
  }
  out.prose = std::move(collapsed);
  return out;
}

}  // namespace accnote
