#include "accnote/agents/index_partition.hpp"

#include <cctype>
#include <optional>

#include "accnote/strings.hpp"

namespace accnote::agents {
namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Span of the first balanced {...}, ignoring braces inside string literals.
std::optional<std::string_view> first_object(std::string_view raw) {
  const auto open = raw.find('{');
  if (open == std::string_view::npos) return std::nullopt;
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open; i < raw.size(); ++i) {
    const char c = raw[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '{') ++depth;
    else if (c == '}' && --depth == 0) return raw.substr(open, i - open + 1);
  }
  return raw.substr(open);  // truncated completion
}

// Numbers in "[1, 2, 3]" or a bare "2". nullopt when the value is neither.
std::optional<std::vector<long>> read_value(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size()) return std::nullopt;
  std::string_view body;
  if (text[i] == '[') {
    const auto close = text.find(']', i);
    body = text.substr(i + 1, close == std::string_view::npos ? std::string_view::npos : close - i - 1);
  } else if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-') {
    auto end = i + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    body = text.substr(i, end - i);
  } else {
    return std::nullopt;
  }
  std::vector<long> out;
  for (std::size_t k = 0; k < body.size();) {
    const bool neg = body[k] == '-' && k + 1 < body.size() && std::isdigit(static_cast<unsigned char>(body[k + 1]));
    if (!neg && !std::isdigit(static_cast<unsigned char>(body[k]))) {
      ++k;
      continue;
    }
    std::size_t end = neg ? k + 1 : k;
    long v = 0;
    while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) {
      if (v < 1'000'000) v = v * 10 + (body[end] - '0');
      ++end;
    }
    out.push_back(neg ? -v : v);
    k = end;
  }
  return out;
}

// Finds `key:` as a whole word (quotes allowed around it) and reads its value.
std::optional<std::vector<long>> find_key(std::string_view object, std::string_view key) {
  const auto lower_obj = to_lower(object);
  const auto lower_key = to_lower(key);
  for (auto pos = lower_obj.find(lower_key); pos != std::string::npos;
       pos = lower_obj.find(lower_key, pos + 1)) {
    if (pos > 0 && is_letter(object[pos - 1])) continue;
    auto i = pos + key.size();
    if (i < object.size() && is_letter(object[i])) continue;
    // closing quote: ASCII or any UTF-8 byte of a typographic quote
    while (i < object.size() && (object[i] == '"' || object[i] == '\'' || object[i] == ' ' ||
                                 static_cast<unsigned char>(object[i]) >= 0x80)) {
      ++i;
    }
    if (i >= object.size() || object[i] != ':') continue;
    if (auto value = read_value(object.substr(i + 1))) return value;
  }
  return std::nullopt;
}

}  // namespace

const IndexSet& KeyedPartition::at(std::string_view key) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return sets[i];
  }
  throw std::out_of_range("no partition key " + std::string(key));
}

KeyedPartition parse_index_partition(std::string_view raw, std::span<const std::string_view> keys, int m) {
  if (keys.empty()) throw std::invalid_argument("parse_index_partition: no keys");
  const auto object = first_object(raw);
  if (!object) throw PartitionParseError("no JSON object found");

  std::vector<std::optional<std::vector<long>>> claimed;
  bool any = false;
  for (const auto key : keys) {
    claimed.push_back(find_key(*object, key));
    any = any || claimed.back().has_value();
  }
  if (!any) throw PartitionParseError("JSON lacks all expected keys");

  // owner[i] = index of the key that keeps option i
  std::vector<int> owner(static_cast<std::size_t>(std::max(m, 0)) + 1, -1);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (!claimed[k]) continue;
    for (long idx : *claimed[k]) {
      if (idx < 1 || idx > m) continue;
      auto& slot = owner[static_cast<std::size_t>(idx)];
      if (slot == -1) slot = static_cast<int>(k);
    }
  }

  KeyedPartition out;
  out.keys.assign(keys.begin(), keys.end());
  out.sets.resize(keys.size());
  for (int i = 1; i <= m; ++i) {
    const int k = owner[static_cast<std::size_t>(i)];
    out.sets[k == -1 ? keys.size() - 1 : static_cast<std::size_t>(k)].push_back(i);
  }
  return out;
}

}  // namespace accnote::agents
