#include "accnote/llm/chat.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "accnote/digest.hpp"
#include "accnote/url.hpp"

namespace accnote::llm {
namespace {

void append_field(std::string& buf, std::string_view tag, std::string_view value) {
  // Length-prefixed so field boundaries cannot be forged by content.
  buf.append(tag);
  buf.push_back(':');
  buf.append(std::to_string(value.size()));
  buf.push_back(':');
  buf.append(value);
  buf.push_back('\n');
}

}  // namespace

std::string image_digest(const ImagePart& image) {
  if (!image.digest.empty()) return image.digest;
  if (!image.bytes.empty()) return sha256_hex(image.bytes);
  if (!image.source.empty() && !is_absolute_url(image.source)) {
    std::ifstream in(image.source, std::ios::binary);
    if (in) {
      const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      return sha256_hex(bytes);
    }
  }
  return sha256_hex("source:" + image.source);
}

std::string cache_key(const ChatRequest& request) {
  std::string buf;
  char temp[32];
  std::snprintf(temp, sizeof(temp), "%.6f", request.temperature);
  append_field(buf, "model", request.model_id);
  append_field(buf, "temperature", temp);
  append_field(buf, "system", request.system_text);
  for (const auto& part : request.user_parts) {
    if (const auto* t = std::get_if<TextPart>(&part)) {
      append_field(buf, "text", t->text);
    } else {
      append_field(buf, "image", image_digest(std::get<ImagePart>(part)));
    }
  }
  if (request.attempt != 0) append_field(buf, "attempt", std::to_string(request.attempt));
  return sha256_hex(buf);
}

std::string render_prompt(const ChatRequest& request) {
  std::string out = request.system_text;
  out += "\n\n";
  for (const auto& part : request.user_parts) {
    if (const auto* t = std::get_if<TextPart>(&part)) {
      out += t->text;
    } else {
      out += "<image>";
    }
  }
  return out;
}

}  // namespace accnote::llm
