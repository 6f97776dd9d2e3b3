#include <filesystem>
#include <fstream>
#include <iterator>

#include <httplib.h>
#include <json.hpp>

#include "accnote/digest.hpp"
#include "accnote/llm/backends.hpp"
#include "accnote/strings.hpp"
#include "accnote/url.hpp"

namespace accnote::llm {
namespace {

struct SplitBase {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path, no trailing slash
};

SplitBase split_base(const std::string& base_url) {
  if (!is_http_url(base_url)) throw GatewayError("endpoint base URL is not http(s): " + base_url);
  const auto after_scheme = base_url.find("://") + 3;
  const auto slash = base_url.find('/', after_scheme);
  SplitBase out;
  out.origin = base_url.substr(0, slash);
  out.prefix = slash == std::string::npos ? "" : base_url.substr(slash);
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

std::string mime_for(const std::string& path) {
  const auto ext = to_lower(std::filesystem::path(path).extension().string());
  if (ext == ".png") return "image/png";
  if (ext == ".gif") return "image/gif";
  if (ext == ".webp") return "image/webp";
  return "image/jpeg";
}

std::string image_url_for(const ImagePart& image) {
  if (!image.bytes.empty()) return "data:" + mime_for(image.source) + ";base64," + base64_encode(image.bytes);
  if (is_http_url(image.source) || istarts_with(image.source, "data:")) return image.source;
  std::ifstream in(image.source, std::ios::binary);
  if (!in) throw GatewayError("cannot read image " + image.source);
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return "data:" + mime_for(image.source) + ";base64," + base64_encode(bytes);
}

nlohmann::json post_json(const EndpointConfig& config, const std::string& route,
                         const nlohmann::json& body) {
  const auto base = split_base(config.base_url);
  httplib::Client client(base.origin);
  client.set_connection_timeout(config.timeout);
  client.set_read_timeout(config.timeout);
  client.set_write_timeout(config.timeout);
  httplib::Headers headers;
  if (!config.api_key.empty()) headers.emplace("Authorization", "Bearer " + config.api_key);

  const auto res = client.Post(base.prefix + route, headers, body.dump(), "application/json");
  if (!res) throw TransientError("request to " + config.base_url + route + " failed: " + httplib::to_string(res.error()));
  if (res->status == 401 || res->status == 403) {
    throw AuthError("authentication failure (HTTP " + std::to_string(res->status) + ")");
  }
  if (res->status == 408 || res->status == 429 || res->status >= 500) {
    throw TransientError("HTTP " + std::to_string(res->status));
  }
  if (res->status < 200 || res->status >= 300) {
    throw GatewayError("HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
  }
  auto doc = nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw SchemaError("response is not a JSON object");
  return doc;
}

}  // namespace

OpenAiChatBackend::OpenAiChatBackend(EndpointConfig config) : config_(std::move(config)) {
  split_base(config_.base_url);
}

std::string OpenAiChatBackend::complete(const ChatRequest& request) {
  nlohmann::json content = nlohmann::json::array();
  for (const auto& part : request.user_parts) {
    if (const auto* t = std::get_if<TextPart>(&part)) {
      content.push_back({{"type", "text"}, {"text", t->text}});
    } else {
      content.push_back(
          {{"type", "image_url"}, {"image_url", {{"url", image_url_for(std::get<ImagePart>(part))}}}});
    }
  }
  nlohmann::json body = {
      {"model", request.model_id},
      {"messages",
       {{{"role", "system"}, {"content", request.system_text}}, {{"role", "user"}, {"content", content}}}},
      {"temperature", request.temperature},
      {"max_tokens", request.max_tokens},
  };
  const auto doc = post_json(config_, "/chat/completions", body);
  try {
    const auto& message = doc.at("choices").at(0).at("message");
    const auto& text = message.at("content");
    if (text.is_null()) return "";
    return text.get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("chat response lacks choices[0].message.content");
  }
}

OpenAiEmbedder::OpenAiEmbedder(EndpointConfig config, std::string model_id)
    : config_(std::move(config)), model_id_(std::move(model_id)) {
  split_base(config_.base_url);
}

EmbeddingVector OpenAiEmbedder::embed(std::string_view text) const {
  const nlohmann::json body = {{"model", model_id_}, {"input", std::string(text)}};
  const auto doc = post_json(config_, "/embeddings", body);
  try {
    EmbeddingVector out;
    for (const auto& v : doc.at("data").at(0).at("embedding")) out.values.push_back(v.get<double>());
    if (out.values.empty()) throw SchemaError("empty embedding");
    return out;
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("embedding response lacks data[0].embedding");
  }
}

}  // namespace accnote::llm
