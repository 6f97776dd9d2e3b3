#include <fstream>
#include <iterator>

#include <json.hpp>

#include "accnote/llm/backends.hpp"

namespace accnote::llm {
namespace {

std::vector<std::string> strings_of(const nlohmann::json& value, std::string_view what) {
  std::vector<std::string> out;
  if (value.is_string()) {
    out.push_back(value.get<std::string>());
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (!v.is_string()) throw GatewayError("mock script: non-string in '" + std::string(what) + "'");
      out.push_back(v.get<std::string>());
    }
  } else {
    throw GatewayError("mock script: '" + std::string(what) + "' must be a string or list");
  }
  return out;
}

}  // namespace

MockChatBackend::MockChatBackend(std::vector<MockRule> rules) : rules_(std::move(rules)) {}

std::unique_ptr<MockChatBackend> MockChatBackend::from_json_text(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw GatewayError("mock script: malformed JSON");
  const auto& rules_json = doc.is_object() && doc.contains("rules") ? doc.at("rules") : doc;
  if (!rules_json.is_array()) throw GatewayError("mock script: expected a list of rules");

  std::vector<MockRule> rules;
  for (const auto& r : rules_json) {
    if (!r.is_object() || !r.contains("match")) throw GatewayError("mock script: rule without 'match'");
    MockRule rule;
    rule.match = strings_of(r.at("match"), "match");
    if (r.contains("responses")) {
      rule.responses = strings_of(r.at("responses"), "responses");
    } else if (r.contains("response")) {
      rule.responses = strings_of(r.at("response"), "response");
    }
    if (r.contains("error")) rule.error = r.at("error").get<std::string>();
    if (rule.responses.empty() && rule.error.empty()) {
      throw GatewayError("mock script: rule needs 'response', 'responses' or 'error'");
    }
    rules.push_back(std::move(rule));
  }
  return std::make_unique<MockChatBackend>(std::move(rules));
}

std::unique_ptr<MockChatBackend> MockChatBackend::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GatewayError("cannot read mock script " + path.string());
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return from_json_text(text);
}

std::string MockChatBackend::complete(const ChatRequest& request) {
  ++calls_;
  const auto prompt = render_prompt(request);
  for (const auto& rule : rules_) {
    bool hit = true;
    for (const auto& m : rule.match) {
      if (prompt.find(m) == std::string::npos) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    if (rule.error == "transient") throw TransientError("mock: scripted transient failure");
    if (rule.error == "auth") throw AuthError("mock: scripted authentication failure");
    if (!rule.error.empty()) throw SchemaError("mock: scripted " + rule.error + " failure");
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(request.attempt, 0)),
                                           rule.responses.size() - 1);
    return rule.responses[idx];
  }
  throw MockUnmatchedError("mock: no script rule matches prompt: " + prompt.substr(0, 160));
}

}  // namespace accnote::llm
