#include "accnote/agents/prompts.hpp"

#include <vector>

#include "accnote/strings.hpp"

namespace accnote::agents {
namespace {

llm::ChatRequest base_request(std::string_view system, const ModelSettings& model) {
  llm::ChatRequest req;
  req.system_text = std::string(system);
  req.model_id = model.model_id;
  req.temperature = model.temperature;
  req.max_tokens = model.max_tokens;
  return req;
}

std::vector<std::string> summaries(std::span<const ContextItem> contexts) {
  std::vector<std::string> out;
  for (const auto& c : contexts) out.push_back(c.summary);
  return out;
}

std::string_view verdict_word(Label label) {
  return label == Label::kDeceptive ? "Deceptive" : "Non-deceptive";
}

}  // namespace

std::string numbered_list(std::span<const std::string> items) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto body = trim(items[i]);
    out += std::to_string(i + 1) + ". " + (body.empty() ? std::string("None") : std::string(body)) + "\n";
  }
  out += "]";
  return out;
}

void append_post_details(std::vector<llm::UserPart>& parts, const Post& post) {
  const auto image = post.primary_image();
  if (image) {
    parts.emplace_back(llm::TextPart{"POST DETAILS: Image: "});
    parts.emplace_back(llm::ImagePart{*image, "", post.image_digest.value_or("")});
    parts.emplace_back(llm::TextPart{"; Text: " + post.text + "; Date: " + post.date});
  } else {
    parts.emplace_back(llm::TextPart{"POST DETAILS: Image: (none); Text: " + post.text + "; Date: " + post.date});
  }
}

llm::ChatRequest usefulness_request(std::span<const ContextItem> contexts, const ModelSettings& model) {
  auto req = base_request(kUsefulnessSystem, model);
  req.user_parts.emplace_back(llm::TextPart{"OPTIONS: " + numbered_list(summaries(contexts))});
  return req;
}

llm::ChatRequest credibility_request(std::span<const ContextItem> contexts, const ModelSettings& model) {
  auto req = base_request(kCredibilitySystem, model);
  std::vector<std::string> urls;
  for (const auto& c : contexts) urls.push_back(c.url);
  req.user_parts.emplace_back(llm::TextPart{"URLs: " + numbered_list(urls)});
  return req;
}

llm::ChatRequest clustering_request(const Post& post, std::span<const ContextItem> kept,
                                    const ModelSettings& model) {
  auto req = base_request(kClusteringSystem, model);
  append_post_details(req.user_parts, post);
  req.user_parts.emplace_back(llm::TextPart{"\nOPTIONS: " + numbered_list(summaries(kept))});
  return req;
}

llm::ChatRequest reasoner_request(const Post& post, std::span<const ContextItem> items,
                                  const ModelSettings& model) {
  auto req = base_request(kReasonerSystem, model);
  if (!items.empty()) {
    std::vector<std::string> pairs;
    for (const auto& c : items) {
      const auto summary = trim(c.summary);
      pairs.push_back("URL: " + c.url + " Summary: " + (summary.empty() ? std::string("None") : std::string(summary)));
    }
    req.user_parts.emplace_back(llm::TextPart{"EXTERNAL CONTEXT: " + numbered_list(pairs) + "\n"});
  }
  append_post_details(req.user_parts, post);
  return req;
}

std::string render_candidate(const Note& note) {
  std::string out(verdict_word(note.label));
  out += ". ";
  out += note.rationale;
  for (const auto& url : note.citations) out += " " + url;
  return out;
}

llm::ChatRequest judge_request(const Post& post, std::span<const Note> candidates,
                               const ModelSettings& model) {
  auto req = base_request(kJudgeSystem, model);
  append_post_details(req.user_parts, post);
  std::vector<std::string> rendered;
  for (const auto& c : candidates) rendered.push_back(render_candidate(c));
  req.user_parts.emplace_back(llm::TextPart{"\nEVALUATION OPTIONS: " + numbered_list(rendered)});
  return req;
}

}  // namespace accnote::agents
