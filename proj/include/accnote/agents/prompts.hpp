#pragma once

#include <span>
#include <string>
#include <string_view>

#include "accnote/data_model.hpp"
#include "accnote/llm/chat.hpp"

namespace accnote::agents {

/// Model settings shared by every agent request.
struct ModelSettings {
  std::string model_id;
  double temperature = 0.0;
  int max_tokens = 512;
};

inline constexpr std::string_view kUsefulnessSystem =
    "You are tasked with categorizing the following options into one of two categories:\n"
    "- Useful: The option provides meaningful information about a real-world event, knowledge, or "
    "fact-checking.\n"
    "- Useless: The option contains useless information, such as website descriptions, request "
    "errors, or advertisements.\n"
    "Think privately, do not show your reasoning steps in the output.\n"
    "OUTPUT FORMAT (JSON style):\n"
    "{ Useful: [list of option numbers],\n"
    "  Useless: [list of option numbers] }";

inline constexpr std::string_view kCredibilitySystem =
    "You are tasked with evaluating the following URLs based on their domain names and "
    "categorizing them into two groups:\n"
    "- Trustworthy: The URL originates from a credible source known for providing accurate and "
    "reliable information, such as established news outlets, official government websites, or "
    "recognized fact-checking organizations.\n"
    "- Untrustworthy: The URL originates from a less credible source, such as personal blogs, or "
    "websites with questionable reliability.\n"
    "Think privately, do not show your reasoning steps in the output.\n"
    "OUTPUT FORMAT (JSON style):\n"
    "{ Trustworthy: [list of option numbers],\n"
    "  Untrustworthy: [list of option numbers] }";

inline constexpr std::string_view kClusteringSystem =
    "You are tasked with dividing the provided options into three categories based on its "
    "relevance and stance towards the claim in the post:\n"
    "- Supporting: The option describes the same event, and support the claim in the post.\n"
    "- Refuting: The option describes the same event, but with a different or opposing claim.\n"
    "- Irrelevant: The context does not provide information that is relevant to the post.\n"
    "Think privately, do not show your reasoning steps in the output.\n"
    "OUTPUT FORMAT (JSON style):\n"
    "{ Supporting: [list of option numbers],\n"
    "  Refuting: [list of option numbers],\n"
    "  Irrelevant: [list of option numbers] }";

inline constexpr std::string_view kReasonerSystem =
    "You are a fact-checking assistant. For each social post with an image and text, decide "
    "whether the post is \"Deceptive\" or \"Non-deceptive\".\n"
    "TASK (think through these steps privately; do not list them in your output):\n"
    "1. Identify the post's main claim from the image, text, and date.\n"
    "2. If the claim is based on the image, check whether the image's visual details and factual "
    "context support or contradict it.\n"
    "3. If the claim does not rely on the image, use knowledge and facts to support or contradict "
    "the claim.\n"
    "4. If external context is provided, use the provided context to support or contradict the "
    "claim.\n"
    "5. If any contradiction is found (e.g., claim vs. image, claim vs. knowledge, claim vs. "
    "external context), label \"Deceptive\"; if none, label \"Non-deceptive\".\n"
    "OUTPUT FORMAT (clear, unbiased, factual, relevant):\n"
    "- Begin with \"Deceptive\" or \"Non-deceptive\".\n"
    "- Follow with 1-2 sentences citing specific visual details, knowledge, or relevant context.";

inline constexpr std::string_view kJudgeSystem =
    "You are a fact-checking assistant. Given multiple evaluation options for a social media post "
    "(each labeled \"Deceptive\" or \"Non-deceptive\"), select the single best option.\n"
    "SELECTION CRITERIA (apply privately):\n"
    "1. Source Credibility: cites reliable, trustworthy sources.\n"
    "2. Clarity: concise and easy to understand.\n"
    "3. Relevance: directly addresses the post's image/text and context.\n"
    "4. Veracity: factually correct and evidence-based.\n"
    "5. Neutrality: neutral tone, no cultural/personal bias.\n"
    "OUTPUT FORMAT:\n"
    "- Begin with \"Option X\", where X is the option number.\n"
    "- Follow with 1-2 sentences explaining why this option is best.";

/// "[\n1. a\n2. b\n]"; empty entries are written as "None".
std::string numbered_list(std::span<const std::string> items);

/// Appends "POST DETAILS: Image: <image>; Text: ...; Date: ..." with the image
/// as its own part.
void append_post_details(std::vector<llm::UserPart>& parts, const Post& post);

llm::ChatRequest usefulness_request(std::span<const ContextItem> contexts, const ModelSettings& model);
llm::ChatRequest credibility_request(std::span<const ContextItem> contexts, const ModelSettings& model);
llm::ChatRequest clustering_request(const Post& post, std::span<const ContextItem> kept,
                                    const ModelSettings& model);
/// Without items the EXTERNAL CONTEXT block is left out (closed-book).
llm::ChatRequest reasoner_request(const Post& post, std::span<const ContextItem> items,
                                  const ModelSettings& model);
llm::ChatRequest judge_request(const Post& post, std::span<const Note> candidates,
                               const ModelSettings& model);

/// "Deceptive. <rationale> <url> ..." as shown to the judge.
std::string render_candidate(const Note& note);

}  // namespace accnote::agents
