#include "accnote/agents/organizer.hpp"

#include <algorithm>
#include <array>
#include <future>

#include "accnote/agents/index_partition.hpp"

namespace accnote::agents {
namespace {

constexpr std::array<std::string_view, 2> kUsefulKeys = {"Useful", "Useless"};
constexpr std::array<std::string_view, 2> kTrustKeys = {"Trustworthy", "Untrustworthy"};
constexpr std::array<std::string_view, 3> kStanceKeys = {"Supporting", "Refuting", "Irrelevant"};

// Sends the request; on a parse failure resends it once as attempt 1.
KeyedPartition ask_partition(llm::ChatService& chat, llm::ChatRequest request,
                             std::span<const std::string_view> keys, int m, std::string_view task) {
  std::vector<std::string> raws;
  std::string last_error;
  for (int attempt = 0; attempt < 2; ++attempt) {
    request.attempt = attempt;
    raws.push_back(chat.chat(request).text);
    try {
      return parse_index_partition(raws.back(), keys, m);
    } catch (const PartitionParseError& e) {
      last_error = e.what();
    }
  }
  std::string msg = std::string(task) + " response unparseable after retry: " + last_error;
  for (std::size_t i = 0; i < raws.size(); ++i) msg += "; raw[" + std::to_string(i) + "]=" + raws[i];
  throw OrganizerError(msg, std::move(raws));
}

}  // namespace

DataOrganizer::DataOrganizer(llm::ChatService& chat, ModelSettings model)
    : chat_(chat), model_(std::move(model)) {}

FilterDecision DataOrganizer::filter_contexts(std::span<const ContextItem> contexts) const {
  if (contexts.empty() || contexts.size() > kMaxContexts) {
    throw std::invalid_argument("filter_contexts: need 1..10 contexts");
  }
  const int m = static_cast<int>(contexts.size());
  auto usefulness = std::async(std::launch::async, [&] {
    return ask_partition(chat_, usefulness_request(contexts, model_), kUsefulKeys, m, "usefulness");
  });
  auto credibility = ask_partition(chat_, credibility_request(contexts, model_), kTrustKeys, m, "credibility");
  const auto useful = usefulness.get();

  FilterDecision d;
  d.useful = useful.sets[0];
  d.useless = useful.sets[1];
  d.trustworthy = credibility.sets[0];
  d.untrustworthy = credibility.sets[1];
  // both lists are ascending, so the intersection keeps original order
  std::set_intersection(d.useful.begin(), d.useful.end(), d.trustworthy.begin(), d.trustworthy.end(),
                        std::back_inserter(d.kept));
  return d;
}

StancePartition DataOrganizer::cluster_contexts(const Post& post, std::span<const ContextItem> kept) const {
  if (kept.empty()) return {};
  const auto p = ask_partition(chat_, clustering_request(post, kept, model_), kStanceKeys,
                               static_cast<int>(kept.size()), "clustering");
  return StancePartition{p.sets[0], p.sets[1], p.sets[2]};
}

}  // namespace accnote::agents
