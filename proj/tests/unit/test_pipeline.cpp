#include <doctest.h>

#include <set>
#include <sstream>

#include "accnote/dataset.hpp"
#include "accnote/pipeline.hpp"
#include "accnote/records.hpp"
#include "helpers.hpp"

using namespace accnote;
using testing::rule;

namespace {

struct ScriptedGateway {
  llm::MockChatBackend* mock = nullptr;
  std::unique_ptr<llm::LlmGateway> gateway;

  explicit ScriptedGateway(const std::string& script, std::unique_ptr<llm::ResponseCache> cache = nullptr) {
    auto backend = llm::MockChatBackend::from_file(testing::fixture(script));
    mock = backend.get();
    gateway = std::make_unique<llm::LlmGateway>(std::move(backend), std::make_shared<llm::HashingEmbedder>(),
                                                std::move(cache));
  }
};

PipelineOptions options() {
  PipelineOptions o;
  o.model.model_id = "mock";
  return o;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("Example 2 end to end") {
  const auto entries = load_dataset(testing::fixture("example2.jsonl")).entries;
  REQUIRE(entries.size() == 1);
  ScriptedGateway g("example2_mock.json");
  const Pipeline pipeline(*g.gateway, options());
  const auto out = pipeline.run_entry(entries[0]);

  CHECK(out.note.label == Label::kDeceptive);
  CHECK(out.note.citations ==
        std::vector<std::string>{"https://www.misbar.com/en/factcheck/2024/12/30/al-sharaa-poet-photo"});
  CHECK(out.note.provenance == Provenance::kRefuting);
  REQUIRE(out.trace.filter);
  CHECK(out.trace.filter->kept == IndexSet{1});
  CHECK(out.trace.partition.refuting == IndexSet{1});
  REQUIRE(out.trace.candidates.size() == 2);
  CHECK(out.trace.candidates[0].cluster == Provenance::kRefuting);
  CHECK(out.trace.candidates[1].cluster == Provenance::kEmptyContext);
  CHECK(out.trace.selected_index == 0);
  CHECK_FALSE(out.trace.judge_fallback);
  CHECK(out.trace.model_call_count == 6);
  CHECK(g.mock->call_count() == 6);
}

TEST_CASE("an entry without contexts makes exactly one call") {
  DataEntry e;
  e.post = testing::make_post("solo", "Giant squid washed ashore.");
  testing::MockGateway g({rule({"For each social post"}, {"Deceptive. It is a sculpture."})});
  const auto out = Pipeline(*g.gateway, options()).run_entry(e);
  CHECK_FALSE(out.trace.filter);
  CHECK(out.trace.candidates.size() == 1);
  CHECK(out.trace.model_call_count == 1);
  CHECK(out.note.provenance == Provenance::kEmptyContext);
}

TEST_CASE("empty_context_always off leaves only the cluster reasoners") {
  const auto entries = load_dataset(testing::fixture("example2.jsonl")).entries;
  ScriptedGateway g("example2_mock.json");
  auto o = options();
  o.empty_context_always = false;
  const auto out = Pipeline(*g.gateway, o).run_entry(entries[0]);
  REQUIRE(out.trace.candidates.size() == 1);
  CHECK(out.trace.candidates[0].cluster == Provenance::kRefuting);
  CHECK(out.trace.model_call_count == 4);
}

TEST_CASE("all candidates invalid is an entry error") {
  DataEntry e;
  e.post = testing::make_post("x", "Text.");
  testing::MockGateway g({rule({"For each social post"}, {"unsure"})});
  CHECK_THROWS_AS(Pipeline(*g.gateway, options()).run_entry(e), PipelineError);
}

TEST_CASE("batch isolates failures and keeps input order") {
  std::vector<DataEntry> entries(3);
  entries[0].post = testing::make_post("a", "alpha post");
  entries[1].post = testing::make_post("b", "broken post");
  entries[2].post = testing::make_post("c", "gamma post");
  testing::MockGateway g({rule({"alpha post"}, {"Deceptive. Alpha."}), rule({"broken post"}, {"???"}),
                          rule({"gamma post"}, {"Non-deceptive. Gamma."})});
  testing::TempDir dir;
  const auto path = dir / "r.jsonl";
  const auto s = Pipeline(*g.gateway, options()).run_batch(entries, path);
  CHECK(s.total == 3);
  CHECK(s.success == 2);
  CHECK(s.error == 1);
  CHECK(s.invalid == 0);
  const auto records = load_results(path);
  REQUIRE(records.size() == 3);
  CHECK(records[0].entry_id == "a");
  CHECK(records[1].entry_id == "b");
  CHECK(records[1].status == ResultStatus::kError);
  CHECK(records[1].error.find("all candidates invalid") != std::string::npos);
  CHECK(records[2].note->label == Label::kNonDeceptive);
}

TEST_CASE("invalid entries are recorded without model calls") {
  std::vector<DataEntry> entries(1);
  entries[0].post = testing::make_post("bad", "");
  testing::MockGateway g({});
  testing::TempDir dir;
  const auto s = Pipeline(*g.gateway, options()).run_batch(entries, dir / "r.jsonl");
  CHECK(s.invalid == 1);
  CHECK(g.mock->call_count() == 0);
  const auto records = load_results(dir / "r.jsonl");
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == ResultStatus::kInvalid);
  CHECK(records[0].error.find("post.text empty") != std::string::npos);
}

TEST_CASE("empty batch writes an empty file") {
  testing::MockGateway g({});
  testing::TempDir dir;
  const auto s = Pipeline(*g.gateway, options()).run_batch({}, dir / "r.jsonl");
  CHECK(s.total == 0);
  CHECK(s.chat_calls == 0);
  CHECK(std::filesystem::exists(dir / "r.jsonl"));
  CHECK(std::filesystem::file_size(dir / "r.jsonl") == 0);
}

TEST_CASE("warm rerun is served from cache with identical bytes") {
  const auto entries = load_dataset(testing::fixture("batch.jsonl")).entries;
  testing::TempDir dir;
  const auto cache_path = dir / "cache.jsonl";

  ScriptedGateway cold("batch_mock.json", std::make_unique<llm::ResponseCache>(cache_path));
  const auto s1 = Pipeline(*cold.gateway, options()).run_batch(entries, dir / "r1.jsonl");
  CHECK(s1.success == 3);
  CHECK(s1.cache_hits == 0);
  CHECK(s1.backend_calls == s1.chat_calls);

  ScriptedGateway warm("batch_mock.json", std::make_unique<llm::ResponseCache>(cache_path));
  const auto s2 = Pipeline(*warm.gateway, options()).run_batch(entries, dir / "r2.jsonl");
  CHECK(s2.cache_hits == s1.chat_calls);
  CHECK(warm.mock->call_count() == 0);
  CHECK(testing::slurp(dir / "r1.jsonl") == testing::slurp(dir / "r2.jsonl"));
}

TEST_CASE("batch invariants: call budget and grounded citations") {
  const auto entries = load_dataset(testing::fixture("batch.jsonl")).entries;
  ScriptedGateway g("batch_mock.json");
  testing::TempDir dir;
  Pipeline(*g.gateway, options()).run_batch(entries, dir / "r.jsonl");
  const auto records = load_results(dir / "r.jsonl");
  REQUIRE(records.size() == entries.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    REQUIRE(records[i].note);
    std::set<std::string> urls;
    for (const auto& c : entries[i].contexts) urls.insert(c.url);
    for (const auto& u : records[i].note->citations) CHECK(urls.count(u) == 1);
    CHECK(records[i].trace->model_call_count <= 2 + 1 + 4 + 1 + 8);
    // the final note is one of the candidates, unchanged except for identity
    const auto& chosen = records[i].trace->candidates[static_cast<std::size_t>(records[i].trace->selected_index)];
    CHECK(chosen.note == records[i].note);
  }
  // the subway entry's judge answered out of range twice
  CHECK(records[1].trace->judge_fallback);
  CHECK(records[1].trace->selected_index == 0);
}

TEST_CASE("resume skips finished entries and appends the rest") {
  const auto entries = load_dataset(testing::fixture("batch.jsonl")).entries;
  testing::TempDir dir;
  const auto path = dir / "r.jsonl";
  {
    ScriptedGateway g("batch_mock.json");
    Pipeline(*g.gateway, options()).run_batch(std::span(entries).first(1), path);
  }
  ScriptedGateway g("batch_mock.json");
  const auto s = Pipeline(*g.gateway, options()).run_batch(entries, path, /*resume=*/true);
  CHECK(s.skipped == 1);
  CHECK(s.success == 2);
  const auto lines = lines_of(testing::slurp(path));
  REQUIRE(lines.size() == 3);

  ScriptedGateway fresh("batch_mock.json");
  Pipeline(*fresh.gateway, options()).run_batch(entries, dir / "full.jsonl");
  CHECK(testing::slurp(path) == testing::slurp(dir / "full.jsonl"));
}

TEST_CASE("batch output does not depend on entry concurrency") {
  const auto entries = load_dataset(testing::fixture("batch.jsonl")).entries;
  testing::TempDir dir;
  for (int workers : {1, 2, 4}) {
    ScriptedGateway g("batch_mock.json");
    auto o = options();
    o.max_concurrent_entries = workers;
    o.reasoner_fanout = workers;
    Pipeline(*g.gateway, o).run_batch(entries, dir / ("r" + std::to_string(workers) + ".jsonl"));
  }
  CHECK(testing::slurp(dir / "r1.jsonl") == testing::slurp(dir / "r2.jsonl"));
  CHECK(testing::slurp(dir / "r1.jsonl") == testing::slurp(dir / "r4.jsonl"));
}
