#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "accnote/llm/backends.hpp"
#include "accnote/llm/gateway.hpp"
#include "accnote/llm/response_cache.hpp"
#include "accnote/metrics/similarity.hpp"
#include "helpers.hpp"

using namespace accnote;
using namespace accnote::llm;

namespace {

ChatRequest simple_request(std::string text) {
  ChatRequest r;
  r.system_text = "You are a fact-checking assistant.";
  r.user_parts.emplace_back(TextPart{std::move(text)});
  r.model_id = "m";
  return r;
}

/// Local OpenAI-shaped server that answers from a handler.
class LocalServer {
 public:
  explicit LocalServer(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
    server_.Post(R"(/v1/.*)", [this, handler](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  EndpointConfig endpoint() const {
    return EndpointConfig{"http://127.0.0.1:" + std::to_string(port_) + "/v1", "secret", std::chrono::seconds(5)};
  }
  int hits() const { return hits_.load(); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> hits_{0};
};

RetryPolicy fast_retries() {
  RetryPolicy p;
  p.initial_backoff = std::chrono::milliseconds(1);
  return p;
}

}  // namespace

TEST_CASE("cache keys") {
  const auto a = simple_request("hello");
  CHECK(cache_key(a) == cache_key(simple_request("hello")));
  CHECK(cache_key(a).size() == 64);

  auto warm = a;
  warm.temperature = 0.7;
  CHECK(cache_key(warm) != cache_key(a));

  auto other_model = a;
  other_model.model_id = "n";
  CHECK(cache_key(other_model) != cache_key(a));

  auto retry = a;
  retry.attempt = 1;
  CHECK(cache_key(retry) != cache_key(a));

  auto img1 = a;
  img1.user_parts.emplace_back(ImagePart{"photo.jpg", "bytes-one", ""});
  auto img2 = a;
  img2.user_parts.emplace_back(ImagePart{"photo.jpg", "bytes-two", ""});
  CHECK(cache_key(img1) != cache_key(img2));

  // text boundaries matter: "ab"+"c" differs from "a"+"bc"
  auto s1 = simple_request("ab");
  s1.user_parts.emplace_back(TextPart{"c"});
  auto s2 = simple_request("a");
  s2.user_parts.emplace_back(TextPart{"bc"});
  CHECK(cache_key(s1) != cache_key(s2));
}

TEST_CASE("render_prompt shows images as a marker") {
  auto r = simple_request("Image: ");
  r.user_parts.emplace_back(ImagePart{"https://img/x.jpg", "", ""});
  r.user_parts.emplace_back(TextPart{"; Text: t"});
  CHECK(render_prompt(r) == "You are a fact-checking assistant.\n\nImage: <image>; Text: t");
}

TEST_CASE("mock backend echoes the scripted reply and counts calls") {
  testing::MockGateway g({testing::rule({"fact-checking"}, {"Deceptive. X."})});
  const auto r1 = g.gateway->chat(simple_request("post"));
  CHECK(r1.text == "Deceptive. X.");
  CHECK_FALSE(r1.cached);
  CHECK(g.mock->call_count() == 1);

  const auto r2 = g.gateway->chat(simple_request("post"));
  CHECK(r2.text == "Deceptive. X.");
  CHECK(r2.cached);
  CHECK(g.mock->call_count() == 1);
  CHECK(g.gateway->cache_hits() == 1);
  CHECK(g.gateway->backend_calls() == 1);
}

TEST_CASE("mock picks the response for the attempt and rejects unmatched prompts") {
  MockChatBackend mock({testing::rule({"one", "two"}, {"first", "second"}), testing::rule({"one"}, {"fallback"})});
  auto req = simple_request("one two");
  CHECK(mock.complete(req) == "first");
  req.attempt = 1;
  CHECK(mock.complete(req) == "second");
  req.attempt = 5;
  CHECK(mock.complete(req) == "second");
  CHECK(mock.complete(simple_request("one")) == "fallback");
  CHECK_THROWS_AS(mock.complete(simple_request("zzz")), MockUnmatchedError);
}

TEST_CASE("mock scripts parse both shapes") {
  auto a = MockChatBackend::from_json_text(R"({"rules":[{"match":"x","response":"r"}]})");
  CHECK(a->complete(simple_request("x")) == "r");
  auto b = MockChatBackend::from_json_text(R"([{"match":["x","y"],"responses":["r1","r2"]}])");
  CHECK(b->complete(simple_request("x y")) == "r1");
  CHECK_THROWS_AS(MockChatBackend::from_json_text("{nope"), GatewayError);
  auto c = MockChatBackend::from_json_text(R"([{"match":"x","error":"auth"}])");
  CHECK_THROWS_AS(c->complete(simple_request("x")), AuthError);
}

TEST_CASE("transient mock errors are retried, then surface as network failure") {
  MockRule flaky{{"x"}, {}, "transient"};
  auto backend = std::make_unique<MockChatBackend>(std::vector<MockRule>{flaky});
  auto* mock = backend.get();
  LlmGateway gw(std::move(backend), std::make_shared<HashingEmbedder>(), nullptr, fast_retries());
  CHECK_THROWS_WITH_AS(gw.chat(simple_request("x")), doctest::Contains("network failure after retries"),
                       NetworkError);
  CHECK(mock->call_count() == 3);
}

TEST_CASE("response cache persists across instances") {
  testing::TempDir dir;
  const auto path = dir / "cache.jsonl";
  {
    ResponseCache cache(path);
    cache.store("k1", "line one\nline \"two\"");
    cache.store("k1", "ignored");
    cache.store("k2", "v2");
  }
  testing::write_text(path, testing::slurp(path) + "garbage line\n");
  ResponseCache reloaded(path);
  CHECK(reloaded.size() == 2);
  CHECK(reloaded.lookup("k1") == std::string("line one\nline \"two\""));
  CHECK_FALSE(reloaded.lookup("k3"));
}

TEST_CASE("hashing embedder") {
  const HashingEmbedder e;
  const auto zero = e.embed("");
  CHECK(zero.dimension() == 256);
  CHECK(std::all_of(zero.values.begin(), zero.values.end(), [](double v) { return v == 0.0; }));
  CHECK(e.embed("abc") == e.embed("abc"));
  CHECK(metrics::cosine(e.embed("abc"), e.embed("abc")) == doctest::Approx(1.0).epsilon(1e-9));
  const auto v = e.embed("The cat sat on the mat");
  double norm = 0;
  for (double x : v.values) norm += x * x;
  CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(HashingEmbedder(16).embed("x").dimension() == 16);
}

TEST_CASE("gateway rejects a change of embedding dimension") {
  struct Shifty final : TextEmbedder {
    mutable std::atomic<int> n{0};
    EmbeddingVector embed(std::string_view) const override {
      return EmbeddingVector{std::vector<double>(++n == 1 ? 4 : 5, 1.0)};
    }
  };
  LlmGateway gw(nullptr, std::make_shared<Shifty>());
  CHECK(gw.embed("a").dimension() == 4);
  CHECK_THROWS_AS(gw.embed("b"), GatewayError);
}

TEST_CASE("HTTP 500 three times with two retries is a network failure") {
  LocalServer server([](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
    res.set_content("oops", "text/plain");
  });
  LlmGateway gw(std::make_unique<OpenAiChatBackend>(server.endpoint()), std::make_shared<HashingEmbedder>(),
                nullptr, fast_retries());
  CHECK_THROWS_WITH_AS(gw.chat(simple_request("x")), doctest::Contains("network failure after retries"),
                       NetworkError);
  CHECK(server.hits() == 3);
}

TEST_CASE("HTTP 401 is an authentication failure without retries") {
  LocalServer server([](const httplib::Request&, httplib::Response& res) { res.status = 401; });
  LlmGateway gw(std::make_unique<OpenAiChatBackend>(server.endpoint()), std::make_shared<HashingEmbedder>(),
                nullptr, fast_retries());
  CHECK_THROWS_AS(gw.chat(simple_request("x")), AuthError);
  CHECK(server.hits() == 1);
}

TEST_CASE("OpenAI wire format for chat and embeddings") {
  std::string seen_body;
  std::string seen_auth;
  LocalServer server([&](const httplib::Request& req, httplib::Response& res) {
    if (req.path == "/v1/chat/completions") {
      seen_body = req.body;
      seen_auth = req.get_header_value("Authorization");
      res.set_content(R"({"choices":[{"message":{"role":"assistant","content":"Option 2."}}]})",
                      "application/json");
    } else if (req.path == "/v1/embeddings") {
      res.set_content(R"({"data":[{"embedding":[0.5,0.25,0.0]}]})", "application/json");
    } else {
      res.status = 404;
    }
  });
  OpenAiChatBackend chat(server.endpoint());
  auto req = simple_request("Image: ");
  req.user_parts.emplace_back(ImagePart{"https://img.example/p.jpg", "", ""});
  req.temperature = 0.0;
  CHECK(chat.complete(req) == "Option 2.");
  const auto body = nlohmann::json::parse(seen_body);
  CHECK(seen_auth == "Bearer secret");
  CHECK(body["model"] == "m");
  CHECK(body["messages"][0]["role"] == "system");
  CHECK(body["messages"][1]["content"][1]["image_url"]["url"] == "https://img.example/p.jpg");

  OpenAiEmbedder embedder(server.endpoint(), "e");
  CHECK(embedder.embed("x").values == std::vector<double>{0.5, 0.25, 0.0});
}

TEST_CASE("malformed completion bodies are schema errors") {
  LocalServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"unexpected":true})", "application/json");
  });
  OpenAiChatBackend chat(server.endpoint());
  CHECK_THROWS_AS(chat.complete(simple_request("x")), SchemaError);
}
