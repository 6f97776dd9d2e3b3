#include "accnote/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "accnote/config.hpp"
#include "accnote/csv.hpp"
#include "accnote/dataset.hpp"
#include "accnote/digest.hpp"
#include "accnote/llm/backends.hpp"
#include "accnote/llm/gateway.hpp"
#include "accnote/metrics/chs.hpp"
#include "accnote/metrics/correlation.hpp"
#include "accnote/metrics/corpus.hpp"
#include "accnote/metrics/detection.hpp"
#include "accnote/pipeline.hpp"
#include "accnote/records.hpp"

namespace accnote::cli {
namespace {

/// Failure that maps to the usage/configuration exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct ConfigFlags {
  std::string config_path;
  std::string base_url;
  std::string chat_model;
  std::string embed_model;
  bool literal_neutrality = false;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--config", f.config_path, "Key-value config file");
  cmd->add_option("--base-url", f.base_url, "OpenAI-compatible endpoint, e.g. http://127.0.0.1:8000/v1");
  cmd->add_option("--chat-model", f.chat_model, "Chat model id");
  cmd->add_option("--embed-model", f.embed_model, "Embedding model id (default: offline hashing embedder)");
}

AppConfig resolve_config(const ConfigFlags& f) {
  AppConfig config;
  try {
    if (!f.config_path.empty()) apply_config_file(config, f.config_path);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  apply_environment(config, [](const char* name) { return std::getenv(name); });
  if (!f.base_url.empty()) config.base_url = f.base_url;
  if (!f.chat_model.empty()) config.chat_model = f.chat_model;
  if (!f.embed_model.empty()) config.embed_model = f.embed_model;
  if (f.literal_neutrality) config.literal_neutrality = true;
  return config;
}

llm::EndpointConfig endpoint(const AppConfig& config) {
  return llm::EndpointConfig{config.base_url, config.api_key, std::chrono::seconds(config.timeout_s)};
}

llm::RetryPolicy retry_policy(const AppConfig& config) {
  llm::RetryPolicy policy;
  policy.max_retries = config.retries;
  policy.initial_backoff = std::chrono::milliseconds(config.backoff_ms);
  return policy;
}

/// Remote embeddings when both an endpoint and an embedding model are set,
/// the hashing embedder otherwise.
std::shared_ptr<const llm::TextEmbedder> make_embedder(const AppConfig& config) {
  if (config.base_url.empty() || config.embed_model.empty()) {
    return std::make_shared<llm::HashingEmbedder>(static_cast<std::size_t>(config.embed_dimension));
  }
  auto remote = std::make_shared<llm::OpenAiEmbedder>(endpoint(config), config.embed_model);
  return std::make_shared<llm::LlmGateway>(nullptr, std::move(remote), nullptr, retry_policy(config));
}

const metrics::PolarityLexicon& lexicon_for(const AppConfig& config,
                                            std::unique_ptr<metrics::PolarityLexicon>& holder) {
  if (config.lexicon_path.empty()) return metrics::PolarityLexicon::bundled();
  holder = std::make_unique<metrics::PolarityLexicon>(metrics::PolarityLexicon::load(config.lexicon_path));
  return *holder;
}

metrics::ChsOptions chs_options(const AppConfig& config) {
  return {config.literal_neutrality ? metrics::NeutralityMode::kLiteral : metrics::NeutralityMode::kAbsolute};
}

LoadedDataset load_dataset_or_usage(const std::string& path, std::ostream& err) {
  if (!std::filesystem::exists(path)) throw UsageError("dataset not found: " + path);
  try {
    auto loaded = load_dataset(path);
    for (const auto& issue : loaded.issues) {
      err << path << ":" << issue.line << ": skipped: " << issue.message << "\n";
    }
    return loaded;
  } catch (const DatasetError& e) {
    throw UsageError(e.what());
  }
}

std::vector<ResultRecord> load_results_or_usage(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("results not found: " + path);
  try {
    return load_results(path);
  } catch (const RecordError& e) {
    throw UsageError(e.what());
  }
}

Json chs_json(const metrics::ChsReport& r) {
  return Json{{"chs1", r.chs1}, {"chs2", r.chs2}, {"chs3", r.chs3},
              {"chs4", r.chs4}, {"chs5", r.chs5}, {"chs", r.composite}};
}

// ---------------------------------------------------------------- run

struct RunArgs {
  ConfigFlags config;
  std::string dataset;
  std::string out;
  std::string mock_script;
  std::string cache;
  bool no_cache = false;
  bool resume = false;
  int concurrency = 0;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  const auto loaded = load_dataset_or_usage(a.dataset, err);
  auto config = resolve_config(a.config);
  if (!a.cache.empty()) config.cache_path = a.cache;
  if (a.no_cache) config.cache_path.clear();
  if (a.concurrency > 0) config.max_concurrent_entries = a.concurrency;

  std::unique_ptr<llm::ChatBackend> backend;
  if (!a.mock_script.empty()) {
    const auto script = read_file(a.mock_script);
    try {
      backend = llm::MockChatBackend::from_json_text(script);
    } catch (const std::exception& e) {
      throw UsageError("mock script " + a.mock_script + ": " + e.what());
    }
    // Keeps cached replies of one script from leaking into another.
    if (config.chat_model.empty()) config.chat_model = "mock-" + sha256_hex(script).substr(0, 12);
  } else {
    if (config.base_url.empty()) throw UsageError("no endpoint configured: set base_url or use --mock-script");
    if (config.chat_model.empty()) throw UsageError("no chat model configured: set chat_model");
    backend = std::make_unique<llm::OpenAiChatBackend>(endpoint(config));
  }

  std::unique_ptr<llm::ResponseCache> cache;
  try {
    cache = config.cache_path.empty() ? std::make_unique<llm::ResponseCache>()
                                      : std::make_unique<llm::ResponseCache>(config.cache_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  llm::LlmGateway gateway(std::move(backend), make_embedder(config), std::move(cache), retry_policy(config));

  PipelineOptions options;
  options.model = {config.chat_model, config.temperature, config.max_tokens};
  options.empty_context_always = config.empty_context_always;
  options.reasoner_fanout = config.reasoner_fanout;
  options.max_concurrent_entries = config.max_concurrent_entries;
  const Pipeline pipeline(gateway, options);

  const auto s = pipeline.run_batch(loaded.entries, a.out, a.resume);
  out << "entries: " << s.total << " (ok " << s.success << ", invalid " << s.invalid << ", error "
      << s.error << ", skipped " << s.skipped << ")\n"
      << "chat calls: " << s.chat_calls << ", cache hits: " << s.cache_hits
      << ", backend calls: " << s.backend_calls << "\n"
      << "results: " << a.out << "\n";
  const bool partial = s.invalid + s.error > 0 || !loaded.issues.empty();
  return partial ? kExitPartial : kExitOk;
}

// -------------------------------------------------------- eval-detect

struct EvalArgs {
  ConfigFlags config;
  std::string results;
  std::string dataset;
  std::string csv;
  std::string method = "accnote";
  int threads = 0;
};

std::map<std::string, const DataEntry*> index_by_id(const LoadedDataset& loaded) {
  std::map<std::string, const DataEntry*> by_id;
  for (const auto& e : loaded.entries) by_id.emplace(e.post.id, &e);
  return by_id;
}

int cmd_eval_detect(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const auto loaded = load_dataset_or_usage(a.dataset, err);
  const auto results = load_results_or_usage(a.results);
  const auto by_id = index_by_id(loaded);

  std::vector<Label> preds;
  std::vector<Label> golds;
  std::vector<std::string> unmatched;
  std::size_t failed = 0;
  for (const auto& r : results) {
    const auto it = by_id.find(r.entry_id);
    if (it == by_id.end() || !it->second->gold_label) {
      unmatched.push_back(r.entry_id);
      continue;
    }
    if (r.status != ResultStatus::kOk || !r.note) {
      ++failed;
      continue;
    }
    preds.push_back(r.note->label);
    golds.push_back(*it->second->gold_label);
  }
  if (!unmatched.empty()) {
    std::string ids;
    for (const auto& id : unmatched) ids += (ids.empty() ? "" : ", ") + id;
    throw UsageError("result ids without a gold label in the dataset: " + ids);
  }
  if (preds.empty()) throw UsageError("no successful results to evaluate");

  const auto d = metrics::detection_report(preds, golds);
  Json j{{"tp", d.tp},
         {"fp", d.fp},
         {"fn", d.fn},
         {"tn", d.tn},
         {"precision", d.precision},
         {"recall", d.recall},
         {"f1", d.f1},
         {"accuracy", d.accuracy},
         {"precision_defined", d.precision_defined},
         {"recall_defined", d.recall_defined},
         {"f1_defined", d.f1_defined},
         {"evaluated", preds.size()},
         {"failed_entries", failed}};
  out << j.dump(2) << "\n";
  return failed > 0 ? kExitPartial : kExitOk;
}

// --------------------------------------------------------- eval-notes

const std::vector<std::string>& score_columns() {
  static const std::vector<std::string> cols = {"rouge_l", "bleu", "chs1", "chs2", "chs3",
                                                "chs4",    "chs5", "chs"};
  return cols;
}

std::vector<double> score_values(const metrics::NoteScores& s) {
  return {s.rouge_l, s.bleu, s.chs.chs1, s.chs.chs2, s.chs.chs3, s.chs.chs4, s.chs.chs5, s.chs.composite};
}

int cmd_eval_notes(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const auto loaded = load_dataset_or_usage(a.dataset, err);
  const auto results = load_results_or_usage(a.results);
  const auto config = resolve_config(a.config);
  const auto by_id = index_by_id(loaded);

  std::vector<metrics::CorpusItem> items;
  std::size_t no_gold = 0;
  std::size_t failed = 0;
  std::vector<std::string> unmatched;
  for (const auto& r : results) {
    const auto it = by_id.find(r.entry_id);
    if (it == by_id.end()) {
      unmatched.push_back(r.entry_id);
    } else if (r.status != ResultStatus::kOk || !r.note) {
      ++failed;
    } else if (!it->second->gold_note) {
      ++no_gold;
    } else {
      items.push_back({r.entry_id, *r.note, *it->second->gold_note, it->second->post.text});
    }
  }
  if (!unmatched.empty()) {
    std::string ids;
    for (const auto& id : unmatched) ids += (ids.empty() ? "" : ", ") + id;
    throw UsageError("result ids absent from the dataset: " + ids);
  }
  if (items.empty()) throw UsageError("no scorable entries: no successful result has a gold note");

  std::unique_ptr<metrics::PolarityLexicon> lexicon_holder;
  const auto& lexicon = lexicon_for(config, lexicon_holder);
  const auto embedder = make_embedder(config);
  const auto scores = metrics::score_corpus_parallel(items, *embedder, lexicon, chs_options(config), a.threads);
  const auto means = metrics::corpus_means(scores);

  if (!a.csv.empty()) {
    std::ofstream csv(a.csv, std::ios::trunc);
    if (!csv) throw UsageError("cannot write " + a.csv);
    std::vector<std::string> header = {"item_id", "method"};
    header.insert(header.end(), score_columns().begin(), score_columns().end());
    csv << csv_line(header) << "\n";
    for (const auto& s : scores) {
      std::vector<std::string> row = {s.id, a.method};
      for (double v : score_values(s)) row.push_back(number(v));
      csv << csv_line(row) << "\n";
    }
    if (!csv) throw UsageError("write to " + a.csv + " failed");
  }

  out << std::left << std::setw(20) << "item_id";
  for (const auto& c : score_columns()) out << std::right << std::setw(9) << c;
  out << "\n";
  const auto row = [&](const std::string& label, const std::vector<double>& values) {
    out << std::left << std::setw(20) << label;
    for (double v : values) out << std::right << std::setw(9) << fixed4(v);
    out << "\n";
  };
  for (const auto& s : scores) row(s.id, score_values(s));
  metrics::NoteScores mean_row{"", means.rouge_l, means.bleu, means.chs};
  row("mean (n=" + std::to_string(means.count) + ")", score_values(mean_row));
  out << "scored: " << means.count << ", skipped without gold: " << no_gold << ", failed entries: " << failed
      << "\n";
  return kExitOk;
}

// ---------------------------------------------------------- correlate

struct CorrelateArgs {
  std::string scores;
  std::string ratings;
  bool json = false;
};

CsvTable read_table(const std::string& path) {
  try {
    return read_csv(path);
  } catch (const CsvError& e) {
    throw UsageError(e.what());
  }
}

std::size_t require_column(const CsvTable& t, const std::string& name, const std::string& path) {
  const auto c = t.column(name);
  if (!c) throw UsageError(path + ": missing column '" + name + "'");
  return *c;
}

double parse_double(const std::string& text, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') throw UsageError(where + ": not a number: '" + text + "'");
  return v;
}

int cmd_correlate(const CorrelateArgs& a, std::ostream& out, std::ostream&) {
  using Key = std::pair<std::string, std::string>;
  const auto scores = read_table(a.scores);
  const auto ratings = read_table(a.ratings);

  const auto s_item = require_column(scores, "item_id", a.scores);
  const auto s_method = require_column(scores, "method", a.scores);
  std::vector<std::size_t> metric_cols;
  for (std::size_t c = 0; c < scores.header.size(); ++c) {
    if (c != s_item && c != s_method) metric_cols.push_back(c);
  }
  if (metric_cols.empty()) throw UsageError(a.scores + ": no metric columns");

  std::map<Key, std::vector<double>> metric_rows;
  for (std::size_t r = 0; r < scores.rows.size(); ++r) {
    const auto& row = scores.rows[r];
    std::vector<double> values;
    for (auto c : metric_cols) {
      values.push_back(parse_double(row[c], a.scores + " row " + std::to_string(r + 2)));
    }
    if (!metric_rows.emplace(Key{row[s_item], row[s_method]}, std::move(values)).second) {
      throw UsageError(a.scores + ": duplicate item " + row[s_item] + "/" + row[s_method]);
    }
  }

  // Several raters may score one item; their normalized ratings are averaged.
  const auto r_item = require_column(ratings, "item_id", a.ratings);
  const auto r_method = require_column(ratings, "method", a.ratings);
  std::array<std::size_t, 5> ur_cols{};
  for (int k = 0; k < 5; ++k) ur_cols[k] = require_column(ratings, "ur_" + std::to_string(k + 1), a.ratings);
  std::map<Key, std::pair<std::array<double, 5>, int>> rating_sums;
  for (std::size_t r = 0; r < ratings.rows.size(); ++r) {
    const auto& row = ratings.rows[r];
    auto& [sum, n] = rating_sums[Key{row[r_item], row[r_method]}];
    for (int k = 0; k < 5; ++k) {
      const auto where = a.ratings + " row " + std::to_string(r + 2);
      const double raw = parse_double(row[ur_cols[k]], where);
      if (raw != static_cast<int>(raw)) throw UsageError(where + ": rating must be an integer 1..5");
      try {
        sum[k] += metrics::normalize_user_rating(static_cast<int>(raw));
      } catch (const std::out_of_range&) {
        throw UsageError(where + ": rating must be an integer 1..5");
      }
    }
    ++n;
  }

  std::vector<std::vector<double>> metric_series(metric_cols.size());
  std::array<std::vector<double>, 6> rating_series;
  for (const auto& [key, values] : metric_rows) {
    const auto it = rating_sums.find(key);
    if (it == rating_sums.end()) continue;
    const auto& [sum, n] = it->second;
    double mean_all = 0.0;
    for (int k = 0; k < 5; ++k) {
      rating_series[k].push_back(sum[k] / n);
      mean_all += sum[k] / n;
    }
    rating_series[5].push_back(mean_all / 5.0);
    for (std::size_t m = 0; m < values.size(); ++m) metric_series[m].push_back(values[m]);
  }
  if (rating_series[5].empty()) throw UsageError("no (item_id, method) pair appears in both files");
  if (rating_series[5].size() < 3) {
    throw UsageError("only " + std::to_string(rating_series[5].size()) + " joined rows; need at least 3");
  }

  static const std::array<std::string, 6> columns = {"us_1", "us_2", "us_3", "us_4", "us_5", "us_mean"};
  Json report = Json::object();
  report["joined"] = rating_series[5].size();
  report["rho"] = Json::object();
  if (!a.json) {
    out << std::left << std::setw(10) << "metric";
    for (const auto& c : columns) out << std::right << std::setw(9) << c;
    out << "\n";
  }
  for (std::size_t m = 0; m < metric_cols.size(); ++m) {
    const auto& name = scores.header[metric_cols[m]];
    Json row = Json::object();
    if (!a.json) out << std::left << std::setw(10) << name;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto r = metrics::spearman(metric_series[m], rating_series[c]);
      row[columns[c]] = r.defined ? Json(r.rho) : Json(nullptr);
      if (!a.json) out << std::right << std::setw(9) << (r.defined ? fixed4(r.rho) : std::string("n/a"));
    }
    if (!a.json) out << "\n";
    report["rho"][name] = std::move(row);
  }
  if (a.json) {
    out << report.dump(2) << "\n";
  } else {
    out << "joined rows: " << rating_series[5].size() << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------- score-note

struct ScoreNoteArgs {
  ConfigFlags config;
  std::string note;
  std::string gold;
  std::string post_text;
};

Note note_argument(const std::string& value, const char* what) {
  const auto text = value.starts_with('@') ? read_file(value.substr(1)) : value;
  try {
    const auto note = note_from_json(Json::parse(text));
    if (note.rationale.empty()) throw RecordError("rationale empty");
    return note;
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

int cmd_score_note(const ScoreNoteArgs& a, std::ostream& out, std::ostream&) {
  const auto config = resolve_config(a.config);
  const auto note = note_argument(a.note, "--note");
  const auto gold = note_argument(a.gold, "--gold");
  std::unique_ptr<metrics::PolarityLexicon> lexicon_holder;
  const auto& lexicon = lexicon_for(config, lexicon_holder);
  const auto embedder = make_embedder(config);
  const auto report = metrics::chs(note, gold, a.post_text, *embedder, lexicon, chs_options(config));
  out << chs_json(report).dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------ inspect-trace

struct InspectArgs {
  std::string results;
  std::string id;
};

int cmd_inspect_trace(const InspectArgs& a, std::ostream& out, std::ostream&) {
  if (!std::filesystem::exists(a.results)) throw UsageError("results not found: " + a.results);
  std::ifstream in(a.results);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw UsageError(a.results + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (j.is_object() && j.value("entry_id", std::string()) == a.id) {
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  }
  throw UsageError("entry " + a.id + " not found in " + a.results);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ACCNote: context-corrective notes for image-based deception, plus evaluation"};
  app.name("accnote");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Generate notes for every entry of a dataset");
  add_config_flags(run_cmd, run.config);
  run_cmd->add_option("--dataset", run.dataset, "Dataset JSONL")->required();
  run_cmd->add_option("--out", run.out, "Results JSONL")->required();
  run_cmd->add_option("--mock-script", run.mock_script, "Scripted offline backend (JSON)");
  run_cmd->add_option("--cache", run.cache, "Response cache file (overrides cache_path)");
  run_cmd->add_flag("--no-cache", run.no_cache, "Keep the response cache in memory only");
  run_cmd->add_flag("--resume", run.resume, "Skip entries already in --out and append");
  run_cmd->add_option("--concurrency", run.concurrency, "Entries processed concurrently");

  EvalArgs detect;
  auto* detect_cmd = app.add_subcommand("eval-detect", "Detection P/R/F1/accuracy of a results file");
  detect_cmd->add_option("--results", detect.results)->required();
  detect_cmd->add_option("--dataset", detect.dataset)->required();

  EvalArgs notes;
  auto* notes_cmd = app.add_subcommand("eval-notes", "ROUGE-L, BLEU and CHS of generated notes");
  add_config_flags(notes_cmd, notes.config);
  notes_cmd->add_option("--results", notes.results)->required();
  notes_cmd->add_option("--dataset", notes.dataset)->required();
  notes_cmd->add_option("--csv", notes.csv, "Write per-entry scores as CSV");
  notes_cmd->add_option("--method", notes.method, "Value of the CSV method column")->capture_default_str();
  notes_cmd->add_option("--threads", notes.threads, "Scoring threads (0: OpenMP default)");
  notes_cmd->add_flag("--literal-neutrality", notes.config.literal_neutrality,
                      "Score chs5 as 1 - polarity instead of 1 - |polarity|");

  CorrelateArgs corr;
  auto* corr_cmd = app.add_subcommand("correlate", "Spearman correlation of metric scores with user ratings");
  corr_cmd->add_option("--scores", corr.scores, "CSV from eval-notes")->required();
  corr_cmd->add_option("--ratings", corr.ratings, "CSV with item_id, method, ur_1..ur_5")->required();
  corr_cmd->add_flag("--json", corr.json, "Print JSON instead of a table");

  ScoreNoteArgs score;
  auto* score_cmd = app.add_subcommand("score-note", "CHS of one note against a gold note");
  add_config_flags(score_cmd, score.config);
  score_cmd->add_option("--note", score.note, "Note JSON, or @file")->required();
  score_cmd->add_option("--gold", score.gold, "Gold note JSON, or @file")->required();
  score_cmd->add_option("--post-text", score.post_text, "Text of the post");
  score_cmd->add_flag("--literal-neutrality", score.config.literal_neutrality);

  InspectArgs inspect;
  auto* inspect_cmd = app.add_subcommand("inspect-trace", "Print the stored record and trace of one entry");
  inspect_cmd->add_option("--results", inspect.results)->required();
  inspect_cmd->add_option("--id", inspect.id)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out, err);
    if (*detect_cmd) return cmd_eval_detect(detect, out, err);
    if (*notes_cmd) return cmd_eval_notes(notes, out, err);
    if (*corr_cmd) return cmd_correlate(corr, out, err);
    if (*score_cmd) return cmd_score_note(score, out, err);
    if (*inspect_cmd) return cmd_inspect_trace(inspect, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPartial;
  }
  return kExitUsage;
}

}  // namespace accnote::cli
