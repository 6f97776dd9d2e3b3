#include "accnote/dataset.hpp"

#include <fstream>

#include "accnote/records.hpp"

namespace accnote {

LoadedDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("unreadable file: " + path.string());

  LoadedDataset out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DataEntry entry;
    try {
      entry = parse_entry(line);
    } catch (const std::exception& e) {
      out.issues.push_back({line_no, e.what()});
      continue;
    }
    const auto violations = validate_entry(entry);
    if (!violations.empty()) {
      std::string msg = "validation failed:";
      for (const auto& v : violations) msg += " " + v + ";";
      msg.pop_back();
      out.issues.push_back({line_no, std::move(msg)});
      continue;
    }
    out.entries.push_back(std::move(entry));
  }
  if (out.entries.empty()) {
    std::string msg = "zero valid entries in " + path.string();
    if (!out.issues.empty()) {
      msg += " (line " + std::to_string(out.issues.front().line) + ": " + out.issues.front().message + ")";
    }
    throw DatasetError(msg);
  }
  return out;
}

}  // namespace accnote
