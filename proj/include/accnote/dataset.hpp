#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "accnote/data_model.hpp"

namespace accnote {

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LineIssue {
  int line = 0;
  std::string message;
};

struct LoadedDataset {
  std::vector<DataEntry> entries;
  /// Lines that were skipped, with the reason.
  std::vector<LineIssue> issues;
};

/// Reads a JSONL dataset. Malformed or invalid lines are skipped and reported;
/// throws DatasetError when the file is unreadable or yields no valid entry.
LoadedDataset load_dataset(const std::filesystem::path& path);

}  // namespace accnote
