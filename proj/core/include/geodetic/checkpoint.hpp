#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "geodetic/homeomorph.hpp"

namespace geodetic {

// Identifies the search a checkpoint belongs to. Resuming with a different
// header is an error.
struct CheckpointHeader {
  std::string base;
  int target_d = 0;
  int bound = 0;
  std::string mode;

  friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

// Plain-text log of completed search partitions:
//
//   # geodetic-lab checkpoint v1
//   base petersen
//   d 4
//   bound 3
//   mode exhaustive
//   1 2 1 : 1,1,2,...,1 2,1,1,...,1 ;
//
// One line per completed partition: the partition prefix, a colon, the
// solutions found in it (comma-separated lengths, space-separated vectors)
// and a closing ';' that marks the line as fully written.
class CheckpointLog {
 public:
  // Loads `path` if it exists (validating the header), otherwise creates it.
  CheckpointLog(std::string path, CheckpointHeader header);

  const std::map<std::vector<int>, std::vector<LengthVector>>& completed()
      const {
    return completed_;
  }
  // Appends and flushes one line. Safe to call from several threads.
  void Record(const std::vector<int>& key,
              const std::vector<LengthVector>& solutions);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::vector<int>, std::vector<LengthVector>> completed_;
  std::mutex mutex_;
};

std::string FormatCheckpointLine(const std::vector<int>& key,
                                 const std::vector<LengthVector>& solutions);

}  // namespace geodetic
