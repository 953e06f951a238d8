#include "geodetic/checkpoint.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geodetic/error.hpp"

namespace geodetic {
namespace {

constexpr const char* kMagic = "# geodetic-lab checkpoint v1";

std::vector<int> ParseInts(const std::string& text, char separator) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, separator)) {
    if (item.empty()) continue;
    values.push_back(std::stoi(item));
  }
  return values;
}

}  // namespace

std::string FormatCheckpointLine(const std::vector<int>& key,
                                 const std::vector<LengthVector>& solutions) {
  std::string line;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(key[i]);
  }
  line += " :";
  for (const LengthVector& lv : solutions) {
    line += ' ';
    for (std::size_t e = 0; e < lv.size(); ++e) {
      if (e) line += ',';
      line += std::to_string(lv.lengths[e]);
    }
  }
  line += " ;";
  return line;
}

CheckpointLog::CheckpointLog(std::string path, CheckpointHeader header)
    : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    CheckpointHeader found;
    if (!std::getline(in, line) || line != kMagic) {
      throw Error(ErrorCode::kParse, "'" + path_ + "' is not a checkpoint file");
    }
    for (int i = 0; i < 4 && std::getline(in, line); ++i) {
      std::istringstream fields(line);
      std::string key;
      fields >> key;
      if (key == "base") fields >> found.base;
      else if (key == "d") fields >> found.target_d;
      else if (key == "bound") fields >> found.bound;
      else if (key == "mode") fields >> found.mode;
    }
    if (!(found == header)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "checkpoint '" + path_ + "' belongs to a different search (" +
                      found.base + ", d=" + std::to_string(found.target_d) +
                      ", bound=" + std::to_string(found.bound) + ", " +
                      found.mode + ")");
    }
    while (std::getline(in, line)) {
      const auto colon = line.find(':');
      // A partially written final line is dropped and recomputed.
      if (colon == std::string::npos || !line.ends_with(" ;")) continue;
      line.resize(line.size() - 2);
      std::vector<int> key = ParseInts(line.substr(0, colon), ' ');
      std::vector<LengthVector> solutions;
      std::istringstream rest(line.substr(colon + 1));
      std::string token;
      while (rest >> token) solutions.push_back({ParseInts(token, ',')});
      completed_[std::move(key)] = std::move(solutions);
    }
    return;
  }
  std::ofstream out(path_);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path_ + "'");
  out << kMagic << '\n'
      << "base " << header.base << '\n'
      << "d " << header.target_d << '\n'
      << "bound " << header.bound << '\n'
      << "mode " << header.mode << '\n';
}

void CheckpointLog::Record(const std::vector<int>& key,
                           const std::vector<LengthVector>& solutions) {
  const std::string line = FormatCheckpointLine(key, solutions);
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  out << line << '\n';
  out.flush();
}

}  // namespace geodetic
