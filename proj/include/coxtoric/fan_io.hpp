#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fan.hpp"

namespace coxtoric {

struct FanParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Next content line, skipping blanks and # comments; false at end of input.
inline bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

inline FanParseError parse_error(const std::string& name, std::size_t lineno,
                                 const std::string& msg) {
  std::ostringstream os;
  os << name << ":" << lineno << ": " << msg;
  return FanParseError(os.str());
}

}  // namespace detail

// Line-oriented fan format:
//   dim n
//   rays r        followed by r lines of n integers
//   cones c       followed by c lines of 1-based ray indices
// Blank lines and lines starting with # are ignored.
inline Fan parse_fan_stream(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t lineno = 0;
  auto expect_header = [&](const std::string& key) -> long long {
    if (!detail::next_line(in, line, lineno))
      throw detail::parse_error(name, lineno, "expected '" + key + "', got end of input");
    std::istringstream ls(line);
    std::string word;
    long long value = -1;
    if (!(ls >> word >> value) || word != key || value < 0) {
      std::string extra;
      if (ls >> extra)
        throw detail::parse_error(name, lineno, "trailing tokens after '" + key + "'");
      throw detail::parse_error(name, lineno, "expected '" + key + " <count>'");
    }
    std::string extra;
    if (ls >> extra)
      throw detail::parse_error(name, lineno, "trailing tokens after '" + key + "'");
    return value;
  };

  Fan f;
  const long long dim = expect_header("dim");
  if (dim < 1) throw detail::parse_error(name, lineno, "dim must be at least 1");
  f.dim = static_cast<std::size_t>(dim);

  const long long nrays = expect_header("rays");
  for (long long r = 0; r < nrays; ++r) {
    if (!detail::next_line(in, line, lineno))
      throw detail::parse_error(name, lineno, "expected a ray line, got end of input");
    std::istringstream ls(line);
    IVec ray;
    std::string tok;
    while (ls >> tok) {
      try {
        ray.push_back(Integer(tok));
      } catch (const std::exception&) {
        throw detail::parse_error(name, lineno, "bad integer '" + tok + "'");
      }
    }
    if (ray.size() != f.dim)
      throw detail::parse_error(name, lineno, "expected " + std::to_string(f.dim) +
                                                  " coordinates, got " +
                                                  std::to_string(ray.size()));
    f.rays.push_back(std::move(ray));
  }

  const long long ncones = expect_header("cones");
  for (long long c = 0; c < ncones; ++c) {
    if (!detail::next_line(in, line, lineno))
      throw detail::parse_error(name, lineno, "expected a cone line, got end of input");
    std::istringstream ls(line);
    std::vector<int> idx;
    long long v;
    while (ls >> v) {
      if (v < 1 || v > nrays)
        throw detail::parse_error(name, lineno,
                                  "ray index " + std::to_string(v) + " out of range");
      idx.push_back(static_cast<int>(v - 1));
    }
    if (!ls.eof())
      throw detail::parse_error(name, lineno, "bad token in cone line");
    if (idx.empty()) throw detail::parse_error(name, lineno, "empty cone");
    f.max_cones.push_back(std::move(idx));
  }

  if (detail::next_line(in, line, lineno))
    throw detail::parse_error(name, lineno, "unexpected trailing content");

  FanValidation val = validate_fan(f);
  if (!val.valid) {
    std::string msg = name + ": invalid fan:";
    for (const std::string& p : val.problems) msg += " " + p + ";";
    throw FanParseError(msg);
  }
  return f;
}

inline Fan parse_fan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FanParseError("cannot open " + path.string());
  return parse_fan_stream(in, path.filename().string());
}

inline void write_fan_stream(std::ostream& out, const Fan& f) {
  out << "dim " << f.dim << "\n";
  out << "rays " << f.rays.size() << "\n";
  for (const IVec& r : f.rays) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << " ";
      out << r[j];
    }
    out << "\n";
  }
  out << "cones " << f.max_cones.size() << "\n";
  for (const auto& idx : f.max_cones) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (j) out << " ";
      out << sorted[j] + 1;
    }
    out << "\n";
  }
}

inline void write_fan_file(const std::filesystem::path& path, const Fan& f) {
  std::ofstream out(path);
  if (!out) throw FanParseError("cannot write " + path.string());
  write_fan_stream(out, f);
}

}  // namespace coxtoric
