#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/levels.hpp"
#include "goodsg/semigroup.hpp"
#include "goodsg/subspace.hpp"

namespace goodsg {

/// Raw contents of a .gs file:
///   d <dimension>
///   c (<conductor>)      optional
///   (<element>)          one per line
/// '#' starts a comment, blank lines are ignored.
struct SemigroupText {
  std::size_t d = 0;
  std::optional<ExtPoint> conductor;
  std::vector<ExtPoint> elements;
};

inline SemigroupText parse_semigroup_text(const std::string& text) {
  SemigroupText out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_d = false;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (!have_d) {
      if (line.size() < 2 || line[0] != 'd' || (line[1] != ' ' && line[1] != '\t'))
        fail("expected 'd <dimension>'");
      const auto num = line.substr(2);
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(num, &used);
      } catch (const std::exception&) {
        fail("bad dimension '" + num + "'");
      }
      if (num.find_first_not_of(" \t", used) != std::string::npos) fail("bad dimension '" + num + "'");
      if (v == 0 || v > kMaxDim) fail("dimension must be in 1.." + std::to_string(kMaxDim));
      out.d = v;
      have_d = true;
      continue;
    }
    ExtPoint p;
    const bool is_c = line[0] == 'c';
    try {
      p = parse_point(is_c ? line.substr(1) : line);
    } catch (const Error& e) {
      fail(e.detail());
    }
    if (p.dim() != out.d) fail(to_string(p) + " has dimension " + std::to_string(p.dim()));
    if (!p.is_finite()) fail(to_string(p) + " is not finite");
    if (is_c) {
      if (out.conductor || !out.elements.empty()) fail("conductor line must precede the elements");
      out.conductor = p;
    } else {
      out.elements.push_back(p);
    }
  }
  if (!have_d) throw Error(ErrorKind::Parse, "missing 'd <dimension>' line");
  return out;
}

inline GoodSemigroup parse_semigroup(const std::string& text) {
  auto t = parse_semigroup_text(text);
  return GoodSemigroup::from_small_elements(t.d, std::move(t.elements), t.conductor);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GoodSemigroup read_semigroup(const std::string& path) { return parse_semigroup(read_file(path)); }

/// Canonical form: d line, c line, sorted elements.
inline std::string serialize_semigroup(const GoodSemigroup& s) {
  std::string out = "d " + std::to_string(s.dim()) + "\nc " + to_string(s.conductor()) + "\n";
  for (const auto& e : s.small()) out += to_string(e) + "\n";
  return out;
}

inline std::string format_levels(const LevelPartition& p) {
  std::string out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    out += "A" + std::to_string(i) + " (" + std::to_string(p.level(i).size()) + ")\n";
    for (const auto& x : p.level(i)) out += to_string(x) + "\n";
  }
  return out;
}

inline std::string format_subspaces(const LevelPartition& p) {
  std::string out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    out += "A" + std::to_string(i) + " (" + std::to_string(p.level(i).size()) + ")\n";
    for (const auto& s : subspaces_of_level(p, i))
      out += "dim=" + std::to_string(s.dimension()) + " " + to_string(s) + "\n";
  }
  return out;
}

}  // namespace goodsg
