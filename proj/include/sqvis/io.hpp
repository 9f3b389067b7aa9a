#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqvis/errors.hpp"
#include "sqvis/geometry.hpp"
#include "sqvis/rational.hpp"
#include "sqvis/visibility.hpp"

namespace sqvis {

// Line-oriented ASCII formats. Lines whose first non-space character is
// '#' and blank lines are ignored. ParseError carries the physical
// (1-based) line number.
//
//   instance: "unitsquares v1", "n <count>", then n lines "<x> <y>"
//   ranking:  "ranking v1",     "n <count>", then n index lines
//   graph:    "edges v1",       "n <count>", then lines "i j", i < j,
//             sorted lexicographically

namespace detail {

struct Line {
  std::size_t number = 0;  // 1-based physical line
  std::vector<std::string> tokens;
};

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      if (pos == text.size()) break;  // no trailing fragment
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty()) continue;
    if (line.tokens.front()[0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : lines_(content_lines(text)) {}

  bool done() const { return index_ >= lines_.size(); }

  const Line& next(const std::string& what) {
    if (done()) {
      const std::size_t at = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(at, "unexpected end of input, expected " + what);
    }
    return lines_[index_++];
  }

  void expect_done(const std::string& what) const {
    if (!done()) {
      throw ParseError(lines_[index_].number, "unexpected trailing content after " + what);
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

inline void expect_header(const Line& line, const std::string& word) {
  if (line.tokens.size() != 2 || line.tokens[0] != word || line.tokens[1] != "v1") {
    throw ParseError(line.number, "expected header '" + word + " v1'");
  }
}

inline std::size_t parse_count(const Line& line) {
  if (line.tokens.size() != 2 || line.tokens[0] != "n") {
    throw ParseError(line.number, "expected 'n <count>'");
  }
  const std::string& digits = line.tokens[1];
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line.number, "bad count '" + digits + "'");
  }
  return static_cast<std::size_t>(std::stoull(digits));
}

inline std::size_t parse_index(const Line& line, const std::string& token,
                               std::size_t n) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line.number, "bad index '" + token + "'");
  }
  const auto value = static_cast<std::size_t>(std::stoull(token));
  if (value >= n) {
    throw ParseError(line.number, "index " + token + " out of range for n=" +
                                      std::to_string(n));
  }
  return value;
}

inline Rational parse_coordinate(const Line& line, const std::string& token) {
  auto r = parse_rational(token);
  if (!r) throw ParseError(line.number, "bad rational '" + token + "'");
  return *r;
}

}  // namespace detail

inline std::string serialize_instance(const Instance& inst) {
  std::string out = "unitsquares v1\nn " + std::to_string(inst.size()) + "\n";
  for (const Point& c : inst.centers) {
    out += format_rational(c.x) + " " + format_rational(c.y) + "\n";
  }
  return out;
}

inline Instance parse_instance(std::string_view text) {
  detail::LineCursor cursor(text);
  detail::expect_header(cursor.next("header"), "unitsquares");
  const std::size_t n = detail::parse_count(cursor.next("'n <count>'"));
  Instance inst;
  inst.centers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = cursor.next("a coordinate line (count mismatch)");
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected '<x> <y>'");
    }
    inst.centers.push_back({detail::parse_coordinate(line, line.tokens[0]),
                            detail::parse_coordinate(line, line.tokens[1])});
  }
  cursor.expect_done("the coordinate lines");
  return inst;
}

inline std::string serialize_ranking(const Ranking& rk) {
  std::string out = "ranking v1\nn " + std::to_string(rk.size()) + "\n";
  for (std::size_t v : rk.order) out += std::to_string(v) + "\n";
  return out;
}

inline Ranking parse_ranking(std::string_view text) {
  detail::LineCursor cursor(text);
  detail::expect_header(cursor.next("header"), "ranking");
  const std::size_t n = detail::parse_count(cursor.next("'n <count>'"));
  Ranking rk;
  rk.order.reserve(n);
  std::size_t last_line = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = cursor.next("an index line (count mismatch)");
    if (line.tokens.size() != 1) {
      throw ParseError(line.number, "expected a single index");
    }
    rk.order.push_back(detail::parse_index(line, line.tokens[0], n));
    last_line = line.number;
  }
  cursor.expect_done("the index lines");
  if (!is_permutation_of_n(rk.order, n)) {
    throw ParseError(last_line == 0 ? 2 : last_line,
                     "indices do not form a permutation of 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
  }
  return rk;
}

inline std::string serialize_graph(const VisibilityGraph& g) {
  std::string out = "edges v1\nn " + std::to_string(g.n) + "\n";
  for (const Edge& e : g.edges) {
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  }
  return out;
}

inline VisibilityGraph parse_graph(std::string_view text) {
  detail::LineCursor cursor(text);
  detail::expect_header(cursor.next("header"), "edges");
  const std::size_t n = detail::parse_count(cursor.next("'n <count>'"));
  VisibilityGraph g{n, {}};
  while (!cursor.done()) {
    const auto& line = cursor.next("an edge line");
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected 'i j'");
    }
    const std::size_t i = detail::parse_index(line, line.tokens[0], n);
    const std::size_t j = detail::parse_index(line, line.tokens[1], n);
    if (i >= j) {
      throw ParseError(line.number, "edge endpoints must satisfy i < j");
    }
    const Edge e{i, j};
    if (!g.edges.empty() && !(g.edges.back() < e)) {
      throw ParseError(line.number, "edges must be sorted and distinct");
    }
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace sqvis
