#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "sqvis/generate.hpp"
#include "sqvis/ranking.hpp"
#include "sqvis/svg.hpp"

using namespace sqvis;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("render_svg single square") {
  const Instance inst{{{0, 0}}};
  const std::string svg = render_svg(inst, identity_ranking(1));
  // body spans [-1,1]^2, so the viewport is 2.4 units = 153.6 svg units
  CHECK(svg.find("viewBox=\"0 0 153.6 153.6\"") != std::string::npos);
  CHECK(count_occurrences(svg, "<rect ") == 1);
  CHECK(svg.find("width=\"128\" height=\"128\"") != std::string::npos);
  CHECK(svg.find(">0</text>") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("render_svg paints the lowest rank last") {
  const Instance inst{{{0, 0}, {1, 1}}};
  const Ranking rk{{1, 0}};  // square 1 is ranked lowest
  const std::string svg = render_svg(inst, rk);
  CHECK(count_occurrences(svg, "<rect ") == 2);
  // the last label drawn is rank 0, which belongs to square 1 at (1,1)
  const std::size_t label0 = svg.rfind(">0</text>");
  const std::size_t label1 = svg.rfind(">1</text>");
  REQUIRE(label0 != std::string::npos);
  REQUIRE(label1 != std::string::npos);
  CHECK(label1 < label0);
}

TEST_CASE("render_svg overlay draws one line per edge") {
  const Instance inst{{{0, 0}, {1, 0}, {2, 0}}};
  const VisibilityGraph g{3, {{0, 1}, {1, 2}}};
  const std::string svg = render_svg(inst, identity_ranking(3), &g);
  CHECK(count_occurrences(svg, "<line ") == 2);
  CHECK(count_occurrences(svg, "<circle ") == 3);
}

TEST_CASE("render_svg validates input") {
  const Instance inst{{{0, 0}, {1, 0}}};
  CHECK_THROWS_AS(render_svg(inst, Ranking{{0, 0}}), InvalidRanking);
  CHECK_THROWS_AS(render_svg(inst, Ranking{{0}}), InvalidRanking);
  const VisibilityGraph wrong{3, {}};
  CHECK_THROWS_AS(render_svg(inst, identity_ranking(2), &wrong), BadParams);
}

TEST_CASE("render_svg empty instance") {
  const std::string svg = render_svg(Instance{}, Ranking{});
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(count_occurrences(svg, "<rect ") == 0);
}

TEST_CASE("render_svg is deterministic and matches the golden file") {
  const QuadraticInstance q = quadratic_instance(8, Rational(1, 16));
  const std::string svg = render_svg(q.instance, q.stacked_ranking);
  CHECK(svg == render_svg(q.instance, q.stacked_ranking));
  CHECK(svg == slurp(std::string(SQVIS_TEST_DIR) + "/golden/quadratic8.svg"));
}
