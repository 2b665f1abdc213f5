#include <algorithm>

#include "doctest.h"
#include "satdom/covers.hpp"
#include "satdom/domgraph.hpp"
#include "satdom/error.hpp"
#include "satdom/json_io.hpp"
#include "satdom/render.hpp"
#include "satdom/tilings.hpp"

using namespace satdom;

TEST_CASE("witness json round trips and re-validates") {
  // fragment tiling
  {
    const auto rep = minimal_fragment_tiling(make_rectangle(4, 4));
    const Witness w = witness_from_json(to_json(*rep.witness));
    CHECK_FALSE(check_witness(w).has_value());
    CHECK(witness_board(w) == rep.witness->board);
    CHECK(witness_type_name(w) == "fragment_tiling");
  }
  // saturated covering
  {
    const auto rep = minimal_fragment_tiling(make_rectangle(3, 3));
    const DominoCovering cov = tiling_to_saturated(*rep.witness);
    const Witness w = witness_from_json(to_json(cov));
    CHECK_FALSE(check_witness(w).has_value());
    CHECK(witness_type_name(w) == "domino_covering");
  }
  // cover with off-board pokes
  {
    const MaxFragmentCover c = triangular_cover(5);
    const Witness w = witness_from_json(to_json(c));
    CHECK_FALSE(check_witness(w).has_value());
  }
  // dominating set
  {
    const Board b = make_rectangle(5, 5);
    const auto rep = gamma_exact(adjacency_graph(b));
    DominatingSetWitness ds{b, {}};
    for (int v : rep.witness->members) ds.members.push_back(b.cells()[v]);
    const Witness w = witness_from_json(to_json(ds));
    CHECK_FALSE(check_witness(w).has_value());
  }
}

TEST_CASE("check_witness reports canonical counterexamples") {
  // overlapping fragments
  {
    FragmentTiling t{make_rectangle(1, 3),
                     {make_fragment(GridKind::square, {0, 0}, {{0, 1}}),
                      make_fragment(GridKind::square, {0, 1}, {{0, 2}})}};
    const auto problem = check_witness(Witness{t});
    REQUIRE(problem.has_value());
    CHECK(problem->find("(0,1)") != std::string::npos);
  }
  // unsaturated covering
  {
    const Board sq = make_rectangle(2, 2);
    DominoCovering c{sq,
                     {make_domino(sq.kind(), {0, 0}, {0, 1}), make_domino(sq.kind(), {0, 0}, {1, 0}),
                      make_domino(sq.kind(), {0, 1}, {1, 1}), make_domino(sq.kind(), {1, 0}, {1, 1})}};
    const auto problem = check_witness(Witness{c});
    REQUIRE(problem.has_value());
    CHECK(problem->find("redundant") != std::string::npos);
  }
  // undominated cell
  {
    const Board b = make_rectangle(1, 5);
    const auto problem = check_witness(Witness{DominatingSetWitness{b, {{0, 0}}}});
    REQUIRE(problem.has_value());
    CHECK(problem->find("(0,2)") != std::string::npos);
  }
}

TEST_CASE("malformed witnesses are parse errors") {
  CHECK_THROWS_AS(witness_from_json(nlohmann::json::parse(R"({"type":"nope"})")), ParseError);
  CHECK_THROWS_AS(
      witness_from_json(nlohmann::json::parse(
          R"({"type":"fragment_tiling","board":{"kind":"square","cells":[[0,0]]}})")),
      ParseError);
  CHECK_THROWS_AS(witness_from_json(nlohmann::json::parse(
                      R"({"type":"dominating_set","board":{"kind":"square","cells":[[0,"x"]]},
                          "members":[]})")),
                  ParseError);
}

TEST_CASE("ascii tiling rendering is deterministic") {
  const auto rep = minimal_fragment_tiling(make_rectangle(2, 2));
  CHECK(render_tiling_ascii(*rep.witness) == "AB\nAB\n");
  const auto rep3 = minimal_fragment_tiling(make_rectangle(3, 3));
  const std::string art = render_tiling_ascii(*rep3.witness);
  CHECK(std::count(art.begin(), art.end(), '\n') == 3);
  CHECK(art.find('.') == std::string::npos);  // no holes on a full board
}

TEST_CASE("ascii markers") {
  const Board b = make_rectangle(1, 3);
  CHECK(render_marked_ascii(b, {{0, 1}}) == "#O#\n");
  Board holed(GridKind::square, {{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(render_marked_ascii(holed, {}) == "#.#\n###\n");
}

TEST_CASE("svg rendering") {
  const auto rep = minimal_fragment_tiling(make_rectangle(2, 3));
  const std::string svg = render_tiling_svg(*rep.witness);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '<') > 6);

  // off-board pokes of a cover come out hatched
  const std::string cover_svg = render_cover_svg(triangular_cover(5));
  CHECK(cover_svg.find("url(#hatch)") != std::string::npos);

  const std::string hex_svg =
      render_marked_svg(Board(GridKind::hexagonal, {{0, 0}, {0, 1}}), {{0, 0}});
  CHECK(hex_svg.find("<polygon") != std::string::npos);

  const DominoCovering cov = tiling_to_saturated(*rep.witness);
  CHECK(render_covering_svg(cov).find("<line") != std::string::npos);
}
