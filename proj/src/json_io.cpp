#include "satdom/json_io.hpp"

#include <algorithm>

#include "satdom/error.hpp"

namespace satdom {

namespace {

const nlohmann::json& need(const nlohmann::json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string("witness: missing field \"") + field + "\"");
  return j[field];
}

}  // namespace

nlohmann::json to_json(Cell c) { return nlohmann::json::array({c.a, c.b}); }

Cell cell_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("expected a cell as a pair of integers, got " + j.dump());
  const long long a = j[0].get<long long>(), b = j[1].get<long long>();
  if (a < INT32_MIN || a > INT32_MAX || b < INT32_MIN || b > INT32_MAX)
    throw ParseError("cell coordinate out of 32-bit range");
  return {static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)};
}

nlohmann::json to_json(const Board& b) {
  nlohmann::json j;
  j["kind"] = to_string(b.kind());
  auto cells = nlohmann::json::array();
  for (const Cell& c : b.cells()) cells.push_back(to_json(c));
  j["cells"] = std::move(cells);
  return j;
}

Board board_from_json(const nlohmann::json& j) {
  const auto& kind_field = need(j, "kind");
  if (!kind_field.is_string()) throw ParseError("board: \"kind\" must be a string");
  auto kind = grid_kind_from_string(kind_field.get<std::string>());
  if (!kind) throw ParseError("board: unknown grid kind \"" + kind_field.get<std::string>() + "\"");
  const auto& cells_field = need(j, "cells");
  if (!cells_field.is_array()) throw ParseError("board: \"cells\" must be an array");
  std::vector<Cell> cells;
  for (const auto& item : cells_field) cells.push_back(cell_from_json(item));
  if (cells.empty()) throw ParseError("board: no cells");
  return Board(*kind, std::move(cells));
}

nlohmann::json to_json(const DominatingSetWitness& w) {
  nlohmann::json j;
  j["type"] = "dominating_set";
  j["board"] = to_json(w.board);
  auto members = nlohmann::json::array();
  for (const Cell& c : w.members) members.push_back(to_json(c));
  j["members"] = std::move(members);
  return j;
}

nlohmann::json to_json(const FragmentTiling& t) {
  nlohmann::json j;
  j["type"] = "fragment_tiling";
  j["board"] = to_json(t.board);
  auto frags = nlohmann::json::array();
  for (const Fragment& f : t.fragments) {
    nlohmann::json fj;
    fj["center"] = to_json(f.center);
    auto spokes = nlohmann::json::array();
    for (const Cell& s : f.spokes) spokes.push_back(to_json(s));
    fj["spokes"] = std::move(spokes);
    frags.push_back(std::move(fj));
  }
  j["fragments"] = std::move(frags);
  return j;
}

nlohmann::json to_json(const DominoCovering& c) {
  nlohmann::json j;
  j["type"] = "domino_covering";
  j["board"] = to_json(c.board);
  auto ds = nlohmann::json::array();
  for (const Domino& d : c.dominoes)
    ds.push_back(nlohmann::json::array({to_json(d.a), to_json(d.b)}));
  j["dominoes"] = std::move(ds);
  return j;
}

nlohmann::json to_json(const MaxFragmentCover& c) {
  nlohmann::json j;
  j["type"] = "max_fragment_cover";
  j["board"] = to_json(c.board);
  auto centers = nlohmann::json::array();
  for (const Cell& ctr : c.centers) centers.push_back(to_json(ctr));
  j["centers"] = std::move(centers);
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  const auto& type_field = need(j, "type");
  if (!type_field.is_string()) throw ParseError("witness: \"type\" must be a string");
  const std::string type = type_field.get<std::string>();
  Board board = board_from_json(need(j, "board"));

  auto cells_of = [](const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string("witness: \"") + what + "\" must be an array");
    std::vector<Cell> out;
    for (const auto& item : arr) out.push_back(cell_from_json(item));
    return out;
  };

  if (type == "dominating_set")
    return DominatingSetWitness{std::move(board), cells_of(need(j, "members"), "members")};

  if (type == "fragment_tiling") {
    FragmentTiling t{std::move(board), {}};
    for (const auto& fj : need(j, "fragments")) {
      Fragment f;
      f.center = cell_from_json(need(fj, "center"));
      f.spokes = cells_of(need(fj, "spokes"), "spokes");
      std::sort(f.spokes.begin(), f.spokes.end());
      t.fragments.push_back(std::move(f));
    }
    return t;
  }

  if (type == "domino_covering") {
    DominoCovering c{std::move(board), {}};
    for (const auto& dj : need(j, "dominoes")) {
      if (!dj.is_array() || dj.size() != 2)
        throw ParseError("witness: each domino must be a pair of cells");
      Cell a = cell_from_json(dj[0]), b = cell_from_json(dj[1]);
      if (b < a) std::swap(a, b);
      c.dominoes.push_back(Domino{a, b});
    }
    std::sort(c.dominoes.begin(), c.dominoes.end());
    return c;
  }

  if (type == "max_fragment_cover") {
    MaxFragmentCover c{std::move(board), cells_of(need(j, "centers"), "centers")};
    std::sort(c.centers.begin(), c.centers.end());
    return c;
  }

  throw ParseError("witness: unknown type \"" + type + "\"");
}

std::optional<std::string> check_witness(const Witness& w) {
  if (const auto* ds = std::get_if<DominatingSetWitness>(&w)) {
    AdjacencyGraph g = adjacency_graph(ds->board);
    DominatingSet d;
    for (const Cell& c : ds->members) {
      auto idx = ds->board.index_of(c);
      if (!idx) return "member " + to_string(c) + " is not a board cell";
      d.members.push_back(*idx);
    }
    std::sort(d.members.begin(), d.members.end());
    if (!dominates(g, d)) {
      for (int v = 0; v < g.size(); ++v) {
        bool dom = std::binary_search(d.members.begin(), d.members.end(), v);
        for (int u : g.adj[v]) dom = dom || std::binary_search(d.members.begin(), d.members.end(), u);
        if (!dom) return "cell " + to_string(g.board.cells()[v]) + " is not dominated";
      }
    }
    return std::nullopt;
  }
  if (const auto* t = std::get_if<FragmentTiling>(&w)) return check_tiling(*t);
  if (const auto* c = std::get_if<DominoCovering>(&w)) {
    if (auto problem = check_covering(*c)) return problem;
    SaturationResult sat = is_saturated(*c);
    if (!sat.saturated) return "covering is not saturated: domino " + to_string(*sat.redundant) +
                                " is redundant";
    return std::nullopt;
  }
  return check_cover(std::get<MaxFragmentCover>(w));
}

const Board& witness_board(const Witness& w) {
  return std::visit([](const auto& x) -> const Board& { return x.board; }, w);
}

std::string witness_type_name(const Witness& w) {
  switch (w.index()) {
    case 0: return "dominating_set";
    case 1: return "fragment_tiling";
    case 2: return "domino_covering";
    default: return "max_fragment_cover";
  }
}

}  // namespace satdom
