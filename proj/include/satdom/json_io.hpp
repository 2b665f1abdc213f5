#pragma once

#include <variant>
#include <vector>

#include "json.hpp"
#include "satdom/covers.hpp"
#include "satdom/domgraph.hpp"
#include "satdom/grid.hpp"
#include "satdom/tilings.hpp"

namespace satdom {

// Witness documents are JSON objects tagged with a "type" field; every
// witness embeds the board it refers to. Parsing only checks structure;
// the validators decide whether a parsed witness actually holds.

nlohmann::json to_json(Cell c);
Cell cell_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Board& b);
Board board_from_json(const nlohmann::json& j);

struct DominatingSetWitness {
  Board board;
  std::vector<Cell> members;
};

nlohmann::json to_json(const DominatingSetWitness& w);
nlohmann::json to_json(const FragmentTiling& t);
nlohmann::json to_json(const DominoCovering& c);
nlohmann::json to_json(const MaxFragmentCover& c);

using Witness =
    std::variant<DominatingSetWitness, FragmentTiling, DominoCovering, MaxFragmentCover>;

Witness witness_from_json(const nlohmann::json& j);

// Validates a parsed witness against its embedded board; nullopt when it
// holds, otherwise the canonical counterexample message.
std::optional<std::string> check_witness(const Witness& w);

const Board& witness_board(const Witness& w);
std::string witness_type_name(const Witness& w);

}  // namespace satdom
