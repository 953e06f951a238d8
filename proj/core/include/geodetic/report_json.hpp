#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "geodetic/homeomorph.hpp"

namespace geodetic {

nlohmann::json ToJson(const ConditionReport& report);

// {"base": <name or [[u, v], ...]>, "lengths": [...]} with lengths in
// canonical edge order. An empty base_name writes the edge list.
nlohmann::json LengthVectorToJson(const Graph& base, const LengthVector& lv,
                                  const std::string& base_name = "");

// Inverse of LengthVectorToJson. A named base is resolved through the
// built-in catalogue; an edge-list base is used as given.
std::pair<Graph, LengthVector> LengthVectorFromJson(const nlohmann::json& doc);

}  // namespace geodetic
