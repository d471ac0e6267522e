#pragma once

#include "ccc/limits.hpp"
#include "ccc/poset.hpp"
#include "ccc/spacefile.hpp"
#include "ccc/topology.hpp"

#include <json.hpp>

#include <string>

namespace ccc {

enum class ExportFormat { dot, json };
ExportFormat parse_export_format(const std::string& s);

// Hasse diagram of the order (of the specialization for spaces); classes of
// a preorder are drawn as two-way edges.
std::string export_dot(const FinitePoset& p, const std::string& name);
std::string export_dot(const FiniteTopology& t, const std::string& name);

// Spaces list their canonically sorted opens when they have at most
// limits.max_points points and their minimal neighbourhoods otherwise.
nlohmann::ordered_json export_json(const FinitePoset& p);
nlohmann::ordered_json export_json(const FiniteTopology& t, const Limits& limits = {});
FinitePoset poset_from_json(const nlohmann::json& j);
FiniteTopology topology_from_json(const nlohmann::json& j);

// Documents: canonical text (dot is not meaningful for documents and maps
// to the text form) or a json list of canonical lines.
std::string export_doc(const SpaceDoc& doc, ExportFormat f);
SpaceDoc import_doc(const std::string& text, ExportFormat f);

}  // namespace ccc
