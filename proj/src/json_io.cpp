// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/json_io.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace latgal::io {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, "invalid JSON: ", e.what());
  }
}

std::vector<std::string> string_array(const ordered_json& node, const char* what) {
  if (!node.is_array()) fail(ErrorKind::ParseError, what, " must be an array");
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string()) fail(ErrorKind::ParseError, what, " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string resolve_relative(const std::string& path, const std::string& base_dir) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

SystemIso iso_from_object(const ordered_json& node, const ClosureSystem& closure,
                          const InteriorSystem& interior) {
  if (!node.is_object()) fail(ErrorKind::ParseError, "iso must be an object");
  const FiniteLattice& L = *closure.host();
  const FiniteLattice& M = *interior.host();
  std::vector<Index> mapping;
  mapping.reserve(closure.members().size());
  for (Index member : closure.members()) {
    std::string key = L.label(member);
    auto it = node.find(key);
    if (it == node.end()) {
      fail(ErrorKind::NotIso, "iso has no value for closure member '", key, "'");
    }
    if (!it->is_string()) fail(ErrorKind::ParseError, "iso values must be strings");
    mapping.push_back(M.index_of(it->get<std::string>()));
  }
  if (node.size() != mapping.size()) {
    fail(ErrorKind::NotIso, "iso assigns elements outside the closure system");
  }
  return SystemIso::validated(closure.poset(), interior.poset(), std::move(mapping));
}

ordered_json map_object(const LatticeMap& map) {
  ordered_json out = ordered_json::object();
  for (Index x = 0; x < map.domain()->size(); ++x) {
    out[map.domain()->label(x)] = map.codomain()->label(map(x));
  }
  return out;
}

ordered_json matrix_object(const MapMatrix& matrix) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      row.push_back(map_object(matrix.at(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open '", path, "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IoError, "cannot write '", path, "'");
  out << content;
  if (!out) fail(ErrorKind::IoError, "failed while writing '", path, "'");
}

LatticePtr parse_lattice_json(std::string_view text) {
  ordered_json root = parse(text);
  if (!root.is_object() || !root.contains("elements") || !root.contains("covers")) {
    fail(ErrorKind::ParseError, "lattice file needs 'elements' and 'covers'");
  }
  std::vector<std::string> elements = string_array(root["elements"], "elements");
  if (!root["covers"].is_array()) {
    fail(ErrorKind::ParseError, "covers must be an array of [lower, upper] pairs");
  }
  std::vector<std::pair<std::string, std::string>> covers;
  covers.reserve(root["covers"].size());
  for (const auto& pair : root["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      fail(ErrorKind::ParseError, "covers must be an array of [lower, upper] pairs");
    }
    covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return FiniteLattice::from_covers(std::move(elements), covers);
}

LatticePtr load_lattice_file(const std::string& path) {
  return parse_lattice_json(read_file(path));
}

std::string lattice_to_json(const FiniteLattice& lattice) {
  ordered_json root;
  ordered_json elements = ordered_json::array();
  for (Index x = 0; x < lattice.size(); ++x) elements.push_back(lattice.label(x));
  root["elements"] = std::move(elements);
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    covers.push_back(ordered_json::array({lattice.label(lo), lattice.label(hi)}));
  }
  root["covers"] = std::move(covers);
  return root.dump(2);
}

SupAggregation parse_aggregation_json(std::string_view text,
                                      const std::string& base_dir) {
  ordered_json root = parse(text);
  if (!root.is_object() || !root.contains("lattice") || !root.contains("slots")) {
    fail(ErrorKind::ParseError, "aggregation file needs 'lattice' and 'slots'");
  }
  if (!root["lattice"].is_string()) {
    fail(ErrorKind::ParseError, "'lattice' must be a file path");
  }
  LatticePtr host =
      load_lattice_file(resolve_relative(root["lattice"].get<std::string>(), base_dir));
  if (!root["slots"].is_array() || root["slots"].empty()) {
    fail(ErrorKind::ParseError, "'slots' must be a non-empty array");
  }
  if (root.contains("arity")) {
    if (!root["arity"].is_number_unsigned() ||
        root["arity"].get<std::size_t>() != root["slots"].size()) {
      fail(ErrorKind::ParseError, "'arity' does not match the number of slots");
    }
  }
  SupAggSpec spec;
  spec.host = host;
  for (const auto& slot : root["slots"]) {
    if (!slot.is_object() || !slot.contains("closure") || !slot.contains("interior") ||
        !slot.contains("iso")) {
      fail(ErrorKind::ParseError,
           "each slot needs 'closure', 'interior' and 'iso'");
    }
    ClosureSystem closure =
        ClosureSystem::validate_labels(host, string_array(slot["closure"], "closure"));
    InteriorSystem interior =
        InteriorSystem::validate_labels(host, string_array(slot["interior"], "interior"));
    SystemIso iso = iso_from_object(slot["iso"], closure, interior);
    spec.slots.push_back(AggSlot{std::move(closure), std::move(interior), std::move(iso)});
  }
  return SupAggregation::build(std::move(spec));
}

SupAggregation load_aggregation_file(const std::string& path) {
  return parse_aggregation_json(read_file(path),
                                std::filesystem::path(path).parent_path().string());
}

ValueMapFamily parse_family_json(std::string_view text, const std::string& base_dir) {
  ordered_json root = parse(text);
  if (!root.is_object()) fail(ErrorKind::ParseError, "family file must be an object");
  if (root.contains("builtin")) {
    if (root["builtin"] != "godel_chain") {
      fail(ErrorKind::ParseError, "unknown builtin family '",
           root["builtin"].dump(), "'");
    }
    if (!root.contains("k") || !root["k"].is_number_unsigned()) {
      fail(ErrorKind::ParseError, "builtin family needs an unsigned 'k'");
    }
    return ValueMapFamily::godel_chain(root["k"].get<std::size_t>());
  }
  if (!root.contains("lattice") || !root.contains("maps")) {
    fail(ErrorKind::ParseError, "family file needs 'lattice' and 'maps'");
  }
  LatticePtr host =
      load_lattice_file(resolve_relative(root["lattice"].get<std::string>(), base_dir));
  if (!root["maps"].is_object()) {
    fail(ErrorKind::ParseError, "'maps' must map tokens to label tables");
  }
  std::vector<std::pair<std::string, LatticeMap>> entries;
  for (const auto& [token, table] : root["maps"].items()) {
    if (!table.is_object()) {
      fail(ErrorKind::ParseError, "map for token '", token,
           "' must be a label-to-label object");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(table.size());
    for (const auto& [from, to] : table.items()) {
      if (!to.is_string()) {
        fail(ErrorKind::ParseError, "map for token '", token,
             "' must use string values");
      }
      pairs.emplace_back(from, to.get<std::string>());
    }
    entries.emplace_back(token, LatticeMap::from_labels(host, host, pairs));
  }
  return ValueMapFamily::from_maps(std::move(host), std::move(entries));
}

ValueMapFamily load_family_file(const std::string& path) {
  return parse_family_json(read_file(path),
                           std::filesystem::path(path).parent_path().string());
}

std::string map_to_json(const LatticeMap& map) { return map_object(map).dump(2); }

std::string maps_to_json(std::span<const LatticeMap> maps) {
  ordered_json out = ordered_json::array();
  for (const LatticeMap& m : maps) out.push_back(map_object(m));
  return out.dump(2);
}

std::string matrix_to_json(const MapMatrix& matrix) {
  return matrix_object(matrix).dump(2);
}

std::string embedding_to_json(const SubdirectEmbedding& embedding) {
  ordered_json out = ordered_json::object();
  const FiniteLattice& L = *embedding.source();
  for (Index x = 0; x < L.size(); ++x) out[L.label(x)] = embedding.bitstring(x);
  return out.dump(2);
}

std::string subdirect_to_json(const SubdirectDecomposition& decomposition) {
  ordered_json root;
  const SubdirectEmbedding& e = decomposition.embedding;
  const FiniteLattice& L = *e.source();
  ordered_json irreducibles = ordered_json::array();
  for (Index j : e.irreducible_order()) irreducibles.push_back(L.label(j));
  root["irreducibles"] = std::move(irreducibles);
  ordered_json embedding = ordered_json::object();
  for (Index x = 0; x < L.size(); ++x) embedding[L.label(x)] = e.bitstring(x);
  root["embedding"] = std::move(embedding);
  ordered_json slots = ordered_json::array();
  for (const MapMatrix& m : decomposition.slot_matrices) {
    slots.push_back(matrix_object(m));
  }
  root["slots"] = std::move(slots);
  return root.dump(2);
}

std::string concepts_to_json(const ManyValuedContext& ctx, const FiniteLattice& host,
                             std::span<const FormalConcept> concepts) {
  ordered_json out = ordered_json::array();
  for (const FormalConcept& c : concepts) {
    ordered_json concept_node;
    ordered_json extent = ordered_json::object();
    for (std::size_t b = 0; b < ctx.objects.size(); ++b) {
      extent[ctx.objects[b]] = host.label(c.extent[b]);
    }
    ordered_json intent = ordered_json::object();
    for (std::size_t a = 0; a < ctx.attributes.size(); ++a) {
      intent[ctx.attributes[a]] = host.label(c.intent[a]);
    }
    concept_node["extent"] = std::move(extent);
    concept_node["intent"] = std::move(intent);
    out.push_back(std::move(concept_node));
  }
  return out.dump(2);
}

std::string crisp_to_json(const ManyValuedContext& ctx,
                          std::span<const CrispConcept> concepts) {
  ordered_json out = ordered_json::array();
  for (const CrispConcept& c : concepts) {
    ordered_json node;
    ordered_json extent = ordered_json::array();
    for (std::size_t b : c.extent) extent.push_back(ctx.objects[b]);
    ordered_json intent = ordered_json::array();
    for (std::size_t a : c.intent) intent.push_back(ctx.attributes[a]);
    node["extent"] = std::move(extent);
    node["intent"] = std::move(intent);
    out.push_back(std::move(node));
  }
  return out.dump(2);
}

std::string lattice_tables_json(const FiniteLattice& lattice) {
  ordered_json root;
  ordered_json elements = ordered_json::array();
  for (Index x = 0; x < lattice.size(); ++x) elements.push_back(lattice.label(x));
  root["elements"] = std::move(elements);
  root["bottom"] = lattice.label(lattice.bottom());
  root["top"] = lattice.label(lattice.top());
  ordered_json join_rows = ordered_json::array();
  ordered_json meet_rows = ordered_json::array();
  for (Index x = 0; x < lattice.size(); ++x) {
    ordered_json jr = ordered_json::array();
    ordered_json mr = ordered_json::array();
    for (Index y = 0; y < lattice.size(); ++y) {
      jr.push_back(lattice.label(lattice.join(x, y)));
      mr.push_back(lattice.label(lattice.meet(x, y)));
    }
    join_rows.push_back(std::move(jr));
    meet_rows.push_back(std::move(mr));
  }
  root["join"] = std::move(join_rows);
  root["meet"] = std::move(meet_rows);
  return root.dump(2);
}

}  // namespace latgal::io
