// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_JSON_IO_HPP
#define LATGAL_JSON_IO_HPP

#include <string>
#include <string_view>

#include "latgal/decomposition.hpp"
#include "latgal/fca.hpp"

// File formats.
//
// Lattice:      {"elements": ["0","a",...], "covers": [["0","a"], ...]}
// Aggregation:  {"lattice": "<file>", "arity": 2,
//                "slots": [{"closure": [...], "interior": [...],
//                           "iso": {"1":"d", ...}}, ...]}
// Family:       {"lattice": "<file>", "maps": {"<token>": {"0":"0", ...}}}
//               or {"builtin": "godel_chain", "k": 5}
//
// Relative lattice paths resolve against the directory of the referencing
// file. JSON output preserves element order from the input files.

namespace latgal::io {

LatticePtr parse_lattice_json(std::string_view text);
LatticePtr load_lattice_file(const std::string& path);
std::string lattice_to_json(const FiniteLattice& lattice);

SupAggregation parse_aggregation_json(std::string_view text,
                                      const std::string& base_dir);
SupAggregation load_aggregation_file(const std::string& path);

ValueMapFamily parse_family_json(std::string_view text, const std::string& base_dir);
ValueMapFamily load_family_file(const std::string& path);

std::string map_to_json(const LatticeMap& map);
std::string maps_to_json(std::span<const LatticeMap> maps);
std::string matrix_to_json(const MapMatrix& matrix);
std::string embedding_to_json(const SubdirectEmbedding& embedding);
std::string subdirect_to_json(const SubdirectDecomposition& decomposition);

std::string concepts_to_json(const ManyValuedContext& ctx, const FiniteLattice& host,
                             std::span<const FormalConcept> concepts);
std::string crisp_to_json(const ManyValuedContext& ctx,
                          std::span<const CrispConcept> concepts);

std::string lattice_tables_json(const FiniteLattice& lattice);

std::string read_file(const std::string& path);   // IoError
void write_file(const std::string& path, std::string_view content);

}  // namespace latgal::io

#endif
