// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_RENDER_HPP
#define LATGAL_RENDER_HPP

#include <string>

#include "latgal/aggregation.hpp"
#include "latgal/fca.hpp"

namespace latgal::render {

/// Hasse diagram as DOT: one edge per cover pair, drawn bottom-up.
std::string lattice_dot(const FiniteLattice& lattice);

/// Concept lattice as DOT; nodes show extent and intent label maps.
std::string concept_lattice_dot(const ManyValuedContext& ctx,
                                const ConceptLattice& lattice);

/// Value table as CSV. Binary tables print a matrix with row and column
/// headers (first argument on rows); other arities print one tuple per line
/// under an x1..xn,f header.
std::string agg_table_csv(const AggTable& table);

/// Aligned text rendering of the same layouts; ansi enables bold headers.
std::string agg_table_text(const AggTable& table, bool ansi);

/// Elements, bounds and the join/meet tables as aligned text.
std::string lattice_tables_text(const FiniteLattice& lattice, bool ansi);

}  // namespace latgal::render

#endif
