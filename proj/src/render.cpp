// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/render.hpp"

#include <algorithm>

namespace latgal::render {
namespace {

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

constexpr const char* kBold = "\x1b[1m";
constexpr const char* kReset = "\x1b[0m";

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out.push_back(' ');
  return out;
}

// Aligned matrix with a corner label, row labels and column headers.
std::string text_matrix(const std::string& corner,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::vector<std::vector<std::string>>& cells,
                        bool ansi) {
  std::size_t width = corner.size();
  for (const auto& l : row_labels) width = std::max(width, l.size());
  for (const auto& l : col_labels) width = std::max(width, l.size());
  for (const auto& row : cells) {
    for (const auto& cell : row) width = std::max(width, cell.size());
  }
  ++width;

  std::string out;
  if (ansi) out += kBold;
  out += pad(corner, width);
  for (const auto& l : col_labels) out += pad(l, width);
  if (ansi) out += kReset;
  out += "\n";
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    if (ansi) out += kBold;
    out += pad(row_labels[r], width);
    if (ansi) out += kReset;
    for (const auto& cell : cells[r]) out += pad(cell, width);
    out += "\n";
  }
  return out;
}

}  // namespace

std::string lattice_dot(const FiniteLattice& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (Index x = 0; x < lattice.size(); ++x) {
    out += "  " + dot_quote(lattice.label(x)) + ";\n";
  }
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    out += "  " + dot_quote(lattice.label(lo)) + " -> " +
           dot_quote(lattice.label(hi)) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string concept_lattice_dot(const ManyValuedContext& ctx,
                                const ConceptLattice& lattice) {
  const FiniteLattice& L = *lattice.host();
  auto describe = [&](const FormalConcept& c) {
    std::string text = "e:";
    for (std::size_t b = 0; b < ctx.objects.size(); ++b) {
      if (b) text += ",";
      text += ctx.objects[b] + "=" + L.label(c.extent[b]);
    }
    text += "\\ni:";
    for (std::size_t a = 0; a < ctx.attributes.size(); ++a) {
      if (a) text += ",";
      text += ctx.attributes[a] + "=" + L.label(c.intent[a]);
    }
    return text;
  };
  std::string out = "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out += "  c" + std::to_string(i) + " [label=" +
           dot_quote(describe(lattice.concepts()[i])) + "];\n";
  }
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string agg_table_csv(const AggTable& table) {
  const FiniteLattice& L = *table.host();
  std::string out;
  if (table.arity() == 2) {
    out += "x\\y";
    for (Index y = 0; y < L.size(); ++y) out += "," + csv_cell(L.label(y));
    out += "\n";
    for (Index x = 0; x < L.size(); ++x) {
      out += csv_cell(L.label(x));
      for (Index y = 0; y < L.size(); ++y) {
        std::vector<Index> tuple{x, y};
        out += "," + csv_cell(L.label(table.at(tuple)));
      }
      out += "\n";
    }
    return out;
  }
  for (std::size_t i = 1; i <= table.arity(); ++i) {
    out += "x" + std::to_string(i) + ",";
  }
  out += "f\n";
  std::vector<Index> tuple(table.arity());
  for (std::size_t flat = 0; flat < table.tuple_count(); ++flat) {
    table.unflatten(flat, tuple);
    for (Index x : tuple) out += csv_cell(L.label(x)) + ",";
    out += csv_cell(L.label(table.at_flat(flat))) + "\n";
  }
  return out;
}

std::string agg_table_text(const AggTable& table, bool ansi) {
  const FiniteLattice& L = *table.host();
  if (table.arity() == 2) {
    std::vector<std::string> labels;
    for (Index x = 0; x < L.size(); ++x) labels.push_back(L.label(x));
    std::vector<std::vector<std::string>> cells(L.size());
    for (Index x = 0; x < L.size(); ++x) {
      for (Index y = 0; y < L.size(); ++y) {
        std::vector<Index> tuple{x, y};
        cells[x].push_back(L.label(table.at(tuple)));
      }
    }
    return text_matrix("x\\y", labels, labels, cells, ansi);
  }
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;
  std::vector<Index> tuple(table.arity());
  for (std::size_t flat = 0; flat < table.tuple_count(); ++flat) {
    table.unflatten(flat, tuple);
    std::string key = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) key += ",";
      key += L.label(tuple[i]);
    }
    key += ")";
    row_labels.push_back(key);
    cells.push_back({L.label(table.at_flat(flat))});
  }
  return text_matrix("x", row_labels, {"f"}, cells, ansi);
}

std::string lattice_tables_text(const FiniteLattice& lattice, bool ansi) {
  std::vector<std::string> labels;
  for (Index x = 0; x < lattice.size(); ++x) labels.push_back(lattice.label(x));

  std::string out = "elements:";
  for (const std::string& l : labels) out += " " + l;
  out += "\nbottom: " + lattice.label(lattice.bottom());
  out += "\ntop: " + lattice.label(lattice.top());
  out += "\n\njoin\n";
  std::vector<std::vector<std::string>> join_cells(lattice.size());
  std::vector<std::vector<std::string>> meet_cells(lattice.size());
  for (Index x = 0; x < lattice.size(); ++x) {
    for (Index y = 0; y < lattice.size(); ++y) {
      join_cells[x].push_back(lattice.label(lattice.join(x, y)));
      meet_cells[x].push_back(lattice.label(lattice.meet(x, y)));
    }
  }
  out += text_matrix("v", labels, labels, join_cells, ansi);
  out += "\nmeet\n";
  out += text_matrix("^", labels, labels, meet_cells, ansi);
  return out;
}

}  // namespace latgal::render
