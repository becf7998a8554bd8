// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/fca.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace latgal {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  out.push_back(cell);
  return out;
}

void check_vector(const LatticePtr& host, const LVector& v, std::size_t expected,
                  const char* side) {
  if (v.size() != expected) {
    fail(ErrorKind::ArityMismatch, side, " vector has ", v.size(),
         " coordinates, expected ", expected);
  }
  for (Index x : v) host->check_index(x);
}

}  // namespace

ManyValuedContext ManyValuedContext::parse_csv(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) fail(ErrorKind::ParseError, "context is empty");

  ManyValuedContext ctx;
  std::vector<std::string> header = split_csv_line(lines[0]);
  if (header.size() < 2) {
    fail(ErrorKind::ParseError, "header row needs at least one attribute");
  }
  if (!header[0].empty()) {
    fail(ErrorKind::ParseError,
         "the first header cell must be blank, found '", header[0], "'");
  }
  ctx.attributes.assign(header.begin() + 1, header.end());
  {
    std::set<std::string> seen;
    for (const std::string& a : ctx.attributes) {
      if (a.empty()) fail(ErrorKind::ParseError, "empty attribute label");
      if (!seen.insert(a).second) {
        fail(ErrorKind::ParseError, "duplicate attribute label '", a, "'");
      }
    }
  }

  std::set<std::string> seen_objects;
  std::vector<std::uint32_t> token_ids;
  std::unordered_map<std::string, std::uint32_t> token_of;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<std::string> row = split_csv_line(lines[r]);
    if (row.size() != ctx.attributes.size() + 1) {
      fail(ErrorKind::ParseError, "row ", r + 1, " has ", row.size(),
           " cells, expected ", ctx.attributes.size() + 1);
    }
    if (row[0].empty()) fail(ErrorKind::ParseError, "row ", r + 1, " has no object label");
    if (!seen_objects.insert(row[0]).second) {
      fail(ErrorKind::ParseError, "duplicate object label '", row[0], "'");
    }
    ctx.objects.push_back(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c].empty()) {
        fail(ErrorKind::MissingCell, "cell (", row[0], ", ",
             ctx.attributes[c - 1], ") is empty");
      }
      auto [it, inserted] =
          token_of.emplace(row[c], static_cast<std::uint32_t>(ctx.alphabet.size()));
      if (inserted) ctx.alphabet.push_back(row[c]);
      ctx.cells.push_back(it->second);
    }
  }
  if (ctx.objects.empty()) fail(ErrorKind::ParseError, "context has no object rows");
  return ctx;
}

ManyValuedContext ManyValuedContext::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open '", path, "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

bool ManyValuedContext::is_binary() const {
  for (const std::string& token : alphabet) {
    if (token != "0" && token != "1") return false;
  }
  return true;
}

ValueMapFamily ValueMapFamily::from_maps(
    LatticePtr host, std::vector<std::pair<std::string, LatticeMap>> entries) {
  std::vector<std::string> tokens;
  std::vector<LatticeMap> maps;
  std::vector<LatticeMap> adjoints;
  std::set<std::string> seen;
  for (auto& [token, map] : entries) {
    if (!seen.insert(token).second) {
      fail(ErrorKind::InvalidArgument, "token '", token, "' is mapped twice");
    }
    if (!same_lattice(map.domain(), host) || !same_lattice(map.codomain(), host)) {
      fail(ErrorKind::HostMismatch, "map for token '", token,
           "' is not a self-map of the family's lattice");
    }
    if (auto w = sup_preserving_witness(map)) {
      fail(ErrorKind::NotSupPreserving, "map for token '", token,
           "' is not join-preserving at the pair (", host->label(w->first),
           ", ", host->label(w->second), ")");
    }
    adjoints.push_back(upper_adjoint(map));
    tokens.push_back(token);
    maps.push_back(std::move(map));
  }
  return ValueMapFamily(std::move(host), std::move(tokens), std::move(maps),
                        std::move(adjoints));
}

ValueMapFamily ValueMapFamily::godel_chain(std::size_t k) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "chain family needs k >= 2");
  LatticePtr host = FiniteLattice::chain(k);
  std::vector<std::pair<std::string, LatticeMap>> entries;
  entries.reserve(k);
  for (Index a = 0; a < k; ++a) {
    std::vector<Index> values(k);
    for (Index x = 0; x < k; ++x) values[x] = std::min(x, a);
    entries.emplace_back(host->label(a), LatticeMap(host, host, std::move(values)));
  }
  return from_maps(std::move(host), std::move(entries));
}

std::size_t ValueMapFamily::slot_for(std::string_view token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i] == token) return i;
  }
  fail(ErrorKind::UnmappedToken, "token '", std::string(token),
       "' has no assigned map");
}

bool ValueMapFamily::has_token(std::string_view token) const {
  for (const std::string& t : tokens_) {
    if (t == token) return true;
  }
  return false;
}

const LatticeMap& ValueMapFamily::map_for(std::string_view token) const {
  return maps_[slot_for(token)];
}

const LatticeMap& ValueMapFamily::adjoint_for(std::string_view token) const {
  return adjoints_[slot_for(token)];
}

LVector derive_intent(const ManyValuedContext& ctx, const ValueMapFamily& fam,
                      const LVector& extent) {
  const FiniteLattice& L = *fam.host();
  check_vector(fam.host(), extent, ctx.objects.size(), "extent");
  LVector intent(ctx.attributes.size(), L.bottom());
  for (std::size_t a = 0; a < ctx.attributes.size(); ++a) {
    Index acc = L.bottom();
    for (std::size_t b = 0; b < ctx.objects.size(); ++b) {
      const LatticeMap& f = fam.map_for(ctx.token_label(ctx.token_at(b, a)));
      acc = L.join(acc, f(extent[b]));
    }
    intent[a] = acc;
  }
  return intent;
}

LVector derive_extent(const ManyValuedContext& ctx, const ValueMapFamily& fam,
                      const LVector& intent) {
  const FiniteLattice& L = *fam.host();
  check_vector(fam.host(), intent, ctx.attributes.size(), "intent");
  LVector extent(ctx.objects.size(), L.top());
  for (std::size_t b = 0; b < ctx.objects.size(); ++b) {
    Index acc = L.top();
    for (std::size_t a = 0; a < ctx.attributes.size(); ++a) {
      const LatticeMap& g = fam.adjoint_for(ctx.token_label(ctx.token_at(b, a)));
      acc = L.meet(acc, g(intent[a]));
    }
    extent[b] = acc;
  }
  return extent;
}

std::vector<FormalConcept> enumerate_concepts(const ManyValuedContext& ctx,
                                              const ValueMapFamily& fam,
                                              std::size_t max_concepts) {
  const FiniteLattice& L = *fam.host();
  const std::size_t nb = ctx.objects.size();
  const std::size_t na = ctx.attributes.size();

  // Every intent vector is a meet of single-coordinate modifications of the
  // top vector; since derive_extent preserves meets, closing the generators
  // below under componentwise meets yields exactly the extents.
  std::set<LVector> extents;
  LVector top_intent(na, L.top());
  for (std::size_t a = 0; a < na; ++a) {
    LVector intent = top_intent;
    for (Index v = 0; v < L.size(); ++v) {
      intent[a] = v;
      extents.insert(derive_extent(ctx, fam, intent));
      if (extents.size() > max_concepts) {
        fail(ErrorKind::SizeLimit, "concept count exceeds the limit of ",
             max_concepts);
      }
    }
  }

  std::vector<LVector> members(extents.begin(), extents.end());
  LVector meet(nb);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t b = 0; b < nb; ++b) {
        meet[b] = L.meet(members[i][b], members[j][b]);
      }
      if (extents.insert(meet).second) {
        members.push_back(meet);
        if (extents.size() > max_concepts) {
          fail(ErrorKind::SizeLimit, "concept count exceeds the limit of ",
               max_concepts);
        }
      }
    }
  }

  std::vector<FormalConcept> out;
  out.reserve(extents.size());
  for (const LVector& extent : extents) {
    out.push_back(FormalConcept{extent, derive_intent(ctx, fam, extent)});
  }
  return out;
}

namespace {

bool vector_leq(const FiniteLattice& L, const LVector& a, const LVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!L.leq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

ConceptLattice ConceptLattice::build(LatticePtr host,
                                     std::vector<FormalConcept> concepts) {
  if (concepts.empty()) {
    fail(ErrorKind::NotComplete, "concept list is empty");
  }
  const FiniteLattice& L = *host;
  std::sort(concepts.begin(), concepts.end(),
            [](const FormalConcept& a, const FormalConcept& b) {
              return a.extent < b.extent;
            });
  for (std::size_t i = 1; i < concepts.size(); ++i) {
    if (concepts[i].extent == concepts[i - 1].extent) {
      fail(ErrorKind::NotComplete, "duplicate extent in the concept list");
    }
  }

  std::set<LVector> extents;
  for (const FormalConcept& c : concepts) extents.insert(c.extent);
  LVector meet(concepts.front().extent.size());
  for (const FormalConcept& a : concepts) {
    for (const FormalConcept& b : concepts) {
      for (std::size_t i = 0; i < meet.size(); ++i) {
        meet[i] = L.meet(a.extent[i], b.extent[i]);
      }
      if (!extents.count(meet)) {
        fail(ErrorKind::NotComplete,
             "extents are not meet-closed: the list is not a complete "
             "concept set");
      }
    }
  }
  bool has_greatest = false;
  for (const FormalConcept& a : concepts) {
    bool above_all = true;
    for (const FormalConcept& b : concepts) {
      if (!vector_leq(L, b.extent, a.extent)) {
        above_all = false;
        break;
      }
    }
    if (above_all) {
      has_greatest = true;
      break;
    }
  }
  if (!has_greatest) {
    fail(ErrorKind::NotComplete, "concept list has no greatest extent");
  }
  for (const FormalConcept& a : concepts) {
    for (const FormalConcept& b : concepts) {
      if (vector_leq(L, a.extent, b.extent) != vector_leq(L, a.intent, b.intent)) {
        fail(ErrorKind::NotComplete,
             "extent order and intent order disagree; the list is not a "
             "consistent concept set");
      }
    }
  }
  return ConceptLattice(std::move(host), std::move(concepts));
}

bool ConceptLattice::leq(std::size_t i, std::size_t j) const {
  return vector_leq(*host_, concepts_[i].extent, concepts_[j].extent);
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = concepts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      }
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

LatticePtr ConceptLattice::as_lattice() const {
  const std::size_t n = concepts_.size();
  std::vector<std::string> labels(n);
  std::vector<std::uint8_t> order(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = concat("c", i);
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = leq(i, j);
  }
  return FiniteLattice::from_order(std::move(labels), order);
}

std::vector<CrispConcept> crisp_concepts(const ManyValuedContext& ctx) {
  if (!ctx.is_binary()) {
    fail(ErrorKind::NotBinary, "crisp concepts require tokens 0 and 1 only");
  }
  const std::size_t na = ctx.attributes.size();
  const std::size_t nb = ctx.objects.size();
  if (na > 20) {
    fail(ErrorKind::SizeLimit, "crisp reference enumeration handles at most "
         "20 attributes, got ", na);
  }
  auto has = [&](std::size_t b, std::size_t a) {
    return ctx.alphabet[ctx.token_at(b, a)] == "1";
  };

  std::set<std::vector<std::size_t>> seen;
  std::vector<CrispConcept> out;
  for (std::uint32_t subset = 0; subset < (1u << na); ++subset) {
    std::vector<std::size_t> extent;
    for (std::size_t b = 0; b < nb; ++b) {
      bool all = true;
      for (std::size_t a = 0; a < na && all; ++a) {
        if ((subset >> a) & 1u) {
          if (!has(b, a)) all = false;
        }
      }
      if (all) extent.push_back(b);
    }
    if (!seen.insert(extent).second) continue;
    std::vector<std::size_t> intent;
    for (std::size_t a = 0; a < na; ++a) {
      bool all = true;
      for (std::size_t b : extent) {
        if (!has(b, a)) {
          all = false;
          break;
        }
      }
      if (all) intent.push_back(a);
    }
    out.push_back(CrispConcept{std::move(extent), std::move(intent)});
  }
  std::sort(out.begin(), out.end(), [](const CrispConcept& a, const CrispConcept& b) {
    return a.extent < b.extent;
  });
  return out;
}

bool top_concept_check(const ManyValuedContext& ctx, const ValueMapFamily& fam) {
  const FiniteLattice& L = *fam.host();
  LVector top_extent(ctx.objects.size(), L.top());
  LVector top_intent(ctx.attributes.size(), L.top());
  return derive_intent(ctx, fam, top_extent) == top_intent &&
         derive_extent(ctx, fam, top_intent) == top_extent;
}

Index ColumnAggregation::evaluate(std::span<const Index> extent) const {
  if (extent.size() != components.size()) {
    fail(ErrorKind::ArityMismatch, "extent vector has ", extent.size(),
         " coordinates, expected ", components.size());
  }
  const FiniteLattice& L = *host;
  Index acc = L.bottom();
  for (std::size_t b = 0; b < components.size(); ++b) {
    acc = L.join(acc, components[b](extent[b]));
  }
  return acc;
}

std::vector<ColumnAggregation> column_aggregations(const ManyValuedContext& ctx,
                                                   const ValueMapFamily& fam) {
  const FiniteLattice& L = *fam.host();
  std::vector<ColumnAggregation> out;
  out.reserve(ctx.attributes.size());
  for (std::size_t a = 0; a < ctx.attributes.size(); ++a) {
    ColumnAggregation col;
    col.attribute = ctx.attributes[a];
    col.host = fam.host();
    Index tops = L.bottom();
    for (std::size_t b = 0; b < ctx.objects.size(); ++b) {
      const LatticeMap& f = fam.map_for(ctx.token_label(ctx.token_at(b, a)));
      col.components.push_back(f);
      tops = L.join(tops, f(L.top()));
    }
    col.boundary_ok = tops == L.top();
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace latgal
