// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_FCA_HPP
#define LATGAL_FCA_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latgal/galois.hpp"

namespace latgal {

inline constexpr std::size_t kDefaultMaxConcepts = 100'000;

/// An object x attribute table whose cells take values in a token alphabet.
/// The alphabet is inferred in first-appearance order unless supplied.
struct ManyValuedContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::string> alphabet;
  std::vector<std::uint32_t> cells;  // row-major objects x attributes, token ids

  /// CSV layout: first row is a blank cell followed by attribute labels;
  /// every other row is an object label followed by its cell tokens.
  /// Throws ParseError (ragged rows, duplicate labels, empty input) and
  /// MissingCell (empty token).
  static ManyValuedContext parse_csv(std::string_view text);
  static ManyValuedContext load(const std::string& path);  // + IoError

  std::uint32_t token_at(std::size_t object, std::size_t attribute) const {
    return cells[object * attributes.size() + attribute];
  }
  const std::string& token_label(std::uint32_t token) const {
    return alphabet[token];
  }
  bool is_binary() const;
};

/// Assignment of a join-preserving self-map of the host lattice to every
/// token, with the upper adjoints cached.
class ValueMapFamily {
 public:
  /// Validates each map as join-preserving (NotSupPreserving) and a self-map
  /// of the host (HostMismatch).
  static ValueMapFamily from_maps(LatticePtr host,
                                  std::vector<std::pair<std::string, LatticeMap>> entries);

  /// The Goedel family on the k-element chain: token "a" acts by
  /// x |-> min(x, a), whose adjoint is y |-> (a <= y ? top : y).
  static ValueMapFamily godel_chain(std::size_t k);

  const LatticePtr& host() const { return host_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  bool has_token(std::string_view token) const;
  /// Throws UnmappedToken.
  const LatticeMap& map_for(std::string_view token) const;
  const LatticeMap& adjoint_for(std::string_view token) const;

 private:
  ValueMapFamily(LatticePtr host, std::vector<std::string> tokens,
                 std::vector<LatticeMap> maps, std::vector<LatticeMap> adjoints)
      : host_(std::move(host)),
        tokens_(std::move(tokens)),
        maps_(std::move(maps)),
        adjoints_(std::move(adjoints)) {}

  std::size_t slot_for(std::string_view token) const;

  LatticePtr host_;
  std::vector<std::string> tokens_;
  std::vector<LatticeMap> maps_;
  std::vector<LatticeMap> adjoints_;
};

inline ValueMapFamily residuated_chain_family(std::size_t k) {
  return ValueMapFamily::godel_chain(k);
}

/// A lattice-valued vector over the objects (extent side) or the attributes
/// (intent side).
using LVector = std::vector<Index>;

/// intent(a) = \/_b f_{R(b,a)}(extent(b)). Throws UnmappedToken when the
/// table uses a token the family does not assign.
LVector derive_intent(const ManyValuedContext& ctx, const ValueMapFamily& fam,
                      const LVector& extent);
/// extent(b) = /\_a g_{R(b,a)}(intent(a)).
LVector derive_extent(const ManyValuedContext& ctx, const ValueMapFamily& fam,
                      const LVector& intent);

struct FormalConcept {
  LVector extent;
  LVector intent;
  bool operator==(const FormalConcept&) const = default;
};

/// All fixed points of the operator pair, enumerated as the meet-closure of
/// the |A|*|L| generators derive_extent(top-with-one-modified-coordinate).
/// Sorted lexicographically by extent. Throws SizeLimit past max_concepts.
std::vector<FormalConcept> enumerate_concepts(
    const ManyValuedContext& ctx, const ValueMapFamily& fam,
    std::size_t max_concepts = kDefaultMaxConcepts);

/// The concepts ordered by componentwise extent comparison (equivalently by
/// intent comparison).
class ConceptLattice {
 public:
  /// Requires a complete concept list: extents meet-closed with a greatest
  /// element, and extent/intent orders in agreement. Throws NotComplete.
  static ConceptLattice build(LatticePtr host, std::vector<FormalConcept> concepts);

  const LatticePtr& host() const { return host_; }
  const std::vector<FormalConcept>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }

  bool leq(std::size_t i, std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  /// Materializes the order as a standalone lattice with labels "c0","c1",...
  LatticePtr as_lattice() const;

 private:
  ConceptLattice(LatticePtr host, std::vector<FormalConcept> concepts)
      : host_(std::move(host)), concepts_(std::move(concepts)) {}
  LatticePtr host_;
  std::vector<FormalConcept> concepts_;
};

/// A classical antitone concept: object set and attribute set index lists.
struct CrispConcept {
  std::vector<std::size_t> extent;
  std::vector<std::size_t> intent;
  bool operator==(const CrispConcept&) const = default;
};

/// Reference antitone enumeration over a binary context by closing every
/// attribute subset; requires tokens within {0,1} (NotBinary) and at most
/// 20 attributes (SizeLimit).
std::vector<CrispConcept> crisp_concepts(const ManyValuedContext& ctx);

/// True iff the all-top vectors form a concept: F(top) = top and
/// G(top) = top.
bool top_concept_check(const ManyValuedContext& ctx, const ValueMapFamily& fam);

/// The |B|-ary map x |-> F(x)(a) for one attribute, with its boundary
/// status: it is an aggregation function iff \/_b f_{R(b,a)}(top) = top.
struct ColumnAggregation {
  std::string attribute;
  LatticePtr host;
  std::vector<LatticeMap> components;  // one per object
  bool boundary_ok;

  Index evaluate(std::span<const Index> extent) const;
};

std::vector<ColumnAggregation> column_aggregations(const ManyValuedContext& ctx,
                                                   const ValueMapFamily& fam);

}  // namespace latgal

#endif
