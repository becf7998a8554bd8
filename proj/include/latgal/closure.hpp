// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_CLOSURE_HPP
#define LATGAL_CLOSURE_HPP

#include <span>
#include <string>
#include <vector>

#include "latgal/lattice.hpp"
#include "latgal/map.hpp"

namespace latgal {

/// A subset of a lattice together with the order it inherits from the host.
/// Members are kept sorted by element index and deduplicated.
class SubPoset {
 public:
  SubPoset(LatticePtr host, std::vector<Index> members);

  const LatticePtr& host() const { return host_; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const;

  /// Position of a host element within members(); throws if not a member.
  std::size_t position_of(Index x) const;

  /// Least/greatest member under the host order; throws InvalidArgument when
  /// the subset has no such member.
  Index least() const;
  Index greatest() const;

  bool same_subposet(const SubPoset& other) const;

 private:
  LatticePtr host_;
  std::vector<Index> members_;
  std::vector<std::uint8_t> mask_;
};

/// Subset closed under all meets; contains the host top (the empty meet).
class ClosureSystem {
 public:
  /// Validates closedness under binary meets and top membership, which in a
  /// finite lattice is equivalent to closure under arbitrary meets.
  /// Throws NotClosed with a witness pair, or MissingBound.
  static ClosureSystem validate(LatticePtr host, std::vector<Index> members);
  static ClosureSystem validate_labels(LatticePtr host,
                                       const std::vector<std::string>& labels);
  /// Smallest closure system containing the generators.
  static ClosureSystem generate(LatticePtr host, std::span<const Index> generators);

  const SubPoset& poset() const { return poset_; }
  const LatticePtr& host() const { return poset_.host(); }
  const std::vector<Index>& members() const { return poset_.members(); }

  /// Least member above x.
  Index closure_of(Index x) const;
  /// The induced closure operator as a dense self-map of the host.
  LatticeMap to_operator() const;

  Index least() const { return poset_.least(); }
  Index greatest() const { return poset_.greatest(); }

 private:
  explicit ClosureSystem(SubPoset poset) : poset_(std::move(poset)) {}
  SubPoset poset_;
};

/// Subset closed under all joins; contains the host bottom (the empty join).
class InteriorSystem {
 public:
  static InteriorSystem validate(LatticePtr host, std::vector<Index> members);
  static InteriorSystem validate_labels(LatticePtr host,
                                        const std::vector<std::string>& labels);
  /// Smallest interior system containing the generators.
  static InteriorSystem generate(LatticePtr host, std::span<const Index> generators);

  const SubPoset& poset() const { return poset_; }
  const LatticePtr& host() const { return poset_.host(); }
  const std::vector<Index>& members() const { return poset_.members(); }

  /// Greatest member below x.
  Index interior_of(Index x) const;
  LatticeMap to_operator() const;

  Index least() const { return poset_.least(); }
  /// The greatest member, i.e. the join of the whole system.
  Index greatest() const { return poset_.greatest(); }

 private:
  explicit InteriorSystem(SubPoset poset) : poset_(std::move(poset)) {}
  SubPoset poset_;
};

inline ClosureSystem meet_closure(LatticePtr host, std::span<const Index> generators) {
  return ClosureSystem::generate(std::move(host), generators);
}
inline InteriorSystem join_closure(LatticePtr host, std::span<const Index> generators) {
  return InteriorSystem::generate(std::move(host), generators);
}

/// Fixed points of a validated closure operator (monotone, extensive,
/// idempotent; checked exhaustively). Throws NotClosureOperator naming the
/// violated law and a witness.
ClosureSystem system_of_operator(const LatticeMap& op);
/// Dual construction for interior operators (monotone, intensive, idempotent).
InteriorSystem system_of_interior_operator(const LatticeMap& op);

/// An order isomorphism between two sub-posets, possibly on different host
/// lattices. Maps least to least and greatest to greatest by construction.
class SystemIso {
 public:
  /// Checks bijectivity and that the mapping preserves and reflects order.
  /// Throws NotIso.
  static SystemIso validated(SubPoset source, SubPoset target,
                             std::vector<Index> mapping);

  const SubPoset& source() const { return source_; }
  const SubPoset& target() const { return target_; }
  /// Image of a source member (a host element index); throws on non-members.
  Index apply(Index x) const;
  Index apply_inverse(Index y) const;
  SystemIso inverse() const;

  /// Mapping aligned with source().members().
  const std::vector<Index>& mapping() const { return mapping_; }
  bool same_iso(const SystemIso& other) const;

 private:
  SystemIso(SubPoset source, SubPoset target, std::vector<Index> mapping,
            std::vector<Index> inverse)
      : source_(std::move(source)),
        target_(std::move(target)),
        mapping_(std::move(mapping)),
        inverse_(std::move(inverse)) {}

  SubPoset source_;
  SubPoset target_;
  std::vector<Index> mapping_;   // position in source members -> target element
  std::vector<Index> inverse_;   // position in target members -> source element
};

/// All order isomorphisms between two sub-posets, in a deterministic order
/// (backtracking with target candidates tried by ascending element index).
/// Empty when the posets are not isomorphic.
std::vector<SystemIso> enumerate_isos(const SubPoset& a, const SubPoset& b);

/// Revalidates a SystemIso; false with no throw if it is not an isomorphism.
bool check_iso(const SystemIso& iso);

}  // namespace latgal

#endif
