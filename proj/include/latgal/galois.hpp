// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_GALOIS_HPP
#define LATGAL_GALOIS_HPP

#include <optional>
#include <utility>

#include "latgal/closure.hpp"
#include "latgal/map.hpp"

namespace latgal {

/// True iff f preserves all joins; in a finite lattice this reduces to
/// f(bottom) = bottom and f(x \/ y) = f(x) \/ f(y) for all pairs.
bool is_sup_preserving(const LatticeMap& f);
bool is_inf_preserving(const LatticeMap& f);

/// Witness for a sup-preservation failure: either (x, y) with
/// f(x \/ y) != f(x) \/ f(y), or (bottom, bottom) when f moves the bottom.
std::optional<std::pair<Index, Index>> sup_preserving_witness(const LatticeMap& f);
std::optional<std::pair<Index, Index>> inf_preserving_witness(const LatticeMap& f);

/// The unique g with f(x) <= y iff x <= g(y), computed as
/// g(a) = join of f^-1((a>). Requires is_sup_preserving(f); throws
/// NotSupPreserving with a witness pair otherwise.
LatticeMap upper_adjoint(const LatticeMap& f);

/// Dual: f(x) = meet of g^-1(<x)). Throws NotInfPreserving.
LatticeMap lower_adjoint(const LatticeMap& g);

/// Checks f(x) <= y iff x <= g(y) on all |dom|*|cod| pairs. Throws
/// DomainMismatch when the maps do not have opposite shapes.
bool verify_adjunction(const LatticeMap& f, const LatticeMap& g);
std::optional<std::pair<Index, Index>> adjunction_witness(const LatticeMap& f,
                                                          const LatticeMap& g);

/// True iff f^-1((a>) is a down-set with a greatest element.
bool inverse_ideal_is_principal(const LatticeMap& f, Index a);

/// A monotone Galois connection: lower (join-preserving) together with its
/// upper (meet-preserving) adjoint.
struct GaloisPair {
  LatticeMap lower;
  LatticeMap upper;
};

/// Pairs a sup-preserving map with its computed upper adjoint.
GaloisPair pair_from_lower(const LatticeMap& f);
/// Pairs an inf-preserving map with its computed lower adjoint.
GaloisPair pair_from_upper(const LatticeMap& g);

/// (f2 . f1, g1 . g2); throws DomainMismatch unless p1's lower ends where
/// p2's lower starts.
GaloisPair compose(const GaloisPair& p1, const GaloisPair& p2);

struct RangeSystems {
  InteriorSystem on_codomain;  // Rng(lower)
  ClosureSystem on_domain;     // Rng(upper)
  SystemIso iso;               // lower restricted to Rng(upper)
};

/// The inner description of a pair: Rng(f) is an interior system on the
/// codomain, Rng(g) a closure system on the domain, and f restricted to
/// Rng(g) is an isomorphism between them (inverse: g restricted to Rng(f)).
RangeSystems range_systems(const GaloisPair& pair);

/// Builds the pair f = phi . c_S, g = phi^-1 . i_T from a closure system, an
/// interior system (possibly on another lattice) and an isomorphism between
/// them. Throws NotIso when phi does not match S and T.
GaloisPair from_systems(const ClosureSystem& closure, const InteriorSystem& interior,
                        const SystemIso& phi);

}  // namespace latgal

#endif
