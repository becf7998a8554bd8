// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures for the test suites: a corpus of small lattices, random
// generators for systems and maps, and independent brute-force oracles.

#ifndef LATGAL_TESTS_SUPPORT_HPP
#define LATGAL_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "latgal/decomposition.hpp"
#include "latgal/fca.hpp"

namespace latgal::testsupport {

using Rng = std::mt19937_64;

/// Small named lattices (all of size <= 8): chains, cubes, M3, N5, the
/// six-element fixture, a product and two duals.
const std::vector<LatticePtr>& small_corpus();

/// Uniformly random value table (usually not structure-preserving).
LatticeMap random_map(const LatticePtr& domain, const LatticePtr& codomain, Rng& rng);

ClosureSystem random_closure_system(const LatticePtr& lattice, Rng& rng);
InteriorSystem random_interior_system(const LatticePtr& lattice, Rng& rng);

struct SystemTriple {
  ClosureSystem closure;
  InteriorSystem interior;
  SystemIso iso;
};

/// Random (closure system on L, interior system on M, isomorphism) triple;
/// falls back to ({top}, {bottom}) when no isomorphic pair shows up, so it
/// always succeeds.
SystemTriple random_triple(const LatticePtr& domain, const LatticePtr& codomain,
                           Rng& rng);

/// Random join-preserving map, valid by construction.
LatticeMap random_sup_preserving(const LatticePtr& domain, const LatticePtr& codomain,
                                 Rng& rng);

/// Least upper bound computed from the order relation alone (no join table).
std::optional<Index> brute_lub(const FiniteLattice& lattice, Index x, Index y);
std::optional<Index> brute_glb(const FiniteLattice& lattice, Index x, Index y);

/// All maps codomain -> domain satisfying the adjunction with f, found by
/// exhaustive search over every value table. Exponential; keep |cod| tiny.
std::vector<LatticeMap> brute_adjoint_candidates(const LatticeMap& f);

/// Fixed-point scan over every extent vector in L^B.
std::vector<FormalConcept> brute_force_concepts(const ManyValuedContext& ctx,
                                                const ValueMapFamily& fam);

/// Smallest closure system containing the generators, as the intersection of
/// all closure systems that contain them (exponential; |L| <= 16).
std::vector<Index> brute_minimal_closure_members(const LatticePtr& lattice,
                                                 std::span<const Index> generators);
std::vector<Index> brute_minimal_interior_members(const LatticePtr& lattice,
                                                  std::span<const Index> generators);

}  // namespace latgal::testsupport

#endif
