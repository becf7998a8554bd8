// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/galois.hpp"

#include <algorithm>

namespace latgal {

std::optional<std::pair<Index, Index>> sup_preserving_witness(const LatticeMap& f) {
  const FiniteLattice& L = *f.domain();
  const FiniteLattice& M = *f.codomain();
  if (f(L.bottom()) != M.bottom()) {
    return std::pair<Index, Index>{L.bottom(), L.bottom()};
  }
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = x + 1; y < L.size(); ++y) {
      if (f(L.join(x, y)) != M.join(f(x), f(y))) {
        return std::pair<Index, Index>{x, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Index, Index>> inf_preserving_witness(const LatticeMap& f) {
  const FiniteLattice& L = *f.domain();
  const FiniteLattice& M = *f.codomain();
  if (f(L.top()) != M.top()) {
    return std::pair<Index, Index>{L.top(), L.top()};
  }
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = x + 1; y < L.size(); ++y) {
      if (f(L.meet(x, y)) != M.meet(f(x), f(y))) {
        return std::pair<Index, Index>{x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_sup_preserving(const LatticeMap& f) {
  return !sup_preserving_witness(f).has_value();
}

bool is_inf_preserving(const LatticeMap& f) {
  return !inf_preserving_witness(f).has_value();
}

LatticeMap upper_adjoint(const LatticeMap& f) {
  if (auto w = sup_preserving_witness(f)) {
    fail(ErrorKind::NotSupPreserving, "map is not join-preserving at the pair (",
         f.domain()->label(w->first), ", ", f.domain()->label(w->second), ")");
  }
  const FiniteLattice& L = *f.domain();
  const FiniteLattice& M = *f.codomain();
  std::vector<Index> values(M.size());
  for (Index a = 0; a < M.size(); ++a) {
    Index acc = L.bottom();
    for (Index x = 0; x < L.size(); ++x) {
      if (M.leq(f(x), a)) acc = L.join(acc, x);
    }
    values[a] = acc;
  }
  return LatticeMap(f.codomain(), f.domain(), std::move(values));
}

LatticeMap lower_adjoint(const LatticeMap& g) {
  if (auto w = inf_preserving_witness(g)) {
    fail(ErrorKind::NotInfPreserving, "map is not meet-preserving at the pair (",
         g.domain()->label(w->first), ", ", g.domain()->label(w->second), ")");
  }
  const FiniteLattice& M = *g.domain();
  const FiniteLattice& L = *g.codomain();
  std::vector<Index> values(L.size());
  for (Index x = 0; x < L.size(); ++x) {
    Index acc = M.top();
    for (Index y = 0; y < M.size(); ++y) {
      if (L.leq(x, g(y))) acc = M.meet(acc, y);
    }
    values[x] = acc;
  }
  return LatticeMap(g.codomain(), g.domain(), std::move(values));
}

std::optional<std::pair<Index, Index>> adjunction_witness(const LatticeMap& f,
                                                          const LatticeMap& g) {
  if (!same_lattice(f.domain(), g.codomain()) ||
      !same_lattice(f.codomain(), g.domain())) {
    fail(ErrorKind::DomainMismatch,
         "adjunction check requires maps of opposite shapes");
  }
  const FiniteLattice& L = *f.domain();
  const FiniteLattice& M = *f.codomain();
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < M.size(); ++y) {
      if (M.leq(f(x), y) != L.leq(x, g(y))) {
        return std::pair<Index, Index>{x, y};
      }
    }
  }
  return std::nullopt;
}

bool verify_adjunction(const LatticeMap& f, const LatticeMap& g) {
  return !adjunction_witness(f, g).has_value();
}

bool inverse_ideal_is_principal(const LatticeMap& f, Index a) {
  const FiniteLattice& L = *f.domain();
  const FiniteLattice& M = *f.codomain();
  M.check_index(a);
  std::vector<Index> preimage;
  for (Index x = 0; x < L.size(); ++x) {
    if (M.leq(f(x), a)) preimage.push_back(x);
  }
  if (!L.is_down_set(preimage)) return false;
  for (Index c : preimage) {
    bool greatest = true;
    for (Index other : preimage) {
      if (!L.leq(other, c)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return true;
  }
  return false;
}

GaloisPair pair_from_lower(const LatticeMap& f) {
  return GaloisPair{f, upper_adjoint(f)};
}

GaloisPair pair_from_upper(const LatticeMap& g) {
  return GaloisPair{lower_adjoint(g), g};
}

GaloisPair compose(const GaloisPair& p1, const GaloisPair& p2) {
  return GaloisPair{compose_maps(p1.lower, p2.lower),
                    compose_maps(p2.upper, p1.upper)};
}

RangeSystems range_systems(const GaloisPair& pair) {
  const LatticeMap& f = pair.lower;
  const LatticeMap& g = pair.upper;
  std::vector<Index> rng_f(f.values().begin(), f.values().end());
  std::vector<Index> rng_g(g.values().begin(), g.values().end());
  InteriorSystem interior = InteriorSystem::validate(f.codomain(), std::move(rng_f));
  ClosureSystem closure = ClosureSystem::validate(f.domain(), std::move(rng_g));
  std::vector<Index> mapping;
  mapping.reserve(closure.members().size());
  for (Index s : closure.members()) mapping.push_back(f(s));
  SystemIso iso =
      SystemIso::validated(closure.poset(), interior.poset(), std::move(mapping));
  return RangeSystems{std::move(interior), std::move(closure), std::move(iso)};
}

GaloisPair from_systems(const ClosureSystem& closure, const InteriorSystem& interior,
                        const SystemIso& phi) {
  if (!phi.source().same_subposet(closure.poset())) {
    fail(ErrorKind::NotIso, "isomorphism source does not match the closure system");
  }
  if (!phi.target().same_subposet(interior.poset())) {
    fail(ErrorKind::NotIso, "isomorphism target does not match the interior system");
  }
  const FiniteLattice& L = *closure.host();
  const FiniteLattice& M = *interior.host();
  std::vector<Index> lower(L.size());
  for (Index x = 0; x < L.size(); ++x) lower[x] = phi.apply(closure.closure_of(x));
  std::vector<Index> upper(M.size());
  for (Index y = 0; y < M.size(); ++y) {
    upper[y] = phi.apply_inverse(interior.interior_of(y));
  }
  return GaloisPair{LatticeMap(closure.host(), interior.host(), std::move(lower)),
                    LatticeMap(interior.host(), closure.host(), std::move(upper))};
}

}  // namespace latgal
