// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>

namespace latgal::testsupport {

const std::vector<LatticePtr>& small_corpus() {
  static const std::vector<LatticePtr> corpus = [] {
    std::vector<LatticePtr> out;
    out.push_back(FiniteLattice::chain(1));
    out.push_back(FiniteLattice::chain(2));
    out.push_back(FiniteLattice::chain(3));
    out.push_back(FiniteLattice::chain(5));
    out.push_back(FiniteLattice::boolean_cube(2));
    out.push_back(FiniteLattice::boolean_cube(3));
    out.push_back(diamond_m3());
    out.push_back(pentagon_n5());
    out.push_back(fixture_l6());
    out.push_back(product({FiniteLattice::chain(3), FiniteLattice::chain(2)}).first);
    out.push_back(dual(pentagon_n5()));
    out.push_back(dual(fixture_l6()));
    return out;
  }();
  return corpus;
}

LatticeMap random_map(const LatticePtr& domain, const LatticePtr& codomain, Rng& rng) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(codomain->size() - 1));
  std::vector<Index> values(domain->size());
  for (Index& v : values) v = pick(rng);
  return LatticeMap(domain, codomain, std::move(values));
}

namespace {

std::vector<Index> random_subset(const LatticePtr& lattice, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(0, lattice->size());
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(lattice->size() - 1));
  std::vector<Index> out;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) out.push_back(pick(rng));
  return out;
}

}  // namespace

ClosureSystem random_closure_system(const LatticePtr& lattice, Rng& rng) {
  return ClosureSystem::generate(lattice, random_subset(lattice, rng));
}

InteriorSystem random_interior_system(const LatticePtr& lattice, Rng& rng) {
  return InteriorSystem::generate(lattice, random_subset(lattice, rng));
}

SystemTriple random_triple(const LatticePtr& domain, const LatticePtr& codomain,
                           Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ClosureSystem closure = random_closure_system(domain, rng);
    InteriorSystem interior = random_interior_system(codomain, rng);
    auto isos = enumerate_isos(closure.poset(), interior.poset());
    if (isos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, isos.size() - 1);
    return SystemTriple{std::move(closure), std::move(interior),
                        isos[pick(rng)]};
  }
  // ({top}, {bottom}) works between any two lattices
  ClosureSystem closure =
      ClosureSystem::validate(domain, {domain->top()});
  InteriorSystem interior =
      InteriorSystem::validate(codomain, {codomain->bottom()});
  SystemIso iso = SystemIso::validated(closure.poset(), interior.poset(),
                                       {codomain->bottom()});
  return SystemTriple{std::move(closure), std::move(interior), std::move(iso)};
}

LatticeMap random_sup_preserving(const LatticePtr& domain, const LatticePtr& codomain,
                                 Rng& rng) {
  SystemTriple triple = random_triple(domain, codomain, rng);
  return from_systems(triple.closure, triple.interior, triple.iso).lower;
}

std::optional<Index> brute_lub(const FiniteLattice& lattice, Index x, Index y) {
  std::vector<Index> uppers;
  for (Index z = 0; z < lattice.size(); ++z) {
    if (lattice.leq(x, z) && lattice.leq(y, z)) uppers.push_back(z);
  }
  for (Index u : uppers) {
    bool least = true;
    for (Index v : uppers) {
      if (!lattice.leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Index> brute_glb(const FiniteLattice& lattice, Index x, Index y) {
  std::vector<Index> lowers;
  for (Index z = 0; z < lattice.size(); ++z) {
    if (lattice.leq(z, x) && lattice.leq(z, y)) lowers.push_back(z);
  }
  for (Index u : lowers) {
    bool greatest = true;
    for (Index v : lowers) {
      if (!lattice.leq(v, u)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

std::vector<LatticeMap> brute_adjoint_candidates(const LatticeMap& f) {
  const FiniteLattice& dom = *f.domain();
  const FiniteLattice& cod = *f.codomain();
  std::vector<LatticeMap> out;
  std::vector<Index> values(cod.size(), 0);
  while (true) {
    bool ok = true;
    for (Index x = 0; x < dom.size() && ok; ++x) {
      for (Index y = 0; y < cod.size() && ok; ++y) {
        if (cod.leq(f(x), y) != dom.leq(x, values[y])) ok = false;
      }
    }
    if (ok) out.emplace_back(f.codomain(), f.domain(), values);
    std::size_t pos = 0;
    while (pos < values.size()) {
      if (++values[pos] < dom.size()) break;
      values[pos] = 0;
      ++pos;
    }
    if (pos == values.size()) break;
  }
  return out;
}

std::vector<FormalConcept> brute_force_concepts(const ManyValuedContext& ctx,
                                                const ValueMapFamily& fam) {
  const FiniteLattice& L = *fam.host();
  const std::size_t nb = ctx.objects.size();
  std::vector<FormalConcept> out;
  LVector extent(nb, 0);
  while (true) {
    LVector intent = derive_intent(ctx, fam, extent);
    if (derive_extent(ctx, fam, intent) == extent) {
      out.push_back(FormalConcept{extent, std::move(intent)});
    }
    std::size_t pos = nb;
    while (pos-- > 0) {
      if (++extent[pos] < L.size()) break;
      extent[pos] = 0;
      if (pos == 0) {
        std::sort(out.begin(), out.end(),
                  [](const FormalConcept& a, const FormalConcept& b) {
                    return a.extent < b.extent;
                  });
        return out;
      }
    }
  }
}

namespace {

template <typename Keep>
std::vector<Index> brute_minimal_members(const LatticePtr& lattice,
                                         std::span<const Index> generators,
                                         Keep keep) {
  const FiniteLattice& L = *lattice;
  const std::size_t n = L.size();
  std::vector<std::uint8_t> intersection(n, 1);
  bool found = false;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    std::vector<Index> members;
    for (Index x = 0; x < n; ++x) {
      if ((subset >> x) & 1u) members.push_back(x);
    }
    bool contains_gens = true;
    for (Index g : generators) {
      if (std::find(members.begin(), members.end(), g) == members.end()) {
        contains_gens = false;
        break;
      }
    }
    if (!contains_gens || !keep(members)) continue;
    found = true;
    std::vector<std::uint8_t> mask(n, 0);
    for (Index m : members) mask[m] = 1;
    for (Index x = 0; x < n; ++x) intersection[x] &= mask[x];
  }
  std::vector<Index> out;
  if (!found) return out;
  for (Index x = 0; x < n; ++x) {
    if (intersection[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Index> brute_minimal_closure_members(const LatticePtr& lattice,
                                                 std::span<const Index> generators) {
  return brute_minimal_members(lattice, generators, [&](const std::vector<Index>& ms) {
    try {
      ClosureSystem::validate(lattice, ms);
      return true;
    } catch (const Error&) {
      return false;
    }
  });
}

std::vector<Index> brute_minimal_interior_members(const LatticePtr& lattice,
                                                  std::span<const Index> generators) {
  return brute_minimal_members(lattice, generators, [&](const std::vector<Index>& ms) {
    try {
      InteriorSystem::validate(lattice, ms);
      return true;
    } catch (const Error&) {
      return false;
    }
  });
}

}  // namespace latgal::testsupport
