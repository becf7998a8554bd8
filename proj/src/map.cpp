// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/map.hpp"

namespace latgal {

LatticeMap::LatticeMap(LatticePtr domain, LatticePtr codomain,
                       std::vector<Index> values)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)) {
  if (values_.size() != domain_->size()) {
    fail(ErrorKind::InvalidArgument, "map table has ", values_.size(),
         " entries for a domain of size ", domain_->size());
  }
  for (Index v : values_) codomain_->check_index(v);
}

LatticeMap LatticeMap::identity(LatticePtr lattice) {
  std::vector<Index> values(lattice->size());
  for (Index x = 0; x < lattice->size(); ++x) values[x] = x;
  LatticePtr codomain = lattice;
  return LatticeMap(std::move(lattice), std::move(codomain), std::move(values));
}

LatticeMap LatticeMap::constant(LatticePtr domain, LatticePtr codomain,
                                Index value) {
  codomain->check_index(value);
  std::vector<Index> values(domain->size(), value);
  return LatticeMap(std::move(domain), std::move(codomain), std::move(values));
}

LatticeMap LatticeMap::from_labels(
    LatticePtr domain, LatticePtr codomain,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Index> values(domain->size(), 0);
  std::vector<std::uint8_t> seen(domain->size(), 0);
  for (const auto& [from, to] : pairs) {
    Index x = domain->index_of(from);
    if (seen[x]) {
      fail(ErrorKind::InvalidArgument, "map assigns element '", from,
           "' more than once");
    }
    seen[x] = 1;
    values[x] = codomain->index_of(to);
  }
  for (Index x = 0; x < domain->size(); ++x) {
    if (!seen[x]) {
      fail(ErrorKind::InvalidArgument, "map is missing a value for element '",
           domain->label(x), "'");
    }
  }
  return LatticeMap(std::move(domain), std::move(codomain), std::move(values));
}

bool LatticeMap::is_monotone() const {
  for (Index x = 0; x < domain_->size(); ++x) {
    for (Index y = 0; y < domain_->size(); ++y) {
      if (domain_->leq(x, y) && !codomain_->leq(values_[x], values_[y])) {
        return false;
      }
    }
  }
  return true;
}

bool LatticeMap::same_mapping(const LatticeMap& other) const {
  return values_ == other.values_ && same_lattice(domain_, other.domain_) &&
         same_lattice(codomain_, other.codomain_);
}

LatticeMap compose_maps(const LatticeMap& first, const LatticeMap& then) {
  if (!same_lattice(first.codomain(), then.domain())) {
    fail(ErrorKind::DomainMismatch,
         "cannot compose: codomain of the first map differs from the domain "
         "of the second");
  }
  std::vector<Index> values(first.domain()->size());
  for (Index x = 0; x < first.domain()->size(); ++x) values[x] = then(first(x));
  return LatticeMap(first.domain(), then.codomain(), std::move(values));
}

}  // namespace latgal
