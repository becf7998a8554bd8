// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_MAP_HPP
#define LATGAL_MAP_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latgal/lattice.hpp"

namespace latgal {

/// A total map between two finite lattices, stored as a dense value table
/// indexed by domain element.
class LatticeMap {
 public:
  LatticeMap(LatticePtr domain, LatticePtr codomain, std::vector<Index> values);

  static LatticeMap identity(LatticePtr lattice);
  static LatticeMap constant(LatticePtr domain, LatticePtr codomain, Index value);
  /// Builds from (domain label, codomain label) pairs; the table must be
  /// total and assign each domain element exactly once.
  static LatticeMap from_labels(
      LatticePtr domain, LatticePtr codomain,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  const LatticePtr& domain() const { return domain_; }
  const LatticePtr& codomain() const { return codomain_; }
  std::span<const Index> values() const { return values_; }

  Index operator()(Index x) const {
    domain_->check_index(x);
    return values_[x];
  }

  bool is_monotone() const;
  /// Structural comparison: same domain/codomain lattices and value table.
  bool same_mapping(const LatticeMap& other) const;

 private:
  LatticePtr domain_;
  LatticePtr codomain_;
  std::vector<Index> values_;
};

/// then . first, i.e. x |-> then(first(x)). Throws DomainMismatch.
LatticeMap compose_maps(const LatticeMap& first, const LatticeMap& then);

}  // namespace latgal

#endif
