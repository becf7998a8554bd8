// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_AGGREGATION_HPP
#define LATGAL_AGGREGATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "latgal/galois.hpp"

namespace latgal {

/// One argument slot of a sup-preserving aggregation: a closure system, an
/// interior system and an isomorphism between them, all on the host lattice.
struct AggSlot {
  ClosureSystem closure;
  InteriorSystem interior;
  SystemIso iso;  // closure -> interior
};

struct SupAggSpec {
  LatticePtr host;
  std::vector<AggSlot> slots;
  std::size_t arity() const { return slots.size(); }
};

/// Value table of an n-ary function on a lattice, flat in row-major order
/// with the first coordinate most significant.
class AggTable {
 public:
  AggTable(LatticePtr host, std::size_t arity, std::vector<Index> values);

  const LatticePtr& host() const { return host_; }
  std::size_t arity() const { return arity_; }
  std::size_t tuple_count() const { return values_.size(); }
  std::span<const Index> values() const { return values_; }

  Index at_flat(std::size_t flat) const { return values_[flat]; }
  Index at(std::span<const Index> tuple) const { return values_[flatten(tuple)]; }

  std::size_t flatten(std::span<const Index> tuple) const;
  void unflatten(std::size_t flat, std::span<Index> out) const;

 private:
  LatticePtr host_;
  std::size_t arity_;
  std::vector<Index> values_;
};

/// An n-ary join-preserving aggregation function built from n slot triples:
/// f(x) = \/_i phi_i(c_{S_i}(x(i))).
class SupAggregation {
 public:
  /// Validates every slot (host match, isomorphism) and the boundary
  /// condition \/_i top(T_i) = top. Throws HostMismatch, NotIso,
  /// BoundaryViolation (reporting the actual join).
  static SupAggregation build(SupAggSpec spec);

  const SupAggSpec& spec() const { return spec_; }
  const LatticePtr& host() const { return spec_.host; }
  std::size_t arity() const { return spec_.arity(); }
  /// The unary components phi_i . c_{S_i}.
  const std::vector<LatticeMap>& components() const { return components_; }

  /// Throws ArityMismatch when the tuple length is wrong.
  Index evaluate(std::span<const Index> tuple) const;

  /// Materializes the full value table; throws SizeLimit when |L|^n exceeds
  /// max_cells.
  AggTable full_table(std::size_t max_cells = kDefaultMaxElements) const;

 private:
  SupAggregation(SupAggSpec spec, std::vector<LatticeMap> components)
      : spec_(std::move(spec)), components_(std::move(components)) {}
  SupAggSpec spec_;
  std::vector<LatticeMap> components_;
};

/// Witness that a table is not join-preserving as a map L^n -> L: a pair of
/// flat tuple indices (s, t) with f(s \/ t) != f(s) \/ f(t).
std::optional<std::pair<std::size_t, std::size_t>> nary_sup_witness(
    const AggTable& table);
bool is_nary_sup_preserving(const AggTable& table);

/// Monotone in every coordinate, f(0,..,0) = 0 and f(1,..,1) = 1.
bool is_aggregation(const AggTable& table);

/// Splits a join-preserving table into its unary components
/// f_i(x) = f(0,..,x,..,0); recomposition as a coordinatewise join
/// reproduces the table exactly. Throws NotSupPreserving with a witness.
std::vector<LatticeMap> decompose(const AggTable& table);

/// One argument slot of the dual, meet-preserving form.
struct InfAggSlot {
  InteriorSystem interior;
  ClosureSystem closure;
  SystemIso iso;  // interior -> closure
};

struct InfAggSpec {
  LatticePtr host;
  std::vector<InfAggSlot> slots;
  std::size_t arity() const { return slots.size(); }
};

/// Meet-preserving aggregation, implemented entirely by delegating to a
/// SupAggregation on the dual lattice (element indices are shared between a
/// lattice and its dual, so values pass through unchanged).
class InfAggregation {
 public:
  /// Boundary condition: /\_i least(S_i) = bottom. Throws BoundaryViolation.
  static InfAggregation build(InfAggSpec spec);

  const LatticePtr& host() const { return host_; }
  std::size_t arity() const { return dual_.arity(); }
  const SupAggregation& dual_form() const { return dual_; }
  /// Components as meet-preserving self-maps of the original host.
  std::vector<LatticeMap> components() const;

  Index evaluate(std::span<const Index> tuple) const { return dual_.evaluate(tuple); }
  AggTable full_table(std::size_t max_cells = kDefaultMaxElements) const;

 private:
  InfAggregation(LatticePtr host, SupAggregation dual)
      : host_(std::move(host)), dual_(std::move(dual)) {}
  LatticePtr host_;
  SupAggregation dual_;
};

bool is_nary_inf_preserving(const AggTable& table);
/// Dual of decompose: components f_i(x) = f(1,..,x,..,1), each meet-
/// preserving, recomposed by coordinatewise meets. Throws NotInfPreserving.
std::vector<LatticeMap> decompose_inf(const AggTable& table);

}  // namespace latgal

#endif
