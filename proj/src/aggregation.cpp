// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/aggregation.hpp"

#include <algorithm>

namespace latgal {
namespace {

// Pairwise scans above this tuple count switch to the component-path check,
// which characterizes the same property in linear time.
constexpr std::size_t kPairwiseTupleLimit = 10'000;

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base == 0 || out > limit / base) {
      fail(ErrorKind::SizeLimit, "value table would exceed the limit of ", limit,
           " entries");
    }
    out *= base;
  }
  return out;
}

std::string tuple_to_string(const AggTable& table, std::size_t flat) {
  std::vector<Index> tuple(table.arity());
  table.unflatten(flat, tuple);
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += table.host()->label(tuple[i]);
  }
  out += ")";
  return out;
}

// Joins two tuples coordinatewise, in flat encoding.
std::size_t flat_join(const AggTable& table, std::size_t s, std::size_t t) {
  const FiniteLattice& L = *table.host();
  std::vector<Index> a(table.arity()), b(table.arity());
  table.unflatten(s, a);
  table.unflatten(t, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = L.join(a[i], b[i]);
  return table.flatten(a);
}

// Flat index of the tuple that is x at slot i and bottom elsewhere.
std::size_t one_hot_flat(const AggTable& table, std::size_t slot, Index x) {
  const FiniteLattice& L = *table.host();
  std::vector<Index> tuple(table.arity(), L.bottom());
  tuple[slot] = x;
  return table.flatten(tuple);
}

}  // namespace

AggTable::AggTable(LatticePtr host, std::size_t arity, std::vector<Index> values)
    : host_(std::move(host)), arity_(arity), values_(std::move(values)) {
  if (arity_ == 0) fail(ErrorKind::InvalidArgument, "arity must be at least 1");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity_; ++i) expected *= host_->size();
  if (values_.size() != expected) {
    fail(ErrorKind::InvalidArgument, "table has ", values_.size(),
         " entries, expected ", expected);
  }
  for (Index v : values_) host_->check_index(v);
}

std::size_t AggTable::flatten(std::span<const Index> tuple) const {
  if (tuple.size() != arity_) {
    fail(ErrorKind::ArityMismatch, "tuple has ", tuple.size(),
         " coordinates, expected ", arity_);
  }
  std::size_t flat = 0;
  for (Index x : tuple) {
    host_->check_index(x);
    flat = flat * host_->size() + x;
  }
  return flat;
}

void AggTable::unflatten(std::size_t flat, std::span<Index> out) const {
  for (std::size_t i = arity_; i-- > 0;) {
    out[i] = static_cast<Index>(flat % host_->size());
    flat /= host_->size();
  }
}

SupAggregation SupAggregation::build(SupAggSpec spec) {
  if (spec.slots.empty()) {
    fail(ErrorKind::InvalidArgument, "aggregation requires at least one slot");
  }
  const FiniteLattice& L = *spec.host;
  std::vector<LatticeMap> components;
  components.reserve(spec.slots.size());
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    const AggSlot& slot = spec.slots[i];
    if (!same_lattice(slot.closure.host(), spec.host) ||
        !same_lattice(slot.interior.host(), spec.host)) {
      fail(ErrorKind::HostMismatch, "slot ", i + 1,
           " uses systems on a different lattice than the aggregation host");
    }
    // from_systems revalidates that the iso matches the two systems
    components.push_back(from_systems(slot.closure, slot.interior, slot.iso).lower);
  }
  Index tops = L.bottom();
  for (const AggSlot& slot : spec.slots) tops = L.join(tops, slot.interior.greatest());
  if (tops != L.top()) {
    fail(ErrorKind::BoundaryViolation,
         "join of the interior-system tops is '", L.label(tops),
         "', expected the top element '", L.label(L.top()), "'");
  }
  return SupAggregation(std::move(spec), std::move(components));
}

Index SupAggregation::evaluate(std::span<const Index> tuple) const {
  if (tuple.size() != arity()) {
    fail(ErrorKind::ArityMismatch, "tuple has ", tuple.size(),
         " coordinates, expected ", arity());
  }
  const FiniteLattice& L = *host();
  Index acc = L.bottom();
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    acc = L.join(acc, components_[i](tuple[i]));
  }
  return acc;
}

AggTable SupAggregation::full_table(std::size_t max_cells) const {
  const std::size_t n = arity();
  const std::size_t count = checked_power(host()->size(), n, max_cells);
  std::vector<Index> values(count);
  std::vector<Index> tuple(n, 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    values[flat] = evaluate(tuple);
    for (std::size_t i = n; i-- > 0;) {
      if (++tuple[i] < host()->size()) break;
      tuple[i] = 0;
    }
  }
  return AggTable(host(), n, std::move(values));
}

std::optional<std::pair<std::size_t, std::size_t>> nary_sup_witness(
    const AggTable& table) {
  const FiniteLattice& L = *table.host();
  const std::size_t n = table.arity();
  std::vector<Index> bottom_tuple(n, L.bottom());
  const std::size_t bottom_flat = table.flatten(bottom_tuple);
  if (table.at_flat(bottom_flat) != L.bottom()) {
    return std::pair<std::size_t, std::size_t>{bottom_flat, bottom_flat};
  }

  if (table.tuple_count() <= kPairwiseTupleLimit) {
    for (std::size_t s = 0; s < table.tuple_count(); ++s) {
      for (std::size_t t = s + 1; t < table.tuple_count(); ++t) {
        std::size_t st = flat_join(table, s, t);
        if (table.at_flat(st) != L.join(table.at_flat(s), table.at_flat(t))) {
          return std::pair<std::size_t, std::size_t>{s, t};
        }
      }
    }
    return std::nullopt;
  }

  // component path: each one-hot slice must be join-preserving and the table
  // must equal the coordinatewise join of its slices
  for (std::size_t i = 0; i < n; ++i) {
    for (Index x = 0; x < L.size(); ++x) {
      for (Index y = x + 1; y < L.size(); ++y) {
        std::size_t sx = one_hot_flat(table, i, x);
        std::size_t sy = one_hot_flat(table, i, y);
        std::size_t sxy = one_hot_flat(table, i, L.join(x, y));
        if (table.at_flat(sxy) != L.join(table.at_flat(sx), table.at_flat(sy))) {
          return std::pair<std::size_t, std::size_t>{sx, sy};
        }
      }
    }
  }
  std::vector<Index> tuple(n, 0);
  for (std::size_t flat = 0; flat < table.tuple_count(); ++flat) {
    table.unflatten(flat, tuple);
    Index acc = L.bottom();
    std::size_t partial = bottom_flat;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t step = one_hot_flat(table, i, tuple[i]);
      std::size_t joined = flat_join(table, partial, step);
      Index expect = L.join(table.at_flat(partial), table.at_flat(step));
      if (table.at_flat(joined) != expect) {
        return std::pair<std::size_t, std::size_t>{partial, step};
      }
      partial = joined;
      acc = expect;
    }
    (void)acc;
  }
  return std::nullopt;
}

bool is_nary_sup_preserving(const AggTable& table) {
  return !nary_sup_witness(table).has_value();
}

bool is_aggregation(const AggTable& table) {
  const FiniteLattice& L = *table.host();
  const std::size_t n = table.arity();
  std::vector<Index> tuple(n, L.bottom());
  if (table.at(tuple) != L.bottom()) return false;
  std::fill(tuple.begin(), tuple.end(), L.top());
  if (table.at(tuple) != L.top()) return false;

  std::fill(tuple.begin(), tuple.end(), 0);
  std::vector<Index> bumped(n);
  for (std::size_t flat = 0; flat < table.tuple_count(); ++flat) {
    table.unflatten(flat, tuple);
    for (std::size_t i = 0; i < n; ++i) {
      for (Index y = 0; y < L.size(); ++y) {
        if (!L.leq(tuple[i], y)) continue;
        std::copy(tuple.begin(), tuple.end(), bumped.begin());
        bumped[i] = y;
        if (!L.leq(table.at_flat(flat), table.at(bumped))) return false;
      }
    }
  }
  return true;
}

std::vector<LatticeMap> decompose(const AggTable& table) {
  if (auto w = nary_sup_witness(table)) {
    fail(ErrorKind::NotSupPreserving,
         "table is not join-preserving: witness tuples ",
         tuple_to_string(table, w->first), " and ",
         tuple_to_string(table, w->second));
  }
  const FiniteLattice& L = *table.host();
  std::vector<LatticeMap> out;
  out.reserve(table.arity());
  for (std::size_t i = 0; i < table.arity(); ++i) {
    std::vector<Index> values(L.size());
    for (Index x = 0; x < L.size(); ++x) {
      values[x] = table.at_flat(one_hot_flat(table, i, x));
    }
    out.emplace_back(table.host(), table.host(), std::move(values));
  }
  return out;
}

namespace {

// Rebuilds a system's member set and iso on the dual host, where interior
// systems become closure systems and vice versa.
SupAggSpec dualize_spec(const InfAggSpec& spec, const LatticePtr& dual_host) {
  SupAggSpec out;
  out.host = dual_host;
  out.slots.reserve(spec.slots.size());
  for (const InfAggSlot& slot : spec.slots) {
    ClosureSystem closure =
        ClosureSystem::validate(dual_host, slot.interior.members());
    InteriorSystem interior =
        InteriorSystem::validate(dual_host, slot.closure.members());
    SystemIso iso = SystemIso::validated(closure.poset(), interior.poset(),
                                         slot.iso.mapping());
    out.slots.push_back(AggSlot{std::move(closure), std::move(interior), std::move(iso)});
  }
  return out;
}

LatticeMap rehost(const LatticeMap& map, const LatticePtr& dom,
                  const LatticePtr& cod) {
  return LatticeMap(dom, cod, std::vector<Index>(map.values().begin(),
                                                 map.values().end()));
}

}  // namespace

InfAggregation InfAggregation::build(InfAggSpec spec) {
  LatticePtr host = spec.host;
  LatticePtr dual_host = dual(host);
  SupAggSpec dual_spec = dualize_spec(spec, dual_host);
  try {
    SupAggregation dual_agg = SupAggregation::build(std::move(dual_spec));
    return InfAggregation(std::move(host), std::move(dual_agg));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundaryViolation) {
      const FiniteLattice& L = *spec.host;
      Index bottoms = L.top();
      for (const InfAggSlot& slot : spec.slots) {
        bottoms = L.meet(bottoms, slot.closure.least());
      }
      fail(ErrorKind::BoundaryViolation,
           "meet of the closure-system bottoms is '", L.label(bottoms),
           "', expected the bottom element '", L.label(L.bottom()), "'");
    }
    throw;
  }
}

std::vector<LatticeMap> InfAggregation::components() const {
  std::vector<LatticeMap> out;
  out.reserve(dual_.components().size());
  for (const LatticeMap& c : dual_.components()) out.push_back(rehost(c, host_, host_));
  return out;
}

AggTable InfAggregation::full_table(std::size_t max_cells) const {
  AggTable dual_table = dual_.full_table(max_cells);
  return AggTable(host_, dual_table.arity(),
                  std::vector<Index>(dual_table.values().begin(),
                                     dual_table.values().end()));
}

bool is_nary_inf_preserving(const AggTable& table) {
  AggTable dual_table(dual(table.host()), table.arity(),
                      std::vector<Index>(table.values().begin(),
                                         table.values().end()));
  return is_nary_sup_preserving(dual_table);
}

std::vector<LatticeMap> decompose_inf(const AggTable& table) {
  AggTable dual_table(dual(table.host()), table.arity(),
                      std::vector<Index>(table.values().begin(),
                                         table.values().end()));
  if (auto w = nary_sup_witness(dual_table)) {
    fail(ErrorKind::NotInfPreserving,
         "table is not meet-preserving: witness tuples ",
         tuple_to_string(table, w->first), " and ",
         tuple_to_string(table, w->second));
  }
  std::vector<LatticeMap> dual_parts = decompose(dual_table);
  std::vector<LatticeMap> out;
  out.reserve(dual_parts.size());
  for (const LatticeMap& c : dual_parts) {
    out.push_back(rehost(c, table.host(), table.host()));
  }
  return out;
}

}  // namespace latgal
