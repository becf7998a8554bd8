// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/closure.hpp"

#include <algorithm>

namespace latgal {

SubPoset::SubPoset(LatticePtr host, std::vector<Index> members)
    : host_(std::move(host)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(host_->size(), 0);
  for (Index m : members_) {
    host_->check_index(m);
    mask_[m] = 1;
  }
}

bool SubPoset::contains(Index x) const { return x < mask_.size() && mask_[x]; }

std::size_t SubPoset::position_of(Index x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) {
    fail(ErrorKind::InvalidArgument, "element '", host_->label(x),
         "' is not a member of this system");
  }
  return static_cast<std::size_t>(it - members_.begin());
}

Index SubPoset::least() const {
  for (Index m : members_) {
    bool below_all = true;
    for (Index other : members_) {
      if (!host_->leq(m, other)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return m;
  }
  fail(ErrorKind::InvalidArgument, "subset has no least member");
}

Index SubPoset::greatest() const {
  for (Index m : members_) {
    bool above_all = true;
    for (Index other : members_) {
      if (!host_->leq(other, m)) {
        above_all = false;
        break;
      }
    }
    if (above_all) return m;
  }
  fail(ErrorKind::InvalidArgument, "subset has no greatest member");
}

bool SubPoset::same_subposet(const SubPoset& other) const {
  return members_ == other.members_ && same_lattice(host_, other.host_);
}

namespace {

std::vector<Index> labels_to_indices(const LatticePtr& host,
                                     const std::vector<std::string>& labels) {
  std::vector<Index> out;
  out.reserve(labels.size());
  for (const std::string& l : labels) out.push_back(host->index_of(l));
  return out;
}

// Closes `mask` under the binary operation `op`; returns sorted members.
template <typename Op>
std::vector<Index> close_under(const FiniteLattice& host,
                               std::vector<std::uint8_t>& mask, Op op) {
  std::vector<Index> members;
  for (Index x = 0; x < host.size(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  // index loops so that growth during iteration is picked up
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Index z = op(members[i], members[j]);
      if (!mask[z]) {
        mask[z] = 1;
        members.push_back(z);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

ClosureSystem ClosureSystem::validate(LatticePtr host, std::vector<Index> members) {
  SubPoset poset(std::move(host), std::move(members));
  const FiniteLattice& L = *poset.host();
  if (!poset.contains(L.top())) {
    fail(ErrorKind::MissingBound, "closure system must contain the top element '",
         L.label(L.top()), "' (the empty meet)");
  }
  const auto& ms = poset.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Index w = L.meet(ms[i], ms[j]);
      if (!poset.contains(w)) {
        fail(ErrorKind::NotClosed, "not closed under meets: ", L.label(ms[i]),
             " /\\ ", L.label(ms[j]), " = ", L.label(w), " is missing");
      }
    }
  }
  return ClosureSystem(std::move(poset));
}

ClosureSystem ClosureSystem::validate_labels(LatticePtr host,
                                             const std::vector<std::string>& labels) {
  auto members = labels_to_indices(host, labels);
  return validate(std::move(host), std::move(members));
}

ClosureSystem ClosureSystem::generate(LatticePtr host,
                                      std::span<const Index> generators) {
  std::vector<std::uint8_t> mask(host->size(), 0);
  for (Index g : generators) {
    host->check_index(g);
    mask[g] = 1;
  }
  mask[host->top()] = 1;
  const FiniteLattice& L = *host;
  auto members = close_under(L, mask, [&L](Index x, Index y) { return L.meet(x, y); });
  return ClosureSystem(SubPoset(std::move(host), std::move(members)));
}

Index ClosureSystem::closure_of(Index x) const {
  const FiniteLattice& L = *host();
  L.check_index(x);
  Index acc = L.top();
  for (Index m : members()) {
    if (L.leq(x, m)) acc = L.meet(acc, m);
  }
  return acc;
}

LatticeMap ClosureSystem::to_operator() const {
  std::vector<Index> values(host()->size());
  for (Index x = 0; x < host()->size(); ++x) values[x] = closure_of(x);
  return LatticeMap(host(), host(), std::move(values));
}

InteriorSystem InteriorSystem::validate(LatticePtr host, std::vector<Index> members) {
  SubPoset poset(std::move(host), std::move(members));
  const FiniteLattice& L = *poset.host();
  if (!poset.contains(L.bottom())) {
    fail(ErrorKind::MissingBound, "interior system must contain the bottom element '",
         L.label(L.bottom()), "' (the empty join)");
  }
  const auto& ms = poset.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Index w = L.join(ms[i], ms[j]);
      if (!poset.contains(w)) {
        fail(ErrorKind::NotClosed, "not closed under joins: ", L.label(ms[i]),
             " \\/ ", L.label(ms[j]), " = ", L.label(w), " is missing");
      }
    }
  }
  return InteriorSystem(std::move(poset));
}

InteriorSystem InteriorSystem::validate_labels(LatticePtr host,
                                               const std::vector<std::string>& labels) {
  auto members = labels_to_indices(host, labels);
  return validate(std::move(host), std::move(members));
}

InteriorSystem InteriorSystem::generate(LatticePtr host,
                                        std::span<const Index> generators) {
  std::vector<std::uint8_t> mask(host->size(), 0);
  for (Index g : generators) {
    host->check_index(g);
    mask[g] = 1;
  }
  mask[host->bottom()] = 1;
  const FiniteLattice& L = *host;
  auto members = close_under(L, mask, [&L](Index x, Index y) { return L.join(x, y); });
  return InteriorSystem(SubPoset(std::move(host), std::move(members)));
}

Index InteriorSystem::interior_of(Index x) const {
  const FiniteLattice& L = *host();
  L.check_index(x);
  Index acc = L.bottom();
  for (Index m : members()) {
    if (L.leq(m, x)) acc = L.join(acc, m);
  }
  return acc;
}

LatticeMap InteriorSystem::to_operator() const {
  std::vector<Index> values(host()->size());
  for (Index x = 0; x < host()->size(); ++x) values[x] = interior_of(x);
  return LatticeMap(host(), host(), std::move(values));
}

ClosureSystem system_of_operator(const LatticeMap& op) {
  if (!same_lattice(op.domain(), op.codomain())) {
    fail(ErrorKind::DomainMismatch, "a closure operator must be a self-map");
  }
  const FiniteLattice& L = *op.domain();
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < L.size(); ++y) {
      if (L.leq(x, y) && !L.leq(op(x), op(y))) {
        fail(ErrorKind::NotClosureOperator, "not monotone: ", L.label(x),
             " <= ", L.label(y), " but c(", L.label(x), ") = ", L.label(op(x)),
             " is not below c(", L.label(y), ") = ", L.label(op(y)));
      }
    }
  }
  for (Index x = 0; x < L.size(); ++x) {
    if (!L.leq(x, op(x))) {
      fail(ErrorKind::NotClosureOperator, "not extensive: c(", L.label(x),
           ") = ", L.label(op(x)), " is not above ", L.label(x));
    }
  }
  for (Index x = 0; x < L.size(); ++x) {
    if (op(op(x)) != op(x)) {
      fail(ErrorKind::NotClosureOperator, "not idempotent at ", L.label(x),
           ": c(c(x)) = ", L.label(op(op(x))), " but c(x) = ", L.label(op(x)));
    }
  }
  std::vector<Index> fixed;
  for (Index x = 0; x < L.size(); ++x) {
    if (op(x) == x) fixed.push_back(x);
  }
  return ClosureSystem::validate(op.domain(), std::move(fixed));
}

InteriorSystem system_of_interior_operator(const LatticeMap& op) {
  if (!same_lattice(op.domain(), op.codomain())) {
    fail(ErrorKind::DomainMismatch, "an interior operator must be a self-map");
  }
  const FiniteLattice& L = *op.domain();
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < L.size(); ++y) {
      if (L.leq(x, y) && !L.leq(op(x), op(y))) {
        fail(ErrorKind::NotInteriorOperator, "not monotone: ", L.label(x),
             " <= ", L.label(y), " but i(", L.label(x), ") = ", L.label(op(x)),
             " is not below i(", L.label(y), ") = ", L.label(op(y)));
      }
    }
  }
  for (Index x = 0; x < L.size(); ++x) {
    if (!L.leq(op(x), x)) {
      fail(ErrorKind::NotInteriorOperator, "not intensive: i(", L.label(x),
           ") = ", L.label(op(x)), " is not below ", L.label(x));
    }
  }
  for (Index x = 0; x < L.size(); ++x) {
    if (op(op(x)) != op(x)) {
      fail(ErrorKind::NotInteriorOperator, "not idempotent at ", L.label(x));
    }
  }
  std::vector<Index> fixed;
  for (Index x = 0; x < L.size(); ++x) {
    if (op(x) == x) fixed.push_back(x);
  }
  return InteriorSystem::validate(op.domain(), std::move(fixed));
}

SystemIso SystemIso::validated(SubPoset source, SubPoset target,
                               std::vector<Index> mapping) {
  if (mapping.size() != source.size()) {
    fail(ErrorKind::NotIso, "mapping has ", mapping.size(),
         " entries for a source of size ", source.size());
  }
  if (source.size() != target.size()) {
    fail(ErrorKind::NotIso, "source and target have different sizes (",
         source.size(), " vs ", target.size(), ")");
  }
  const FiniteLattice& sl = *source.host();
  const FiniteLattice& tl = *target.host();
  std::vector<Index> inverse(target.size(), 0);
  std::vector<std::uint8_t> hit(target.size(), 0);
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (!target.contains(mapping[i])) {
      fail(ErrorKind::NotIso, "image ", tl.label(mapping[i]),
           " is not a member of the target system");
    }
    std::size_t pos = target.position_of(mapping[i]);
    if (hit[pos]) {
      fail(ErrorKind::NotIso, "mapping is not injective at ",
           tl.label(mapping[i]));
    }
    hit[pos] = 1;
    inverse[pos] = source.members()[i];
  }
  const auto& sm = source.members();
  for (std::size_t i = 0; i < sm.size(); ++i) {
    for (std::size_t j = 0; j < sm.size(); ++j) {
      bool src_le = sl.leq(sm[i], sm[j]);
      bool tgt_le = tl.leq(mapping[i], mapping[j]);
      if (src_le != tgt_le) {
        fail(ErrorKind::NotIso, "mapping does not preserve order between ",
             sl.label(sm[i]), " and ", sl.label(sm[j]));
      }
    }
  }
  return SystemIso(std::move(source), std::move(target), std::move(mapping),
                   std::move(inverse));
}

Index SystemIso::apply(Index x) const {
  return mapping_[source_.position_of(x)];
}

Index SystemIso::apply_inverse(Index y) const {
  return inverse_[target_.position_of(y)];
}

SystemIso SystemIso::inverse() const {
  return SystemIso(target_, source_, inverse_, mapping_);
}

bool SystemIso::same_iso(const SystemIso& other) const {
  return mapping_ == other.mapping_ && source_.same_subposet(other.source_) &&
         target_.same_subposet(other.target_);
}

std::vector<SystemIso> enumerate_isos(const SubPoset& a, const SubPoset& b) {
  std::vector<SystemIso> out;
  if (a.size() != b.size()) return out;
  const std::size_t k = a.size();
  if (k == 0) return out;
  const FiniteLattice& al = *a.host();
  const FiniteLattice& bl = *b.host();

  // order profile within the subposet; must match under any isomorphism
  auto profile = [](const FiniteLattice& L, const std::vector<Index>& ms,
                    std::size_t pos) {
    std::size_t below = 0;
    std::size_t above = 0;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (L.leq(ms[j], ms[pos])) ++below;
      if (L.leq(ms[pos], ms[j])) ++above;
    }
    return std::pair<std::size_t, std::size_t>{below, above};
  };
  std::vector<std::pair<std::size_t, std::size_t>> pa(k), pb(k);
  for (std::size_t i = 0; i < k; ++i) {
    pa[i] = profile(al, a.members(), i);
    pb[i] = profile(bl, b.members(), i);
  }

  std::vector<Index> assign(k, 0);     // source position -> target position
  std::vector<std::uint8_t> used(k, 0);
  auto consistent = [&](std::size_t i, std::size_t cand) {
    if (pa[i] != pb[cand]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      bool sa = al.leq(a.members()[j], a.members()[i]);
      bool sb = bl.leq(b.members()[assign[j]], b.members()[cand]);
      if (sa != sb) return false;
      sa = al.leq(a.members()[i], a.members()[j]);
      sb = bl.leq(b.members()[cand], b.members()[assign[j]]);
      if (sa != sb) return false;
    }
    return true;
  };

  std::size_t i = 0;
  std::vector<std::size_t> next(k, 0);
  while (true) {
    if (i == k) {
      std::vector<Index> mapping(k);
      for (std::size_t j = 0; j < k; ++j) mapping[j] = b.members()[assign[j]];
      out.push_back(SystemIso::validated(a, b, std::move(mapping)));
      --i;
      used[assign[i]] = 0;
      continue;
    }
    bool advanced = false;
    for (std::size_t cand = next[i]; cand < k; ++cand) {
      if (used[cand] || !consistent(i, cand)) continue;
      assign[i] = static_cast<Index>(cand);
      used[cand] = 1;
      next[i] = cand + 1;
      ++i;
      if (i < k) next[i] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    next[i] = 0;
    if (i == 0) break;
    --i;
    used[assign[i]] = 0;
  }
  return out;
}

bool check_iso(const SystemIso& iso) {
  try {
    SystemIso::validated(iso.source(), iso.target(), iso.mapping());
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace latgal
