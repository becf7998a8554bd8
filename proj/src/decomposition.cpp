// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/decomposition.hpp"

#include <algorithm>

namespace latgal {
namespace {

void check_codec_matches(const LatticePtr& lattice, const ProductCodec& codec,
                         const char* which) {
  if (!same_lattice(lattice, codec.product_lattice())) {
    fail(ErrorKind::DomainMismatch, "the ", which,
         " codec does not describe the map's ", which, " lattice");
  }
}

void check_matrix_factors(const MapMatrix& m, const ProductCodec& domain,
                          const ProductCodec& codomain) {
  if (m.rows() != domain.arity() || m.cols() != codomain.arity()) {
    fail(ErrorKind::DomainMismatch, "matrix shape ", m.rows(), "x", m.cols(),
         " does not match codec arities ", domain.arity(), "x",
         codomain.arity());
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!same_lattice(m.row_factors[r], domain.factors()[r])) {
      fail(ErrorKind::DomainMismatch, "row factor ", r,
           " differs from the domain codec factor");
    }
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!same_lattice(m.col_factors[c], codomain.factors()[c])) {
      fail(ErrorKind::DomainMismatch, "column factor ", c,
           " differs from the codomain codec factor");
    }
  }
}

}  // namespace

MapMatrix product_decompose(const LatticeMap& f, const ProductCodec& domain,
                            const ProductCodec& codomain) {
  check_codec_matches(f.domain(), domain, "domain");
  check_codec_matches(f.codomain(), codomain, "codomain");
  if (auto w = sup_preserving_witness(f)) {
    fail(ErrorKind::NotSupPreserving, "map is not join-preserving at the pair (",
         f.domain()->label(w->first), ", ", f.domain()->label(w->second), ")");
  }

  const std::size_t rows = domain.arity();
  const std::size_t cols = codomain.arity();
  MapMatrix out;
  out.row_factors = domain.factors();
  out.col_factors = codomain.factors();
  out.entries.reserve(rows * cols);

  std::vector<Index> bottoms(rows);
  for (std::size_t r = 0; r < rows; ++r) bottoms[r] = domain.factors()[r]->bottom();

  std::vector<Index> tuple(rows);
  std::vector<Index> image(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const LatticePtr& Lr = domain.factors()[r];
    std::vector<std::vector<Index>> columns(cols, std::vector<Index>(Lr->size()));
    for (Index x = 0; x < Lr->size(); ++x) {
      std::copy(bottoms.begin(), bottoms.end(), tuple.begin());
      tuple[r] = x;
      codomain.decode_into(f(domain.encode(tuple)), image);
      for (std::size_t c = 0; c < cols; ++c) columns[c][x] = image[c];
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out.entries.emplace_back(Lr, codomain.factors()[c], std::move(columns[c]));
    }
  }
  return out;
}

LatticeMap product_compose(const MapMatrix& matrix, const ProductCodec& domain,
                           const ProductCodec& codomain) {
  check_matrix_factors(matrix, domain, codomain);
  const FiniteLattice& dom = *domain.product_lattice();
  std::vector<Index> values(dom.size());
  std::vector<Index> coords(matrix.rows());
  std::vector<Index> image(matrix.cols());
  for (Index x = 0; x < dom.size(); ++x) {
    domain.decode_into(x, coords);
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const FiniteLattice& Mc = *matrix.col_factors[c];
      Index acc = Mc.bottom();
      for (std::size_t r = 0; r < matrix.rows(); ++r) {
        acc = Mc.join(acc, matrix.at(r, c)(coords[r]));
      }
      image[c] = acc;
    }
    values[x] = codomain.encode(image);
  }
  return LatticeMap(domain.product_lattice(), codomain.product_lattice(),
                    std::move(values));
}

LatticeMap product_compose(const MapMatrix& matrix, std::size_t max_elements) {
  auto [dom_lat, dom_codec] = product(matrix.row_factors, max_elements);
  auto [cod_lat, cod_codec] = product(matrix.col_factors, max_elements);
  return product_compose(matrix, dom_codec, cod_codec);
}

LatticeMap adjoint_matrix(const MapMatrix& matrix, const ProductCodec& domain,
                          const ProductCodec& codomain) {
  check_matrix_factors(matrix, domain, codomain);
  std::vector<LatticeMap> adjoints;
  adjoints.reserve(matrix.entries.size());
  for (const LatticeMap& entry : matrix.entries) {
    adjoints.push_back(upper_adjoint(entry));
  }
  const FiniteLattice& cod = *codomain.product_lattice();
  std::vector<Index> values(cod.size());
  std::vector<Index> coords(matrix.cols());
  std::vector<Index> image(matrix.rows());
  for (Index y = 0; y < cod.size(); ++y) {
    codomain.decode_into(y, coords);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      const FiniteLattice& Lr = *matrix.row_factors[r];
      Index acc = Lr.top();
      for (std::size_t c = 0; c < matrix.cols(); ++c) {
        acc = Lr.meet(acc, adjoints[r * matrix.cols() + c](coords[c]));
      }
      image[r] = acc;
    }
    values[y] = domain.encode(image);
  }
  return LatticeMap(codomain.product_lattice(), domain.product_lattice(),
                    std::move(values));
}

LatticeMap adjoint_matrix(const MapMatrix& matrix, std::size_t max_elements) {
  auto [dom_lat, dom_codec] = product(matrix.row_factors, max_elements);
  auto [cod_lat, cod_codec] = product(matrix.col_factors, max_elements);
  return adjoint_matrix(matrix, dom_codec, cod_codec);
}

SublatticeView SublatticeView::validate(LatticePtr host, std::vector<Index> members) {
  SubPoset poset(std::move(host), std::move(members));
  const FiniteLattice& L = *poset.host();
  if (poset.size() == 0) {
    fail(ErrorKind::NotSublattice, "sublattice must be non-empty");
  }
  if (!poset.contains(L.bottom()) || !poset.contains(L.top())) {
    fail(ErrorKind::NotSublattice,
         "sublattice must contain the host bottom and top to act as a "
         "closure and interior system");
  }
  const auto& ms = poset.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Index jn = L.join(ms[i], ms[j]);
      if (!poset.contains(jn)) {
        fail(ErrorKind::NotSublattice, "not closed under joins: ",
             L.label(ms[i]), " \\/ ", L.label(ms[j]), " = ", L.label(jn),
             " is missing");
      }
      Index mt = L.meet(ms[i], ms[j]);
      if (!poset.contains(mt)) {
        fail(ErrorKind::NotSublattice, "not closed under meets: ",
             L.label(ms[i]), " /\\ ", L.label(ms[j]), " = ", L.label(mt),
             " is missing");
      }
    }
  }

  const std::size_t k = ms.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = L.leq(ms[i], ms[j]);
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Index m : ms) labels.push_back(L.label(m));
  LatticePtr member_lattice = FiniteLattice::from_order(std::move(labels), leq);
  return SublatticeView(std::move(poset), std::move(member_lattice));
}

Index SublatticeView::closure_to(Index x) const {
  const FiniteLattice& L = *host();
  L.check_index(x);
  Index acc = L.top();
  for (Index m : members()) {
    if (L.leq(x, m)) acc = L.meet(acc, m);
  }
  return acc;
}

Index SublatticeView::interior_to(Index x) const {
  const FiniteLattice& L = *host();
  L.check_index(x);
  Index acc = L.bottom();
  for (Index m : members()) {
    if (L.leq(m, x)) acc = L.join(acc, m);
  }
  return acc;
}

Index SublatticeView::to_member_index(Index host_element) const {
  return static_cast<Index>(poset_.position_of(host_element));
}

Index SublatticeView::to_host_index(Index member_element) const {
  member_lattice_->check_index(member_element);
  return members()[member_element];
}

LatticeMap restrict_to_sublattice(const LatticeMap& host_map,
                                  const SublatticeView& view) {
  if (!same_lattice(host_map.domain(), view.host()) ||
      !same_lattice(host_map.codomain(), view.host())) {
    fail(ErrorKind::DomainMismatch,
         "restriction expects a self-map of the sublattice host");
  }
  if (auto w = sup_preserving_witness(host_map)) {
    fail(ErrorKind::NotSupPreserving, "map is not join-preserving at the pair (",
         view.host()->label(w->first), ", ", view.host()->label(w->second), ")");
  }
  const auto& ms = view.members();
  std::vector<Index> values(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    values[i] = view.to_member_index(view.closure_to(host_map(ms[i])));
  }
  return LatticeMap(view.as_lattice(), view.as_lattice(), std::move(values));
}

LatticeMap extend_from_sublattice(const LatticeMap& member_map,
                                  const SublatticeView& view) {
  if (!same_lattice(member_map.domain(), view.as_lattice()) ||
      !same_lattice(member_map.codomain(), view.as_lattice())) {
    fail(ErrorKind::DomainMismatch,
         "extension expects a self-map of the member lattice");
  }
  if (auto w = sup_preserving_witness(member_map)) {
    fail(ErrorKind::NotSupPreserving, "map is not join-preserving at the pair (",
         member_map.domain()->label(w->first), ", ",
         member_map.domain()->label(w->second), ")");
  }
  const FiniteLattice& L = *view.host();
  std::vector<Index> values(L.size());
  for (Index x = 0; x < L.size(); ++x) {
    Index closed = view.to_member_index(view.closure_to(x));
    values[x] = view.to_host_index(member_map(closed));
  }
  return LatticeMap(view.host(), view.host(), std::move(values));
}

SubdirectEmbedding SubdirectEmbedding::birkhoff(LatticePtr source) {
  if (!source->is_distributive()) {
    fail(ErrorKind::NotDistributive,
         "subdirect two-chain representation requires a distributive lattice");
  }
  const FiniteLattice& L = *source;
  std::vector<Index> irreducibles = L.join_irreducibles();
  std::vector<std::size_t> height = L.heights();
  std::stable_sort(irreducibles.begin(), irreducibles.end(),
                   [&](Index a, Index b) {
                     if (height[a] != height[b]) return height[a] < height[b];
                     return L.label(a) < L.label(b);
                   });

  const std::size_t k = irreducibles.size();
  std::vector<std::vector<std::uint8_t>> bits(L.size(),
                                              std::vector<std::uint8_t>(k, 0));
  std::unordered_map<std::string, Index> by_bits;
  by_bits.reserve(L.size());
  for (Index x = 0; x < L.size(); ++x) {
    std::string key(k, '0');
    for (std::size_t i = 0; i < k; ++i) {
      if (L.leq(irreducibles[i], x)) {
        bits[x][i] = 1;
        key[i] = '1';
      }
    }
    auto [it, inserted] = by_bits.emplace(std::move(key), x);
    if (!inserted) {
      fail(ErrorKind::NotSubdirect, "embedding is not injective at '",
           L.label(x), "' and '", L.label(it->second), "'");
    }
  }

  // homomorphism and projection-surjectivity checks
  for (Index x = 0; x < L.size(); ++x) {
    for (Index y = 0; y < L.size(); ++y) {
      const auto& bx = bits[x];
      const auto& by = bits[y];
      const auto& bj = bits[L.join(x, y)];
      const auto& bm = bits[L.meet(x, y)];
      for (std::size_t i = 0; i < k; ++i) {
        if (bj[i] != (bx[i] | by[i]) || bm[i] != (bx[i] & by[i])) {
          fail(ErrorKind::NotSubdirect,
               "embedding does not preserve join/meet at ('", L.label(x),
               "', '", L.label(y), "')");
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (bits[L.bottom()][i] != 0 || bits[L.top()][i] != 1) {
      fail(ErrorKind::NotSubdirect, "projection ", i,
           " is not surjective onto the two-chain");
    }
  }

  return SubdirectEmbedding(std::move(source), std::move(irreducibles),
                            std::move(bits), std::move(by_bits));
}

const std::vector<std::uint8_t>& SubdirectEmbedding::bits(Index x) const {
  source_->check_index(x);
  return bits_[x];
}

std::string SubdirectEmbedding::bitstring(Index x) const {
  const auto& b = bits(x);
  std::string out(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) out[i] = '1';
  }
  return out;
}

std::optional<Index> SubdirectEmbedding::preimage(
    std::span<const std::uint8_t> bits) const {
  std::string key(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) key[i] = '1';
  }
  auto it = by_bits_.find(key);
  if (it == by_bits_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint8_t> SubdirectEmbedding::image_closure(
    std::span<const std::uint8_t> bits) const {
  if (bits.size() != factor_count()) {
    fail(ErrorKind::ArityMismatch, "bit vector has ", bits.size(),
         " coordinates, expected ", factor_count());
  }
  const FiniteLattice& L = *source_;
  Index acc = L.top();
  for (Index x = 0; x < L.size(); ++x) {
    bool above = true;
    for (std::size_t i = 0; i < bits.size() && above; ++i) {
      if (bits[i] && !bits_[x][i]) above = false;
    }
    if (above) acc = L.meet(acc, x);
  }
  return bits_[acc];
}

SubdirectDecomposition subdirect_decompose_aggregation(
    const SupAggregation& agg, const SubdirectEmbedding& embedding) {
  if (!same_lattice(agg.host(), embedding.source())) {
    fail(ErrorKind::NotSubdirect,
         "embedding does not belong to the aggregation's host lattice");
  }
  const FiniteLattice& L = *agg.host();
  const std::size_t k = embedding.factor_count();
  const LatticePtr two = FiniteLattice::chain(2);

  // F_l in coordinates: close onto the image, pull back, apply the slot
  // component, push forward.
  auto transported = [&](std::size_t slot, std::span<const std::uint8_t> p) {
    auto closed = embedding.image_closure(p);
    Index x = *embedding.preimage(closed);
    return embedding.bits(agg.components()[slot](x));
  };

  SubdirectDecomposition out{embedding, {}};
  out.slot_matrices.reserve(agg.arity());
  std::vector<std::uint8_t> zero(k, 0);
  for (std::size_t slot = 0; slot < agg.arity(); ++slot) {
    auto at_zero = transported(slot, zero);
    MapMatrix m;
    m.row_factors.assign(k, two);
    m.col_factors.assign(k, two);
    m.entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::uint8_t> one_hot(k, 0);
      one_hot[i] = 1;
      auto at_one = transported(slot, one_hot);
      for (std::size_t j = 0; j < k; ++j) {
        m.entries.emplace_back(two, two,
                               std::vector<Index>{at_zero[j], at_one[j]});
      }
    }
    out.slot_matrices.push_back(std::move(m));
  }

  for (std::size_t j = 0; j < k; ++j) {
    Index acc = 0;
    for (std::size_t slot = 0; slot < agg.arity(); ++slot) {
      for (std::size_t i = 0; i < k; ++i) {
        acc = std::max(acc, out.slot_matrices[slot].at(i, j)(1));
      }
    }
    if (acc != 1) {
      fail(ErrorKind::BoundaryViolation, "factor column ", j,
           " does not reach the top of the two-chain");
    }
  }

  // recomposition must reproduce the aggregation; exhaustive at desk scale,
  // deterministically sampled beyond
  const std::size_t n = agg.arity();
  std::size_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < n && exhaustive; ++i) {
    if (total > 10'000 / L.size()) {
      exhaustive = false;
      break;
    }
    total *= L.size();
  }
  std::vector<Index> tuple(n, 0);
  if (exhaustive) {
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rest = flat;
      for (std::size_t i = n; i-- > 0;) {
        tuple[i] = static_cast<Index>(rest % L.size());
        rest /= L.size();
      }
      if (subdirect_evaluate(out, tuple) != agg.evaluate(tuple)) {
        fail(ErrorKind::NotSubdirect, "recomposition mismatch at a tuple");
      }
    }
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t trial = 0; trial < 10'000; ++trial) {
      for (std::size_t i = 0; i < n; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        tuple[i] = static_cast<Index>((state >> 33) % L.size());
      }
      if (subdirect_evaluate(out, tuple) != agg.evaluate(tuple)) {
        fail(ErrorKind::NotSubdirect, "recomposition mismatch at a tuple");
      }
    }
  }
  return out;
}

Index subdirect_evaluate(const SubdirectDecomposition& decomposition,
                         std::span<const Index> tuple) {
  const SubdirectEmbedding& e = decomposition.embedding;
  const std::size_t k = e.factor_count();
  if (tuple.size() != decomposition.slot_matrices.size()) {
    fail(ErrorKind::ArityMismatch, "tuple has ", tuple.size(),
         " coordinates, expected ", decomposition.slot_matrices.size());
  }
  std::vector<std::uint8_t> acc(k, 0);
  for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
    const auto& p = e.bits(tuple[slot]);
    const MapMatrix& m = decomposition.slot_matrices[slot];
    for (std::size_t j = 0; j < k; ++j) {
      Index vj = 0;
      for (std::size_t i = 0; i < k; ++i) vj = std::max(vj, m.at(i, j)(p[i]));
      if (vj) acc[j] = 1;
    }
  }
  auto closed = e.image_closure(acc);
  return *e.preimage(closed);
}

}  // namespace latgal
