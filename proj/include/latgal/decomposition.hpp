// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_DECOMPOSITION_HPP
#define LATGAL_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latgal/aggregation.hpp"

namespace latgal {

/// A matrix of join-preserving maps between the factors of two direct
/// products; entry (r, c) maps row factor r into column factor c.
struct MapMatrix {
  std::vector<LatticePtr> row_factors;
  std::vector<LatticePtr> col_factors;
  std::vector<LatticeMap> entries;  // row-major

  std::size_t rows() const { return row_factors.size(); }
  std::size_t cols() const { return col_factors.size(); }
  const LatticeMap& at(std::size_t row, std::size_t col) const {
    return entries[row * cols() + col];
  }
};

/// Splits a join-preserving map between products into factor maps
/// f_rc(x) = f(x at slot r, bottom elsewhere)(c). Throws NotSupPreserving,
/// DomainMismatch when the codecs do not describe f's domain and codomain.
MapMatrix product_decompose(const LatticeMap& f, const ProductCodec& domain,
                            const ProductCodec& codomain);

/// Reassembles a matrix into the map f(x)(c) = \/_r f_rc(x(r)) on the given
/// product codecs (factor lattices must match the matrix).
LatticeMap product_compose(const MapMatrix& matrix, const ProductCodec& domain,
                           const ProductCodec& codomain);
/// Convenience overload that materializes fresh product codecs.
LatticeMap product_compose(const MapMatrix& matrix,
                           std::size_t max_elements = kDefaultMaxElements);

/// The upper adjoint of product_compose(matrix), assembled entrywise:
/// g(y)(r) = /\_c g_rc(y(c)) with g_rc the upper adjoint of f_rc.
LatticeMap adjoint_matrix(const MapMatrix& matrix, const ProductCodec& domain,
                          const ProductCodec& codomain);
LatticeMap adjoint_matrix(const MapMatrix& matrix,
                          std::size_t max_elements = kDefaultMaxElements);

/// A subset that is a sublattice containing both bounds, making it a closure
/// and an interior system on the host at the same time.
class SublatticeView {
 public:
  /// Throws NotSublattice (with a witness pair) otherwise.
  static SublatticeView validate(LatticePtr host, std::vector<Index> members);

  const LatticePtr& host() const { return poset_.host(); }
  const std::vector<Index>& members() const { return poset_.members(); }
  const SubPoset& poset() const { return poset_; }

  Index closure_to(Index x) const;   // least member above x
  Index interior_to(Index x) const;  // greatest member below x

  /// The members as a standalone lattice (host labels preserved).
  const LatticePtr& as_lattice() const { return member_lattice_; }
  Index to_member_index(Index host_element) const;
  Index to_host_index(Index member_element) const;

 private:
  SublatticeView(SubPoset poset, LatticePtr member_lattice)
      : poset_(std::move(poset)), member_lattice_(std::move(member_lattice)) {}
  SubPoset poset_;
  LatticePtr member_lattice_;
};

/// Restriction of a join-preserving self-map of the host down to a
/// sublattice: f(x) = c_M(F(x)). Throws NotSupPreserving, DomainMismatch.
LatticeMap restrict_to_sublattice(const LatticeMap& host_map, const SublatticeView& view);

/// Extension of a join-preserving self-map of the sublattice to the host:
/// F(x) = f(c_M(x)). restrict(extend(f)) == f for join-preserving f.
LatticeMap extend_from_sublattice(const LatticeMap& member_map,
                                  const SublatticeView& view);

/// Subdirect embedding of a finite distributive lattice into a power of the
/// two-element chain: e(x) = characteristic vector of the join-irreducibles
/// below x. Irreducibles are ordered ascending by (height, label) and the
/// ordering is recorded, so output is reproducible bit for bit.
class SubdirectEmbedding {
 public:
  /// Throws NotDistributive.
  static SubdirectEmbedding birkhoff(LatticePtr source);

  const LatticePtr& source() const { return source_; }
  std::size_t factor_count() const { return ji_order_.size(); }
  const std::vector<Index>& irreducible_order() const { return ji_order_; }

  const std::vector<std::uint8_t>& bits(Index x) const;
  std::string bitstring(Index x) const;
  std::optional<Index> preimage(std::span<const std::uint8_t> bits) const;

  /// Bits of the least image element above the given vector (the closure
  /// operator of the image, in coordinates).
  std::vector<std::uint8_t> image_closure(std::span<const std::uint8_t> bits) const;

 private:
  SubdirectEmbedding(LatticePtr source, std::vector<Index> ji_order,
                     std::vector<std::vector<std::uint8_t>> bits,
                     std::unordered_map<std::string, Index> by_bits)
      : source_(std::move(source)),
        ji_order_(std::move(ji_order)),
        bits_(std::move(bits)),
        by_bits_(std::move(by_bits)) {}

  LatticePtr source_;
  std::vector<Index> ji_order_;
  std::vector<std::vector<std::uint8_t>> bits_;
  std::unordered_map<std::string, Index> by_bits_;
};

inline SubdirectEmbedding birkhoff_subdirect(LatticePtr source) {
  return SubdirectEmbedding::birkhoff(std::move(source));
}

/// Per-slot factor matrices of an aggregation transported through a
/// subdirect embedding: one k x k matrix of two-chain maps per argument.
struct SubdirectDecomposition {
  SubdirectEmbedding embedding;
  std::vector<MapMatrix> slot_matrices;
};

/// Throws NotSubdirect when the embedding does not belong to the
/// aggregation's host; the factor boundary condition and the recomposition
/// identity are verified before returning.
SubdirectDecomposition subdirect_decompose_aggregation(const SupAggregation& agg,
                                                       const SubdirectEmbedding& embedding);

/// Evaluates the decomposed form: join the factor-matrix images of each
/// argument, close onto the embedded image, map back. Used as the
/// recomposition oracle.
Index subdirect_evaluate(const SubdirectDecomposition& decomposition,
                         std::span<const Index> tuple);

}  // namespace latgal

#endif
