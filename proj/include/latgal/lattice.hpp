// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_LATTICE_HPP
#define LATGAL_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "latgal/error.hpp"

namespace latgal {

/// Element handle: an index into the element list of one particular lattice.
using Index = std::uint32_t;

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Default cap on the number of elements of a direct product (configurable
/// per call and via the CLI `--max-elements` flag).
inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

/// Cap on lattices backed by dense order/join/meet tables. Direct products
/// above this size compute everything coordinatewise and never allocate
/// quadratic tables.
inline constexpr std::size_t kDenseMaxElements = 2048;

class ProductCodec;

/// A finite bounded lattice: an ordered element list, the full order
/// relation, and total binary join/meet. Immutable after construction; all
/// member functions are const and safe for concurrent use.
///
/// Two representations exist behind the same interface: small lattices carry
/// dense order and join/meet tables, direct products store their factors and
/// evaluate everything coordinatewise.
class FiniteLattice {
 public:
  /// Builds a lattice from labels and a cover (Hasse) relation. The order is
  /// the reflexive-transitive closure of the covers.
  /// Throws CycleError, NotALattice, NoBounds, UnknownLabel, SizeLimit.
  static LatticePtr from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds a lattice from an explicit order relation given as a row-major
  /// n*n matrix with leq[x*n+y] != 0 meaning x <= y.
  static LatticePtr from_order(std::vector<std::string> labels,
                               const std::vector<std::uint8_t>& leq);

  /// The n-element total order with labels "0".."n-1". Requires n >= 1.
  static LatticePtr chain(std::size_t n);

  /// 2^n with bitstring labels ("010", first irrelevant of coordinate 0
  /// leftmost). Requires 2^n <= max_elements. boolean_cube(0) is the
  /// one-element lattice with the empty label.
  static LatticePtr boolean_cube(std::size_t n,
                                 std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const noexcept { return size_; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  bool leq(Index x, Index y) const;
  Index join(Index x, Index y) const;
  Index meet(Index x, Index y) const;

  /// Supremum of a subset; the empty join is the bottom element.
  Index join_all(std::span<const Index> xs) const;
  /// Infimum of a subset; the empty meet is the top element.
  Index meet_all(std::span<const Index> xs) const;

  std::string label(Index x) const;
  std::vector<std::string> label_list() const;
  std::optional<Index> find(std::string_view label) const;
  /// Like find() but throws UnknownLabel.
  Index index_of(std::string_view label) const;

  /// Hasse edges as (lower, upper) pairs, sorted by (lower, upper).
  std::vector<std::pair<Index, Index>> cover_pairs() const;
  std::vector<Index> lower_covers(Index x) const;
  std::vector<Index> upper_covers(Index x) const;

  /// Length of the longest chain from bottom to each element.
  std::vector<std::size_t> heights() const;

  /// (a> = { x | x <= a }, in element order.
  std::vector<Index> principal_ideal(Index a) const;
  /// <a) = { x | a <= x }, in element order.
  std::vector<Index> principal_filter(Index a) const;
  /// True iff xs is downward closed.
  bool is_down_set(std::span<const Index> xs) const;

  /// Non-bottom elements with exactly one lower cover, in element order.
  std::vector<Index> join_irreducibles() const;
  /// Checks x /\ (y \/ z) == (x /\ y) \/ (x /\ z) over all triples.
  bool is_distributive() const;

  bool is_product() const noexcept;
  void check_index(Index x) const;

 private:
  struct Dense {
    std::vector<std::uint8_t> leq;  // n*n row-major
    std::vector<Index> join;        // n*n
    std::vector<Index> meet;        // n*n
    std::vector<std::string> labels;
    std::unordered_map<std::string, Index> by_label;
  };
  enum class ProductLabels { Tuple, Bits };
  struct Product {
    std::vector<LatticePtr> factors;
    std::vector<std::size_t> strides;  // strides[i] = prod of sizes after i
    ProductLabels label_style = ProductLabels::Tuple;
  };

  FiniteLattice() = default;
  static LatticePtr make_dense(std::vector<std::string> labels,
                               std::vector<std::uint8_t> leq);
  static LatticePtr make_product(std::vector<LatticePtr> factors,
                                 ProductLabels style,
                                 std::size_t max_elements);

  const Dense& dense() const { return std::get<Dense>(rep_); }
  const Product& prod() const { return std::get<Product>(rep_); }

  std::variant<Dense, Product> rep_;
  std::size_t size_ = 0;
  Index bottom_ = 0;
  Index top_ = 0;

  friend LatticePtr dual(const LatticePtr& lattice);
  friend class ProductCodec;
  friend std::pair<LatticePtr, ProductCodec> product(std::vector<LatticePtr> factors,
                                                     std::size_t max_elements);
};

/// Same carrier, reversed order: join and meet swap, as do bottom and top.
/// Element indices and labels are preserved, so dual(dual(L)) is L exactly.
LatticePtr dual(const LatticePtr& lattice);

/// Structural equality: same labels in the same positions and the same order
/// relation. Pointer-identical lattices compare equal without any scan.
bool same_lattice(const FiniteLattice& a, const FiniteLattice& b);
inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return same_lattice(*a, *b);
}

/// Bijection between product-element indices and coordinate tuples
/// (mixed-radix encoding, first coordinate most significant).
class ProductCodec {
 public:
  const LatticePtr& product_lattice() const { return product_; }
  const std::vector<LatticePtr>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }

  Index encode(std::span<const Index> coords) const;
  void decode_into(Index x, std::span<Index> out) const;
  std::vector<Index> decode(Index x) const;

 private:
  ProductCodec(LatticePtr product, std::vector<LatticePtr> factors,
               std::vector<std::size_t> strides)
      : product_(std::move(product)),
        factors_(std::move(factors)),
        strides_(std::move(strides)) {}

  LatticePtr product_;
  std::vector<LatticePtr> factors_;
  std::vector<std::size_t> strides_;

  friend std::pair<LatticePtr, ProductCodec> product(
      std::vector<LatticePtr> factors, std::size_t max_elements);
};

/// Direct product with coordinatewise order. Throws SizeLimit when the
/// element count would exceed max_elements, InvalidArgument on zero factors.
std::pair<LatticePtr, ProductCodec> product(
    std::vector<LatticePtr> factors,
    std::size_t max_elements = kDefaultMaxElements);

/// The six-element example lattice used throughout the test fixtures:
/// covers 0<a, 0<c, a<b, a<d, c<d, b<1, d<1. Isomorphic to 3 x 2.
LatticePtr fixture_l6();

/// M3: bottom, three incomparable atoms x,y,z, top. Not distributive.
LatticePtr diamond_m3();

/// N5: 0 < a < b < 1 and 0 < c < 1. Not distributive (and not modular).
LatticePtr pentagon_n5();

}  // namespace latgal

#endif
