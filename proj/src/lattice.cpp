// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latgal {
namespace {

// Row-major bit matrix; row x holds the up-set of x when used for "leq".
struct BitMatrix {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitMatrix(std::size_t size)
      : n(size), words((size + 63) / 64), bits(size * words, 0) {}

  void set(std::size_t x, std::size_t y) {
    bits[x * words + y / 64] |= std::uint64_t{1} << (y % 64);
  }
  bool get(std::size_t x, std::size_t y) const {
    return (bits[x * words + y / 64] >> (y % 64)) & 1;
  }
  const std::uint64_t* row(std::size_t x) const { return &bits[x * words]; }

  // true iff row(a) is a subset of row(b)
  bool row_subset(std::size_t a, std::size_t b) const {
    const std::uint64_t* ra = row(a);
    const std::uint64_t* rb = row(b);
    for (std::size_t w = 0; w < words; ++w) {
      if (ra[w] & ~rb[w]) return false;
    }
    return true;
  }
};

std::vector<Index> intersect_rows(const BitMatrix& m, std::size_t a,
                                  std::size_t b) {
  std::vector<Index> out;
  const std::uint64_t* ra = m.row(a);
  const std::uint64_t* rb = m.row(b);
  for (std::size_t w = 0; w < m.words; ++w) {
    std::uint64_t word = ra[w] & rb[w];
    while (word) {
      unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
      out.push_back(static_cast<Index>(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

void check_dense_size(std::size_t n) {
  if (n > kDenseMaxElements) {
    fail(ErrorKind::SizeLimit, "lattice with ", n,
         " elements exceeds the dense-table limit of ", kDenseMaxElements);
  }
}

}  // namespace

void FiniteLattice::check_index(Index x) const {
  if (x >= size_) {
    fail(ErrorKind::InvalidArgument, "element index ", x,
         " out of range for a lattice of size ", size_);
  }
}

LatticePtr FiniteLattice::make_dense(std::vector<std::string> labels,
                                     std::vector<std::uint8_t> leq) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorKind::NoBounds, "empty element list has no bottom or top");
  check_dense_size(n);

  BitMatrix up(n);
  BitMatrix down(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[x * n + y]) {
        up.set(x, y);
        down.set(y, x);
      }
    }
  }

  // partial-order validation
  for (std::size_t x = 0; x < n; ++x) {
    if (!up.get(x, x)) {
      fail(ErrorKind::InvalidArgument, "order is not reflexive at '", labels[x], "'");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (up.get(x, y) && up.get(y, x)) {
        fail(ErrorKind::CycleError, "elements '", labels[x], "' and '",
             labels[y], "' are mutually comparable");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && up.get(x, y) && !up.row_subset(y, x)) {
        fail(ErrorKind::InvalidArgument, "order is not transitive above '",
             labels[x], "'");
      }
    }
  }

  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  Dense rep;
  rep.leq = std::move(leq);
  rep.join.assign(n * n, 0);
  rep.meet.assign(n * n, 0);

  // join(x,y): the unique member of up(x) & up(y) below all other members.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::vector<Index> ub = intersect_rows(up, x, y);
      Index least = 0;
      bool found = false;
      for (Index u : ub) {
        bool below_all = true;
        const std::uint64_t* ru = up.row(u);
        for (std::size_t w = 0; w < up.words && below_all; ++w) {
          std::uint64_t need = up.row(x)[w] & up.row(y)[w];
          if (need & ~ru[w]) below_all = false;
        }
        if (below_all) {
          least = u;
          found = true;
          break;
        }
      }
      if (!found) {
        fail(ErrorKind::NotALattice, "elements '", labels[x], "' and '",
             labels[y], "' have no least upper bound");
      }
      rep.join[x * n + y] = least;
      rep.join[y * n + x] = least;

      std::vector<Index> lb = intersect_rows(down, x, y);
      Index greatest = 0;
      found = false;
      for (Index u : lb) {
        bool above_all = true;
        const std::uint64_t* ru = down.row(u);
        for (std::size_t w = 0; w < down.words && above_all; ++w) {
          std::uint64_t need = down.row(x)[w] & down.row(y)[w];
          if (need & ~ru[w]) above_all = false;
        }
        if (above_all) {
          greatest = u;
          found = true;
          break;
        }
      }
      if (!found) {
        fail(ErrorKind::NotALattice, "elements '", labels[x], "' and '",
             labels[y], "' have no greatest lower bound");
      }
      rep.meet[x * n + y] = greatest;
      rep.meet[y * n + x] = greatest;
    }
  }

  Index bot = 0;
  Index top = 0;
  for (std::size_t x = 1; x < n; ++x) {
    bot = rep.meet[bot * n + x];
    top = rep.join[top * n + x];
  }

  rep.by_label.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = rep.by_label.emplace(labels[i], static_cast<Index>(i));
    if (!inserted) {
      fail(ErrorKind::InvalidArgument, "duplicate element label '", labels[i], "'");
    }
  }
  rep.labels = std::move(labels);

  lattice->rep_ = std::move(rep);
  lattice->size_ = n;
  lattice->bottom_ = bot;
  lattice->top_ = top;
  return lattice;
}

LatticePtr FiniteLattice::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorKind::NoBounds, "empty element list has no bottom or top");
  check_dense_size(n);

  std::unordered_map<std::string, Index> by_label;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = by_label.emplace(labels[i], static_cast<Index>(i));
    if (!inserted) {
      fail(ErrorKind::InvalidArgument, "duplicate element label '", labels[i], "'");
    }
  }

  std::vector<std::vector<Index>> above(n);
  for (const auto& [lo, hi] : covers) {
    auto lo_it = by_label.find(lo);
    auto hi_it = by_label.find(hi);
    if (lo_it == by_label.end() || hi_it == by_label.end()) {
      fail(ErrorKind::UnknownLabel, "cover pair (", lo, ", ", hi,
           ") references an element that is not in the label list");
    }
    if (lo_it->second == hi_it->second) {
      fail(ErrorKind::CycleError, "cover pair (", lo, ", ", hi,
           ") relates an element to itself");
    }
    above[lo_it->second].push_back(hi_it->second);
  }

  // cycle detection: iterative DFS with colors over the cover digraph
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<Index, std::size_t>> stack;
  for (Index start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.emplace_back(start, 0);
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < above[node].size()) {
        Index child = above[node][next++];
        if (color[child] == 1) {
          fail(ErrorKind::CycleError, "covers induce a cycle through '",
               labels[child], "'");
        }
        if (color[child] == 0) {
          color[child] = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }

  // reflexive-transitive closure by DFS from each element
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<Index> todo;
  for (Index x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    todo.assign(1, x);
    while (!todo.empty()) {
      Index cur = todo.back();
      todo.pop_back();
      for (Index up : above[cur]) {
        if (!leq[x * n + up]) {
          leq[x * n + up] = 1;
          todo.push_back(up);
        }
      }
    }
  }

  return make_dense(std::move(labels), std::move(leq));
}

LatticePtr FiniteLattice::from_order(std::vector<std::string> labels,
                                     const std::vector<std::uint8_t>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n * n) {
    fail(ErrorKind::InvalidArgument, "order matrix has ", leq.size(),
         " entries, expected ", n * n);
  }
  std::vector<std::uint8_t> normalized(n * n);
  for (std::size_t i = 0; i < n * n; ++i) normalized[i] = leq[i] ? 1 : 0;
  return make_dense(std::move(labels), std::move(normalized));
}

LatticePtr FiniteLattice::chain(std::size_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "chain requires at least one element");
  check_dense_size(n);
  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  Dense rep;
  rep.leq.assign(n * n, 0);
  rep.join.assign(n * n, 0);
  rep.meet.assign(n * n, 0);
  rep.labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep.labels.push_back(std::to_string(x));
    rep.by_label.emplace(rep.labels.back(), static_cast<Index>(x));
    for (std::size_t y = 0; y < n; ++y) {
      rep.leq[x * n + y] = x <= y;
      rep.join[x * n + y] = static_cast<Index>(std::max(x, y));
      rep.meet[x * n + y] = static_cast<Index>(std::min(x, y));
    }
  }
  lattice->rep_ = std::move(rep);
  lattice->size_ = n;
  lattice->bottom_ = 0;
  lattice->top_ = static_cast<Index>(n - 1);
  return lattice;
}

LatticePtr FiniteLattice::make_product(std::vector<LatticePtr> factors,
                                       ProductLabels style,
                                       std::size_t max_elements) {
  if (factors.empty()) {
    fail(ErrorKind::InvalidArgument, "product requires at least one factor");
  }
  std::size_t size = 1;
  for (const LatticePtr& f : factors) {
    if (f->size() == 0 || size > max_elements / f->size()) {
      fail(ErrorKind::SizeLimit, "product size exceeds the limit of ",
           max_elements, " elements");
    }
    size *= f->size();
  }
  std::vector<std::size_t> strides(factors.size());
  std::size_t stride = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    strides[i] = stride;
    stride *= factors[i]->size();
  }

  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  std::size_t bot = 0;
  std::size_t top = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    bot += factors[i]->bottom() * strides[i];
    top += factors[i]->top() * strides[i];
  }
  Product rep;
  rep.factors = std::move(factors);
  rep.strides = std::move(strides);
  rep.label_style = style;
  lattice->rep_ = std::move(rep);
  lattice->size_ = size;
  lattice->bottom_ = static_cast<Index>(bot);
  lattice->top_ = static_cast<Index>(top);
  return lattice;
}

LatticePtr FiniteLattice::boolean_cube(std::size_t n, std::size_t max_elements) {
  if (n == 0) {
    std::vector<std::uint8_t> leq{1};
    return make_dense({""}, std::move(leq));
  }
  std::vector<LatticePtr> factors(n, chain(2));
  return make_product(std::move(factors), ProductLabels::Bits, max_elements);
}

bool FiniteLattice::is_product() const noexcept {
  return std::holds_alternative<Product>(rep_);
}

bool FiniteLattice::leq(Index x, Index y) const {
  check_index(x);
  check_index(y);
  if (const Dense* d = std::get_if<Dense>(&rep_)) {
    return d->leq[static_cast<std::size_t>(x) * size_ + y];
  }
  const Product& p = prod();
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    std::size_t sz = p.factors[i]->size();
    Index xi = static_cast<Index>((x / p.strides[i]) % sz);
    Index yi = static_cast<Index>((y / p.strides[i]) % sz);
    if (!p.factors[i]->leq(xi, yi)) return false;
  }
  return true;
}

Index FiniteLattice::join(Index x, Index y) const {
  check_index(x);
  check_index(y);
  if (const Dense* d = std::get_if<Dense>(&rep_)) {
    return d->join[static_cast<std::size_t>(x) * size_ + y];
  }
  const Product& p = prod();
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    std::size_t sz = p.factors[i]->size();
    Index xi = static_cast<Index>((x / p.strides[i]) % sz);
    Index yi = static_cast<Index>((y / p.strides[i]) % sz);
    out += p.factors[i]->join(xi, yi) * p.strides[i];
  }
  return static_cast<Index>(out);
}

Index FiniteLattice::meet(Index x, Index y) const {
  check_index(x);
  check_index(y);
  if (const Dense* d = std::get_if<Dense>(&rep_)) {
    return d->meet[static_cast<std::size_t>(x) * size_ + y];
  }
  const Product& p = prod();
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    std::size_t sz = p.factors[i]->size();
    Index xi = static_cast<Index>((x / p.strides[i]) % sz);
    Index yi = static_cast<Index>((y / p.strides[i]) % sz);
    out += p.factors[i]->meet(xi, yi) * p.strides[i];
  }
  return static_cast<Index>(out);
}

Index FiniteLattice::join_all(std::span<const Index> xs) const {
  Index acc = bottom_;
  for (Index x : xs) acc = join(acc, x);
  return acc;
}

Index FiniteLattice::meet_all(std::span<const Index> xs) const {
  Index acc = top_;
  for (Index x : xs) acc = meet(acc, x);
  return acc;
}

std::string FiniteLattice::label(Index x) const {
  check_index(x);
  if (const Dense* d = std::get_if<Dense>(&rep_)) return d->labels[x];
  const Product& p = prod();
  std::string out;
  if (p.label_style == ProductLabels::Bits) {
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      std::size_t sz = p.factors[i]->size();
      out += p.factors[i]->label(static_cast<Index>((x / p.strides[i]) % sz));
    }
    return out;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i) out.push_back(',');
    std::size_t sz = p.factors[i]->size();
    out += p.factors[i]->label(static_cast<Index>((x / p.strides[i]) % sz));
  }
  out.push_back(')');
  return out;
}

std::vector<std::string> FiniteLattice::label_list() const {
  std::vector<std::string> out;
  out.reserve(size_);
  for (Index x = 0; x < size_; ++x) out.push_back(label(x));
  return out;
}

std::optional<Index> FiniteLattice::find(std::string_view text) const {
  if (const Dense* d = std::get_if<Dense>(&rep_)) {
    auto it = d->by_label.find(std::string(text));
    if (it == d->by_label.end()) return std::nullopt;
    return it->second;
  }
  const Product& p = prod();
  if (p.label_style == ProductLabels::Bits) {
    if (text.size() != p.factors.size()) return std::nullopt;
    std::size_t out = 0;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      auto ci = p.factors[i]->find(text.substr(i, 1));
      if (!ci) return std::nullopt;
      out += *ci * p.strides[i];
    }
    return static_cast<Index>(out);
  }
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    return std::nullopt;
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t out = 0;
  std::size_t coord = 0;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      if (coord >= p.factors.size()) return std::nullopt;
      auto ci = p.factors[coord]->find(body.substr(start, i - start));
      if (!ci) return std::nullopt;
      out += *ci * p.strides[coord];
      ++coord;
      start = i + 1;
    }
  }
  if (coord != p.factors.size()) return std::nullopt;
  return static_cast<Index>(out);
}

Index FiniteLattice::index_of(std::string_view text) const {
  auto found = find(text);
  if (!found) {
    fail(ErrorKind::UnknownLabel, "no element labelled '", std::string(text),
         "' in this lattice");
  }
  return *found;
}

std::vector<Index> FiniteLattice::lower_covers(Index x) const {
  check_index(x);
  if (is_product()) {
    const Product& p = prod();
    std::vector<Index> out;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      std::size_t sz = p.factors[i]->size();
      Index xi = static_cast<Index>((x / p.strides[i]) % sz);
      for (Index lo : p.factors[i]->lower_covers(xi)) {
        out.push_back(static_cast<Index>(x - (xi - lo) * p.strides[i]));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Index> below;
  for (Index y = 0; y < size_; ++y) {
    if (y != x && leq(y, x)) below.push_back(y);
  }
  std::vector<Index> out;
  for (Index y : below) {
    bool covered = false;
    for (Index z : below) {
      if (z != y && leq(y, z)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(y);
  }
  return out;
}

std::vector<Index> FiniteLattice::upper_covers(Index x) const {
  check_index(x);
  if (is_product()) {
    const Product& p = prod();
    std::vector<Index> out;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      std::size_t sz = p.factors[i]->size();
      Index xi = static_cast<Index>((x / p.strides[i]) % sz);
      for (Index hi : p.factors[i]->upper_covers(xi)) {
        out.push_back(static_cast<Index>(x + (hi - xi) * p.strides[i]));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Index> above;
  for (Index y = 0; y < size_; ++y) {
    if (y != x && leq(x, y)) above.push_back(y);
  }
  std::vector<Index> out;
  for (Index y : above) {
    bool covered = false;
    for (Index z : above) {
      if (z != y && leq(z, y)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<Index, Index>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < size_; ++x) {
    for (Index up : upper_covers(x)) out.emplace_back(x, up);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FiniteLattice::heights() const {
  if (is_product()) {
    const Product& p = prod();
    std::vector<std::vector<std::size_t>> factor_heights;
    factor_heights.reserve(p.factors.size());
    for (const LatticePtr& f : p.factors) factor_heights.push_back(f->heights());
    std::vector<std::size_t> out(size_, 0);
    for (Index x = 0; x < size_; ++x) {
      std::size_t h = 0;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        std::size_t sz = p.factors[i]->size();
        h += factor_heights[i][(x / p.strides[i]) % sz];
      }
      out[x] = h;
    }
    return out;
  }
  // longest path from bottom in the cover DAG; process by ideal size
  std::vector<Index> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> ideal_size(size_, 0);
  for (Index x = 0; x < size_; ++x) {
    for (Index y = 0; y < size_; ++y) {
      if (leq(y, x)) ++ideal_size[x];
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return ideal_size[a] < ideal_size[b];
  });
  std::vector<std::size_t> h(size_, 0);
  for (Index x : order) {
    for (Index lo : lower_covers(x)) h[x] = std::max(h[x], h[lo] + 1);
  }
  return h;
}

std::vector<Index> FiniteLattice::principal_ideal(Index a) const {
  check_index(a);
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x) {
    if (leq(x, a)) out.push_back(x);
  }
  return out;
}

std::vector<Index> FiniteLattice::principal_filter(Index a) const {
  check_index(a);
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x) {
    if (leq(a, x)) out.push_back(x);
  }
  return out;
}

bool FiniteLattice::is_down_set(std::span<const Index> xs) const {
  std::vector<std::uint8_t> mask(size_, 0);
  for (Index x : xs) {
    check_index(x);
    mask[x] = 1;
  }
  for (Index x : xs) {
    for (Index y = 0; y < size_; ++y) {
      if (leq(y, x) && !mask[y]) return false;
    }
  }
  return true;
}

std::vector<Index> FiniteLattice::join_irreducibles() const {
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x) {
    if (x == bottom_) continue;
    if (lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

bool FiniteLattice::is_distributive() const {
  for (Index x = 0; x < size_; ++x) {
    for (Index y = 0; y < size_; ++y) {
      for (Index z = 0; z < size_; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

LatticePtr dual(const LatticePtr& lattice) {
  auto out = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  out->size_ = lattice->size_;
  out->bottom_ = lattice->top_;
  out->top_ = lattice->bottom_;
  if (const auto* d = std::get_if<FiniteLattice::Dense>(&lattice->rep_)) {
    FiniteLattice::Dense rep;
    const std::size_t n = lattice->size_;
    rep.leq.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) rep.leq[x * n + y] = d->leq[y * n + x];
    }
    rep.join = d->meet;
    rep.meet = d->join;
    rep.labels = d->labels;
    rep.by_label = d->by_label;
    out->rep_ = std::move(rep);
  } else {
    const auto& p = std::get<FiniteLattice::Product>(lattice->rep_);
    FiniteLattice::Product rep;
    rep.strides = p.strides;
    rep.label_style = p.label_style;
    rep.factors.reserve(p.factors.size());
    for (const LatticePtr& f : p.factors) rep.factors.push_back(dual(f));
    out->rep_ = std::move(rep);
  }
  return out;
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  if (&a == &b) return true;
  if (a.size() != b.size()) return false;
  // Beyond the dense limit a full structural scan is quadratic in a size we
  // refuse to table; distinct large objects count as distinct hosts.
  if (a.size() > kDenseMaxElements) return false;
  for (Index x = 0; x < a.size(); ++x) {
    if (a.label(x) != b.label(x)) return false;
  }
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(x, y)) return false;
    }
  }
  return true;
}

Index ProductCodec::encode(std::span<const Index> coords) const {
  if (coords.size() != factors_.size()) {
    fail(ErrorKind::ArityMismatch, "tuple has ", coords.size(),
         " coordinates, expected ", factors_.size());
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i]->check_index(coords[i]);
    out += coords[i] * strides_[i];
  }
  return static_cast<Index>(out);
}

void ProductCodec::decode_into(Index x, std::span<Index> out) const {
  product_->check_index(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = static_cast<Index>((x / strides_[i]) % factors_[i]->size());
  }
}

std::vector<Index> ProductCodec::decode(Index x) const {
  std::vector<Index> out(factors_.size());
  decode_into(x, out);
  return out;
}

std::pair<LatticePtr, ProductCodec> product(std::vector<LatticePtr> factors,
                                            std::size_t max_elements) {
  LatticePtr lattice = FiniteLattice::make_product(
      factors, FiniteLattice::ProductLabels::Tuple, max_elements);
  std::vector<std::size_t> strides(factors.size());
  std::size_t stride = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    strides[i] = stride;
    stride *= factors[i]->size();
  }
  return {lattice, ProductCodec(lattice, std::move(factors), std::move(strides))};
}

LatticePtr fixture_l6() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"0", "c"}, {"a", "b"}, {"a", "d"}, {"c", "d"}, {"b", "1"}, {"d", "1"}});
}

LatticePtr diamond_m3() {
  return FiniteLattice::from_covers(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

LatticePtr pentagon_n5() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

}  // namespace latgal
