#pragma once

// Shared helpers for the test suites: canned pre-orders, random pre-order
// generators, and an independent dense rational elimination oracle. The
// oracle works straight from the basis multiplication law by index
// arithmetic and uses its own Gauss-Jordan elimination, so it shares no
// code with the library's sparse solver.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/commuting.hpp"
#include "incalg/preorder.hpp"

namespace testutil {

using incalg::Int;
using incalg::PreOrder;
using incalg::PreOrderPtr;
using incalg::Rat;

// ---------- canned pre-orders ----------

inline std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// 1 < 3, 2 < 3: the smallest connected set whose directed edges fall into
// two distinct classes, so the properness guarantee fails.
inline PreOrderPtr intro_poset() {
  return incalg::build_preorder({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}}, true);
}

// Cover relations 1 < 2, 2 < 3, 2 < 4; closure adds (1,3) and (1,4). All
// five directed edges form a single class.
inline PreOrderPtr fork_poset() {
  return incalg::build_preorder({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"2", "4"}}, true);
}

// Total order 1 < 2 < ... < n (transitively closed): upper triangular shape.
inline PreOrderPtr chain_poset(int n) {
  auto labels = numbered_labels(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i + 1 < n; ++i)
    pairs.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(i + 1)]);
  return incalg::build_preorder(labels, pairs, true);
}

// Every ordered pair related (x <= y for all x, y): full square shape.
inline PreOrderPtr full_preorder(int n) {
  auto labels = numbered_labels(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        pairs.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  return incalg::build_preorder(labels, pairs, false);
}

// No relations at all besides reflexivity.
inline PreOrderPtr antichain_poset(int n) {
  return incalg::build_preorder(numbered_labels(n), {}, false);
}

// Center 1 below leaves 2, 3, 4; the comparability graph is a tree.
inline PreOrderPtr star_poset() {
  return incalg::build_preorder({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"1", "4"}}, true);
}

// Two disjoint chains 1 < 2 and 3 < 4.
inline PreOrderPtr two_chains_poset() {
  return incalg::build_preorder({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}}, false);
}

// Disjoint union with labels prefixed "a:" / "b:" to keep them distinct.
inline PreOrderPtr disjoint_union(const PreOrder& a, const PreOrder& b) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& l : a.labels()) labels.push_back("a:" + l);
  for (const auto& l : b.labels()) labels.push_back("b:" + l);
  for (auto [x, y] : a.directed_edges()) pairs.emplace_back("a:" + a.label(x), "a:" + a.label(y));
  for (auto [x, y] : b.directed_edges()) pairs.emplace_back("b:" + b.label(x), "b:" + b.label(y));
  return incalg::build_preorder(std::move(labels), pairs, false);
}

// Same relation presented with the elements in a permuted order: element k of
// the result is element perm[k] of the input, labels carried along.
inline PreOrderPtr relabeled(const PreOrder& p, const std::vector<int>& perm) {
  std::vector<std::string> labels;
  for (int k : perm) labels.push_back(p.label(k));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [x, y] : p.directed_edges()) pairs.emplace_back(p.label(x), p.label(y));
  return incalg::build_preorder(std::move(labels), pairs, false);
}

// Transitive closure of a random strict-pair sample.
inline PreOrderPtr random_preorder(int n, std::mt19937_64& rng, double density = 0.3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto labels = numbered_labels(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng) < density)
        pairs.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  return incalg::build_preorder(labels, pairs, true);
}

inline PreOrderPtr random_connected_preorder(int n, std::mt19937_64& rng, double density = 0.4) {
  for (;;) {
    PreOrderPtr p = random_preorder(n, rng, density);
    if (p->is_connected()) return p;
  }
}

// ---------- small random scalars ----------

inline Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rat q = random_rational(rng);
    if (q != 0) return q;
  }
}

// Exact embedding of a rational into a ring (caller keeps integrality for Z).
inline incalg::RingValue ring_value(const incalg::Ring& ring, const Rat& q) {
  return ring.fraction(boost::multiprecision::numerator(q),
                       boost::multiprecision::denominator(q));
}

// ---------- independent dense rational elimination ----------

using DenseRow = std::vector<Rat>;
using DenseMat = std::vector<DenseRow>;

// In-place Gauss-Jordan over the rationals; returns the pivot columns, so the
// rank is the returned size and rows beyond it end up zero.
inline std::vector<int> dense_rref(DenseMat& m, int cols) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(sel)]);
    DenseRow& pivot_row = m[static_cast<std::size_t>(r)];
    Rat lead = pivot_row[static_cast<std::size_t>(c)];
    for (auto& x : pivot_row) x /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int c2 = 0; c2 < cols; ++c2)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)] -=
            f * pivot_row[static_cast<std::size_t>(c2)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int dense_rank(DenseMat m, int cols) { return static_cast<int>(dense_rref(m, cols).size()); }

// One vector per free column, entry 1 there and the negated reduced column on
// the pivot coordinates; spans the solution set of m v = 0.
inline DenseMat dense_nullspace(DenseMat m, int cols) {
  std::vector<int> pivots = dense_rref(m, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  DenseMat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    DenseRow v(static_cast<std::size_t>(cols), Rat(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------- dimension oracles (index arithmetic only) ----------

// Lookup table from basis pair to basis index for a pre-order.
struct BasisIndexer {
  std::vector<std::pair<int, int>> basis;
  std::map<std::pair<int, int>, int> index;

  explicit BasisIndexer(const PreOrder& p) : basis(p.basis_pairs()) {
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[static_cast<std::size_t>(i)]] = i;
  }
  int size() const { return static_cast<int>(basis.size()); }
};

// The commutator [e_a, e_b] as a dense coefficient vector, straight from the
// multiplication rule e_xy e_uv = [y==u] e_xv.
inline DenseRow basis_commutator_dense(const BasisIndexer& bi, int a, int b) {
  DenseRow out(static_cast<std::size_t>(bi.size()), Rat(0));
  auto [x, y] = bi.basis[static_cast<std::size_t>(a)];
  auto [u, v] = bi.basis[static_cast<std::size_t>(b)];
  if (y == u) out[static_cast<std::size_t>(bi.index.at({x, v}))] += 1;
  if (v == x) out[static_cast<std::size_t>(bi.index.at({u, y}))] -= 1;
  return out;
}

// Dimensions over Q of (a) the space of maps with [theta(e_a), e_b] equal to
// [e_a, theta(e_b)] on all basis pairs and (b) the span of the proper-map
// generators. Unknown (source s, target t) sits at s*B + t.
inline std::pair<int, int> commuting_proper_dims_oracle(const PreOrder& p) {
  BasisIndexer bi(p);
  const int B = bi.size();
  const int cols = B * B;
  DenseMat rows;
  for (int b1 = 0; b1 < B; ++b1) {
    for (int b2 = b1; b2 < B; ++b2) {
      DenseMat eq(static_cast<std::size_t>(B), DenseRow(static_cast<std::size_t>(cols), Rat(0)));
      for (int t = 0; t < B; ++t) {
        DenseRow left = basis_commutator_dense(bi, t, b2);   // theta(e_b1) = e_t
        DenseRow right = basis_commutator_dense(bi, b1, t);  // theta(e_b2) = e_t
        for (int pos = 0; pos < B; ++pos) {
          if (left[static_cast<std::size_t>(pos)] != 0)
            eq[static_cast<std::size_t>(pos)][static_cast<std::size_t>(b1 * B + t)] +=
                left[static_cast<std::size_t>(pos)];
          if (right[static_cast<std::size_t>(pos)] != 0)
            eq[static_cast<std::size_t>(pos)][static_cast<std::size_t>(b2 * B + t)] -=
                right[static_cast<std::size_t>(pos)];
        }
      }
      for (auto& row : eq) {
        bool nonzero = false;
        for (const auto& x : row)
          if (x != 0) {
            nonzero = true;
            break;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  int dim_commuting = cols - dense_rank(std::move(rows), cols);

  auto comps = p.connected_components();
  std::vector<int> comp_of(static_cast<std::size_t>(p.size()), 0);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int x : comps[static_cast<std::size_t>(c)]) comp_of[static_cast<std::size_t>(x)] = c;
  DenseMat gens;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    // f -> delta_c * f: keeps exactly the basis pairs inside component c.
    DenseRow g(static_cast<std::size_t>(cols), Rat(0));
    for (int b = 0; b < B; ++b)
      if (comp_of[static_cast<std::size_t>(bi.basis[static_cast<std::size_t>(b)].first)] == c)
        g[static_cast<std::size_t>(b * B + b)] = 1;
    gens.push_back(std::move(g));
  }
  for (int b = 0; b < B; ++b) {
    for (const auto& comp : comps) {
      // e_b -> delta_c, everything else -> 0.
      DenseRow g(static_cast<std::size_t>(cols), Rat(0));
      for (int w : comp) g[static_cast<std::size_t>(b * B + bi.index.at({w, w}))] = 1;
      gens.push_back(std::move(g));
    }
  }
  int dim_proper = dense_rank(std::move(gens), cols);
  return {dim_commuting, dim_proper};
}

// Dimension over Q of { z : [z, e_b] = 0 for every basis pair b }.
inline int center_dim_oracle(const PreOrder& p) {
  BasisIndexer bi(p);
  const int B = bi.size();
  DenseMat rows;
  for (int b = 0; b < B; ++b) {
    DenseMat eq(static_cast<std::size_t>(B), DenseRow(static_cast<std::size_t>(B), Rat(0)));
    for (int t = 0; t < B; ++t) {
      DenseRow c = basis_commutator_dense(bi, t, b);
      for (int pos = 0; pos < B; ++pos)
        if (c[static_cast<std::size_t>(pos)] != 0)
          eq[static_cast<std::size_t>(pos)][static_cast<std::size_t>(t)] +=
              c[static_cast<std::size_t>(pos)];
    }
    for (auto& row : eq) {
      bool nonzero = false;
      for (const auto& x : row)
        if (x != 0) {
          nonzero = true;
          break;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return B - dense_rank(std::move(rows), B);
}

// ---------- coefficient-relation system (independent restatement) ----------

// Unknown layout for shape-conforming coefficient tables on a connected set:
// diag[b][x] at b*n + x, and for the k-th strict basis pair (in basis order)
// edge value at B*n + k. Returns the column count through `cols`.
inline DenseMat relation_system(const PreOrder& p, int& cols) {
  BasisIndexer bi(p);
  const int B = bi.size();
  const int n = p.size();
  std::map<int, int> strict_rank;  // basis idx -> dense rank among strict pairs
  for (int b = 0; b < B; ++b) {
    auto [i, j] = bi.basis[static_cast<std::size_t>(b)];
    if (i != j) {
      int next = static_cast<int>(strict_rank.size());
      strict_rank[b] = next;
    }
  }
  cols = B * n + static_cast<int>(strict_rank.size());
  auto diag_col = [&](int source_b, int x) { return source_b * n + x; };
  auto edge_col = [&](int source_b) { return B * n + strict_rank.at(source_b); };

  DenseMat rows;
  auto push = [&](std::initializer_list<std::pair<int, int>> terms) {
    DenseRow row(static_cast<std::size_t>(cols), Rat(0));
    for (auto [col, coef] : terms) row[static_cast<std::size_t>(col)] += coef;
    rows.push_back(std::move(row));
  };

  for (int b = 0; b < B; ++b) {
    auto [i, l] = bi.basis[static_cast<std::size_t>(b)];
    if (i == l) continue;
    int ii = bi.index.at({i, i});
    int ll = bi.index.at({l, l});
    // edge value determined from the lower diagonal source...
    push({{edge_col(b), 1}, {diag_col(ii, i), -1}, {diag_col(ii, l), 1}});
    // ...and from the upper diagonal source.
    push({{edge_col(b), 1}, {diag_col(ll, l), -1}, {diag_col(ll, i), 1}});
    // diagonal images of e_mm match across the edge (i,l) for other m.
    for (int m = 0; m < n; ++m) {
      if (m == i || m == l) continue;
      int mm = bi.index.at({m, m});
      push({{diag_col(mm, i), 1}, {diag_col(mm, l), -1}});
    }
    // the diagonal part of a strict image is constant.
    for (int x = 1; x < n; ++x) push({{diag_col(b, x), 1}, {diag_col(b, 0), -1}});
    // consecutive strict pairs share their edge value.
    for (int m = 0; m < n; ++m) {
      if (m != l && p.leq(l, m)) {
        int lm = bi.index.at({l, m});
        push({{edge_col(b), 1}, {edge_col(lm), -1}});
      }
    }
  }
  return rows;
}

// Random table satisfying the relation system, as a rational vector in the
// layout above.
inline DenseRow sample_relation_solution(const DenseMat& nullbasis, int cols,
                                         std::mt19937_64& rng) {
  DenseRow v(static_cast<std::size_t>(cols), Rat(0));
  for (const DenseRow& b : nullbasis) {
    Rat a = random_rational(rng);
    if (a == 0) continue;
    for (int c = 0; c < cols; ++c) v[static_cast<std::size_t>(c)] += a * b[static_cast<std::size_t>(c)];
  }
  return v;
}

// Converts a solution vector into the library's table form over `ring`.
inline incalg::CoefficientTable table_from_solution(const incalg::Algebra& algebra,
                                                    const DenseRow& v) {
  const int B = algebra.basis_size();
  const int n = algebra.order().size();
  incalg::CoefficientTable table;
  table.diag.assign(static_cast<std::size_t>(B),
                    std::vector<incalg::RingValue>(static_cast<std::size_t>(n)));
  int strict_seen = 0;
  for (int b = 0; b < B; ++b) {
    for (int x = 0; x < n; ++x)
      table.diag[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] =
          ring_value(algebra.ring(), v[static_cast<std::size_t>(b * n + x)]);
    auto [i, j] = algebra.basis()[static_cast<std::size_t>(b)];
    if (i != j) {
      table.edge[b] = ring_value(algebra.ring(), v[static_cast<std::size_t>(B * n + strict_seen)]);
      ++strict_seen;
    }
  }
  return table;
}

// Multiplies a rational vector by the common denominator so every entry is
// integral (for re-use over Z and modular rings).
inline DenseRow cleared_denominators(const DenseRow& v) {
  Int lcm = 1;
  for (const Rat& q : v) {
    Int den = boost::multiprecision::denominator(q);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  DenseRow out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(q * Rat(lcm));
  return out;
}

// ---------- random maps ----------

// Random element of a solved map space: small random rational combination of
// the basis maps (field rings only).
inline incalg::LinearMap random_space_member(const incalg::MapSpace& space,
                                             std::mt19937_64& rng) {
  incalg::LinearMap sum = incalg::LinearMap::zero_map(space.algebra);
  for (const incalg::LinearMap& b : space.basis) {
    Rat a = random_rational(rng);
    if (a == 0) continue;
    sum = sum + b.scaled(ring_value(space.algebra->ring(), a));
  }
  return sum;
}

}  // namespace testutil
