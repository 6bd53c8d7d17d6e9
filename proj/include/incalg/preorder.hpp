#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

// Finite pre-ordered set: elements 0..n-1 carrying user labels, with a
// reflexive transitive relation stored as a dense n x n boolean table.
class PreOrder {
public:
  // Relation pairs are (label, label). With auto_close the reflexive
  // transitive closure is taken; otherwise the input must already be
  // transitive (reflexivity is always filled in).
  static PreOrder build(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& relation,
                        bool auto_close);

  // Relation given directly as an n x n table over indices (row u, col v
  // meaning u <= v). Same closure/validation behaviour as build().
  static PreOrder from_leq(std::vector<std::string> labels,
                           std::vector<std::vector<bool>> leq,
                           bool auto_close);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;  // UnknownElement

  bool leq(int u, int v) const { return leq_[static_cast<std::size_t>(u * n_ + v)] != 0; }
  bool lt(int u, int v) const { return u != v && leq(u, v); }
  bool comparable(int u, int v) const { return leq(u, v) || leq(v, u); }

  // All pairs (u,v) with u <= v, lexicographic by (u,v); includes the diagonal.
  std::vector<std::pair<int, int>> basis_pairs() const;
  // Strict pairs u <= v, u != v, lexicographic.
  std::vector<std::pair<int, int>> directed_edges() const;
  // Undirected comparability edges {u,v}, u < v as integers, lexicographic.
  std::vector<std::pair<int, int>> comparability_edges() const;

  // Connected components of the comparability graph; components ordered by
  // smallest member index, members ascending.
  std::vector<std::vector<int>> connected_components() const;
  bool is_connected() const { return connected_components().size() <= 1; }

  // Sub-pre-order induced on the given index subset (kept in given order).
  PreOrder induced(const std::vector<int>& subset) const;

  bool same_as(const PreOrder& other) const;

private:
  PreOrder(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;  // row-major n x n
};

using PreOrderPtr = std::shared_ptr<const PreOrder>;

PreOrderPtr build_preorder(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& relation,
                           bool auto_close);

// Graphviz renderings: undirected comparability graph / strict-pair digraph.
std::string to_dot_comparability(const PreOrder& order, const std::string& name);
std::string to_dot_directed(const PreOrder& order, const std::string& name);

// Visits every reflexive-transitive relation on n labeled elements ("1".."n")
// exactly once, in increasing bitmask order of the off-diagonal cells (cell
// (i,j), i != j, in row-major order is one bit). Returns the number visited.
// Counts for n = 1..5: 1, 4, 29, 355, 6942.
std::uint64_t for_each_preorder(int n, const std::function<void(const PreOrder&)>& visit);

}  // namespace incalg
