#pragma once

#include <utility>
#include <vector>

#include "incalg/preorder.hpp"

namespace incalg {

// Closed walk through pairwise-distinct elements in which consecutive members
// (cyclically) are comparable. Length 2 is a single comparable pair; length
// >= 3 is a simple cycle of the comparability graph. Canonical form: starts
// at its smallest vertex, and for length >= 3 the second vertex is smaller
// than the last.
struct Circle {
  std::vector<int> vertices;
  friend bool operator==(const Circle&, const Circle&) = default;
};

// All circles in canonical form, sorted lexicographically by vertex sequence.
// OracleBoundExceeded when order.size() > bound.
std::vector<Circle> enumerate_circles(const PreOrder& order, int bound);

// Equivalence classes of the directed edges (strict related pairs): two
// directed edges are equivalent when some circle passes through both of their
// underlying vertex pairs. Classes are listed by their smallest edge, edges
// lexicographic within each class.
//
// Computed from the biconnected blocks of the comparability graph: distinct
// undirected edges lie on a common simple cycle exactly when they share a
// block, and the two orientations of one comparable pair always share the
// length-2 circle on that pair.
std::vector<std::vector<std::pair<int, int>>> directed_edge_classes(const PreOrder& order);

// Same classes built directly from enumerate_circles with union-find; used to
// cross-check directed_edge_classes. OracleBoundExceeded when
// order.size() > bound.
std::vector<std::vector<std::pair<int, int>>> directed_edge_classes_oracle(const PreOrder& order,
                                                                           int bound);

// Per connected component of the comparability graph: its members and the
// directed-edge classes falling inside it. `guaranteed` — every commuting map
// on the incidence algebra is proper — holds exactly when no component has
// more than one class (components without directed edges count as satisfied).
struct PropernessReport {
  struct Component {
    std::vector<int> members;
    std::vector<std::vector<std::pair<int, int>>> edge_classes;
  };
  bool guaranteed = true;
  std::vector<Component> components;
};

PropernessReport properness_guaranteed(const PreOrder& order);

}  // namespace incalg
