#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/linalg.hpp"

namespace incalg {

// Linear map on the incidence algebra, stored as the images of the basis
// elements and extended linearly.
class LinearMap {
public:
  LinearMap(AlgebraPtr algebra, std::vector<Element> images);  // one image per basis pair

  static LinearMap zero_map(const AlgebraPtr& algebra);
  static LinearMap identity_map(const AlgebraPtr& algebra);

  // Coefficient coordinates: the value of C(source, target) — the coefficient
  // of basis pair `target` in the image of basis pair `source` — lives at
  // index source * basis_size + target. Both indices are lexicographic, so
  // the coordinate order is lexicographic in (i, j, x, y).
  static LinearMap from_coeff_vector(const AlgebraPtr& algebra, const SparseRow& coords);
  SparseRow to_coeff_vector() const;

  const AlgebraPtr& algebra() const { return algebra_; }
  const Element& image_at(int basis_idx) const { return images_[static_cast<std::size_t>(basis_idx)]; }
  const Element& image_of(int i, int j) const;
  // C(source=(i,j), target=(x,y))
  const RingValue& coefficient(int i, int j, int x, int y) const;

  Element apply(const Element& f) const;

  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  LinearMap scaled(const RingValue& scalar) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
  AlgebraPtr algebra_;
  std::vector<Element> images_;
};

// ---------- verification (any supported ring) ----------

struct CommutingCheck {
  bool commuting = false;
  // First basis-index pair (b1, b2) with commutator(θ(e_b1), e_b2) != commutator(e_b1, θ(e_b2)).
  std::optional<std::pair<int, int>> violating_pair;
};

// Complete decision: the commuting identity holds on all basis pairs. With
// spot_checks > 0, additionally samples random elements f and confirms
// [θ(f), f] = 0 agrees with the verdict (a sanity layer, never the decision).
CommutingCheck check_commuting(const LinearMap& theta, std::uint64_t seed = 0, int spot_checks = 0);
bool is_commuting(const LinearMap& theta, std::uint64_t seed = 0, int spot_checks = 0);
// [θ(f), f] == 0 for one given element.
bool commutes_at(const LinearMap& theta, const Element& f);

// Every image of a diagonal basis element is diagonal, and every image of a
// strict basis element e_ij is diagonal plus a multiple of e_ij.
// NotConnected unless the underlying set is connected.
bool shape_check(const LinearMap& theta);

// The five coefficient relations that, together with the shape, characterize
// commuting maps on a connected set. C[b][t] below is the coefficient of
// basis pair t in the image of basis pair b; all of i<l etc. mean strict
// related pairs (related and distinct).
enum class CoeffRelation {
  EdgeFromLowerDiag,      // C[il][il] == C[ii][ii] - C[ii][ll]           for i < l
  EdgeFromUpperDiag,      // C[ki][ki] == C[ii][ii] - C[ii][kk]           for k < i
  DiagMatchAcrossEdge,    // C[ii][kk] == C[ii][ll]                       for k < l, k != i != l
  EdgeImageConstantDiag,  // C[ij][xx] == C[ij][yy]                       for i < j, all x, y
  ConsecutiveEdgesMatch,  // C[ij][ij] == C[jl][jl]                       for i < j < l
};
const char* to_string(CoeffRelation r);

struct RelationViolation {
  CoeffRelation relation;
  std::vector<int> elements;  // the element indices instantiating the relation
  std::string detail;         // human-readable equation with actual values
};

struct RelationsReport {
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// NotConnected on a disconnected set; ShapeViolation when shape_check fails.
RelationsReport relations_check(const LinearMap& theta);

// ---------- construction ----------

// Shape-conforming coefficient table: for every source basis pair b the
// diagonal coefficients diag[b][x], and for every strict source b the
// coefficient edge[b] of the source pair itself.
struct CoefficientTable {
  std::vector<std::vector<RingValue>> diag;  // [source basis index][element x]
  std::map<int, RingValue> edge;             // strict source basis index -> value
};

// θ(e_ii) = Σ_x diag·e_xx and θ(e_ij) = Σ_x diag·e_xx + edge·e_ij.
// MissingCoefficient when the table is incomplete; ShapeViolation when an
// edge value is supplied for a diagonal source.
LinearMap build_from_coefficients(const AlgebraPtr& algebra, const CoefficientTable& table);

// ---------- solution spaces (field rings only) ----------

struct MapSpace {
  AlgebraPtr algebra;
  std::vector<LinearMap> basis;  // linearly independent, canonical order
  int dimension() const { return static_cast<int>(basis.size()); }
};

// The commuting condition on all basis pairs as sparse linear constraints in
// coefficient coordinates (valid over any ring; rows have at most 4 terms).
std::vector<SparseRow> commuting_constraint_rows(const Algebra& algebra);
// Spanning rows of the proper maps: central multiples of the identity map
// plus the maps sending one basis element to one central generator.
std::vector<SparseRow> proper_generator_rows(const Algebra& algebra);

MapSpace commuting_space(const AlgebraPtr& algebra);  // NotAField
MapSpace proper_space(const AlgebraPtr& algebra);     // NotAField

// ---------- properness ----------

struct ProperDecomposition {
  Element lambda;           // central; θ(f) = lambda*f + mu(f)
  std::vector<Element> mu;  // central value per source basis element
};

// Feasibility of θ(e) = lambda*e + mu(e): lambda is forced on every component
// with a strict pair (read off the first strict image coefficient) and free on
// singleton components; the remainder must be central-valued. Works over any
// supported ring (no division involved). NotCommuting on non-commuting input.
std::optional<ProperDecomposition> decompose_proper(const LinearMap& theta);

// First commuting-space basis vector outside the proper space, in smallest
// integral form; nullopt when every commuting map is proper. NotAField.
std::optional<LinearMap> improper_witness(const AlgebraPtr& algebra);

// Per connected component c: the compressed map e ↦ δ_c·θ(e)·δ_c on basis
// elements of c (zero on the others). NotCommuting on non-commuting input.
std::vector<LinearMap> component_split(const LinearMap& theta);

}  // namespace incalg
