#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "incalg/preorder.hpp"
#include "incalg/ring.hpp"

namespace incalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;
class Element;

// Incidence algebra I(X,R): R-valued functions on the related pairs of X,
// with convolution product. Shared immutable context for Element values.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  static AlgebraPtr create(PreOrderPtr order, Ring ring);

  const PreOrder& order() const { return *order_; }
  const PreOrderPtr& order_ptr() const { return order_; }
  const Ring& ring() const { return ring_; }

  // Basis pairs (x,y), x <= y, in lexicographic order.
  const std::vector<std::pair<int, int>>& basis() const { return basis_; }
  int basis_size() const { return static_cast<int>(basis_.size()); }
  int basis_index(int x, int y) const;  // NotRelated
  bool related(int x, int y) const { return order_->leq(x, y); }

  int component_of(int x) const { return component_[static_cast<std::size_t>(x)]; }
  int component_count() const { return component_count_; }

  Element zero() const;
  Element unity() const;                  // sum of all e_xx
  Element basis_element(int x, int y) const;  // e_xy, NotRelated

  // Indicator of one component's diagonal; these span the center.
  Element component_idempotent(int c) const;
  std::vector<Element> center_basis() const;

private:
  Algebra(PreOrderPtr order, Ring ring);

  PreOrderPtr order_;
  Ring ring_;
  std::vector<std::pair<int, int>> basis_;
  std::vector<int> basis_index_;  // n*n table, -1 for unrelated pairs
  std::vector<int> component_;
  int component_count_ = 0;
};

// Algebra element: dense coefficient vector over the basis pairs.
class Element {
public:
  Element() = default;
  Element(AlgebraPtr algebra, std::vector<RingValue> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<RingValue>& coeffs() const { return coeffs_; }

  const RingValue& coeff(int x, int y) const;  // NotRelated for unrelated pairs
  const RingValue& coeff_at(int basis_idx) const { return coeffs_[static_cast<std::size_t>(basis_idx)]; }
  Element with_coeff(int x, int y, RingValue value) const;

  bool is_zero() const;
  // Zero off the diagonal and constant on each connected component.
  bool is_central() const;
  bool is_diagonal() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;  // convolution
  Element scaled(const RingValue& scalar) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Coefficients kept on pairs (u,v) with x <= u <= v <= y, others zeroed.
  Element restriction(int x, int y) const;  // NotRelated if x !<= y

  std::string str() const;  // e.g. "e[1,1] + 2*e[1,3]", "0"

private:
  const Algebra& ctx() const;

  AlgebraPtr algebra_;
  std::vector<RingValue> coeffs_;
};

Element commutator(const Element& f, const Element& g);  // fg - gf

// e_xx * f * e_yy; always equals f(x,y) * e_xy. NotRelated when x is not
// related to y.
Element corner(const Element& f, int x, int y);

// Random element with small coefficients (fractions over the rationals,
// small integers otherwise); used for property sampling and sanity checks.
Element random_element(const AlgebraPtr& algebra, std::mt19937_64& rng);

}  // namespace incalg
