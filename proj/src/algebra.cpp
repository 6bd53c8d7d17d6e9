#include "incalg/algebra.hpp"

#include <sstream>

namespace incalg {

Algebra::Algebra(PreOrderPtr order, Ring ring) : order_(std::move(order)), ring_(std::move(ring)) {
  const int n = order_->size();
  basis_ = order_->basis_pairs();
  basis_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    basis_index_[static_cast<std::size_t>(basis_[k].first * n + basis_[k].second)] = static_cast<int>(k);
  component_.assign(static_cast<std::size_t>(n), -1);
  auto components = order_->connected_components();
  component_count_ = static_cast<int>(components.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int x : components[c]) component_[static_cast<std::size_t>(x)] = static_cast<int>(c);
}

AlgebraPtr Algebra::create(PreOrderPtr order, Ring ring) {
  return AlgebraPtr(new Algebra(std::move(order), std::move(ring)));
}

int Algebra::basis_index(int x, int y) const {
  const int n = order_->size();
  if (x < 0 || y < 0 || x >= n || y >= n)
    fail(ErrorKind::UnknownElement, "index out of range");
  int idx = basis_index_[static_cast<std::size_t>(x * n + y)];
  if (idx < 0)
    fail(ErrorKind::NotRelated,
         "\"" + order_->label(x) + "\" is not below \"" + order_->label(y) + "\"");
  return idx;
}

Element Algebra::zero() const {
  return Element(shared_from_this(), std::vector<RingValue>(basis_.size(), ring_.zero()));
}

Element Algebra::unity() const {
  std::vector<RingValue> coeffs(basis_.size(), ring_.zero());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].first == basis_[k].second) coeffs[k] = ring_.one();
  return Element(shared_from_this(), std::move(coeffs));
}

Element Algebra::basis_element(int x, int y) const {
  std::vector<RingValue> coeffs(basis_.size(), ring_.zero());
  coeffs[static_cast<std::size_t>(basis_index(x, y))] = ring_.one();
  return Element(shared_from_this(), std::move(coeffs));
}

Element Algebra::component_idempotent(int c) const {
  std::vector<RingValue> coeffs(basis_.size(), ring_.zero());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].first == basis_[k].second && component_of(basis_[k].first) == c)
      coeffs[k] = ring_.one();
  return Element(shared_from_this(), std::move(coeffs));
}

std::vector<Element> Algebra::center_basis() const {
  std::vector<Element> result;
  result.reserve(static_cast<std::size_t>(component_count_));
  for (int c = 0; c < component_count_; ++c) result.push_back(component_idempotent(c));
  return result;
}

Element::Element(AlgebraPtr algebra, std::vector<RingValue> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(algebra_->basis_size()))
    fail(ErrorKind::ShapeViolation, "coefficient vector length does not match basis size");
}

const Algebra& Element::ctx() const {
  if (!algebra_) fail(ErrorKind::MixedAmbient, "element has no ambient algebra");
  return *algebra_;
}

namespace {
const Algebra& common_ctx(const Element& a, const Element& b) {
  if (!a.algebra() || a.algebra() != b.algebra())
    fail(ErrorKind::MixedAmbient, "elements belong to different algebras");
  return *a.algebra();
}
}  // namespace

const RingValue& Element::coeff(int x, int y) const {
  return coeffs_[static_cast<std::size_t>(ctx().basis_index(x, y))];
}

Element Element::with_coeff(int x, int y, RingValue value) const {
  std::vector<RingValue> coeffs = coeffs_;
  coeffs[static_cast<std::size_t>(ctx().basis_index(x, y))] = std::move(value);
  return Element(algebra_, std::move(coeffs));
}

bool Element::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Element::is_diagonal() const {
  const auto& basis = ctx().basis();
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero() && basis[k].first != basis[k].second) return false;
  return true;
}

bool Element::is_central() const {
  const Algebra& a = ctx();
  if (!is_diagonal()) return false;
  // Constant along each component's diagonal.
  const int n = a.order().size();
  std::vector<const RingValue*> seen(static_cast<std::size_t>(a.component_count()), nullptr);
  for (int x = 0; x < n; ++x) {
    const RingValue& v = coeffs_[static_cast<std::size_t>(a.basis_index(x, x))];
    auto& slot = seen[static_cast<std::size_t>(a.component_of(x))];
    if (slot == nullptr)
      slot = &v;
    else if (!(*slot == v))
      return false;
  }
  return true;
}

Element Element::operator+(const Element& other) const {
  const Algebra& a = common_ctx(*this, other);
  std::vector<RingValue> coeffs(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs[k] = a.ring().add(coeffs_[k], other.coeffs_[k]);
  return Element(algebra_, std::move(coeffs));
}

Element Element::operator-(const Element& other) const {
  const Algebra& a = common_ctx(*this, other);
  std::vector<RingValue> coeffs(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs[k] = a.ring().sub(coeffs_[k], other.coeffs_[k]);
  return Element(algebra_, std::move(coeffs));
}

Element Element::operator-() const {
  const Algebra& a = ctx();
  std::vector<RingValue> coeffs(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs[k] = a.ring().neg(coeffs_[k]);
  return Element(algebra_, std::move(coeffs));
}

Element Element::scaled(const RingValue& scalar) const {
  const Algebra& a = ctx();
  std::vector<RingValue> coeffs(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs[k] = a.ring().mul(scalar, coeffs_[k]);
  return Element(algebra_, std::move(coeffs));
}

Element Element::operator*(const Element& other) const {
  const Algebra& a = common_ctx(*this, other);
  const Ring& ring = a.ring();
  const int n = a.order().size();
  const auto& basis = a.basis();
  std::vector<RingValue> coeffs(coeffs_.size(), ring.zero());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [x, y] = basis[k];
    RingValue sum = ring.zero();
    for (int z = 0; z < n; ++z) {
      if (!a.order().leq(x, z) || !a.order().leq(z, y)) continue;
      const RingValue& f = coeffs_[static_cast<std::size_t>(a.basis_index(x, z))];
      if (f.is_zero()) continue;
      const RingValue& g = other.coeffs_[static_cast<std::size_t>(a.basis_index(z, y))];
      if (g.is_zero()) continue;
      sum = ring.add(sum, ring.mul(f, g));
    }
    coeffs[k] = std::move(sum);
  }
  return Element(algebra_, std::move(coeffs));
}

bool operator==(const Element& a, const Element& b) {
  common_ctx(a, b);
  return a.coeffs_ == b.coeffs_;
}

Element Element::restriction(int x, int y) const {
  const Algebra& a = ctx();
  a.basis_index(x, y);  // NotRelated check
  const auto& basis = a.basis();
  std::vector<RingValue> coeffs(coeffs_.size(), a.ring().zero());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [u, v] = basis[k];
    if (a.order().leq(x, u) && a.order().leq(v, y)) coeffs[k] = coeffs_[k];
  }
  return Element(algebra_, std::move(coeffs));
}

std::string Element::str() const {
  const Algebra& a = ctx();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    auto [x, y] = a.basis()[static_cast<std::size_t>(k)];
    std::string c = coeffs_[k].str();
    if (!first) {
      if (!c.empty() && c[0] == '-') {
        os << " - ";
        c = c.substr(1);
      } else {
        os << " + ";
      }
    }
    if (c != "1") os << c << "*";
    os << "e[" << a.order().label(x) << "," << a.order().label(y) << "]";
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Element commutator(const Element& f, const Element& g) { return f * g - g * f; }

Element corner(const Element& f, int x, int y) {
  const Algebra& a = *f.algebra();
  if (!a.related(x, y))
    fail(ErrorKind::NotRelated,
         a.order().label(x) + " is not related to " + a.order().label(y));
  return a.basis_element(x, x) * f * a.basis_element(y, y);
}

Element random_element(const AlgebraPtr& algebra, std::mt19937_64& rng) {
  const Ring& ring = algebra->ring();
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<RingValue> coeffs(static_cast<std::size_t>(algebra->basis_size()));
  for (auto& c : coeffs) {
    if (ring.spec().kind == RingKind::Rationals)
      c = ring.fraction(small(rng), den(rng));
    else
      c = ring.integer(small(rng));
  }
  return Element(algebra, std::move(coeffs));
}

}  // namespace incalg
