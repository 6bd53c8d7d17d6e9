#include "incalg/commuting.hpp"

#include <algorithm>
#include <sstream>

namespace incalg {

LinearMap::LinearMap(AlgebraPtr algebra, std::vector<Element> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(algebra_->basis_size()))
    fail(ErrorKind::ShapeViolation, "need one image per basis pair");
  for (const Element& im : images_)
    if (im.algebra() != algebra_)
      fail(ErrorKind::MixedAmbient, "image from a different algebra");
}

LinearMap LinearMap::zero_map(const AlgebraPtr& algebra) {
  return LinearMap(algebra,
                   std::vector<Element>(static_cast<std::size_t>(algebra->basis_size()), algebra->zero()));
}

LinearMap LinearMap::identity_map(const AlgebraPtr& algebra) {
  std::vector<Element> images;
  images.reserve(static_cast<std::size_t>(algebra->basis_size()));
  for (auto [x, y] : algebra->basis()) images.push_back(algebra->basis_element(x, y));
  return LinearMap(algebra, std::move(images));
}

LinearMap LinearMap::from_coeff_vector(const AlgebraPtr& algebra, const SparseRow& coords) {
  const int B = algebra->basis_size();
  std::vector<std::vector<RingValue>> table(
      static_cast<std::size_t>(B),
      std::vector<RingValue>(static_cast<std::size_t>(B), algebra->ring().zero()));
  for (const auto& [idx, value] : coords) {
    if (idx < 0 || idx >= B * B)
      fail(ErrorKind::UnknownBasisElement, "coefficient index out of range");
    table[static_cast<std::size_t>(idx / B)][static_cast<std::size_t>(idx % B)] = value;
  }
  std::vector<Element> images;
  images.reserve(static_cast<std::size_t>(B));
  for (int b = 0; b < B; ++b) images.emplace_back(algebra, std::move(table[static_cast<std::size_t>(b)]));
  return LinearMap(algebra, std::move(images));
}

SparseRow LinearMap::to_coeff_vector() const {
  const int B = algebra_->basis_size();
  SparseRow out;
  for (int b = 0; b < B; ++b)
    for (int t = 0; t < B; ++t) {
      const RingValue& v = images_[static_cast<std::size_t>(b)].coeff_at(t);
      if (!v.is_zero()) out.emplace_back(b * B + t, v);
    }
  return out;
}

const Element& LinearMap::image_of(int i, int j) const {
  return images_[static_cast<std::size_t>(algebra_->basis_index(i, j))];
}

const RingValue& LinearMap::coefficient(int i, int j, int x, int y) const {
  return image_of(i, j).coeff_at(algebra_->basis_index(x, y));
}

Element LinearMap::apply(const Element& f) const {
  if (f.algebra() != algebra_) fail(ErrorKind::MixedAmbient, "element from a different algebra");
  Element out = algebra_->zero();
  for (int b = 0; b < algebra_->basis_size(); ++b) {
    const RingValue& c = f.coeff_at(b);
    if (!c.is_zero()) out = out + images_[static_cast<std::size_t>(b)].scaled(c);
  }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  if (algebra_ != other.algebra_) fail(ErrorKind::MixedAmbient, "maps on different algebras");
  std::vector<Element> images;
  images.reserve(images_.size());
  for (std::size_t b = 0; b < images_.size(); ++b) images.push_back(images_[b] + other.images_[b]);
  return LinearMap(algebra_, std::move(images));
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  if (algebra_ != other.algebra_) fail(ErrorKind::MixedAmbient, "maps on different algebras");
  std::vector<Element> images;
  images.reserve(images_.size());
  for (std::size_t b = 0; b < images_.size(); ++b) images.push_back(images_[b] - other.images_[b]);
  return LinearMap(algebra_, std::move(images));
}

LinearMap LinearMap::scaled(const RingValue& scalar) const {
  std::vector<Element> images;
  images.reserve(images_.size());
  for (const Element& im : images_) images.push_back(im.scaled(scalar));
  return LinearMap(algebra_, std::move(images));
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (a.algebra_ != b.algebra_) fail(ErrorKind::MixedAmbient, "maps on different algebras");
  return a.images_ == b.images_;
}

// ---------- verification ----------

bool commutes_at(const LinearMap& theta, const Element& f) {
  return commutator(theta.apply(f), f).is_zero();
}

CommutingCheck check_commuting(const LinearMap& theta, std::uint64_t seed, int spot_checks) {
  const AlgebraPtr& algebra = theta.algebra();
  const int B = algebra->basis_size();
  CommutingCheck result;
  result.commuting = true;
  std::vector<Element> basis_elems;
  basis_elems.reserve(static_cast<std::size_t>(B));
  for (auto [x, y] : algebra->basis()) basis_elems.push_back(algebra->basis_element(x, y));
  for (int b1 = 0; b1 < B && result.commuting; ++b1)
    for (int b2 = b1; b2 < B; ++b2) {
      Element lhs = commutator(theta.image_at(b1), basis_elems[static_cast<std::size_t>(b2)]);
      Element rhs = commutator(basis_elems[static_cast<std::size_t>(b1)], theta.image_at(b2));
      if (!(lhs == rhs)) {
        result.commuting = false;
        result.violating_pair = {b1, b2};
        break;
      }
    }
  // Sanity layer: random elements must agree with the basis-pair verdict.
  if (spot_checks > 0 && result.commuting) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < spot_checks; ++t)
      if (!commutes_at(theta, random_element(algebra, rng)))
        throw std::logic_error("basis-pair check passed but a random element fails to commute");
  }
  return result;
}

bool is_commuting(const LinearMap& theta, std::uint64_t seed, int spot_checks) {
  return check_commuting(theta, seed, spot_checks).commuting;
}

namespace {

void require_connected(const Algebra& algebra) {
  if (algebra.component_count() > 1)
    fail(ErrorKind::NotConnected, "operation requires a connected set, found " +
                                      std::to_string(algebra.component_count()) + " components");
}

}  // namespace

bool shape_check(const LinearMap& theta) {
  const Algebra& algebra = *theta.algebra();
  require_connected(algebra);
  for (int b = 0; b < algebra.basis_size(); ++b) {
    auto [i, j] = algebra.basis()[static_cast<std::size_t>(b)];
    const Element& image = theta.image_at(b);
    if (i == j) {
      if (!image.is_diagonal()) return false;
    } else {
      Element rest = image.with_coeff(i, j, algebra.ring().zero());
      if (!rest.is_diagonal()) return false;
    }
  }
  return true;
}

const char* to_string(CoeffRelation r) {
  switch (r) {
    case CoeffRelation::EdgeFromLowerDiag: return "edge-from-lower-diag";
    case CoeffRelation::EdgeFromUpperDiag: return "edge-from-upper-diag";
    case CoeffRelation::DiagMatchAcrossEdge: return "diag-match-across-edge";
    case CoeffRelation::EdgeImageConstantDiag: return "edge-image-constant-diag";
    case CoeffRelation::ConsecutiveEdgesMatch: return "consecutive-edges-match";
  }
  return "?";
}

RelationsReport relations_check(const LinearMap& theta) {
  const Algebra& algebra = *theta.algebra();
  require_connected(algebra);
  if (!shape_check(theta))
    fail(ErrorKind::ShapeViolation, "map does not have the diagonal-plus-edge image shape");
  const Ring& ring = algebra.ring();
  const PreOrder& order = algebra.order();
  const auto edges = order.directed_edges();
  RelationsReport report;

  auto edge_coeff = [&](int a, int b) { return theta.coefficient(a, b, a, b); };
  auto diag_coeff = [&](int a, int b, int x) { return theta.coefficient(a, b, x, x); };
  auto violation = [&](CoeffRelation rel, std::vector<int> elems, const RingValue& lhs,
                       const RingValue& rhs, const std::string& eq) {
    report.violations.push_back({rel, std::move(elems), eq + ": " + lhs.str() + " != " + rhs.str()});
  };

  for (auto [i, l] : edges) {
    // C[il][il] == C[ii][ii] - C[ii][ll]
    RingValue lhs = edge_coeff(i, l);
    RingValue rhs = ring.sub(diag_coeff(i, i, i), diag_coeff(i, i, l));
    if (!(lhs == rhs))
      violation(CoeffRelation::EdgeFromLowerDiag, {i, l}, lhs, rhs,
                "C[" + std::to_string(i) + "," + std::to_string(l) + "][same] vs lower diagonal");
    // C[kl][kl] == C[ll][ll] - C[ll][kk] with (k,i) := (i,l)
    rhs = ring.sub(diag_coeff(l, l, l), diag_coeff(l, l, i));
    if (!(lhs == rhs))
      violation(CoeffRelation::EdgeFromUpperDiag, {i, l}, lhs, rhs,
                "C[" + std::to_string(i) + "," + std::to_string(l) + "][same] vs upper diagonal");
  }

  for (int i = 0; i < order.size(); ++i)
    for (auto [k, l] : edges) {
      if (k == i || l == i) continue;
      RingValue lhs = diag_coeff(i, i, k);
      RingValue rhs = diag_coeff(i, i, l);
      if (!(lhs == rhs))
        violation(CoeffRelation::DiagMatchAcrossEdge, {i, k, l}, lhs, rhs,
                  "C[" + std::to_string(i) + "^2][" + std::to_string(k) + "^2] vs [" +
                      std::to_string(l) + "^2]");
    }

  for (auto [i, j] : edges)
    for (int x = 0; x < order.size(); ++x)
      for (int y = x + 1; y < order.size(); ++y) {
        RingValue lhs = diag_coeff(i, j, x);
        RingValue rhs = diag_coeff(i, j, y);
        if (!(lhs == rhs))
          violation(CoeffRelation::EdgeImageConstantDiag, {i, j, x, y}, lhs, rhs,
                    "diagonal of image of (" + std::to_string(i) + "," + std::to_string(j) +
                        ") at " + std::to_string(x) + " vs " + std::to_string(y));
      }

  for (auto [i, j] : edges)
    for (auto [j2, l] : edges) {
      if (j2 != j) continue;
      RingValue lhs = edge_coeff(i, j);
      RingValue rhs = edge_coeff(j, l);
      if (!(lhs == rhs))
        violation(CoeffRelation::ConsecutiveEdgesMatch, {i, j, l}, lhs, rhs,
                  "edge coefficient of (" + std::to_string(i) + "," + std::to_string(j) +
                      ") vs (" + std::to_string(j) + "," + std::to_string(l) + ")");
    }

  return report;
}

// ---------- construction ----------

LinearMap build_from_coefficients(const AlgebraPtr& algebra, const CoefficientTable& table) {
  const int B = algebra->basis_size();
  const int n = algebra->order().size();
  if (static_cast<int>(table.diag.size()) != B)
    fail(ErrorKind::MissingCoefficient,
         "diagonal table needs one row per basis pair, got " + std::to_string(table.diag.size()));
  std::vector<Element> images;
  images.reserve(static_cast<std::size_t>(B));
  for (int b = 0; b < B; ++b) {
    const auto& row = table.diag[static_cast<std::size_t>(b)];
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::MissingCoefficient, "diagonal row needs one value per element");
    auto [i, j] = algebra->basis()[static_cast<std::size_t>(b)];
    std::vector<RingValue> coeffs(static_cast<std::size_t>(B), algebra->ring().zero());
    for (int x = 0; x < n; ++x)
      coeffs[static_cast<std::size_t>(algebra->basis_index(x, x))] = row[static_cast<std::size_t>(x)];
    auto edge_it = table.edge.find(b);
    if (i == j) {
      if (edge_it != table.edge.end())
        fail(ErrorKind::ShapeViolation, "edge value supplied for a diagonal source");
    } else {
      if (edge_it == table.edge.end())
        fail(ErrorKind::MissingCoefficient,
             "missing edge coefficient for source (" + std::to_string(i) + "," + std::to_string(j) + ")");
      coeffs[static_cast<std::size_t>(b)] =
          algebra->ring().add(coeffs[static_cast<std::size_t>(b)], edge_it->second);
    }
    images.emplace_back(algebra, std::move(coeffs));
  }
  return LinearMap(algebra, std::move(images));
}

// ---------- solution spaces ----------

std::vector<SparseRow> commuting_constraint_rows(const Algebra& algebra) {
  const int B = algebra.basis_size();
  const auto& basis = algebra.basis();
  const Ring& ring = algebra.ring();
  std::vector<SparseRow> rows;
  // The commuting identity for sources e_ij, e_kl at position (u,v) relates
  // at most four coefficients; collisions between the four terms accumulate.
  for (int b1 = 0; b1 < B; ++b1) {
    auto [i, j] = basis[static_cast<std::size_t>(b1)];
    for (int b2 = b1; b2 < B; ++b2) {
      auto [k, l] = basis[static_cast<std::size_t>(b2)];
      for (int pos = 0; pos < B; ++pos) {
        auto [u, v] = basis[static_cast<std::size_t>(pos)];
        std::map<int, int> acc;
        if (v == l && algebra.related(u, k)) acc[b1 * B + algebra.basis_index(u, k)] += 1;
        if (u == k && algebra.related(l, v)) acc[b1 * B + algebra.basis_index(l, v)] -= 1;
        if (u == i && algebra.related(j, v)) acc[b2 * B + algebra.basis_index(j, v)] -= 1;
        if (v == j && algebra.related(u, i)) acc[b2 * B + algebra.basis_index(u, i)] += 1;
        SparseRow row;
        for (const auto& [col, c] : acc)
          if (c != 0) row.emplace_back(col, ring.integer(c));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<SparseRow> proper_generator_rows(const Algebra& algebra) {
  const int B = algebra.basis_size();
  const Ring& ring = algebra.ring();
  std::vector<SparseRow> rows;
  // f ↦ δ_c · f: picks out the sources whose component is c.
  for (int c = 0; c < algebra.component_count(); ++c) {
    SparseRow row;
    for (int b = 0; b < B; ++b)
      if (algebra.component_of(algebra.basis()[static_cast<std::size_t>(b)].first) == c)
        row.emplace_back(b * B + b, ring.one());
    rows.push_back(std::move(row));
  }
  // e_b ↦ δ_c, all other sources ↦ 0.
  std::vector<std::vector<int>> diag_targets(static_cast<std::size_t>(algebra.component_count()));
  for (int x = 0; x < algebra.order().size(); ++x)
    diag_targets[static_cast<std::size_t>(algebra.component_of(x))].push_back(
        algebra.basis_index(x, x));
  for (int b = 0; b < B; ++b)
    for (int c = 0; c < algebra.component_count(); ++c) {
      SparseRow row;
      for (int t : diag_targets[static_cast<std::size_t>(c)]) row.emplace_back(b * B + t, ring.one());
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b2) { return a.first < b2.first; });
      rows.push_back(std::move(row));
    }
  return rows;
}

MapSpace commuting_space(const AlgebraPtr& algebra) {
  const Ring& ring = algebra->ring();
  if (!ring.is_field())
    fail(ErrorKind::NotAField,
         "solving for the commuting maps requires a field, got " + ring.spec().str());
  const int B = algebra->basis_size();
  Rref system(ring, B * B, commuting_constraint_rows(*algebra));
  MapSpace space;
  space.algebra = algebra;
  for (const SparseRow& vec : system.nullspace_basis(ring))
    space.basis.push_back(LinearMap::from_coeff_vector(algebra, vec));
  return space;
}

MapSpace proper_space(const AlgebraPtr& algebra) {
  const Ring& ring = algebra->ring();
  if (!ring.is_field())
    fail(ErrorKind::NotAField,
         "solving for the proper maps requires a field, got " + ring.spec().str());
  const int B = algebra->basis_size();
  Rref span(ring, B * B, proper_generator_rows(*algebra));
  MapSpace space;
  space.algebra = algebra;
  for (const SparseRow& row : span.rows())
    space.basis.push_back(LinearMap::from_coeff_vector(algebra, row));
  return space;
}

// ---------- properness ----------

std::optional<ProperDecomposition> decompose_proper(const LinearMap& theta) {
  if (!is_commuting(theta))
    fail(ErrorKind::NotCommuting, "decomposition is defined for commuting maps only");
  const AlgebraPtr& algebra = theta.algebra();
  const Ring& ring = algebra->ring();
  const int B = algebra->basis_size();

  // The central multiplier, component by component: forced by any strict
  // image coefficient; read from the single diagonal coefficient when the
  // component is a singleton (where it is a free choice).
  std::vector<RingValue> lam(static_cast<std::size_t>(algebra->component_count()), ring.zero());
  std::vector<char> fixed(static_cast<std::size_t>(algebra->component_count()), 0);
  for (int b = 0; b < B; ++b) {
    auto [i, j] = algebra->basis()[static_cast<std::size_t>(b)];
    if (i == j) continue;
    auto c = static_cast<std::size_t>(algebra->component_of(i));
    if (!fixed[c]) {
      lam[c] = theta.image_at(b).coeff(i, j);
      fixed[c] = 1;
    }
  }
  for (int x = 0; x < algebra->order().size(); ++x) {
    auto c = static_cast<std::size_t>(algebra->component_of(x));
    if (!fixed[c]) {
      lam[c] = theta.image_of(x, x).coeff(x, x);
      fixed[c] = 1;
    }
  }
  Element lambda = algebra->zero();
  for (int c = 0; c < algebra->component_count(); ++c)
    lambda = lambda + algebra->component_idempotent(c).scaled(lam[static_cast<std::size_t>(c)]);

  std::vector<Element> mu;
  mu.reserve(static_cast<std::size_t>(B));
  for (int b = 0; b < B; ++b) {
    auto [x, y] = algebra->basis()[static_cast<std::size_t>(b)];
    Element rest = theta.image_at(b) - (lambda * algebra->basis_element(x, y));
    if (!rest.is_central()) return std::nullopt;
    mu.push_back(std::move(rest));
  }
  return ProperDecomposition{std::move(lambda), std::move(mu)};
}

std::optional<LinearMap> improper_witness(const AlgebraPtr& algebra) {
  const Ring& ring = algebra->ring();
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "witness extraction requires a field, got " + ring.spec().str());
  const int B = algebra->basis_size();
  Rref system(ring, B * B, commuting_constraint_rows(*algebra));
  Rref proper_span(ring, B * B, proper_generator_rows(*algebra));
  for (const SparseRow& vec : system.nullspace_basis(ring))
    if (!proper_span.contains(ring, vec))
      return LinearMap::from_coeff_vector(algebra, rescale_integral(ring, vec));
  return std::nullopt;
}

std::vector<LinearMap> component_split(const LinearMap& theta) {
  if (!is_commuting(theta))
    fail(ErrorKind::NotCommuting, "component compression is defined for commuting maps only");
  const AlgebraPtr& algebra = theta.algebra();
  std::vector<LinearMap> split;
  for (int c = 0; c < algebra->component_count(); ++c) {
    Element delta = algebra->component_idempotent(c);
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(algebra->basis_size()));
    for (int b = 0; b < algebra->basis_size(); ++b) {
      auto [i, j] = algebra->basis()[static_cast<std::size_t>(b)];
      if (algebra->component_of(i) == c)
        images.push_back(delta * theta.image_at(b) * delta);
      else
        images.push_back(algebra->zero());
    }
    split.emplace_back(algebra, std::move(images));
  }
  return split;
}

}  // namespace incalg
