#include "incalg/linalg.hpp"

#include <algorithm>
#include <map>

namespace incalg {

SparseRow sparse_add_scaled(const Ring& ring, const SparseRow& a, const RingValue& scale,
                            const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      RingValue v = ring.mul(scale, b[j].second);
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      RingValue v = ring.add(a[i].second, ring.mul(scale, b[j].second));
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow sparse_scale(const Ring& ring, const RingValue& scale, const SparseRow& a) {
  SparseRow out;
  out.reserve(a.size());
  for (const auto& [col, val] : a) {
    RingValue v = ring.mul(scale, val);
    if (!v.is_zero()) out.emplace_back(col, std::move(v));
  }
  return out;
}

const RingValue* sparse_get(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

Rref::Rref(const Ring& ring, int cols, std::vector<SparseRow> input) : cols_(cols) {
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "row reduction requires a field, got " + ring.spec().str());

  // Forward phase: echelon rows keyed by pivot column.
  std::map<int, SparseRow> echelon;
  for (auto& row : input) {
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = echelon.find(lead);
      if (it == echelon.end()) {
        row = sparse_scale(ring, ring.inverse(row.front().second), row);
        echelon.emplace(lead, std::move(row));
        break;
      }
      row = sparse_add_scaled(ring, row, ring.neg(row.front().second), it->second);
    }
  }

  rows_.reserve(echelon.size());
  pivots_.reserve(echelon.size());
  for (auto& [col, row] : echelon) {
    pivots_.push_back(col);
    rows_.push_back(std::move(row));
  }

  // Back substitution: clear every pivot column from the rows above it.
  for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      const RingValue* c = sparse_get(rows_[static_cast<std::size_t>(j)], pivots_[static_cast<std::size_t>(i)]);
      if (c != nullptr)
        rows_[static_cast<std::size_t>(j)] = sparse_add_scaled(
            ring, rows_[static_cast<std::size_t>(j)], ring.neg(*c), rows_[static_cast<std::size_t>(i)]);
    }
  }
}

std::vector<int> Rref::free_cols() const {
  std::vector<int> free;
  std::size_t p = 0;
  for (int c = 0; c < cols_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  return free;
}

SparseRow Rref::reduce(const Ring& ring, SparseRow v) const {
  // Rows are fully reduced, so one pass over the pivots suffices.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const RingValue* c = sparse_get(v, pivots_[r]);
    if (c != nullptr) v = sparse_add_scaled(ring, v, ring.neg(*c), rows_[r]);
  }
  return v;
}

std::vector<SparseRow> Rref::nullspace_basis(const Ring& ring) const {
  std::vector<SparseRow> basis;
  for (int f : free_cols()) {
    SparseRow vec{{f, ring.one()}};
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const RingValue* c = sparse_get(rows_[r], f);
      if (c != nullptr) vec.emplace_back(pivots_[r], ring.neg(*c));
    }
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(vec));
  }
  return basis;
}

SparseRow rescale_integral(const Ring& ring, SparseRow row) {
  if (ring.spec().kind != RingKind::Rationals || row.empty()) return row;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [col, val] : row) {
    den_lcm = boost::multiprecision::lcm(den_lcm, val.denominator());
    num_gcd = boost::multiprecision::gcd(num_gcd, val.numerator());
  }
  Rat factor(den_lcm, num_gcd);  // num_gcd > 0 since row is nonempty and zero-free
  RingValue scale = ring.fraction(boost::multiprecision::numerator(factor),
                                  boost::multiprecision::denominator(factor));
  SparseRow out = sparse_scale(ring, scale, row);
  if (out.front().second.numerator() < 0) out = sparse_scale(ring, ring.integer(-1), out);
  return out;
}

}  // namespace incalg
