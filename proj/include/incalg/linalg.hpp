#pragma once

#include <utility>
#include <vector>

#include "incalg/ring.hpp"

namespace incalg {

// Sparse vector: (column, value) pairs sorted by column, zero values omitted.
using SparseRow = std::vector<std::pair<int, RingValue>>;

SparseRow sparse_add_scaled(const Ring& ring, const SparseRow& a, const RingValue& scale,
                            const SparseRow& b);  // a + scale * b
SparseRow sparse_scale(const Ring& ring, const RingValue& scale, const SparseRow& a);
const RingValue* sparse_get(const SparseRow& row, int col);

// Reduced row echelon form over a field. Deterministic: rows are processed in
// the given order and the first row with the smallest leading column wins the
// pivot, so the result is the canonical RREF of the row space.
class Rref {
public:
  // NotAField unless ring.is_field()
  Rref(const Ring& ring, int cols, std::vector<SparseRow> rows);

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }
  std::vector<int> free_cols() const;

  // Residue of v after eliminating all pivot columns; empty iff v is in the row space.
  SparseRow reduce(const Ring& ring, SparseRow v) const;
  bool contains(const Ring& ring, SparseRow v) const { return reduce(ring, std::move(v)).empty(); }

  // Canonical nullspace basis: one vector per free column f, with entry 1 at f
  // and -R[r][f] at each pivot column; ordered by free column ascending.
  std::vector<SparseRow> nullspace_basis(const Ring& ring) const;

private:
  int cols_ = 0;
  std::vector<SparseRow> rows_;  // pivot columns strictly increasing, pivots = 1, fully reduced
  std::vector<int> pivots_;
};

// Smallest integral form over Q: clear denominators, divide by the gcd of the
// numerators, make the first nonzero entry positive. Identity on other rings.
SparseRow rescale_integral(const Ring& ring, SparseRow row);

}  // namespace incalg
