#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lazard/modarith.hpp"

namespace lazard {

/// Incremental row echelon form over GF(p).
///
/// Rows are reduced against the stored pivot rows in increasing column order
/// using a dense accumulator. Pivot rows are kept sparse and switch to dense
/// storage once more than half of their trailing entries are nonzero.
class FieldEchelon {
 public:
  using Entry = std::pair<Index, Scalar>;

  FieldEchelon(Scalar p, Index cols);

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(std::span<const Entry> row);
  bool insert(const Vector& row);

  Index rank() const { return static_cast<Index>(rows_.size()); }
  Index cols() const { return cols_; }

  /// Remainder of v after reduction by the current pivot rows.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;

  /// Reduced row echelon form, one row per pivot, ordered by pivot column.
  Matrix rref() const;
  std::vector<Index> pivot_columns() const;

 private:
  struct PivotRow {
    Index lead = 0;
    bool dense = false;
    std::vector<Index> cols;
    std::vector<Scalar> vals;  // sparse entries, or dense values from lead on
  };

  void eliminate(std::vector<Scalar>& acc, Index lo, Index& hi) const;
  void store(std::vector<Scalar>& acc, Index lo, Index hi);

  Scalar p_;
  Index cols_;
  std::vector<PivotRow> rows_;
  std::vector<Index> pivot_of_;  // column -> row index or -1
  std::vector<Scalar> scratch_;
};

}  // namespace lazard
