#pragma once

#include <vector>

#include "weyl/numbers.hpp"

namespace weyl {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>; // rows of equal length

/// Reduced row echelon form in place (rational Gaussian elimination,
/// first-nonzero pivoting for determinism).  Returns the rank.
int rref_in_place(RatMatrix& m);

RatMatrix transpose(const RatMatrix& m);

/// Basis of { x : A x = 0 }, returned as rows (one solution per row),
/// in the deterministic order of free columns.
RatMatrix nullspace(const RatMatrix& a, int ncols);

/// Incrementally maintained row space, kept in reduced echelon form.
class RowSpace {
public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}

    /// Reduce v against the span and insert; returns true if the rank grew.
    bool add(RatRow v);
    bool contains(RatRow v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<RatRow>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int ncols_;
    std::vector<RatRow> rows_;  // leading 1 at pivots_[i], zeros above/below
    std::vector<int> pivots_;   // strictly increasing
    void reduce(RatRow& v) const;
};

} // namespace weyl
