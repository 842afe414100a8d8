#include "weyl/linalg.hpp"

#include <algorithm>

namespace weyl {

int rref_in_place(RatMatrix& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return {};
    RatMatrix t(m[0].size(), RatRow(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatMatrix nullspace(const RatMatrix& a, int ncols) {
    RatMatrix m = a;
    int rank = rref_in_place(m);
    std::vector<int> pivot_of_col(static_cast<size_t>(ncols), -1);
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (m[static_cast<size_t>(i)][static_cast<size_t>(c)] == 0) ++c;
        pivot_of_col[static_cast<size_t>(c)] = i;
    }
    RatMatrix basis;
    for (int free = 0; free < ncols; ++free) {
        if (pivot_of_col[static_cast<size_t>(free)] >= 0) continue;
        RatRow v(static_cast<size_t>(ncols), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (int c = 0; c < ncols; ++c) {
            int pr = pivot_of_col[static_cast<size_t>(c)];
            if (pr >= 0)
                v[static_cast<size_t>(c)] =
                    -m[static_cast<size_t>(pr)][static_cast<size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void RowSpace::reduce(RatRow& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat f = v[static_cast<size_t>(pivots_[i])];
        if (f == 0) continue;
        for (int j = pivots_[i]; j < ncols_; ++j)
            v[static_cast<size_t>(j)] -= f * rows_[i][static_cast<size_t>(j)];
    }
}

bool RowSpace::add(RatRow v) {
    reduce(v);
    int p = 0;
    while (p < ncols_ && v[static_cast<size_t>(p)] == 0) ++p;
    if (p == ncols_) return false;
    Rat inv = v[static_cast<size_t>(p)];
    for (int j = p; j < ncols_; ++j) v[static_cast<size_t>(j)] /= inv;
    // back-substitute into existing rows, keep rows sorted by pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][static_cast<size_t>(p)];
        if (f == 0) continue;
        for (int j = p; j < ncols_; ++j)
            rows_[i][static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

bool RowSpace::contains(RatRow v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

} // namespace weyl
