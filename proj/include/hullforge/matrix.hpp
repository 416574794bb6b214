// Dense matrices over a Field with exact Gaussian elimination: RREF, rank,
// null spaces, and row-space intersections. RREF is unique per row space, so
// every basis produced here is canonical.

#pragma once

#include "field.hpp"

#include <cstddef>

namespace hullforge {

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<Elem>& entries() const { return e_; }
    std::vector<Elem>& entries() { return e_; }

    std::vector<Elem> row(std::size_t r) const {
        return std::vector<Elem>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    FieldPtr f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> e_;
};

inline Matrix identity(FieldPtr f, std::size_t n) {
    Matrix out(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

inline Matrix matrix_from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(std::move(f), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "ragged row list");
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = rows[r][c];
    }
    return out;
}

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    require(same_field(*a.field(), *b.field()), "matrix product field mismatch");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem arc = a.at(r, k);
            if (arc == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(r, c) = f.add(out.at(r, c), f.mul(arc, b.at(k, c)));
        }
    return out;
}

// Entrywise quadratic-extension conjugation.
inline Matrix conj_entries(const Matrix& a) {
    const Field& f = *a.field();
    Matrix out = a;
    for (Elem& x : out.entries()) x = f.conj(x);
    return out;
}

inline Matrix stack_rows(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "row stack width mismatch");
    require(same_field(*a.field(), *b.field()), "row stack field mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

inline Echelon rref(Matrix a) {
    const Field& f = *a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && a.at(pr, c) == 0) ++pr;
        if (pr == a.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        Elem piv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), piv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Elem factor = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

// Basis of the right null space {x : a x = 0}, one vector per row. Each basis
// vector sets one RREF free variable to 1, so the result is canonical.
inline Matrix kernel(const Matrix& a) {
    Echelon e = rref(a);
    const Field& f = *a.field();
    std::vector<std::size_t> pivot_of_col(a.cols(), SIZE_MAX);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_of_col[e.pivots[i]] = i;
    Matrix out(a.field(), a.cols() - e.pivots.size(), a.cols());
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        out.at(r, c) = 1;
        for (std::size_t pc = 0; pc < a.cols(); ++pc)
            if (pivot_of_col[pc] != SIZE_MAX)
                out.at(r, pc) = f.neg(e.mat.at(pivot_of_col[pc], c));
        ++r;
    }
    return out;
}

// dim(rowspace(a) ^ rowspace(b)) by the rank formula
// rank(a) + rank(b) - rank(a stacked on b).
inline std::size_t rowspace_intersection_dim(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(stack_rows(a, b));
}

// Canonical (RREF) basis of rowspace(a) ^ rowspace(b). Every left-null vector
// (w_a | w_b) of the stacked matrix gives an intersection member w_a a, and
// together these span the whole intersection.
inline Matrix rowspace_intersection_basis(const Matrix& a, const Matrix& b) {
    Matrix stacked = stack_rows(a, b);
    Matrix left_null = kernel(transpose(stacked));
    const Field& f = *a.field();
    Matrix members(a.field(), left_null.rows(), a.cols());
    for (std::size_t r = 0; r < left_null.rows(); ++r)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Elem w = left_null.at(r, i);
            if (w == 0) continue;
            for (std::size_t c = 0; c < a.cols(); ++c)
                members.at(r, c) = f.add(members.at(r, c), f.mul(w, a.at(i, c)));
        }
    Echelon e = rref(members);
    Matrix out(a.field(), e.pivots.size(), a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = e.mat.at(r, c);
    return out;
}

inline Matrix row_matrix(FieldPtr f, const std::vector<Elem>& row) {
    Matrix out(std::move(f), 1, row.size());
    for (std::size_t c = 0; c < row.size(); ++c) out.at(0, c) = row[c];
    return out;
}

inline bool in_rowspace(const Matrix& a, const std::vector<Elem>& row) {
    require(row.size() == a.cols(), "row width mismatch");
    return rank(a) == rank(stack_rows(a, row_matrix(a.field(), row)));
}

}  // namespace hullforge
