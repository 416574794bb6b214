// Hull computation and certification.
//
// The hull of a code C under an inner product is C intersected with its dual.
// Two independent routes compute its dimension:
//   gram:      dim = k - rank(G sigma(G)^T) for a generator matrix G, cross
//              checked against (N - k) - rank(H sigma(H)^T) for a parity
//              check H, where sigma is the identity (Euclidean) or the
//              entrywise q0-th power (Hermitian);
//   intersect: rank(G) + rank(D) - rank(G stacked on D) for the dual
//              generator D = sigma(H), together with an explicit RREF basis.
// certify_hull demands that both routes agree with the expected dimension and
// that every basis row lies in the code and in its dual.

#pragma once

#include "grs.hpp"

#include <sstream>

namespace hullforge {

struct HullCertificate {
    InnerProduct kind = InnerProduct::euclidean;
    std::uint32_t dim = 0;
    Matrix basis;  // dim x N, reduced row echelon form
};

inline Matrix sigma_rows(const Matrix& m, InnerProduct kind) {
    return kind == InnerProduct::hermitian ? conj_entries(m) : m;
}

inline std::size_t gram_rank(const Matrix& gen, InnerProduct kind) {
    return rank(mul(gen, transpose(sigma_rows(gen, kind))));
}

// Gram route on an arbitrary generator matrix with full row rank.
inline std::size_t hull_dim_gram_mat(const Matrix& gen, InnerProduct kind) {
    std::size_t k = gen.rows();
    std::size_t n = gen.cols();
    Matrix h = kernel(gen);
    std::size_t via_gen = k - gram_rank(gen, kind);
    std::size_t via_par = (n - k) - gram_rank(h, kind);
    if (via_gen != via_par) {
        std::ostringstream os;
        os << "gram hull dimensions disagree: generator route " << via_gen
           << ", parity route " << via_par;
        throw CertificationError(os.str());
    }
    return via_gen;
}

struct HullIntersection {
    std::size_t dim = 0;
    Matrix basis;
};

// Intersection route: build the dual generator sigma(kernel rows) and
// intersect row spaces, returning the canonical basis.
inline HullIntersection hull_dim_intersect_mat(const Matrix& gen, InnerProduct kind) {
    Matrix dual_gen = sigma_rows(kernel(gen), kind);
    std::size_t dim = rowspace_intersection_dim(gen, dual_gen);
    Matrix basis = rowspace_intersection_basis(gen, dual_gen);
    if (basis.rows() != dim)
        throw CertificationError("intersection basis size disagrees with the rank formula");
    return {dim, std::move(basis)};
}

inline std::size_t hull_dim_gram(const GrsCode& c, InnerProduct kind) {
    if (kind == InnerProduct::hermitian)
        require(c.field->m() % 2 == 0, "Hermitian hull needs a quadratic-extension field");
    return hull_dim_gram_mat(generator_matrix(c), kind);
}

inline HullIntersection hull_dim_intersect(const GrsCode& c, InnerProduct kind) {
    if (kind == InnerProduct::hermitian)
        require(c.field->m() % 2 == 0, "Hermitian hull needs a quadratic-extension field");
    return hull_dim_intersect_mat(generator_matrix(c), kind);
}

// Runs both routes, demands agreement with the expected dimension, and
// validates the basis row by row.
inline HullCertificate certify_hull(const GrsCode& c, InnerProduct kind, std::uint32_t expected) {
    if (kind == InnerProduct::hermitian)
        require(c.field->m() % 2 == 0, "Hermitian hull needs a quadratic-extension field");
    Matrix gen = generator_matrix(c);
    if (rank(gen) != c.k) throw CertificationError("generator matrix is rank deficient");
    std::size_t gram = hull_dim_gram_mat(gen, kind);
    HullIntersection inter = hull_dim_intersect_mat(gen, kind);
    if (gram != inter.dim || inter.dim != expected) {
        std::ostringstream os;
        os << "hull dimension mismatch: gram " << gram << ", intersection " << inter.dim
           << ", expected " << expected;
        throw CertificationError(os.str());
    }
    for (std::size_t r = 0; r < inter.basis.rows(); ++r) {
        std::vector<Elem> row = inter.basis.row(r);
        if (!in_rowspace(gen, row))
            throw CertificationError("hull basis row escapes the code");
        if (!dual_membership(c, row, kind))
            throw CertificationError("hull basis row escapes the dual");
    }
    return HullCertificate{kind, expected, std::move(inter.basis)};
}

}  // namespace hullforge
