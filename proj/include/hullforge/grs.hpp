// Generalized Reed-Solomon codes and their one-point extensions.
//
// GRS_k(a, v) = { (v_1 f(a_1), ..., v_n f(a_n)) : deg f <= k-1 } with the a_i
// distinct and the v_i nonzero units. The extended variant appends the
// coefficient f_{k-1} as one extra coordinate. Both are MDS.

#pragma once

#include "matrix.hpp"
#include "poly.hpp"

#include <set>

namespace hullforge {

enum class InnerProduct { euclidean, hermitian };

inline const char* inner_product_name(InnerProduct k) {
    return k == InnerProduct::euclidean ? "euclidean" : "hermitian";
}

struct GrsCode {
    FieldPtr field;
    std::vector<Elem> a;  // evaluation points, pairwise distinct
    std::vector<Elem> v;  // column multipliers, all nonzero
    std::uint32_t k = 0;  // dimension
    bool extended = false;

    std::size_t n() const { return a.size(); }
    std::size_t length() const { return a.size() + (extended ? 1 : 0); }
};

inline GrsCode make_grs(FieldPtr f, std::vector<Elem> a, std::vector<Elem> v, std::uint32_t k,
                        bool extended) {
    require(f != nullptr, "code needs a field");
    require(!a.empty(), "code needs at least one evaluation point");
    require(a.size() == v.size(), "evaluation points and multipliers must align");
    std::set<Elem> seen;
    for (Elem x : a) {
        require(x < f->q(), "evaluation point out of field range");
        require(seen.insert(x).second, "evaluation points must be distinct");
    }
    for (Elem x : v) {
        require(x != 0, "column multipliers must be nonzero");
        require(x < f->q(), "column multiplier out of field range");
    }
    std::size_t len = a.size() + (extended ? 1 : 0);
    require(k >= 1 && k <= len, "dimension out of range");
    return GrsCode{std::move(f), std::move(a), std::move(v), k, extended};
}

// Lagrange coefficients u_i = prod_{j != i} (a_i - a_j)^(-1). They satisfy
// sum_i u_i a_i^s = 0 for 0 <= s <= n-2 and = 1 for s = n-1.
inline std::vector<Elem> compute_u(const Field& f, const std::vector<Elem>& a) {
    std::size_t n = a.size();
    require(n >= 2, "Lagrange coefficients need at least two points");
    std::vector<Elem> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem prod = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Elem d = f.sub(a[i], a[j]);
            require(d != 0, "Lagrange coefficients need distinct points");
            prod = f.mul(prod, d);
        }
        u[i] = f.inv(prod);
    }
    return u;
}

inline Matrix generator_matrix(const GrsCode& c) {
    const Field& f = *c.field;
    Matrix g(c.field, c.k, c.length());
    for (std::uint32_t r = 0; r < c.k; ++r) {
        for (std::size_t j = 0; j < c.n(); ++j) g.at(r, j) = f.mul(c.v[j], f.pow(c.a[j], r));
        if (c.extended) g.at(r, c.n()) = (r + 1 == c.k) ? 1 : 0;
    }
    return g;
}

// Codeword for the message polynomial f (coefficients low to high, at most k).
inline std::vector<Elem> encode(const GrsCode& c, const Poly& msg) {
    require(msg.size() <= c.k, "message longer than the code dimension");
    const Field& f = *c.field;
    std::vector<Elem> word(c.length());
    for (std::size_t j = 0; j < c.n(); ++j) word[j] = f.mul(c.v[j], poly_eval(f, msg, c.a[j]));
    if (c.extended) word[c.n()] = poly_coeff(msg, c.k - 1);
    return word;
}

// Membership of `word` in the dual code under the chosen inner product:
// Euclidean sum_j word_j g_j = 0 for every generator row g, Hermitian
// sum_j word_j g_j^q0 = 0.
inline bool dual_membership(const GrsCode& c, const std::vector<Elem>& word, InnerProduct kind) {
    require(word.size() == c.length(), "word length mismatch");
    const Field& f = *c.field;
    Matrix g = generator_matrix(c);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Elem acc = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            Elem e = g.at(r, j);
            if (kind == InnerProduct::hermitian) e = f.conj(e);
            acc = f.add(acc, f.mul(word[j], e));
        }
        if (acc != 0) return false;
    }
    return true;
}

// Rows span the Euclidean dual; obtained as the right null space of the
// generator matrix.
inline Matrix parity_check_matrix(const GrsCode& c) { return kernel(generator_matrix(c)); }

// Witness identity deciding whether the codeword of f lies in the dual.
//
// Plain codes: the word (v_i f(a_i)) is in the Euclidean dual iff some g with
// deg g <= n-k-1 satisfies v_i^2 f(a_i) = u_i g(a_i) at every point, and in
// the Hermitian dual iff v_i^(q0+1) f(a_i)^q0 = u_i g(a_i) with the same
// degree bound. Extended codes allow deg g <= n-k and additionally require
// f_{k-1} = -g_{n-k} (Euclidean) or f_{k-1}^q0 = -g_{n-k} (Hermitian).
// Returns whether the given g witnesses membership; degree-bound violations
// of f or g are parameter errors.
inline bool witness_check(const GrsCode& c, const Poly& f_poly, const Poly& g_poly,
                          InnerProduct kind) {
    const Field& f = *c.field;
    std::size_t n = c.n();
    require(poly_degree(f_poly) < static_cast<int>(c.k), "message degree exceeds k-1");
    int gbound = static_cast<int>(n) - static_cast<int>(c.k) - (c.extended ? 0 : 1);
    require(poly_degree(g_poly) <= gbound, "witness degree exceeds its bound");
    std::vector<Elem> u = compute_u(f, c.a);
    for (std::size_t i = 0; i < n; ++i) {
        Elem fe = poly_eval(f, f_poly, c.a[i]);
        Elem lhs;
        if (kind == InnerProduct::euclidean) {
            lhs = f.mul(f.mul(c.v[i], c.v[i]), fe);
        } else {
            lhs = f.mul(f.pow(c.v[i], std::uint64_t(f.base_order()) + 1), f.conj(fe));
        }
        Elem rhs = f.mul(u[i], poly_eval(f, g_poly, c.a[i]));
        if (lhs != rhs) return false;
    }
    if (c.extended) {
        Elem top = poly_coeff(f_poly, c.k - 1);
        if (kind == InnerProduct::hermitian) top = f.conj(top);
        if (top != f.neg(poly_coeff(g_poly, n - c.k))) return false;
    }
    return true;
}

}  // namespace hullforge
