// Coefficient-vector polynomials over a Field. coeffs[i] multiplies x^i.

#pragma once

#include "field.hpp"

namespace hullforge {

using Poly = std::vector<Elem>;

inline int poly_degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

inline Elem poly_coeff(const Poly& a, std::size_t i) { return i < a.size() ? a[i] : 0; }

inline Elem poly_eval(const Field& f, const Poly& a, Elem x) {
    Elem acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

inline Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(poly_coeff(a, i), poly_coeff(b, i));
    return out;
}

inline Poly poly_scale(const Field& f, const Poly& a, Elem c) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
    return out;
}

inline Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (poly_degree(a) < 0 || poly_degree(b) < 0) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

// x - root
inline Poly poly_linear(const Field& f, Elem root) { return {f.neg(root), 1}; }

// Entrywise application of the quadratic-extension automorphism.
inline Poly poly_conj(const Field& f, const Poly& a) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.conj(a[i]);
    return out;
}

}  // namespace hullforge
