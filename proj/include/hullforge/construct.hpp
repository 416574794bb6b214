// Constructors for GRS and extended GRS codes with a prescribed hull
// dimension, each certified on the spot by both hull routes.
//
// The common mechanism: pick evaluation points whose Lagrange coefficients u_i
// have controlled form, solve v_i^2 = c * u_i (Euclidean) or v_i^(q0+1) =
// c * u_i (Hermitian) for the column multipliers, then rescale the first
// s = k - ell or k - 1 - ell coordinates by a unit alpha whose square (resp.
// norm) is not 1. Each rescaled coordinate cuts the hull down by one, landing
// exactly on dimension ell. All derived values (square roots, norm preimages,
// alpha) are chosen smallest by element encoding, so a construction is a pure
// function of its parameter set.

#pragma once

#include "hull.hpp"
#include "point_sets.hpp"

#include <optional>

namespace hullforge {

enum class Theorem {
    t3_3_i,
    t3_3_ii,
    t3_3_iii,
    t3_4,
    t3_5,
    t3_6_i,
    t3_6_ii,
    t3_8,
    t3_9,
    t3_10,
    t3_11,
};

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::t3_3_i: return "t3.3i";
        case Theorem::t3_3_ii: return "t3.3ii";
        case Theorem::t3_3_iii: return "t3.3iii";
        case Theorem::t3_4: return "t3.4";
        case Theorem::t3_5: return "t3.5";
        case Theorem::t3_6_i: return "t3.6i";
        case Theorem::t3_6_ii: return "t3.6ii";
        case Theorem::t3_8: return "t3.8";
        case Theorem::t3_9: return "t3.9";
        case Theorem::t3_10: return "t3.10";
        case Theorem::t3_11: return "t3.11";
    }
    invariant_breach("unknown theorem tag");
}

inline Theorem theorem_from_name(const std::string& s) {
    for (Theorem t : {Theorem::t3_3_i, Theorem::t3_3_ii, Theorem::t3_3_iii, Theorem::t3_4,
                      Theorem::t3_5, Theorem::t3_6_i, Theorem::t3_6_ii, Theorem::t3_8,
                      Theorem::t3_9, Theorem::t3_10, Theorem::t3_11})
        if (s == theorem_name(t)) return t;
    throw PreconditionError("unknown theorem: " + s);
}

// Inner product the construction certifies under.
inline InnerProduct theorem_kind(Theorem t) {
    switch (t) {
        case Theorem::t3_3_i:
        case Theorem::t3_3_ii:
        case Theorem::t3_3_iii:
        case Theorem::t3_4:
            return InnerProduct::euclidean;
        default:
            return InnerProduct::hermitian;
    }
}

struct ConstructionSpec {
    Theorem theorem = Theorem::t3_5;
    std::uint64_t q = 0;       // base field order: code field (Euclidean) or
                               // subfield of the code field GF(q^2) (Hermitian)
    std::uint64_t r = 0;       // additive subfield order p^e
    std::uint64_t z = 0;       // additive subspace dimension over F_r
    std::uint64_t t = 0;       // coset count
    std::uint64_t nprime = 0;  // multiplicative coset size
    std::uint64_t n = 0;       // explicit point count (t3.4, t3.5)
    std::uint64_t k = 0;       // code dimension (forced to q for t3.11)
    std::uint64_t ell = 0;     // target hull dimension
};

struct Construction {
    GrsCode code;
    HullCertificate certificate;
    ConstructionSpec spec;
    std::optional<AdditivePointSet> additive;
    std::optional<MultiplicativePointSet> multiplicative;
};

namespace detail {

inline Elem alpha_euclidean(const Field& f) {
    for (Elem a = 1; a < f.q(); ++a)
        if (f.mul(a, a) != 1) return a;
    throw PreconditionError("no unit with alpha^2 != 1 in GF(" + std::to_string(f.q()) + ")");
}

inline Elem alpha_hermitian(const Field& f) {
    for (Elem a = 1; a < f.q(); ++a)
        if (f.norm(a) != 1) return a;
    throw PreconditionError("no unit with nonunit norm in GF(" + std::to_string(f.q()) + ")");
}

inline Elem sqrt_or_breach(const Field& f, Elem x) {
    std::optional<Elem> s = f.sqrt(x);
    if (!s) invariant_breach("expected a quadratic residue");
    return *s;
}

inline void scale_prefix(const Field& f, std::vector<Elem>& v, std::uint64_t s, Elem alpha) {
    for (std::uint64_t i = 0; i < s; ++i) v[i] = f.mul(v[i], alpha);
}

inline FieldPtr base_field(std::uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    return Field::make(pp.p, pp.m);
}

inline FieldPtr quadratic_field(std::uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    return Field::make(pp.p, 2 * pp.m);
}

// Additive-coset codes over GF(q) with Euclidean hull ell. Needs every
// element of F_r to be a square in GF(q), hence the even extension degree
// over F_r. Variant i is plain with s = k - ell; variant ii is extended with
// n even and s = k - 1 - ell; variant iii is extended with n odd, n < q, and
// a nonvanishing polynomial folded into the multipliers.
inline Construction construct_t3_3(const ConstructionSpec& spec) {
    PrimePower pp = factor_prime_power(spec.q);
    FieldPtr fp = Field::make(pp.p, pp.m);
    const Field& f = *fp;
    PrimePower rp = factor_prime_power(spec.r);
    require(rp.p == pp.p, "t3.3: r and q must share the characteristic");
    require(pp.m % rp.m == 0 && (pp.m / rp.m) % 2 == 0,
            "t3.3: the extension degree of GF(q) over GF(r) must be even");
    AdditivePointSet set =
        build_additive_set(fp, static_cast<std::uint32_t>(spec.r),
                           static_cast<std::uint32_t>(spec.z), static_cast<std::uint32_t>(spec.t));
    std::uint64_t n = set.n();
    std::uint64_t k = spec.k;
    std::uint64_t ell = spec.ell;
    bool extended = spec.theorem != Theorem::t3_3_i;
    std::uint64_t s = 0;
    if (spec.theorem == Theorem::t3_3_i) {
        require(k >= 1 && k <= n / 2, "t3.3i: k must satisfy 1 <= k <= n/2");
        require(ell <= k, "t3.3i: ell must satisfy 0 <= ell <= k");
        s = k - ell;
    } else if (spec.theorem == Theorem::t3_3_ii) {
        require(n % 2 == 0, "t3.3ii: n must be even");
        require(k >= 1 && k <= n / 2, "t3.3ii: k must satisfy 1 <= k <= n/2");
        require(ell + 1 <= k, "t3.3ii: ell must satisfy 0 <= ell <= k-1");
        s = k - 1 - ell;
    } else {
        require(n % 2 == 1, "t3.3iii: n must be odd");
        require(n < f.q(), "t3.3iii: n must be smaller than q");
        require(k >= 1 && k <= (n + 1) / 2, "t3.3iii: k must satisfy 1 <= k <= (n+1)/2");
        require(ell <= k, "t3.3iii: ell must satisfy 0 <= ell <= k");
        s = k - ell;
    }

    std::vector<Elem> u = compute_u(f, set.points);
    std::vector<Elem> v(n);
    if (spec.theorem == Theorem::t3_3_iii) {
        Poly pi = nonvanishing_monic(f, set.points, static_cast<std::uint32_t>((n + 1 - 2 * k) / 2));
        for (std::uint64_t i = 0; i < n; ++i) {
            v[i] = sqrt_or_breach(f, f.neg(u[i]));
            v[i] = f.mul(v[i], poly_eval(f, pi, set.points[i]));
        }
    } else {
        for (std::uint64_t i = 0; i < n; ++i)
            v[i] = sqrt_or_breach(f, f.mul(set.epsilon, u[i]));
    }
    if (s > 0) scale_prefix(f, v, s, alpha_euclidean(f));

    GrsCode code = make_grs(fp, set.points, std::move(v), static_cast<std::uint32_t>(k), extended);
    HullCertificate cert = certify_hull(code, InnerProduct::euclidean,
                                        static_cast<std::uint32_t>(ell));
    return Construction{std::move(code), std::move(cert), spec, std::move(set), std::nullopt};
}

// Roots-of-unity points plus zero over GF(q), extended, with a nonvanishing
// polynomial folded in. Needs (n-1) | (q-1) and 1-n a square in GF(q).
inline Construction construct_t3_4(const ConstructionSpec& spec) {
    FieldPtr fp = base_field(spec.q);
    const Field& f = *fp;
    std::uint64_t n = spec.n;
    require(n >= 3 && n % 2 == 1, "t3.4: n must be odd and at least 3");
    require(n < f.q(), "t3.4: n must be smaller than q");
    require((f.q() - 1) % (n - 1) == 0, "t3.4: n-1 must divide q-1");
    Elem n_elem = static_cast<Elem>(n % f.p());
    require(f.sqrt(f.sub(1, n_elem)).has_value(), "t3.4: 1-n must be a square in GF(q)");
    std::uint64_t k = spec.k;
    std::uint64_t ell = spec.ell;
    require(k >= 1 && k <= (n + 1) / 2, "t3.4: k must satisfy 1 <= k <= (n+1)/2");
    require(ell <= k, "t3.4: ell must satisfy 0 <= ell <= k");
    std::uint64_t s = k - ell;

    std::vector<Elem> points;
    points.reserve(n);
    Elem theta = f.exp_of((f.q() - 1) / (n - 1));
    for (std::uint64_t i = 1; i <= n - 1; ++i) points.push_back(f.pow(theta, i));
    points.push_back(0);

    std::vector<Elem> u = compute_u(f, points);
    Poly pi = nonvanishing_monic(f, points, static_cast<std::uint32_t>((n + 1 - 2 * k) / 2));
    std::vector<Elem> v(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        v[i] = sqrt_or_breach(f, f.neg(u[i]));
        v[i] = f.mul(v[i], poly_eval(f, pi, points[i]));
    }
    if (s > 0) scale_prefix(f, v, s, alpha_euclidean(f));

    GrsCode code = make_grs(fp, std::move(points), std::move(v), static_cast<std::uint32_t>(k),
                            true);
    HullCertificate cert = certify_hull(code, InnerProduct::euclidean,
                                        static_cast<std::uint32_t>(ell));
    return Construction{std::move(code), std::move(cert), spec, std::nullopt, std::nullopt};
}

// Subfield evaluation points inside GF(q^2). Differences of points lie in
// F_q, so each u_i is a unit of F_q and has a norm preimage.
inline Construction construct_t3_5(const ConstructionSpec& spec) {
    require(spec.q > 2, "t3.5: q must exceed 2");
    FieldPtr fp = quadratic_field(spec.q);
    const Field& f = *fp;
    std::uint64_t n = spec.n;
    require(n >= 2 && n <= spec.q, "t3.5: n must satisfy 2 <= n <= q");
    std::uint64_t k = spec.k;
    std::uint64_t ell = spec.ell;
    require(k >= 1 && k <= n / 2, "t3.5: k must satisfy 1 <= k <= n/2");
    require(ell <= k, "t3.5: ell must satisfy 0 <= ell <= k");
    std::uint64_t s = k - ell;

    std::vector<Elem> sub = f.subfield_elements(f.m() / 2);
    std::vector<Elem> points(sub.begin(), sub.begin() + n);
    std::vector<Elem> u = compute_u(f, points);
    std::vector<Elem> v(n);
    for (std::uint64_t i = 0; i < n; ++i) v[i] = f.norm_preimage(u[i]);
    if (s > 0) scale_prefix(f, v, s, alpha_hermitian(f));

    GrsCode code = make_grs(fp, std::move(points), std::move(v), static_cast<std::uint32_t>(k),
                            false);
    HullCertificate cert = certify_hull(code, InnerProduct::hermitian,
                                        static_cast<std::uint32_t>(ell));
    return Construction{std::move(code), std::move(cert), spec, std::nullopt, std::nullopt};
}

// Additive-coset codes inside GF(q^2) with Hermitian hull ell. epsilon * u_i
// lands in F_r^* inside F_q^*, so norm preimages exist. Variant i is plain
// with s = k - ell; variant ii is extended with s = k - 1 - ell.
inline Construction construct_t3_6(const ConstructionSpec& spec) {
    PrimePower pp = factor_prime_power(spec.q);
    require(spec.q >= 3, "t3.6: q must be at least 3");
    FieldPtr fp = Field::make(pp.p, 2 * pp.m);
    const Field& f = *fp;
    PrimePower rp = factor_prime_power(spec.r);
    require(rp.p == pp.p, "t3.6: r and q must share the characteristic");
    require(pp.m % rp.m == 0, "t3.6: GF(r) must be a subfield of GF(q)");
    AdditivePointSet set =
        build_additive_set(fp, static_cast<std::uint32_t>(spec.r),
                           static_cast<std::uint32_t>(spec.z), static_cast<std::uint32_t>(spec.t));
    std::uint64_t n = set.n();
    std::uint64_t k = spec.k;
    std::uint64_t ell = spec.ell;
    std::uint64_t kmax = (n - 1 + spec.q) / (spec.q + 1);
    require(k >= 1 && k <= kmax, "t3.6: k must satisfy 1 <= k <= (n-1+q)/(q+1)");
    bool extended = spec.theorem == Theorem::t3_6_ii;
    std::uint64_t s = 0;
    if (extended) {
        require(ell + 1 <= k, "t3.6ii: ell must satisfy 0 <= ell <= k-1");
        s = k - 1 - ell;
    } else {
        require(ell <= k, "t3.6i: ell must satisfy 0 <= ell <= k");
        s = k - ell;
    }

    std::vector<Elem> u = compute_u(f, set.points);
    std::vector<Elem> v(n);
    for (std::uint64_t i = 0; i < n; ++i) v[i] = f.norm_preimage(f.mul(set.epsilon, u[i]));
    if (s > 0) scale_prefix(f, v, s, alpha_hermitian(f));

    GrsCode code = make_grs(fp, set.points, std::move(v), static_cast<std::uint32_t>(k), extended);
    HullCertificate cert = certify_hull(code, InnerProduct::hermitian,
                                        static_cast<std::uint32_t>(ell));
    return Construction{std::move(code), std::move(cert), spec, std::move(set), std::nullopt};
}

// Multiplicative-coset codes inside GF(q^2). t3.8 uses the bare cosets and
// v_i^(q0+1) = a_i^(-1) u_i with s = k - 1 - ell; t3.9 adjoins zero and uses
// v_i^(q0+1) = u_i with s = k - ell; t3.10 is t3.9 extended with
// s = k - 1 - ell.
inline Construction construct_t3_8_9_10(const ConstructionSpec& spec) {
    require(spec.q > 2, "t3.8/9/10: q must exceed 2");
    FieldPtr fp = quadratic_field(spec.q);
    const Field& f = *fp;
    bool with_zero = spec.theorem != Theorem::t3_8;
    MultiplicativePointSet set = build_multiplicative_set(
        fp, spec.nprime, static_cast<std::uint32_t>(spec.t), with_zero);
    std::uint64_t n = spec.t * spec.nprime;  // coset points, excluding any zero
    std::uint64_t k = spec.k;
    std::uint64_t ell = spec.ell;
    std::uint64_t kmax = (n + spec.q) / (spec.q + 1);
    require(k >= 1 && k <= kmax, "t3.8/9/10: k must satisfy 1 <= k <= (n+q)/(q+1)");
    bool extended = spec.theorem == Theorem::t3_10;
    std::uint64_t s = 0;
    if (spec.theorem == Theorem::t3_9) {
        require(ell <= k, "t3.9: ell must satisfy 0 <= ell <= k");
        s = k - ell;
    } else {
        require(ell + 1 <= k, "t3.8/t3.10: ell must satisfy 0 <= ell <= k-1");
        s = k - 1 - ell;
    }

    std::vector<Elem> u = compute_u(f, set.points);
    std::vector<Elem> v(set.points.size());
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        Elem target = with_zero ? u[i] : f.mul(f.inv(set.points[i]), u[i]);
        v[i] = f.norm_preimage(target);
    }
    if (s > 0) scale_prefix(f, v, s, alpha_hermitian(f));

    GrsCode code = make_grs(fp, set.points, std::move(v), static_cast<std::uint32_t>(k), extended);
    HullCertificate cert = certify_hull(code, InnerProduct::hermitian,
                                        static_cast<std::uint32_t>(ell));
    return Construction{std::move(code), std::move(cert), spec, std::nullopt, std::move(set)};
}

// The whole of GF(q^2) as evaluation points, extended, k = q. Every u_i is
// -1, v is all ones with the first s = q - ell coordinates set to alpha.
inline Construction construct_t3_11(const ConstructionSpec& spec) {
    require(spec.q > 2, "t3.11: q must exceed 2");
    FieldPtr fp = quadratic_field(spec.q);
    const Field& f = *fp;
    std::uint64_t k = spec.k == 0 ? spec.q : spec.k;
    require(k == spec.q, "t3.11: the dimension is fixed at k = q");
    std::uint64_t ell = spec.ell;
    require(ell <= k, "t3.11: ell must satisfy 0 <= ell <= q");
    std::uint64_t s = k - ell;

    std::vector<Elem> points(f.q());
    for (std::uint32_t i = 0; i < f.q(); ++i) points[i] = i;
    std::vector<Elem> u = compute_u(f, points);
    for (Elem ui : u)
        if (ui != f.neg(1)) invariant_breach("full-field Lagrange coefficients must be -1");
    std::vector<Elem> v(points.size(), 1);
    if (s > 0) scale_prefix(f, v, s, alpha_hermitian(f));

    GrsCode code = make_grs(fp, std::move(points), std::move(v), static_cast<std::uint32_t>(k),
                            true);
    HullCertificate cert = certify_hull(code, InnerProduct::hermitian,
                                        static_cast<std::uint32_t>(ell));
    ConstructionSpec normalized = spec;
    normalized.k = k;
    return Construction{std::move(code), std::move(cert), normalized, std::nullopt, std::nullopt};
}

}  // namespace detail

inline Construction construct(const ConstructionSpec& spec) {
    require(spec.q >= 2, "construction needs a base field order q >= 2");
    switch (spec.theorem) {
        case Theorem::t3_3_i:
        case Theorem::t3_3_ii:
        case Theorem::t3_3_iii:
            return detail::construct_t3_3(spec);
        case Theorem::t3_4:
            return detail::construct_t3_4(spec);
        case Theorem::t3_5:
            return detail::construct_t3_5(spec);
        case Theorem::t3_6_i:
        case Theorem::t3_6_ii:
            return detail::construct_t3_6(spec);
        case Theorem::t3_8:
        case Theorem::t3_9:
        case Theorem::t3_10:
            return detail::construct_t3_8_9_10(spec);
        case Theorem::t3_11:
            return detail::construct_t3_11(spec);
    }
    invariant_breach("unknown theorem tag");
}

}  // namespace hullforge
