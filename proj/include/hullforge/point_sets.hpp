// Evaluation-point families whose Lagrange coefficients have controlled form.
//
// Additive sets are unions of t cosets H + beta_j * eta of an F_r-subspace H,
// where the scaling constant epsilon makes every epsilon * u_i land in F_r^*.
// Multiplicative sets are unions of t cosets beta_b * G of the order-n' cyclic
// subgroup G of GF(q0^2)^*, optionally with 0 appended; there a_i^(-1) u_i
// lands in F_q0^*. Closed forms for both u vectors are provided so that the
// direct product formula can be cross-checked against them.

#pragma once

#include "grs.hpp"

#include <numeric>
#include <set>

namespace hullforge {

struct AdditivePointSet {
    FieldPtr field;
    std::uint32_t r = 0;  // subfield order p^e
    std::uint32_t z = 0;  // F_r-dimension of H
    std::uint32_t t = 0;  // number of cosets
    std::vector<Elem> subspace;  // H in digit enumeration order, size r^z
    Elem eta = 0;                // coset direction, smallest element outside H
    std::vector<Elem> betas;     // coset labels, the first t of F_r by encoding
    std::vector<Elem> points;    // size t * r^z, coset by coset
    Elem epsilon = 0;

    std::size_t n() const { return points.size(); }
};

// H is spanned over F_r by omega^0, ..., omega^(z-1) and enumerated with the
// digit at omega^0 varying fastest, digits ordered by subfield encoding.
inline AdditivePointSet build_additive_set(FieldPtr fp, std::uint32_t r, std::uint32_t z,
                                           std::uint32_t t) {
    const Field& f = *fp;
    PrimePower rp = factor_prime_power(r);
    require(rp.p == f.p(), "subfield order must be a power of the field characteristic");
    std::uint32_t e = rp.m;
    require(f.m() % e == 0, "subfield degree must divide the extension degree");
    std::uint32_t dim = f.m() / e;  // F_r-dimension of the field
    require(z >= 1 && z <= dim - 1, "subspace dimension z must satisfy 1 <= z <= dim-1");
    require(t >= 1 && t <= r, "coset count t must satisfy 1 <= t <= r");

    std::vector<Elem> fr = f.subfield_elements(e);  // ascending, fr[0] = 0
    std::vector<Elem> basis(z);
    for (std::uint32_t i = 0; i < z; ++i) basis[i] = f.pow(f.omega(), i);

    std::uint64_t hsize = 1;
    for (std::uint32_t i = 0; i < z; ++i) hsize *= r;
    std::vector<Elem> subspace;
    subspace.reserve(hsize);
    for (std::uint64_t cnt = 0; cnt < hsize; ++cnt) {
        Elem x = 0;
        std::uint64_t rest = cnt;
        for (std::uint32_t i = 0; i < z; ++i) {
            x = f.add(x, f.mul(fr[rest % r], basis[i]));
            rest /= r;
        }
        subspace.push_back(x);
    }
    std::set<Elem> hset(subspace.begin(), subspace.end());
    if (hset.size() != subspace.size()) invariant_breach("subspace basis is dependent");

    Elem eta = 0;
    while (hset.count(eta)) ++eta;

    std::vector<Elem> betas(fr.begin(), fr.begin() + t);

    std::vector<Elem> points;
    points.reserve(hsize * t);
    for (std::uint32_t b = 0; b < t; ++b) {
        Elem shift = f.mul(betas[b], eta);
        for (Elem h : subspace) points.push_back(f.add(h, shift));
    }
    std::set<Elem> pset(points.begin(), points.end());
    if (pset.size() != points.size()) invariant_breach("additive cosets overlap");

    Elem prod_h = 1;
    for (Elem h : subspace)
        if (h != 0) prod_h = f.mul(prod_h, h);
    Elem prod_eta = 1;
    for (Elem g : subspace) prod_eta = f.mul(prod_eta, f.sub(eta, g));
    Elem epsilon = f.mul(prod_h, f.pow(prod_eta, t - 1));

    return AdditivePointSet{std::move(fp), r, z, t, std::move(subspace), eta,
                            std::move(betas), std::move(points), epsilon};
}

// Closed form of the Lagrange coefficients of an additive set: constant on
// each coset, u_i = (prod_{h in H, h != 0} h)^(-1) *
// (prod_{g in H} (eta - g))^(1-t) * prod_{j != b} (beta_b - beta_j)^(-1).
inline std::vector<Elem> closed_form_u(const AdditivePointSet& s) {
    const Field& f = *s.field;
    Elem prod_h = 1;
    for (Elem h : s.subspace)
        if (h != 0) prod_h = f.mul(prod_h, h);
    Elem prod_eta = 1;
    for (Elem g : s.subspace) prod_eta = f.mul(prod_eta, f.sub(s.eta, g));
    Elem base = f.mul(f.inv(prod_h), f.pow(f.inv(prod_eta), s.t - 1));
    std::vector<Elem> u;
    u.reserve(s.points.size());
    for (std::uint32_t b = 0; b < s.t; ++b) {
        Elem coset = base;
        for (std::uint32_t j = 0; j < s.t; ++j)
            if (j != b) coset = f.mul(coset, f.inv(f.sub(s.betas[b], s.betas[j])));
        for (std::size_t i = 0; i < s.subspace.size(); ++i) u.push_back(coset);
    }
    return u;
}

struct MultiplicativePointSet {
    FieldPtr field;           // GF(q0^2)
    std::uint64_t nprime = 0; // coset size, divides q0^2 - 1
    std::uint32_t t = 0;      // number of cosets
    bool with_zero = false;
    std::vector<Elem> leaders;  // beta_1 = 1, ...
    std::vector<Elem> points;   // t * nprime points, plus a trailing 0 if with_zero

    std::size_t n() const { return points.size(); }
};

// G is the order-n' subgroup of GF(q0^2)^*. Coset leaders are the first t
// distinct G-cosets among the powers omega^(j (q0+1)/n2), j = 0, 1, 2, ...
// with n2 = gcd(n', q0+1); each coset is listed as beta * theta^1, ...,
// beta * theta^n' for theta = omega^((q0^2-1)/n').
inline MultiplicativePointSet build_multiplicative_set(FieldPtr fp, std::uint64_t nprime,
                                                       std::uint32_t t, bool with_zero) {
    const Field& f = *fp;
    std::uint32_t q0 = f.base_order();
    std::uint64_t group = std::uint64_t(f.q()) - 1;
    require(nprime >= 1 && group % nprime == 0, "n' must divide q0^2 - 1");
    std::uint64_t n2 = std::gcd(nprime, std::uint64_t(q0) + 1);
    std::uint64_t n1 = nprime / n2;
    require(t >= 1 && t <= (q0 - 1) / n1, "coset count t must satisfy 1 <= t <= (q0-1)/n1");
    require(t * nprime >= 2, "point set needs at least two points");

    Elem theta = f.exp_of(group / nprime);
    std::uint64_t leader_step = (std::uint64_t(q0) + 1) / n2;
    std::uint64_t coset_test = group / nprime;  // x in G iff dlog(x) divisible by this

    std::vector<Elem> leaders;
    std::vector<std::uint64_t> leader_logs;
    for (std::uint64_t j = 0; leaders.size() < t; ++j) {
        if (j * leader_step >= group) invariant_breach("ran out of coset leaders");
        std::uint64_t lg = (j * leader_step) % group;
        bool fresh = true;
        for (std::uint64_t seen : leader_logs)
            if ((lg + group - seen) % coset_test == 0) {
                fresh = false;
                break;
            }
        if (fresh) {
            leaders.push_back(f.exp_of(lg));
            leader_logs.push_back(lg);
        }
    }

    std::vector<Elem> points;
    points.reserve(t * nprime + (with_zero ? 1 : 0));
    for (Elem beta : leaders)
        for (std::uint64_t l = 1; l <= nprime; ++l) points.push_back(f.mul(beta, f.pow(theta, l)));
    if (with_zero) points.push_back(0);

    std::set<Elem> pset(points.begin(), points.end());
    if (pset.size() != points.size()) invariant_breach("multiplicative cosets overlap");

    return MultiplicativePointSet{std::move(fp), nprime, t, with_zero,
                                  std::move(leaders), std::move(points)};
}

// Closed form of the Lagrange coefficients of a multiplicative set:
// u_i = (1/n') a_i beta_b^(-n') prod_{s != b} (beta_b^n' - beta_s^n')^(-1)
// for a_i in the coset of beta_b. With 0 appended, each u_i picks up the
// extra factor a_i^(-1) and the zero point gets
// u = (-1)^t prod_b beta_b^(-n').
inline std::vector<Elem> closed_form_u(const MultiplicativePointSet& s) {
    const Field& f = *s.field;
    Elem np = static_cast<Elem>(s.nprime % f.p());
    if (np == 0) invariant_breach("coset size divisible by the characteristic");
    std::vector<Elem> bn(s.leaders.size());
    for (std::size_t b = 0; b < s.leaders.size(); ++b) bn[b] = f.pow(s.leaders[b], s.nprime);
    std::vector<Elem> factor(s.leaders.size());
    for (std::size_t b = 0; b < s.leaders.size(); ++b) {
        Elem acc = f.mul(f.inv(np), f.inv(bn[b]));
        for (std::size_t j = 0; j < s.leaders.size(); ++j)
            if (j != b) acc = f.mul(acc, f.inv(f.sub(bn[b], bn[j])));
        factor[b] = acc;
    }
    std::vector<Elem> u;
    u.reserve(s.points.size());
    for (std::size_t b = 0; b < s.leaders.size(); ++b)
        for (std::uint64_t l = 0; l < s.nprime; ++l) {
            Elem a = s.points[b * s.nprime + l];
            u.push_back(s.with_zero ? factor[b] : f.mul(factor[b], a));
        }
    if (s.with_zero) {
        Elem uz = 1;
        for (Elem b : bn) uz = f.mul(uz, f.inv(b));
        if (s.t % 2 == 1) uz = f.neg(uz);
        u.push_back(uz);
    }
    return u;
}

// Smallest monic polynomial of the given degree with no root in `avoid`,
// scanning non-leading coefficient vectors by integer encoding sum c_i q^i.
// Degree 0 yields the constant 1; degree 1 yields x - delta for the smallest
// delta outside `avoid`.
inline Poly nonvanishing_monic(const Field& f, const std::vector<Elem>& avoid,
                               std::uint32_t degree) {
    if (degree == 0) return Poly{1};
    std::set<Elem> bad(avoid.begin(), avoid.end());
    if (degree == 1) {
        require(bad.size() < f.q(), "no element left outside the avoided set");
        Elem delta = 0;
        while (bad.count(delta)) ++delta;
        return poly_linear(f, delta);
    }
    std::vector<Elem> c(degree, 0);
    while (true) {
        Poly cand(c.begin(), c.end());
        cand.push_back(1);
        bool ok = true;
        for (Elem a : avoid)
            if (poly_eval(f, cand, a) == 0) {
                ok = false;
                break;
            }
        if (ok) return cand;
        std::uint32_t i = 0;
        while (i < degree && ++c[i] == f.q()) c[i++] = 0;
        if (i == degree) invariant_breach("no nonvanishing monic polynomial found");
    }
}

}  // namespace hullforge
