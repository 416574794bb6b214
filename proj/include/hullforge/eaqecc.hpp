// Entanglement-assisted quantum code parameters derived from
// Hermitian-certified MDS codes, plus table generation.
//
// A Hermitian-certified [N, k] code with hull dimension ell yields an
// [[N, N-k-ell, k+1; k-ell]]_q0 EAQECC. The entanglement count c is computed
// three independent ways and must agree:
//   1. k - ell from the certificate;
//   2. rank(H sigma(H)^T) for a parity check H of the Hermitian dual, the
//      matrix the quantum construction actually consumes;
//   3. N - dim(D) - dim Hull(D) with the dual's hull recomputed from scratch
//      by the intersection route.

#pragma once

#include "construct.hpp"

#include <sstream>

namespace hullforge {

struct EaqeccParams {
    std::uint64_t n = 0;      // physical qudits
    std::uint64_t kappa = 0;  // logical qudits
    std::uint64_t d = 0;      // distance
    std::uint64_t c = 0;      // maximally entangled pairs
    std::uint64_t q = 0;      // qudit alphabet
};

inline EaqeccParams derive_params(const GrsCode& code, const HullCertificate& cert) {
    require(cert.kind == InnerProduct::hermitian,
            "entanglement-assisted parameters need a Hermitian certificate");
    const Field& f = *code.field;
    require(f.m() % 2 == 0, "code field must be a quadratic extension");
    std::uint64_t N = code.length();
    std::uint64_t k = code.k;
    std::uint64_t ell = cert.dim;
    require(2 * k <= N, "entanglement derivation needs k <= N/2");
    require(ell <= k, "hull dimension exceeds the code dimension");

    std::uint64_t c1 = k - ell;

    Matrix gen = generator_matrix(code);
    Matrix dual_gen = conj_entries(kernel(gen));      // generates the Hermitian dual D
    Matrix dual_parity = kernel(dual_gen);            // parity check of D
    std::uint64_t c2 = gram_rank(dual_parity, InnerProduct::hermitian);

    HullIntersection dual_hull = hull_dim_intersect_mat(dual_gen, InnerProduct::hermitian);
    std::uint64_t c3 = N - dual_gen.rows() - dual_hull.dim;

    if (c1 != c2 || c2 != c3) {
        std::ostringstream os;
        os << "entanglement count disagreement: k-ell " << c1 << ", dual parity gram " << c2
           << ", dual hull " << c3;
        throw CertificationError(os.str());
    }

    return EaqeccParams{N, N - k - ell, k + 1, c1, f.base_order()};
}

struct SingletonResult {
    bool applicable = false;  // the bound covers d <= (n+2)/2 only
    bool holds = false;
    bool equality = false;
};

// Quantum Singleton bound n + c - kappa >= 2(d - 1), with equality exactly
// for MDS entanglement-assisted codes.
inline SingletonResult singleton_check(const EaqeccParams& p) {
    SingletonResult r;
    r.applicable = 2 * p.d <= p.n + 2;
    if (!r.applicable) return r;
    std::uint64_t lhs = p.n + p.c;
    std::uint64_t rhs = p.kappa + 2 * (p.d - 1);
    r.holds = lhs >= rhs;
    r.equality = lhs == rhs;
    return r;
}

enum class TableFamily { t4_6, t4_8_i, t4_8_ii, t4_9_i, t4_9_ii, t4_9_iii, t4_10 };

inline const char* family_name(TableFamily f) {
    switch (f) {
        case TableFamily::t4_6: return "t4.6";
        case TableFamily::t4_8_i: return "t4.8i";
        case TableFamily::t4_8_ii: return "t4.8ii";
        case TableFamily::t4_9_i: return "t4.9i";
        case TableFamily::t4_9_ii: return "t4.9ii";
        case TableFamily::t4_9_iii: return "t4.9iii";
        case TableFamily::t4_10: return "t4.10";
    }
    invariant_breach("unknown table family");
}

inline TableFamily family_from_name(const std::string& s) {
    for (TableFamily f : {TableFamily::t4_6, TableFamily::t4_8_i, TableFamily::t4_8_ii,
                          TableFamily::t4_9_i, TableFamily::t4_9_ii, TableFamily::t4_9_iii,
                          TableFamily::t4_10})
        if (s == family_name(f)) return f;
    throw PreconditionError("unknown table family: " + s);
}

inline Theorem family_theorem(TableFamily f) {
    switch (f) {
        case TableFamily::t4_6: return Theorem::t3_5;
        case TableFamily::t4_8_i: return Theorem::t3_6_i;
        case TableFamily::t4_8_ii: return Theorem::t3_6_ii;
        case TableFamily::t4_9_i: return Theorem::t3_8;
        case TableFamily::t4_9_ii: return Theorem::t3_9;
        case TableFamily::t4_9_iii: return Theorem::t3_10;
        case TableFamily::t4_10: return Theorem::t3_11;
    }
    invariant_breach("unknown table family");
}

struct TableQuery {
    TableFamily family = TableFamily::t4_6;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t z = 0;
    std::uint64_t t = 0;
    std::uint64_t nprime = 0;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> kmin, kmax, lmin, lmax;
    // Explicit (k, ell) pairs; when nonempty they replace the ranges.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
};

struct TableRow {
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
    EaqeccParams params;
    Construction constr;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) out *= b;
    return out;
}

inline std::uint64_t family_kmax(const TableQuery& qy) {
    switch (qy.family) {
        case TableFamily::t4_6:
            return qy.n / 2;
        case TableFamily::t4_8_i:
        case TableFamily::t4_8_ii:
            return (qy.t * ipow(qy.r, qy.z) - 1 + qy.q) / (qy.q + 1);
        case TableFamily::t4_9_i:
        case TableFamily::t4_9_ii:
        case TableFamily::t4_9_iii:
            return (qy.t * qy.nprime + qy.q) / (qy.q + 1);
        case TableFamily::t4_10:
            return qy.q;
    }
    invariant_breach("unknown table family");
}

// Largest admissible ell for a given k in this family.
inline std::uint64_t family_ell_cap(TableFamily f, std::uint64_t k) {
    switch (f) {
        case TableFamily::t4_6:
        case TableFamily::t4_8_i:
        case TableFamily::t4_9_ii:
        case TableFamily::t4_10:
            return k;
        default:
            return k - 1;
    }
}

}  // namespace detail

// Constructs one table row: build, certify, derive parameters, and insist on
// quantum Singleton equality.
inline TableRow table_row(const TableQuery& qy, std::uint64_t k, std::uint64_t ell) {
    ConstructionSpec spec;
    spec.theorem = family_theorem(qy.family);
    spec.q = qy.q;
    spec.r = qy.r;
    spec.z = qy.z;
    spec.t = qy.t;
    spec.nprime = qy.nprime;
    spec.n = qy.n;
    spec.k = k;
    spec.ell = ell;
    Construction c = construct(spec);
    EaqeccParams params = derive_params(c.code, c.certificate);
    SingletonResult sr = singleton_check(params);
    if (!sr.applicable || !sr.equality) {
        std::ostringstream os;
        os << "quantum Singleton equality failed for k=" << k << " ell=" << ell;
        throw CertificationError(os.str());
    }
    return TableRow{k, ell, params, std::move(c)};
}

inline std::vector<TableRow> generate_table(const TableQuery& qy) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells = qy.rows;
    if (cells.empty()) {
        std::uint64_t klo = qy.kmin.value_or(qy.family == TableFamily::t4_10 ? qy.q : 1);
        std::uint64_t khi = qy.kmax.value_or(detail::family_kmax(qy));
        for (std::uint64_t k = klo; k <= khi; ++k) {
            std::uint64_t llo = qy.lmin.value_or(1);
            std::uint64_t cap = detail::family_ell_cap(qy.family, k);
            std::uint64_t lhi = std::min(qy.lmax.value_or(k == 0 ? 0 : k - 1), cap);
            for (std::uint64_t l = llo; l <= lhi; ++l) cells.emplace_back(k, l);
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<TableRow> rows;
    rows.reserve(cells.size());
    for (auto [k, l] : cells) rows.push_back(table_row(qy, k, l));
    return rows;
}

inline std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "k,ell,n,kappa,d,c,q\n";
    for (const TableRow& r : rows)
        os << r.k << ',' << r.ell << ',' << r.params.n << ',' << r.params.kappa << ','
           << r.params.d << ',' << r.params.c << ',' << r.params.q << '\n';
    return os.str();
}

inline std::string render_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "| k | ell | parameters |\n|--:|----:|:-----------|\n";
    for (const TableRow& r : rows)
        os << "| " << r.k << " | " << r.ell << " | [[" << r.params.n << ", " << r.params.kappa
           << ", " << r.params.d << "; " << r.params.c << "]]_" << r.params.q << " |\n";
    return os.str();
}

}  // namespace hullforge
