#include <catch2/catch_amalgamated.hpp>

#include <hullforge/construct.hpp>
#include <hullforge/oracle.hpp>

#include "helpers.hpp"

using namespace hullforge;
using testutil::Rng;

namespace {

GrsCode random_code(Rng& rng, FieldPtr f, std::size_t n, std::uint32_t k, bool extended) {
    std::vector<Elem> pool(f->q());
    for (Elem x = 0; x < f->q(); ++x) pool[x] = x;
    for (std::size_t i = pool.size(); i-- > 1;) std::swap(pool[i], pool[rng.below(i + 1)]);
    std::vector<Elem> a(pool.begin(), pool.begin() + n);
    std::vector<Elem> v(n);
    for (Elem& e : v) e = static_cast<Elem>(1 + rng.below(f->q() - 1));
    return make_grs(std::move(f), std::move(a), std::move(v), k, extended);
}

}  // namespace

TEST_CASE("both hull routes agree with exhaustive enumeration on random codes") {
    Rng rng(101);
    OracleBudgets budgets;
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 9u}) {
        PrimePower pp = factor_prime_power(q);
        FieldPtr f = Field::make(pp.p, pp.m);
        bool quadratic = pp.m % 2 == 0;
        // keep q^k within the enumeration budget
        std::uint32_t kcap = 1;
        std::uint64_t words = q;
        while (words * q <= budgets.hull_words) {
            words *= q;
            ++kcap;
        }
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng.below(q - 1);
            std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(std::min<std::uint64_t>(n, kcap)));
            bool extended = rng.below(2) == 1;
            GrsCode c = random_code(rng, f, n, k, extended);
            CAPTURE(q, n, k, extended);

            std::size_t g = hull_dim_gram(c, InnerProduct::euclidean);
            HullIntersection inter = hull_dim_intersect(c, InnerProduct::euclidean);
            REQUIRE(g == inter.dim);
            auto enumerated = hull_enum(c, InnerProduct::euclidean, budgets);
            REQUIRE(enumerated.has_value());
            REQUIRE(*enumerated == g);

            if (quadratic) {
                std::size_t gh = hull_dim_gram(c, InnerProduct::hermitian);
                HullIntersection ih = hull_dim_intersect(c, InnerProduct::hermitian);
                REQUIRE(gh == ih.dim);
                auto eh = hull_enum(c, InnerProduct::hermitian, budgets);
                REQUIRE(eh.has_value());
                REQUIRE(*eh == gh);
            }
        }
    }
}

TEST_CASE("intersection basis rows lie in the code and its dual") {
    Rng rng(103);
    FieldPtr f = Field::make(3, 2);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 3 + rng.below(5);
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(n - 1));
        GrsCode c = random_code(rng, f, n, k, false);
        for (InnerProduct kind : {InnerProduct::euclidean, InnerProduct::hermitian}) {
            HullIntersection inter = hull_dim_intersect(c, kind);
            Matrix gen = generator_matrix(c);
            REQUIRE(inter.basis.rows() == inter.dim);
            REQUIRE(rank(inter.basis) == inter.dim);
            for (std::size_t r = 0; r < inter.basis.rows(); ++r) {
                REQUIRE(in_rowspace(gen, inter.basis.row(r)));
                REQUIRE(dual_membership(c, inter.basis.row(r), kind));
            }
        }
    }
}

TEST_CASE("a one-dimensional LCD example") {
    FieldPtr f = Field::make(3, 1);
    GrsCode c = make_grs(f, {0, 1}, {1, 1}, 1, false);
    // Gram matrix is (1*1 + 1*1) = 2, invertible: trivial hull
    REQUIRE(hull_dim_gram(c, InnerProduct::euclidean) == 0);
    HullCertificate cert = certify_hull(c, InnerProduct::euclidean, 0);
    REQUIRE(cert.dim == 0);
    REQUIRE(cert.basis.rows() == 0);
}

TEST_CASE("a self-dual example has hull dimension k") {
    ConstructionSpec spec;
    spec.theorem = Theorem::t3_3_i;
    spec.q = 4;
    spec.r = 2;
    spec.z = 1;
    spec.t = 2;
    spec.k = 2;
    spec.ell = 2;
    Construction c = construct(spec);
    REQUIRE(c.code.length() == 4);
    REQUIRE(c.certificate.dim == 2);
    // every codeword is orthogonal to the whole code
    Matrix gen = generator_matrix(c.code);
    Matrix gram = mul(gen, transpose(gen));
    for (Elem e : gram.entries()) REQUIRE(e == 0);
}

TEST_CASE("certification demands the expected dimension") {
    FieldPtr f = Field::make(3, 2);
    GrsCode c = make_grs(f, {0, 1, 2, 3}, {1, 1, 1, 1}, 2, false);
    std::size_t dim = hull_dim_gram(c, InnerProduct::euclidean);
    HullCertificate cert = certify_hull(c, InnerProduct::euclidean,
                                        static_cast<std::uint32_t>(dim));
    REQUIRE(cert.dim == dim);
    REQUIRE_THROWS_AS(certify_hull(c, InnerProduct::euclidean,
                                   static_cast<std::uint32_t>(dim + 1)),
                      CertificationError);
}

TEST_CASE("the hull of the dual is the hull of the code") {
    Rng rng(107);
    FieldPtr f = Field::make(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 3 + rng.below(5);
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(n - 1));
        GrsCode c = random_code(rng, f, n, k, false);
        for (InnerProduct kind : {InnerProduct::euclidean, InnerProduct::hermitian}) {
            Matrix gen = generator_matrix(c);
            Matrix dual_gen = sigma_rows(kernel(gen), kind);
            HullIntersection of_code = hull_dim_intersect_mat(gen, kind);
            HullIntersection of_dual = hull_dim_intersect_mat(dual_gen, kind);
            REQUIRE(of_code.dim == of_dual.dim);
            // identical subspace, canonical basis: identical matrices
            REQUIRE(of_code.basis == of_dual.basis);
        }
    }
}

TEST_CASE("gram route cross-checks generator and parity sides") {
    // If the two sides ever disagreed the call would throw; exercise a few
    // shapes including k = n.
    FieldPtr f = Field::make(5, 1);
    for (std::uint32_t k = 1; k <= 4; ++k) {
        GrsCode c = make_grs(f, {0, 1, 2, 4}, {1, 2, 3, 4}, k, false);
        std::size_t g = hull_dim_gram(c, InnerProduct::euclidean);
        REQUIRE(g == hull_dim_intersect(c, InnerProduct::euclidean).dim);
    }
}
