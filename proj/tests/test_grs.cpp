#include <catch2/catch_amalgamated.hpp>

#include <hullforge/grs.hpp>

#include "helpers.hpp"

using namespace hullforge;
using testutil::Rng;

namespace {

// Enumerates every message of the code and checks that the witness identity
// decides dual membership exactly: a message's codeword lies in the chosen
// dual if and only if the interpolated witness g respects its degree bound
// and witness_check accepts it.
void lemma_equivalence(const GrsCode& c, InnerProduct kind) {
    const Field& f = *c.field;
    std::size_t n = c.n();
    std::vector<Elem> u = compute_u(f, c.a);
    int gbound = static_cast<int>(n) - static_cast<int>(c.k) - (c.extended ? 0 : 1);

    std::vector<Elem> msg(c.k, 0);
    std::size_t members = 0;
    for (;;) {
        std::vector<Elem> word = encode(c, msg);
        bool in_dual = dual_membership(c, word, kind);

        std::vector<Elem> gvals(n);
        for (std::size_t i = 0; i < n; ++i) {
            Elem fe = poly_eval(f, msg, c.a[i]);
            Elem lhs = kind == InnerProduct::euclidean
                           ? f.mul(f.mul(c.v[i], c.v[i]), fe)
                           : f.mul(f.pow(c.v[i], std::uint64_t(f.base_order()) + 1), f.conj(fe));
            gvals[i] = f.div(lhs, u[i]);
        }
        Poly g = testutil::interpolate(f, c.a, gvals);
        bool witnessed = poly_degree(g) <= gbound && witness_check(c, msg, g, kind);
        CAPTURE(msg, kind == InnerProduct::euclidean);
        REQUIRE(witnessed == in_dual);
        members += in_dual;

        std::size_t i = 0;
        while (i < c.k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == c.k) break;
    }
    // the hull is a subspace, so the member count is a power of q
    std::size_t count = members;
    while (count > 1) {
        REQUIRE(count % f.q() == 0);
        count /= f.q();
    }
}

}  // namespace

TEST_CASE("Lagrange coefficients on frozen point sets") {
    FieldPtr f = Field::make(5, 1);
    REQUIRE(compute_u(*f, {0, 1, 2}) == std::vector<Elem>{3, 4, 3});
    REQUIRE(compute_u(*f, {0, 1}) == std::vector<Elem>{4, 1});
    REQUIRE_THROWS_AS(compute_u(*f, {2}), PreconditionError);
    REQUIRE_THROWS_AS(compute_u(*f, {2, 2}), PreconditionError);
}

TEST_CASE("Lagrange power-sum identity") {
    Rng rng(23);
    for (std::uint32_t q : {4u, 5u, 7u, 9u, 13u}) {
        PrimePower pp = factor_prime_power(q);
        FieldPtr fp = Field::make(pp.p, pp.m);
        const Field& f = *fp;
        for (int trial = 0; trial < 10; ++trial) {
            // random subset of the field of size >= 2
            std::vector<Elem> a;
            for (Elem x = 0; x < q; ++x)
                if (rng.below(2)) a.push_back(x);
            if (a.size() < 2) a = {0, 1};
            std::vector<Elem> u = compute_u(f, a);
            for (std::size_t s = 0; s < a.size(); ++s) {
                Elem acc = 0;
                for (std::size_t i = 0; i < a.size(); ++i)
                    acc = f.add(acc, f.mul(u[i], f.pow(a[i], s)));
                REQUIRE(acc == (s + 1 == a.size() ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("code construction validates its inputs") {
    FieldPtr f = Field::make(5, 1);
    REQUIRE_THROWS_AS(make_grs(f, {0, 0}, {1, 1}, 1, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 1}, {1, 0}, 1, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 7}, {1, 1}, 1, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 1}, {1, 7}, 1, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 1}, {1, 1}, 0, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 1}, {1, 1}, 3, false), PreconditionError);
    REQUIRE_THROWS_AS(make_grs(f, {0, 1}, {1}, 1, false), PreconditionError);
    // k = n+1 is valid for an extended code
    GrsCode c = make_grs(f, {0, 1}, {1, 1}, 3, true);
    REQUIRE(c.length() == 3);
}

TEST_CASE("encoding matches the generator matrix") {
    FieldPtr fp = Field::make(5, 1);
    const Field& f = *fp;
    GrsCode c = make_grs(fp, {0, 1, 2, 3}, {1, 1, 1, 1}, 2, false);
    REQUIRE(encode(c, {1, 1}) == std::vector<Elem>{1, 2, 3, 4});

    GrsCode ext = make_grs(fp, {0, 1, 2, 3}, {2, 1, 1, 3}, 3, true);
    Matrix g = generator_matrix(ext);
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 5);
    // last column marks the top message coefficient
    REQUIRE(g.at(0, 4) == 0);
    REQUIRE(g.at(1, 4) == 0);
    REQUIRE(g.at(2, 4) == 1);
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Poly msg(3);
        for (Elem& e : msg) e = static_cast<Elem>(rng.below(5));
        std::vector<Elem> direct = encode(ext, msg);
        std::vector<Elem> via(5, 0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                via[j] = f.add(via[j], f.mul(msg[i], g.at(i, j)));
        REQUIRE(direct == via);
    }
    REQUIRE_THROWS_AS(encode(c, {1, 1, 1}), PreconditionError);
}

TEST_CASE("parity check rows generate the Euclidean dual") {
    FieldPtr fp = Field::make(3, 2);
    GrsCode c = make_grs(fp, {0, 1, 3, 4, 5}, {1, 2, 1, 1, 2}, 2, false);
    Matrix h = parity_check_matrix(c);
    REQUIRE(h.rows() == 3);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        REQUIRE(dual_membership(c, h.row(r), InnerProduct::euclidean));
        // entrywise conjugate moves it to the Hermitian dual
        std::vector<Elem> conj_row = h.row(r);
        for (Elem& e : conj_row) e = fp->conj(e);
        REQUIRE(dual_membership(c, conj_row, InnerProduct::hermitian));
    }
    REQUIRE(!dual_membership(c, encode(c, {0, 1}), InnerProduct::euclidean));
}

TEST_CASE("witness identity decides Euclidean dual membership, plain code") {
    FieldPtr f = Field::make(5, 1);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3}, {1, 2, 1, 1}, 2, false),
                      InnerProduct::euclidean);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3, 4}, {1, 1, 3, 1, 2}, 2, false),
                      InnerProduct::euclidean);
}

TEST_CASE("witness identity decides Euclidean dual membership, extended code") {
    FieldPtr f = Field::make(5, 1);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3, 4}, {1, 1, 2, 1, 1}, 2, true),
                      InnerProduct::euclidean);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3, 4}, {2, 1, 1, 1, 3}, 3, true),
                      InnerProduct::euclidean);
}

TEST_CASE("witness identity decides Hermitian dual membership, plain code") {
    FieldPtr f = Field::make(3, 2);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3}, {1, 2, 1, 1}, 2, false),
                      InnerProduct::hermitian);
    lemma_equivalence(make_grs(f, {0, 1, 2, 5, 7}, {1, 1, 4, 1, 2}, 2, false),
                      InnerProduct::hermitian);
}

TEST_CASE("witness identity decides Hermitian dual membership, extended code") {
    FieldPtr f = Field::make(3, 2);
    lemma_equivalence(make_grs(f, {0, 1, 2, 3, 4}, {1, 1, 2, 1, 1}, 2, true),
                      InnerProduct::hermitian);
}

TEST_CASE("witness_check rejects wrong witnesses and bad degrees") {
    FieldPtr fp = Field::make(5, 1);
    GrsCode c = make_grs(fp, {0, 1, 2, 3}, {1, 1, 1, 1}, 2, false);
    // v = 1, f = 0: the zero word is in the dual with witness g = 0
    REQUIRE(witness_check(c, {}, {}, InnerProduct::euclidean));
    // a constant shift of the witness breaks the identity everywhere
    REQUIRE(!witness_check(c, {}, {1}, InnerProduct::euclidean));
    // degree bounds are parameter errors, not failures
    REQUIRE_THROWS_AS(witness_check(c, {0, 0, 1}, {}, InnerProduct::euclidean),
                      PreconditionError);
    REQUIRE_THROWS_AS(witness_check(c, {}, {0, 0, 1}, InnerProduct::euclidean),
                      PreconditionError);
}
