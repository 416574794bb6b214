// Shared test utilities: a tiny deterministic RNG and an independent
// Lagrange interpolation oracle.

#pragma once

#include <hullforge/poly.hpp>

namespace testutil {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Unique polynomial of degree < xs.size() through the given points.
inline hullforge::Poly interpolate(const hullforge::Field& f, const std::vector<hullforge::Elem>& xs,
                                   const std::vector<hullforge::Elem>& ys) {
    using namespace hullforge;
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly num{1};
        Elem den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = poly_mul(f, num, poly_linear(f, xs[j]));
            den = f.mul(den, f.sub(xs[i], xs[j]));
        }
        acc = poly_add(f, acc, poly_scale(f, num, f.div(ys[i], den)));
    }
    return acc;
}

}  // namespace testutil
