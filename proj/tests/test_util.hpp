/*
   Copyright 2026 the quasitwist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QTW_TEST_UTIL_HPP
#define QTW_TEST_UTIL_HPP

#include <random>

#include "qtw/poly.hpp"
#include "qtw/qtcode.hpp"

namespace qtw::testutil {

inline Poly from_ints(const Field* f, std::vector<int64_t> coeffs) {
    std::vector<uint32_t> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(f->from_int(v).v);
    return Poly(f, std::move(c));
}

inline Poly random_poly(const Field* f, int max_deg, std::mt19937_64& rng) {
    if (max_deg < 0) return Poly::zero(f);
    std::vector<uint32_t> c(size_t(max_deg) + 1);
    for (auto& v : c) v = uint32_t(rng() % f->q());
    return Poly(f, std::move(c));
}

/// Random monic divisor of the factored polynomial.
inline Poly random_divisor(const std::vector<std::pair<Poly, int>>& factors, const Field* f,
                           std::mt19937_64& rng) {
    Poly d = Poly::one(f);
    for (const auto& [p, mult] : factors) {
        int e = int(rng() % uint64_t(mult + 1));
        for (int i = 0; i < e; ++i) d = d * p;
    }
    return d;
}

/// Random triple satisfying the canonical-form conditions: monic divisors
/// g11, g22 of x^m - lambda, deg g12 < deg g22, g11*g22 | (x^m-lambda)*g12.
inline CanonicalTriple random_triple(const RingCtx& ctx, std::mt19937_64& rng) {
    const Field* f = ctx.field;
    auto factors = factor_xm_minus_lambda(ctx);
    Poly g11 = random_divisor(factors, f, rng);
    Poly g22 = random_divisor(factors, f, rng);
    Poly xml = ctx.xm_minus_lambda();
    // the divisibility condition is equivalent to (g11*g22 / gcd(g11*g22, x^m-lambda)) | g12
    Poly prod = g11 * g22;
    Poly e = exact_div(prod, gcd(prod, xml));
    Poly g12 = Poly::zero(f);
    if (e.degree() < g22.degree()) {
        Poly h = random_poly(f, g22.degree() - e.degree() - 1, rng);
        g12 = e * h;
    }
    return {g11, g12, g22};
}

inline QTCode random_code2(const RingCtx& ctx, std::mt19937_64& rng) {
    CanonicalTriple t = random_triple(ctx, rng);
    return QTCode::from_triple(ctx, t.g11, t.g12, t.g22);
}

}  // namespace qtw::testutil

#endif
