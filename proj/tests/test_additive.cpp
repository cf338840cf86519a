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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtw/additive.hpp"
#include "test_util.hpp"

using namespace qtw;
using namespace qtw::testutil;

namespace {

Element gram(const Tower* t, Element a, Element b, bool twisted) {
    return t->trace(twisted ? a * t->conjugate(b) : a * b);
}

void check_gram(const AmbientBasis& basis) {
    const Tower* t = basis.tower();
    uint32_t l = t->l(), r = l / 2;
    bool twisted =
        basis.kind() == BasisKind::TraceHermitianOdd || basis.kind() == BasisKind::SymplecticPairs;
    for (uint32_t i = 0; i < l; ++i)
        for (uint32_t j = 0; j < l; ++j) {
            Element got = gram(t, basis.w()[i], basis.w()[j], twisted);
            Element want = t->base()->zero();
            if (basis.kind() == BasisKind::SymplecticPairs) {
                if (i + r == j || j + r == i) want = t->base()->one();
            } else if (i == j) {
                want = (i == l - 1) ? basis.eps() : t->base()->one();
            }
            CHECK(got == want);
        }
}

}  // namespace

TEST_CASE("basis search: feasibility and exact Gram") {
    const Field* f2 = Field::get(2, 1);
    const Field* f3 = Field::get(3, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Field* f9 = Field::get(3, 2, {2, 2, 1});

    AmbientBasis sd4 = find_basis(Tower::get(f2, f4), BasisKind::SelfDual);
    check_gram(sd4);
    CHECK_THROWS_AS(find_basis(Tower::get(f3, f9), BasisKind::SelfDual), DomainError);

    AmbientBasis asd9 = find_basis(Tower::get(f3, f9), BasisKind::AlmostSelfDual);
    check_gram(asd9);
    CHECK(f3->is_nonsquare(asd9.eps()));

    AmbientBasis th9 = find_basis(Tower::get(f3, f9), BasisKind::TraceHermitianOdd);
    check_gram(th9);
    CHECK_FALSE(th9.eps().is_zero());

    AmbientBasis sp4 = find_basis(Tower::get(f2, f4), BasisKind::SymplecticPairs);
    check_gram(sp4);
    CHECK_THROWS_AS(find_basis(Tower::get(f3, f9), BasisKind::SymplecticPairs), DomainError);

    // higher towers
    const Field* f8 = Field::get(2, 3);
    check_gram(find_basis(Tower::get(f2, f8), BasisKind::SelfDual));
    const Field* f16 = Field::get(2, 4);
    check_gram(find_basis(Tower::get(f2, f16), BasisKind::SelfDual));
    check_gram(find_basis(Tower::get(f2, f16), BasisKind::SymplecticPairs));
    const Field* f81 = Field::get(3, 4);
    check_gram(find_basis(Tower::get(f3, f81), BasisKind::AlmostSelfDual));
    check_gram(find_basis(Tower::get(f3, f81), BasisKind::TraceHermitianOdd));
    // extension base
    check_gram(find_basis(Tower::get(f4, f16), BasisKind::SelfDual));
}

TEST_CASE("trace-Hermitian form over GF(25)/GF(5): the exceptional entry is unconstrained") {
    // for q = 1 mod 4 the twisted form realizes a non-square entry, for
    // q = 3 mod 4 a square one; only nonzero matters for the dual formulas
    const Field* f5 = Field::get(5, 1);
    const Field* f25 = Field::get(5, 2);
    AmbientBasis th = find_basis(Tower::get(f5, f25), BasisKind::TraceHermitianOdd);
    check_gram(th);
    CHECK_FALSE(th.eps().is_zero());
}

TEST_CASE("phi is a bijective R-module homomorphism") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Tower* t = Tower::get(f2, f4);
    AmbientBasis basis = find_basis(t, BasisKind::SelfDual);
    RingCtx ctx = RingCtx::make(f2, 6, f2->one());
    RingCtx ctx_top = RingCtx::make(f4, 6, f4->one());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Poly> c = {random_poly(f2, 5, rng), random_poly(f2, 5, rng)};
        std::vector<Poly> d = {random_poly(f2, 5, rng), random_poly(f2, 5, rng)};
        Poly a = random_poly(f2, 5, rng);
        // additivity and scalar action
        Poly lhs = phi({reduce(a * c[0] + d[0], ctx, Side::R), reduce(a * c[1] + d[1], ctx, Side::R)}, basis);
        Poly ae = Poly(f4, std::vector<uint32_t>{});
        // embed a into the top ring and act there
        std::vector<uint32_t> ac(size_t(std::max(a.degree() + 1, 1)), 0);
        for (int i = 0; i <= a.degree(); ++i) ac[size_t(i)] = t->embed(a.coeff(i)).v;
        Poly atop(f4, std::move(ac));
        Poly rhs = reduce(atop * phi(c, basis) + phi(d, basis), ctx_top, Side::R);
        CHECK(lhs == rhs);
        // round trip
        auto back = phi_inverse(phi(c, basis), 2, basis);
        CHECK(back[0] == c[0]);
        CHECK(back[1] == c[1]);
    }
    CHECK(phi({Poly::zero(f2), Poly::zero(f2)}, basis).is_zero());
    Poly f = random_poly(f2, 5, rng);
    CHECK(phi({f, Poly::zero(f2)}, basis) == Poly(f4, [&] {
              std::vector<uint32_t> c(size_t(std::max(f.degree() + 1, 1)), 0);
              for (int i = 0; i <= f.degree(); ++i) c[size_t(i)] = (basis.w()[0] * t->embed(f.coeff(i))).v;
              return c;
          }()));
}

TEST_CASE("Hamming weight of phi(c) equals the block weight of c") {
    const Field* f3 = Field::get(3, 1);
    const Field* f9 = Field::get(3, 2, {2, 2, 1});
    AmbientBasis basis = find_basis(Tower::get(f3, f9), BasisKind::AlmostSelfDual);
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Poly> c = {random_poly(f3, 7, rng), random_poly(f3, 7, rng)};
        Poly img = phi(c, basis);
        int wt_blocks = 0;
        for (int j = 0; j < 8; ++j)
            wt_blocks += !(c[0].coeff(j).is_zero() && c[1].coeff(j).is_zero());
        int wt_h = 0;
        for (int j = 0; j <= img.degree(); ++j) wt_h += !img.coeff(j).is_zero();
        CHECK(wt_blocks == wt_h);
    }
}

TEST_CASE("additive code from a quasi-twisted code: cardinality by enumeration") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    AmbientBasis basis = find_basis(Tower::get(f2, f4), BasisKind::SelfDual);
    RingCtx ctx = RingCtx::make(f2, 5, f2->one());
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        QTCode shadow = random_code2(ctx, rng);
        AdditiveCode ca = AdditiveCode::from_qt(shadow, basis);
        auto [q, k] = ca.cardinality();
        CHECK(q == 2);
        CHECK(k == shadow.dimension());
        // enumerate the full codeword set through phi
        std::set<std::vector<uint32_t>> seen;
        const Mat& b = shadow.row_space().mat;
        std::vector<uint32_t> msg(b.nrows(), 0);
        while (true) {
            std::vector<uint32_t> word(b.cols, 0);
            for (size_t i = 0; i < b.nrows(); ++i)
                if (msg[i])
                    for (size_t j = 0; j < b.cols; ++j)
                        word[j] = (f2->from_index(word[j]) + f2->from_index(b.rows[i][j])).v;
            Poly img = phi(shadow.deinterleave(word), basis);
            std::vector<uint32_t> key(5, 0);
            for (int j = 0; j <= img.degree(); ++j) key[size_t(j)] = img.coeff(j).v;
            seen.insert(key);
            CHECK(ca.contains(img));
            size_t pos = 0;
            while (pos < msg.size() && msg[pos] + 1 == 2) msg[pos++] = 0;
            if (pos == msg.size()) break;
            ++msg[pos];
        }
        CHECK(seen.size() == size_t(1) << k);
    }
}

TEST_CASE("trace pairing decompositions") {
    std::mt19937_64 rng(34);
    // odd q, almost self-dual: te = <g1,f1> + eps <g2,f2>
    {
        const Field* f3 = Field::get(3, 1);
        const Field* f9 = Field::get(3, 2, {2, 2, 1});
        AmbientBasis basis = find_basis(Tower::get(f3, f9), BasisKind::AlmostSelfDual);
        for (int i = 0; i < 1000; ++i) {
            std::vector<Poly> g = {random_poly(f3, 4, rng), random_poly(f3, 4, rng)};
            std::vector<Poly> f = {random_poly(f3, 4, rng), random_poly(f3, 4, rng)};
            Element lhs = trace_inner_product(TraceForm::TraceEuclidean, phi(g, basis), phi(f, basis), basis);
            Element rhs = inner_product(InnerProductKind::Euclidean, {g[0]}, {f[0]}) +
                          basis.eps() * inner_product(InnerProductKind::Euclidean, {g[1]}, {f[1]});
            CHECK(lhs == rhs);
        }
    }
    // even q, self-dual basis: te = plain sum
    {
        const Field* f2 = Field::get(2, 1);
        const Field* f4 = Field::get(2, 2, {1, 1, 1});
        AmbientBasis basis = find_basis(Tower::get(f2, f4), BasisKind::SelfDual);
        for (int i = 0; i < 500; ++i) {
            std::vector<Poly> g = {random_poly(f2, 4, rng), random_poly(f2, 4, rng)};
            std::vector<Poly> f = {random_poly(f2, 4, rng), random_poly(f2, 4, rng)};
            Element lhs = trace_inner_product(TraceForm::TraceEuclidean, phi(g, basis), phi(f, basis), basis);
            Element rhs = inner_product(InnerProductKind::Euclidean, g, f);
            CHECK(lhs == rhs);
        }
    }
    // odd q, twisted-orthogonal basis: th = <g1,f1> + eps <g2,f2>
    {
        const Field* f3 = Field::get(3, 1);
        const Field* f9 = Field::get(3, 2, {2, 2, 1});
        AmbientBasis basis = find_basis(Tower::get(f3, f9), BasisKind::TraceHermitianOdd);
        for (int i = 0; i < 1000; ++i) {
            std::vector<Poly> g = {random_poly(f3, 4, rng), random_poly(f3, 4, rng)};
            std::vector<Poly> f = {random_poly(f3, 4, rng), random_poly(f3, 4, rng)};
            Element lhs = trace_inner_product(TraceForm::TraceHermitian, phi(g, basis), phi(f, basis), basis);
            Element rhs = inner_product(InnerProductKind::Euclidean, {g[0]}, {f[0]}) +
                          basis.eps() * inner_product(InnerProductKind::Euclidean, {g[1]}, {f[1]});
            CHECK(lhs == rhs);
        }
    }
    // even q, any basis: th = delta * symplectic with delta != 0
    {
        const Field* f2 = Field::get(2, 1);
        const Field* f4 = Field::get(2, 2, {1, 1, 1});
        const Tower* t = Tower::get(f2, f4);
        for (int b = 0; b < 20; ++b) {
            Element w1 = f4->from_index(1 + uint32_t(rng() % 3));
            Element w2 = f4->from_index(1 + uint32_t(rng() % 3));
            AmbientBasis basis = [&]() -> AmbientBasis {
                try {
                    return AmbientBasis::general(t, {w1, w2});
                } catch (const DomainError&) {
                    return AmbientBasis::general(t, {f4->one(), f4->from_coeffs({0, 1})});
                }
            }();
            Element delta = basis_delta(basis);
            CHECK_FALSE(delta.is_zero());
            for (int i = 0; i < 50; ++i) {
                Poly a = random_poly(f4, 4, rng);
                Poly bb = random_poly(f4, 4, rng);
                Element lhs = trace_inner_product(TraceForm::TraceHermitian, a, bb, basis);
                Element rhs = delta * trace_inner_product(TraceForm::Symplectic, a, bb, basis);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("delta never vanishes for even q (random bases)") {
    std::mt19937_64 rng(35);
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}}) {
        const Field* base = Field::get(p, k);
        const Field* top = Field::get(p, 2 * k);
        const Tower* t = Tower::get(base, top);
        int tried = 0;
        while (tried < 100) {
            Element w1 = top->from_index(1 + uint32_t(rng() % (top->q() - 1)));
            Element w2 = top->from_index(1 + uint32_t(rng() % (top->q() - 1)));
            try {
                AmbientBasis basis = AmbientBasis::general(t, {w1, w2});
                CHECK_FALSE(basis_delta(basis).is_zero());
                ++tried;
            } catch (const DomainError&) {
                continue;  // dependent pair, resample
            }
        }
    }
}

TEST_CASE("trace duals match the exhaustive oracle at small sizes") {
    std::mt19937_64 rng(36);
    // GF(9): trace-Euclidean and trace-Hermitian, odd q
    {
        const Field* f3 = Field::get(3, 1);
        const Field* f9 = Field::get(3, 2, {2, 2, 1});
        const Tower* t = Tower::get(f3, f9);
        for (int m : {3, 4}) {
            RingCtx ctx = RingCtx::make(f3, m, f3->from_int(2));
            for (int trial = 0; trial < 3; ++trial) {
                QTCode shadow = random_code2(ctx, rng);
                {
                    AdditiveCode ca = AdditiveCode::from_qt(shadow, find_basis(t, BasisKind::AlmostSelfDual));
                    CHECK(trace_dual(ca, TraceForm::TraceEuclidean)
                              .equals(exhaustive_trace_dual(ca, TraceForm::TraceEuclidean)));
                }
                {
                    AdditiveCode ca = AdditiveCode::from_qt(shadow, find_basis(t, BasisKind::TraceHermitianOdd));
                    CHECK(trace_dual(ca, TraceForm::TraceHermitian)
                              .equals(exhaustive_trace_dual(ca, TraceForm::TraceHermitian)));
                    CHECK(trace_dual(ca, TraceForm::Symplectic)
                              .equals(exhaustive_trace_dual(ca, TraceForm::Symplectic)));
                }
            }
        }
    }
    // GF(4): all three forms, even q
    {
        const Field* f2 = Field::get(2, 1);
        const Field* f4 = Field::get(2, 2, {1, 1, 1});
        const Tower* t = Tower::get(f2, f4);
        for (int m : {4, 5}) {
            RingCtx ctx = RingCtx::make(f2, m, f2->one());
            for (int trial = 0; trial < 3; ++trial) {
                QTCode shadow = random_code2(ctx, rng);
                AdditiveCode sd = AdditiveCode::from_qt(shadow, find_basis(t, BasisKind::SelfDual));
                CHECK(trace_dual(sd, TraceForm::TraceEuclidean)
                          .equals(exhaustive_trace_dual(sd, TraceForm::TraceEuclidean)));
                Element w = f4->from_coeffs({0, 1});
                AdditiveCode gen = AdditiveCode::from_qt(shadow, AmbientBasis::general(t, {f4->one(), w}));
                CHECK(trace_dual(gen, TraceForm::TraceHermitian)
                          .equals(exhaustive_trace_dual(gen, TraceForm::TraceHermitian)));
                CHECK(trace_dual(gen, TraceForm::Symplectic)
                          .equals(exhaustive_trace_dual(gen, TraceForm::Symplectic)));
            }
        }
    }
}

TEST_CASE("index-l trace duals: l = 3 and l = 4") {
    std::mt19937_64 rng(37);
    // l = 3, GF(8)/GF(2): trace-Euclidean with a self-dual basis
    {
        const Field* f2 = Field::get(2, 1);
        const Field* f8 = Field::get(2, 3);
        const Tower* t = Tower::get(f2, f8);
        AmbientBasis basis = find_basis(t, BasisKind::SelfDual);
        RingCtx ctx = RingCtx::make(f2, 3, f2->one());
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<Poly>> gens;
            for (int g = 0; g < 2; ++g)
                gens.push_back({random_poly(f2, 2, rng), random_poly(f2, 2, rng), random_poly(f2, 2, rng)});
            QTCode shadow(ctx, 3, gens);
            AdditiveCode ca = AdditiveCode::from_qt(shadow, basis);
            CHECK(index_l_trace_dual(ca, TraceForm::TraceEuclidean)
                      .equals(exhaustive_trace_dual(ca, TraceForm::TraceEuclidean)));
        }
    }
    // l = 4, GF(16)/GF(2): trace-Hermitian with hyperbolic pairs
    {
        const Field* f2 = Field::get(2, 1);
        const Field* f16 = Field::get(2, 4);
        const Tower* t = Tower::get(f2, f16);
        AmbientBasis basis = find_basis(t, BasisKind::SymplecticPairs);
        RingCtx ctx = RingCtx::make(f2, 2, f2->one());
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<Poly>> gens;
            for (int g = 0; g < 2; ++g)
                gens.push_back({random_poly(f2, 1, rng), random_poly(f2, 1, rng), random_poly(f2, 1, rng),
                                random_poly(f2, 1, rng)});
            QTCode shadow(ctx, 4, gens);
            AdditiveCode ca = AdditiveCode::from_qt(shadow, basis);
            CHECK(index_l_trace_dual(ca, TraceForm::TraceHermitian)
                      .equals(exhaustive_trace_dual(ca, TraceForm::TraceHermitian)));
            AmbientBasis sd = find_basis(t, BasisKind::SelfDual);
            AdditiveCode ca2 = AdditiveCode::from_qt(shadow, sd);
            CHECK(index_l_trace_dual(ca2, TraceForm::TraceEuclidean)
                      .equals(exhaustive_trace_dual(ca2, TraceForm::TraceEuclidean)));
        }
    }
}

TEST_CASE("index-2 consistency and degenerate duals") {
    std::mt19937_64 rng(38);
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Tower* t = Tower::get(f2, f4);
    AmbientBasis basis = find_basis(t, BasisKind::SelfDual);
    RingCtx ctx = RingCtx::make(f2, 5, f2->one());
    for (int trial = 0; trial < 5; ++trial) {
        AdditiveCode ca = AdditiveCode::from_qt(random_code2(ctx, rng), basis);
        CHECK(trace_dual(ca, TraceForm::TraceEuclidean)
                  .equals(index_l_trace_dual(ca, TraceForm::TraceEuclidean)));
    }
    // zero code dualizes to everything
    AdditiveCode zero = AdditiveCode::from_qt(QTCode::zero_code(ctx, 2), basis);
    AdditiveCode dual = trace_dual(zero, TraceForm::TraceEuclidean);
    CHECK(dual.cardinality().second == 10);
    // guards
    CHECK_THROWS_AS(trace_dual(AdditiveCode::from_qt(QTCode::zero_code(ctx, 2),
                                                     AmbientBasis::general(t, {f4->one(), f4->from_coeffs({0, 1})})),
                               TraceForm::TraceEuclidean),
                    DomainError);
    const Field* f3 = Field::get(3, 1);
    CHECK_THROWS_AS(AdditiveCode::from_generators(basis, f3->one(), 5, {}), DomainError);
}

TEST_CASE("lambda must come from the base field") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Tower* t = Tower::get(f2, f4);
    AmbientBasis basis = find_basis(t, BasisKind::SelfDual);
    Element w = f4->from_coeffs({0, 1});
    CHECK_THROWS_AS(AdditiveCode::from_generators(basis, w, 5, {}), DomainError);
    // base lambda embeds fine
    AdditiveCode ok = AdditiveCode::from_generators(basis, f2->one(), 5, {Poly::one(f4)});
    CHECK(ok.top_ctx().lambda == f4->one());
    CHECK(ok.cardinality().second == 5);
}
