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

#include <random>
#include <set>

#include "qtw/field.hpp"

using namespace qtw;

TEST_CASE("prime field arithmetic") {
    const Field* f5 = Field::get(5, 1);
    CHECK(f5->q() == 5);
    Element a = f5->from_int(3), b = f5->from_int(4);
    CHECK((a + b).v == 2);
    CHECK((a * b).v == 2);
    CHECK((a - b).v == 4);
    CHECK((f5->inv(b) * b) == f5->one());
    CHECK(f5->pow(a, 4) == f5->one());
    CHECK_THROWS_AS(f5->inv(f5->zero()), DomainError);
}

TEST_CASE("GF(4) with w^2+w+1") {
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    Element w = f4->from_coeffs({0, 1});
    CHECK(f4->to_string(w) == "w");
    CHECK(f4->mul(w, w) == f4->from_coeffs({1, 1}));  // w^2 = w+1
    CHECK(f4->pow(w, 3) == f4->one());
    CHECK(f4->to_string(f4->mul(w, w)) == "w+1");
}

TEST_CASE("GF(9) with the stated modulus w^2+2w+2") {
    const Field* f9 = Field::get(3, 2, {2, 2, 1});
    Element w = f9->from_coeffs({0, 1});
    // w^2 = -2w-2 = w+1
    CHECK(f9->mul(w, w) == f9->from_coeffs({1, 1}));
    CHECK(f9->order(w) > 0);
}

TEST_CASE("default modulus is the smallest irreducible by encoding") {
    // over GF(3) the smallest monic irreducible quadratic is x^2+1
    const Field* f9 = Field::get(3, 2);
    CHECK(f9->modulus() == std::vector<uint32_t>{1, 0, 1});
    // over GF(2) the only irreducible quadratic is x^2+x+1
    const Field* f4 = Field::get(2, 2);
    CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("fields are interned per (p,k,modulus)") {
    CHECK(Field::get(5, 1) == Field::get(5, 1));
    CHECK(Field::get(3, 2, {2, 2, 1}) == Field::get(3, 2, {2, 2, 1}));
    CHECK(Field::get(3, 2, {2, 2, 1}) != Field::get(3, 2, {1, 0, 1}));
    CHECK_THROWS_AS(Field::get(4, 1), DomainError);
}

TEST_CASE("multiplicative group is cyclic (exhaustive for small fields)") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2},
                        {2, 3}, {2, 4}, {5, 2}, {2, 8}, {31, 1}}) {
        const Field* f = Field::get(p, k);
        Element g = f->from_index(f->generator());
        CHECK(f->order(g) == f->q() - 1);
        if (f->q() <= (1u << 10)) {
            std::set<uint32_t> seen;
            Element x = f->one();
            for (uint32_t i = 0; i + 1 < f->q(); ++i) {
                seen.insert(x.v);
                x = x * g;
            }
            CHECK(seen.size() == f->q() - 1);
            for (uint32_t v = 1; v < f->q(); ++v) CHECK((f->q() - 1) % f->order(f->from_index(v)) == 0);
        }
    }
    // spot check around the size cap
    const Field* big = Field::get(2, 16);
    Element g = big->from_index(big->generator());
    CHECK(big->order(g) == big->q() - 1);
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        uint32_t v = 1 + rng() % (big->q() - 1);
        CHECK((big->q() - 1) % big->order(big->from_index(v)) == 0);
    }
}

TEST_CASE("trace over GF(4)/GF(2) and GF(9)/GF(3)") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Tower* t = Tower::get(f2, f4);
    CHECK(t->trace(f4->zero()) == f2->zero());
    Element w = f4->from_coeffs({0, 1});
    // direct evaluation: w + w^2 = w + (w+1) = 1
    Element expect = w + f4->mul(w, w);
    CHECK(t->in_base(expect));
    CHECK(t->trace(w) == t->to_base(expect));
    CHECK(t->trace(w) == f2->one());

    const Field* f3 = Field::get(3, 1);
    const Field* f9 = Field::get(3, 2, {2, 2, 1});
    const Tower* t9 = Tower::get(f3, f9);
    Element u = f9->from_coeffs({0, 1});
    // brute-force power evaluation of u + u^3
    Element u3 = f9->mul(f9->mul(u, u), u);
    CHECK(t9->trace(u) == t9->to_base(u + u3));
}

TEST_CASE("trace is GF(q)-linear") {
    const Field* f3 = Field::get(3, 1);
    const Field* f9 = Field::get(3, 2, {2, 2, 1});
    const Tower* t = Tower::get(f3, f9);
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Element a = f3->from_index(rng() % 3), b = f3->from_index(rng() % 3);
        Element x = f9->from_index(rng() % 9), y = f9->from_index(rng() % 9);
        Element lhs = t->trace(t->embed(a) * x + t->embed(b) * y);
        Element rhs = a * t->trace(x) + b * t->trace(y);
        CHECK(lhs == rhs);
    }
    // trace lands in the base and is Frobenius-fixed
    for (uint32_t v = 0; v < 9; ++v) {
        Element x = f9->from_index(v);
        Element tr = t->embed(t->trace(x));
        CHECK(f9->pow(tr, 3) == tr);
    }
}

TEST_CASE("conjugation is an order-2 ring automorphism") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Tower* t = Tower::get(f2, f4);
    Element w = f4->from_coeffs({0, 1});
    CHECK(t->conjugate(f4->zero()) == f4->zero());
    CHECK(t->conjugate(f4->one()) == f4->one());
    CHECK(t->conjugate(w) == f4->from_coeffs({1, 1}));  // w^2 = w+1
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            Element x = f4->from_index(a), y = f4->from_index(b);
            CHECK(t->conjugate(x * y) == t->conjugate(x) * t->conjugate(y));
            CHECK(t->conjugate(x + y) == t->conjugate(x) + t->conjugate(y));
            CHECK(t->conjugate(t->conjugate(x)) == x);
        }
    // base elements are fixed
    for (uint32_t v = 0; v < 2; ++v) CHECK(t->conjugate(t->embed(f2->from_index(v))) == t->embed(f2->from_index(v)));
    // odd towers have no Hermitian conjugation
    const Field* f8 = Field::get(2, 3);
    const Tower* t8 = Tower::get(f2, f8);
    CHECK_THROWS_AS(t8->conjugate(f8->one()), DomainError);
}

TEST_CASE("tower embedding is a field homomorphism") {
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    const Field* f16 = Field::get(2, 4);
    const Tower* t = Tower::get(f4, f16);
    CHECK(t->l() == 2);
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            Element x = f4->from_index(a), y = f4->from_index(b);
            CHECK(t->embed(x + y) == t->embed(x) + t->embed(y));
            CHECK(t->embed(x * y) == t->embed(x) * t->embed(y));
        }
    CHECK(t->embed(f4->one()) == f16->one());
}

TEST_CASE("non-square classification") {
    const Field* f3 = Field::get(3, 1);
    CHECK_FALSE(f3->is_nonsquare(f3->one()));
    CHECK(f3->is_nonsquare(f3->from_int(2)));  // squares in GF(3) are {0,1}
    const Field* f5 = Field::get(5, 1);
    CHECK(f5->is_nonsquare(f5->from_int(2)));        // squares in GF(5) are {0,1,4}
    CHECK_FALSE(f5->is_nonsquare(f5->from_int(4)));
    CHECK_THROWS_AS(f5->is_nonsquare(f5->zero()), DomainError);
    CHECK_THROWS_AS(Field::get(2, 1)->is_nonsquare(Field::get(2, 1)->one()), DomainError);

    // halves are equal, and the defining power agrees (exhaustive, small odd fields)
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 4}, {7, 2}}) {
        const Field* f = Field::get(p, k);
        uint32_t nonsquares = 0;
        Element minus1 = f->neg(f->one());
        for (uint32_t v = 1; v < f->q(); ++v) {
            Element x = f->from_index(v);
            bool ns = f->is_nonsquare(x);
            nonsquares += ns;
            CHECK(ns == (f->pow(x, (f->q() - 1) / 2) == minus1));
        }
        CHECK(nonsquares == (f->q() - 1) / 2);
    }
}

TEST_CASE("element text round trip basics") {
    const Field* f9 = Field::get(3, 2, {2, 2, 1});
    CHECK(f9->to_string(f9->zero()) == "0");
    CHECK(f9->to_string(f9->from_coeffs({1, 2})) == "2*w+1");
    CHECK(f9->name() == "GF(3^2; modulus=w^2+2*w+2)");
    CHECK(Field::get(5, 1)->name() == "GF(5)");
}
