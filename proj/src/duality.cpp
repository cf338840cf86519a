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

#include "qtw/duality.hpp"

#include <algorithm>

namespace qtw {

namespace {

Element dot(const Poly& a, const Poly& b) {
    const Field* f = a.field();
    Element acc = f->zero();
    int d = std::min(a.degree(), b.degree());
    for (int i = 0; i <= d; ++i) acc = acc + a.coeff(i) * b.coeff(i);
    return acc;
}

// pairing of two interleaved words (same conventions as inner_product)
Element word_pair(InnerProductKind kind, const Field* f, int l, const std::vector<uint32_t>& u,
                  const std::vector<uint32_t>& v, const Tower* tower) {
    Element acc = f->zero();
    int m = int(u.size()) / l;
    switch (kind) {
        case InnerProductKind::Euclidean:
            for (size_t i = 0; i < u.size(); ++i) acc = acc + f->from_index(u[i]) * f->from_index(v[i]);
            break;
        case InnerProductKind::Symplectic: {
            int r = l / 2;
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < r; ++i) {
                    Element a = f->from_index(u[size_t(j * l + i)]);
                    Element bp = f->from_index(v[size_t(j * l + r + i)]);
                    Element b = f->from_index(u[size_t(j * l + r + i)]);
                    Element ap = f->from_index(v[size_t(j * l + i)]);
                    acc = acc + a * bp - b * ap;
                }
            break;
        }
        case InnerProductKind::Hermitian:
            for (size_t i = 0; i < u.size(); ++i)
                acc = acc + f->from_index(u[i]) * tower->conjugate(f->from_index(v[i]));
            break;
    }
    return acc;
}

void assert_orthogonal(const QTCode& primal, const QTCode& dual, InnerProductKind kind,
                       const Tower* tower) {
    const Field* f = primal.ctx().field;
    for (const auto& u : primal.generator_matrix().rows)
        for (const auto& v : dual.generator_matrix().rows)
            if (!word_pair(kind, f, primal.index(), u, v, tower).is_zero())
                throw InvariantViolation("computed dual is not orthogonal to the primal code");
    if (primal.dimension() + dual.dimension() != primal.length())
        throw InvariantViolation("primal and dual dimensions do not sum to the length");
}

}  // namespace

Element inner_product(InnerProductKind kind, const std::vector<Poly>& u, const std::vector<Poly>& v,
                      const Tower* tower) {
    if (u.size() != v.size() || u.empty()) throw DomainError("inner product needs tuples of equal length");
    const Field* f = u[0].field();
    Element acc = f->zero();
    switch (kind) {
        case InnerProductKind::Euclidean:
            for (size_t i = 0; i < u.size(); ++i) acc = acc + dot(u[i], v[i]);
            break;
        case InnerProductKind::Symplectic: {
            if (u.size() % 2 != 0) throw DomainError("symplectic pairing needs even index");
            size_t r = u.size() / 2;
            for (size_t i = 0; i < r; ++i) acc = acc + dot(u[i], v[r + i]) - dot(u[r + i], v[i]);
            break;
        }
        case InnerProductKind::Hermitian: {
            if (!tower || tower->top() != f)
                throw DomainError("Hermitian pairing needs the tower over the coefficient field");
            for (size_t i = 0; i < u.size(); ++i) acc = acc + dot(u[i], conj_poly(v[i], *tower));
            break;
        }
    }
    return acc;
}

DualResult euclidean_dual2(const QTCode& code) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    const CanonicalTriple& t = code.canonical2();
    RingCtx dctx = ctx.dual();
    Poly xmld = dctx.xm_minus_lambda();

    Poly g11s = reciprocal(t.g11);
    Poly g22s = reciprocal(t.g22);
    Poly f11 = exact_div(xmld, g11s);
    Poly f22 = exact_div(xmld, g22s);
    Poly f21 = Poly::zero(f);
    if (!t.g12.is_zero()) {
        int e = ctx.m + t.g11.degree() - t.g12.degree();
        Poly quot = exact_div(xmld * reciprocal(t.g12), g11s * g22s);
        f21 = reduce(quot.shifted(e).scaled(f->neg(ctx.lambda)), dctx, Side::R);
    }
    if (f11.degree() >= 1) f21 = f21 % f11;

    std::vector<std::vector<Poly>> gens = {{f11, Poly::zero(f)}, {f21, f22}};
    DualResult out{QTCode(dctx, 2, gens), InnerProductKind::Euclidean, Provenance::ClosedForm, gens};
    assert_orthogonal(code, out.code, InnerProductKind::Euclidean, nullptr);
    return out;
}

DualResult symplectic_dual2(const QTCode& code) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    const CanonicalTriple& t = code.canonical2();
    RingCtx dctx = ctx.dual();
    Poly xmld = dctx.xm_minus_lambda();

    Poly g11s = reciprocal(t.g11);
    Poly g22s = reciprocal(t.g22);
    Poly f11 = exact_div(xmld, g22s);
    Poly f22 = exact_div(xmld, g11s);
    Poly f12 = Poly::zero(f);
    if (!t.g12.is_zero()) {
        int e = ctx.m - t.g12.degree() + t.g11.degree();
        Poly quot = exact_div(xmld * reciprocal(t.g12), g11s * g22s);
        f12 = reduce(quot.shifted(e).scaled(ctx.lambda), dctx, Side::R);
    }
    if (f22.degree() >= 1) f12 = f12 % f22;

    std::vector<std::vector<Poly>> gens = {{f11, f12}, {Poly::zero(f), f22}};
    DualResult out{QTCode(dctx, 2, gens), InnerProductKind::Symplectic, Provenance::ClosedForm, gens};
    assert_orthogonal(code, out.code, InnerProductKind::Symplectic, nullptr);
    return out;
}

DualResult hermitian_dual2(const QTCode& code, const Tower& tower) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    if (tower.top() != f) throw DomainError("tower top must be the code's coefficient field");
    const CanonicalTriple& t = code.canonical2();
    Element lam_q = tower.conjugate(ctx.lambda);
    RingCtx hctx = RingCtx::make(f, ctx.m, f->inv(lam_q));  // lambda^{-q}
    Poly xmlh = hctx.xm_minus_lambda();

    Poly g11s = conj_reciprocal(t.g11, tower);
    Poly g22s = conj_reciprocal(t.g22, tower);
    Poly f11 = exact_div(xmlh, g11s);
    Poly f22 = exact_div(xmlh, g22s);
    Poly f21 = Poly::zero(f);
    if (!t.g12.is_zero()) {
        int e = ctx.m - t.g12.degree() + t.g11.degree();
        Poly quot = exact_div(xmlh * conj_reciprocal(t.g12, tower), g11s * g22s);
        f21 = reduce(quot.shifted(e).scaled(f->neg(lam_q)), hctx, Side::R);
    }
    if (f11.degree() >= 1) f21 = f21 % f11;

    std::vector<std::vector<Poly>> gens = {{f11, Poly::zero(f)}, {f21, f22}};
    DualResult out{QTCode(hctx, 2, gens), InnerProductKind::Hermitian, Provenance::ClosedForm, gens};
    assert_orthogonal(code, out.code, InnerProductKind::Hermitian, &tower);
    return out;
}

DualResult one_generator_dual(const Poly& g11, const Poly& g12, const RingCtx& ctx,
                              InnerProductKind kind, const Tower* tower) {
    const Field* f = ctx.field;
    if (ctx.m % int(f->p()) == 0) throw DomainError("one-generator duals need gcd(m, q) = 1");
    if (g11.is_zero() || !(ctx.xm_minus_lambda() % g11).is_zero())
        throw DomainError("g11 must be a nonzero divisor of x^m - lambda");
    if (kind == InnerProductKind::Hermitian && (!tower || tower->top() != f))
        throw DomainError("Hermitian dual needs the tower over the coefficient field");

    Poly g = gcd(g11, g12);
    Poly g11p = exact_div(g11, g);
    Poly g12p = g12.is_zero() ? Poly::zero(f) : exact_div(g12, g);

    auto star = [&](const Poly& p) {
        return kind == InnerProductKind::Hermitian ? conj_reciprocal(p, *tower) : reciprocal(p);
    };
    Element lam_eff = kind == InnerProductKind::Hermitian ? tower->conjugate(ctx.lambda) : ctx.lambda;
    RingCtx dctx = kind == InnerProductKind::Hermitian ? RingCtx::make(f, ctx.m, f->inv(lam_eff))
                                                       : ctx.dual();
    Poly xmld = dctx.xm_minus_lambda();

    Poly head = exact_div(xmld, star(g11));
    Poly cross = Poly::zero(f);
    if (!g12p.is_zero()) {
        int e = ctx.m + g11p.degree() - g12p.degree();
        cross = reduce(star(g12p).shifted(e).scaled(lam_eff), dctx, Side::R);
    }

    std::vector<std::vector<Poly>> gens;
    if (kind == InnerProductKind::Symplectic) {
        gens = {{star(g11p), cross}, {Poly::zero(f), head}};
    } else {
        gens = {{head, Poly::zero(f)}, {-cross, star(g11p)}};
    }

    DualResult out{QTCode(dctx, 2, gens), kind, Provenance::ClosedForm, gens};
    QTCode primal(ctx, 2, {{g11, g12}});
    assert_orthogonal(primal, out.code, kind, tower);
    if (out.code.dimension() != ctx.m + g.degree())
        throw InvariantViolation("one-generator dual dimension is not m + deg gcd(g11, g12)");
    return out;
}

DualResult brute_dual(const QTCode& code, InnerProductKind kind, const Tower* tower) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    if (code.length() > 64 || f->q() > 9)
        throw BudgetExceeded("brute-force dual guarded to l*m <= 64 and q <= 9");
    if (kind == InnerProductKind::Symplectic && code.index() % 2 != 0)
        throw DomainError("symplectic pairing needs even index");
    if (kind == InnerProductKind::Hermitian && (!tower || tower->top() != f))
        throw DomainError("Hermitian pairing needs the tower over the coefficient field");

    Mat system = code.generator_matrix();
    if (kind == InnerProductKind::Symplectic) {
        size_t n = size_t(code.length());
        int l = code.index(), r = l / 2;
        Mat pairing(f, n);
        pairing.rows.assign(n, std::vector<uint32_t>(n, 0));
        for (int j = 0; j < ctx.m; ++j)
            for (int i = 0; i < r; ++i) {
                pairing.rows[size_t(j * l + i)][size_t(j * l + r + i)] = f->one().v;
                pairing.rows[size_t(j * l + r + i)][size_t(j * l + i)] = f->neg(f->one()).v;
            }
        system = mat_mul(system, pairing);
    }
    Mat null = nullspace(system);
    if (kind == InnerProductKind::Hermitian)
        for (auto& row : null.rows)
            for (auto& v : row) v = tower->conjugate(f->from_index(v)).v;

    RingCtx dctx = kind == InnerProductKind::Hermitian
                       ? RingCtx::make(f, ctx.m, f->inv(tower->conjugate(ctx.lambda)))
                       : ctx.dual();
    std::vector<std::vector<Poly>> gens;
    for (const auto& row : null.rows) gens.push_back(code.deinterleave(row));
    DualResult out{QTCode(dctx, code.index(), gens), kind, Provenance::BruteForce, gens};
    assert_orthogonal(code, out.code, kind, tower);
    return out;
}

bool is_self_orthogonal(const QTCode& code, InnerProductKind kind, const Tower* tower) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    if (kind == InnerProductKind::Hermitian) {
        if (!tower || tower->top() != f)
            throw DomainError("Hermitian self-orthogonality needs the tower over the coefficient field");
        if (ctx.lambda * tower->conjugate(ctx.lambda) != f->one())
            throw DomainError("Hermitian self-orthogonality needs lambda^(q+1) = 1; got lambda = " +
                              f->to_string(ctx.lambda));
    } else {
        if (ctx.lambda != ctx.lambda_inv)
            throw DomainError(
                "Euclidean/symplectic self-orthogonality needs lambda = lambda^{-1}, i.e. lambda = "
                "+-1; got lambda = " +
                f->to_string(ctx.lambda));
    }

    const CanonicalTriple& t = code.canonical2();
    Poly g11 = reduce(t.g11, ctx, Side::R);
    Poly g12 = reduce(t.g12, ctx, Side::R);
    Poly g22 = reduce(t.g22, ctx, Side::R);
    auto circ_t = [&](const Poly& p) {
        Poly c = circ(p, ctx);
        return kind == InnerProductKind::Hermitian ? conj_poly(c, *tower) : c;
    };
    auto vanishes = [&](const Poly& p) { return reduce(p, ctx, Side::R).is_zero(); };

    bool pred;
    if (kind == InnerProductKind::Symplectic) {
        pred = vanishes(g22 * circ_t(g11)) && vanishes(g12 * circ_t(g11) - g11 * circ_t(g12));
    } else {
        pred = vanishes(g22 * circ_t(g22)) && vanishes(g22 * circ_t(g12)) &&
               vanishes(g11 * circ_t(g11) + g12 * circ_t(g12));
    }

    // direct definition on the spanning rows
    bool direct = true;
    for (const auto& u : code.generator_matrix().rows) {
        for (const auto& v : code.generator_matrix().rows)
            if (!word_pair(kind, f, code.index(), u, v, tower).is_zero()) {
                direct = false;
                break;
            }
        if (!direct) break;
    }
    if (pred != direct)
        throw InvariantViolation("self-orthogonality congruences disagree with the direct pairing check");
    return pred;
}

namespace {

// mirrored canonical triple of a code over R*: generators (f11, 0),
// (f21, f22) with f11, f22 | x^m - lambda^{-1} and deg f21 < deg f11
CanonicalTriple mirror_triple(const QTCode& c) {
    std::vector<std::vector<Poly>> swapped;
    for (const auto& g : c.generators()) swapped.push_back({g[1], g[0]});
    QTCode s(c.ctx(), 2, swapped);
    const CanonicalTriple& t = s.canonical2();
    return {t.g22, t.g12, t.g11};  // f11 = t.g22, f21 = t.g12, f22 = t.g11
}

}  // namespace

bool css_containment(const QTCode& c1, const QTCode& c2) {
    const RingCtx& ctx1 = c1.ctx();
    if (c1.index() != 2 || c2.index() != 2) throw DomainError("CSS containment is defined for index 2");
    if (c2.ctx() != ctx1.dual())
        throw DomainError("C2 must live over the inverse twist lambda^{-1} of C1's ring");

    const CanonicalTriple& g = c1.canonical2();
    CanonicalTriple fm = mirror_triple(c2);
    RingCtx dctx = ctx1.dual();
    Poly g11 = reduce(g.g11, ctx1, Side::R);
    Poly g12 = reduce(g.g12, ctx1, Side::R);
    Poly g22 = reduce(g.g22, ctx1, Side::R);
    Poly f11 = reduce(fm.g11, dctx, Side::R);
    Poly f21 = reduce(fm.g12, dctx, Side::R);
    Poly f22 = reduce(fm.g22, dctx, Side::R);

    auto vanishes = [&](const Poly& p) { return reduce(p, dctx, Side::R).is_zero(); };
    bool pred = vanishes(f11 * circ(g11, ctx1)) && vanishes(f22 * circ(g22, ctx1)) &&
                vanishes(f21 * circ(g11, ctx1) + f22 * circ(g12, ctx1));

    QTCode dual2 = brute_dual(c2, InnerProductKind::Euclidean).code;
    bool direct = rowspace_contained(c1.generator_matrix(), dual2.row_space());
    if (pred != direct)
        throw InvariantViolation("CSS containment congruences disagree with the matrix-level check");
    return pred;
}

namespace {

// minimum Hamming weight over codewords of `big` outside `small`
std::pair<int, uint64_t> coset_min_weight(const QTCode& big, const QTCode& small, uint64_t budget) {
    const Field* f = big.ctx().field;
    int k = big.dimension();
    double total = 1;
    for (int i = 0; i < k; ++i) {
        total *= f->q();
        if (total > double(budget)) throw BudgetExceeded("CSS distance enumeration over budget");
    }
    const Mat& basis = big.row_space().mat;
    size_t n = basis.cols;
    std::vector<uint32_t> msg(size_t(k), 0);
    std::vector<uint32_t> word(n, 0);
    int best = -1;
    uint64_t scanned = 0;
    while (true) {
        int pos = 0;
        while (pos < k && msg[size_t(pos)] + 1 == f->q()) msg[size_t(pos++)] = 0;
        if (pos == k) break;
        ++msg[size_t(pos)];
        std::fill(word.begin(), word.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (msg[size_t(i)] == 0) continue;
            Element c = f->from_index(msg[size_t(i)]);
            for (size_t j = 0; j < n; ++j)
                if (basis.rows[size_t(i)][j] != 0)
                    word[j] = (f->from_index(word[j]) + c * f->from_index(basis.rows[size_t(i)][j])).v;
        }
        ++scanned;
        int wt = 0;
        for (uint32_t v : word) wt += v != 0;
        if ((best < 0 || wt < best) && !small.contains(word)) best = wt;
    }
    return {best < 0 ? 0 : best, scanned};
}

}  // namespace

CssParams css_parameters(const QTCode& c1, const QTCode& c2, uint64_t budget) {
    if (!css_containment(c1, c2)) throw DomainError("CSS parameters need C1 contained in C2-perp");
    DualResult d2 = euclidean_dual2(c2);  // lambda-QT, contains c1
    DualResult d1 = euclidean_dual2(c1);  // lambda^{-1}-QT, contains c2
    int n = c1.length();
    int k = d2.code.dimension() - c1.dimension();
    if (k == 0) return {n, 0, 0, 0};
    auto [dx, sx] = coset_min_weight(d2.code, c1, budget);
    auto [dz, sz] = coset_min_weight(d1.code, c2, budget);
    return {n, k, std::min(dx, dz), sx + sz};
}

}  // namespace qtw
