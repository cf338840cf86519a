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

#include "qtw/qtcode.hpp"

#include <algorithm>

namespace qtw {

namespace {

// Hermite-style triangularization of the preimage module in F[x]^2: rows
// are the generators plus (x^m-lambda)e1, (x^m-lambda)e2. Eliminates the
// first column Euclid-style until one row (a, b) with a != 0 remains, then
// reduces the kernel rows to g22 and b mod g22.
CanonicalTriple canonicalize2(const RingCtx& ctx, const std::vector<std::vector<Poly>>& gens) {
    const Field* f = ctx.field;
    Poly xml = ctx.xm_minus_lambda();
    std::vector<std::pair<Poly, Poly>> rows;
    for (const auto& g : gens) rows.emplace_back(g[0], g[1]);
    rows.emplace_back(xml, Poly::zero(f));
    rows.emplace_back(Poly::zero(f), xml);

    while (true) {
        int best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].first.is_zero()) continue;
            if (best < 0 || rows[i].first.degree() < rows[size_t(best)].first.degree()) best = int(i);
        }
        bool changed = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (int(i) == best || rows[i].first.is_zero()) continue;
            Element c = f->div(rows[i].first.lead(), rows[size_t(best)].first.lead());
            int shift = rows[i].first.degree() - rows[size_t(best)].first.degree();
            Poly mult = Poly::monomial(f, shift, c);
            rows[i].first = rows[i].first - mult * rows[size_t(best)].first;
            rows[i].second = rows[i].second - mult * rows[size_t(best)].second;
            changed = true;
        }
        if (!changed) break;
    }

    int pivot = -1;
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].first.is_zero()) pivot = int(i);
    if (pivot < 0) throw InvariantViolation("first-column pivot vanished during triangularization");

    Element norm = f->inv(rows[size_t(pivot)].first.lead());
    Poly g11 = rows[size_t(pivot)].first.scaled(norm);
    Poly lift = rows[size_t(pivot)].second.scaled(norm);

    Poly g22 = Poly::zero(f);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(i) == pivot) continue;
        g22 = gcd(g22, rows[i].second);
    }
    if (g22.is_zero()) throw InvariantViolation("kernel of the projection is trivial");
    Poly g12 = lift % g22;

    if (!(xml % g11).is_zero() || !(xml % g22).is_zero())
        throw InvariantViolation("canonical pivots do not divide x^m - lambda");
    if (!g12.is_zero() && !((xml * g12) % (g11 * g22)).is_zero())
        throw InvariantViolation("canonical triple violates the divisibility condition");
    return {g11, g12, g22};
}

}  // namespace

QTCode::QTCode(const RingCtx& ctx, int l, std::vector<std::vector<Poly>> gens) : ctx_(ctx), l_(l) {
    if (l < 1) throw DomainError("index must be positive");
    for (auto& g : gens) {
        if (int(g.size()) != l) throw DomainError("generator tuple length does not match the index");
        for (auto& comp : g) {
            if (comp.field() != ctx.field) throw DomainError("generator over a different field");
            comp = reduce(comp, ctx_, Side::R);
        }
    }
    gens_ = std::move(gens);

    genmat_ = Mat(ctx_.field, size_t(l_) * size_t(ctx_.m));
    for (const auto& g : gens_) {
        std::vector<Poly> shifted = g;
        for (int j = 0; j < ctx_.m; ++j) {
            genmat_.append_row(interleave(shifted));
            for (auto& comp : shifted) comp = reduce(comp.shifted(1), ctx_, Side::R);
        }
    }
    rref_ = rref(genmat_);

    if (l_ == 2) {
        canon2_ = canonicalize2(ctx_, gens_);
        dim_ = 2 * ctx_.m - canon2_->g11.degree() - canon2_->g22.degree();
        if (dim_ != int(rref_.rank()))
            throw InvariantViolation("dimension formula disagrees with the generator-matrix rank");
    } else {
        dim_ = int(rref_.rank());
    }
}

QTCode QTCode::full_code(const RingCtx& ctx, int l) {
    std::vector<std::vector<Poly>> gens;
    for (int i = 0; i < l; ++i) {
        std::vector<Poly> g(size_t(l), Poly::zero(ctx.field));
        g[size_t(i)] = Poly::one(ctx.field);
        gens.push_back(std::move(g));
    }
    return QTCode(ctx, l, std::move(gens));
}

QTCode QTCode::from_triple(const RingCtx& ctx, const Poly& g11, const Poly& g12, const Poly& g22) {
    Poly xml = ctx.xm_minus_lambda();
    if (g11.is_zero() || g22.is_zero()) throw DomainError("triple entries g11, g22 must be nonzero divisors");
    if (!(xml % g11).is_zero() || !(xml % g22).is_zero())
        throw DomainError("g11 and g22 must divide x^m - lambda");
    if (!g12.is_zero() && g12.degree() >= g22.degree())
        throw DomainError("deg g12 must be smaller than deg g22");
    if (!g12.is_zero() && !((xml * g12) % (g11 * g22)).is_zero())
        throw DomainError("g11*g22 must divide (x^m - lambda)*g12");
    QTCode code(ctx, 2, {{g11, g12}, {Poly::zero(ctx.field), g22}});
    const CanonicalTriple& t = code.canonical2();
    Poly eg12 = g12.is_zero() ? g12 : g12.scaled(ctx.field->inv(g11.lead())) % g22.monic();
    if (t.g11 != g11.monic() || t.g22 != g22.monic() || t.g12 != eg12)
        throw InvariantViolation("triple did not canonicalize to itself");
    return code;
}

const CanonicalTriple& QTCode::canonical2() const {
    if (!canon2_) throw DomainError("canonical triple exists only for index 2");
    return *canon2_;
}

std::vector<uint32_t> QTCode::interleave(const std::vector<Poly>& tuple) const {
    if (int(tuple.size()) != l_) throw DomainError("tuple length does not match the index");
    std::vector<uint32_t> word(size_t(l_) * size_t(ctx_.m), 0);
    for (int i = 0; i < l_; ++i) {
        const Poly& comp = tuple[size_t(i)];
        if (comp.degree() >= ctx_.m) throw DomainError("tuple component not reduced");
        for (int j = 0; j <= comp.degree(); ++j) word[size_t(j) * size_t(l_) + size_t(i)] = comp.coeff(j).v;
    }
    return word;
}

std::vector<Poly> QTCode::deinterleave(const std::vector<uint32_t>& word) const {
    if (word.size() != size_t(l_) * size_t(ctx_.m)) throw DomainError("word length does not match l*m");
    std::vector<Poly> tuple;
    for (int i = 0; i < l_; ++i) {
        std::vector<uint32_t> c(size_t(ctx_.m), 0);
        for (int j = 0; j < ctx_.m; ++j) c[size_t(j)] = word[size_t(j) * size_t(l_) + size_t(i)];
        tuple.emplace_back(ctx_.field, std::move(c));
    }
    return tuple;
}

bool QTCode::contains(const std::vector<uint32_t>& word) const { return rref_.contains(word); }

bool QTCode::equals(const QTCode& o) const {
    if (ctx_ != o.ctx_ || l_ != o.l_)
        throw DomainError("codes live in different ambient rings and are incomparable");
    bool by_rows = rref_.rank() == o.rref_.rank() && rowspace_contained(o.genmat_, rref_);
    if (l_ == 2) {
        bool by_triple = canon2_->g11 == o.canon2_->g11 && canon2_->g12 == o.canon2_->g12 &&
                         canon2_->g22 == o.canon2_->g22;
        if (by_triple != by_rows)
            throw InvariantViolation("canonical-triple equality disagrees with row-space equality");
        return by_triple;
    }
    return by_rows;
}

OneGenResult is_one_generator_sufficient(const QTCode& code) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    const CanonicalTriple& t = code.canonical2();
    Poly product = reduce(t.g11 * t.g22, ctx, Side::R);
    if (!product.is_zero()) return {OneGenResult::Status::No, {}};
    if (ctx.m % int(f->p()) == 0) return {OneGenResult::Status::Unknown, {}};

    // gcd(m, q) = 1: construct the generator (g11, g12 + b*g22) with
    // b = f*(1 - g12/g), f*(g22/g) = 1 mod (x^m-lambda)/g22.
    Poly g = gcd(t.g11, t.g22);
    Poly g22p = exact_div(t.g22, g);
    Poly g12p = t.g12.is_zero() ? Poly::zero(f) : exact_div(t.g12, g);
    Poly mod = exact_div(ctx.xm_minus_lambda(), t.g22);
    Poly b = Poly::zero(f);
    if (!mod.is_one()) {
        auto [gg, u, v] = xgcd(g22p, mod);
        if (!gg.is_one()) throw InvariantViolation("g22/g should be invertible modulo (x^m - lambda)/g22");
        Poly finv = u % mod;
        b = (finv * (Poly::one(f) - g12p)) % ctx.xm_minus_lambda();
    }
    std::vector<Poly> h = {reduce(t.g11, ctx, Side::R), reduce(t.g12 + b * t.g22, ctx, Side::R)};
    QTCode span(ctx, 2, {h});
    if (span.dimension() != code.dimension() || !rowspace_contained(span.generator_matrix(), code.row_space()))
        throw InvariantViolation("constructed single generator does not span the code");
    return {OneGenResult::Status::Yes, h};
}

int one_generator_dimension(const Poly& g11, const Poly& g12, const RingCtx& ctx) {
    const Field* f = ctx.field;
    if (ctx.m % int(f->p()) == 0) throw DomainError("one-generator dimension formula needs gcd(m, q) = 1");
    if (g11.is_zero() || !(ctx.xm_minus_lambda() % g11).is_zero())
        throw DomainError("g11 must be a nonzero divisor of x^m - lambda");
    Poly g = gcd(g11, g12);
    int dim = ctx.m - g.degree();
    QTCode span(ctx, 2, {{g11, g12}});
    if (span.dimension() != dim)
        throw InvariantViolation("one-generator dimension formula disagrees with the rank");
    return dim;
}

std::optional<std::vector<Poly>> exhaustive_one_generator_search(const QTCode& code) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    int k = code.dimension();
    double words = 1;
    for (int i = 0; i < k; ++i) {
        words *= f->q();
        if (words > 1e6) throw BudgetExceeded("codeword space too large for exhaustive generator search");
    }
    if (k == 0) return std::vector<Poly>(size_t(code.index()), Poly::zero(f));

    const Mat& basis = code.row_space().mat;
    std::vector<uint32_t> msg(size_t(k), 0);
    std::vector<uint32_t> word(basis.cols, 0);
    while (true) {
        // next message (odometer)
        int pos = 0;
        while (pos < k && msg[size_t(pos)] + 1 == f->q()) msg[size_t(pos++)] = 0;
        if (pos == k) break;
        ++msg[size_t(pos)];

        std::fill(word.begin(), word.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (msg[size_t(i)] == 0) continue;
            Element c = f->from_index(msg[size_t(i)]);
            for (size_t j = 0; j < word.size(); ++j)
                word[j] = (f->from_index(word[j]) + c * f->from_index(basis.rows[size_t(i)][j])).v;
        }
        QTCode span(ctx, code.index(), {code.deinterleave(word)});
        if (span.dimension() == k) return code.deinterleave(word);
    }
    return std::nullopt;
}

}  // namespace qtw
