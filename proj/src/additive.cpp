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

#include "qtw/additive.hpp"

#include <algorithm>
#include <functional>

namespace qtw {

namespace {

// digit stack of the base coordinates: slot i*k+j = digit j of coordinate i
std::vector<uint32_t> digits_of(const Field* f, Element e) { return f->coeffs(e); }

Rref coordinate_solver(const Tower* tower, const std::vector<Element>& w) {
    const Field* top = tower->top();
    const Field* base = tower->base();
    const Field* fp = Field::get(top->p(), 1);
    uint32_t k = base->k();
    uint32_t kl = top->k();
    // columns of M: digits of w_i * embed(v_j) with v_j the base power basis
    Mat aug(fp, 2 * kl);
    std::vector<std::vector<uint32_t>> cols;
    for (uint32_t i = 0; i < w.size(); ++i)
        for (uint32_t j = 0; j < k; ++j) {
            std::vector<uint32_t> bd(k, 0);
            bd[j] = 1;
            Element vj = tower->embed(base->from_coeffs(bd));
            cols.push_back(digits_of(top, w[i] * vj));
        }
    // rows of [M | I]
    for (uint32_t r = 0; r < kl; ++r) {
        std::vector<uint32_t> row(2 * kl, 0);
        for (uint32_t c = 0; c < kl; ++c) row[c] = cols[c][r];
        row[kl + r] = 1;
        aug.append_row(std::move(row));
    }
    Rref rr = rref(aug);
    if (rr.rank() != kl || rr.pivot_cols.back() >= int(kl))
        throw DomainError("elements do not form a basis of the top field over the base");
    return rr;
}

}  // namespace

AmbientBasis::AmbientBasis(const Tower* tower, std::vector<Element> w, BasisKind kind, Element eps)
    : tower_(tower), w_(std::move(w)), kind_(kind), eps_(eps) {
    if (w_.size() != tower_->l()) throw DomainError("basis needs exactly l elements");
    for (const Element& e : w_)
        if (e.field != tower_->top()) throw DomainError("basis elements must live in the top field");
    solve_ = coordinate_solver(tower_, w_);
}

AmbientBasis AmbientBasis::general(const Tower* tower, std::vector<Element> w) {
    return AmbientBasis(tower, std::move(w), BasisKind::General, tower->base()->one());
}

AmbientBasis AmbientBasis::with_kind(const Tower* tower, std::vector<Element> w, BasisKind kind) {
    if (kind == BasisKind::General) return general(tower, std::move(w));
    const Field* base = tower->base();
    uint32_t l = tower->l(), r = l / 2;
    if (w.size() != l) throw DomainError("basis needs exactly l elements");
    bool twisted = kind == BasisKind::TraceHermitianOdd || kind == BasisKind::SymplecticPairs;
    if (twisted && l % 2 != 0) throw DomainError("twisted Gram profiles need even l");
    auto form = [&](Element a, Element b) {
        return tower->trace(twisted ? a * tower->conjugate(b) : a * b);
    };
    bool has_eps = kind == BasisKind::AlmostSelfDual || kind == BasisKind::TraceHermitianOdd;
    Element eps = has_eps ? form(w[l - 1], w[l - 1]) : base->one();
    for (uint32_t i = 0; i < l; ++i)
        for (uint32_t j = 0; j < l; ++j) {
            Element got = form(w[i], w[j]);
            Element want = base->zero();
            if (kind == BasisKind::SymplecticPairs) {
                if (i + r == j || j + r == i) want = base->one();
            } else if (i == j) {
                want = (has_eps && i == l - 1) ? eps : base->one();
            }
            if (got != want)
                throw DomainError("basis does not carry the claimed Gram profile at entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (has_eps && eps.is_zero()) throw DomainError("exceptional Gram entry must be nonzero");
    if (kind == BasisKind::AlmostSelfDual && !base->is_nonsquare(eps))
        throw DomainError("almost self-dual exceptional entry must be a non-square");
    return AmbientBasis(tower, std::move(w), kind, eps);
}

std::vector<Element> AmbientBasis::coordinates(Element top) const {
    const Field* t = tower_->top();
    const Field* base = tower_->base();
    if (top.field != t) throw DomainError("element is not in the top field");
    uint32_t k = base->k(), kl = t->k();
    std::vector<uint32_t> y = t->coeffs(top);
    // x = Minv * y read off the augmented RREF: row r solves x[pivot r]
    std::vector<uint32_t> x(kl, 0);
    const Field* fp = Field::get(t->p(), 1);
    for (size_t r = 0; r < solve_.rank(); ++r) {
        Element acc = fp->zero();
        for (uint32_t c = 0; c < kl; ++c) {
            uint32_t inv_entry = solve_.mat.rows[r][kl + c];
            if (inv_entry && y[c])
                acc = acc + fp->from_index(inv_entry) * fp->from_index(y[c]);
        }
        x[size_t(solve_.pivot_cols[r])] = acc.v;
    }
    std::vector<Element> coords;
    for (uint32_t i = 0; i < tower_->l(); ++i) {
        std::vector<uint32_t> d(x.begin() + i * k, x.begin() + (i + 1) * k);
        coords.push_back(base->from_coeffs(d));
    }
    return coords;
}

Element AmbientBasis::combine(const std::vector<Element>& coords) const {
    if (coords.size() != w_.size()) throw DomainError("coordinate count does not match the basis");
    Element acc = tower_->top()->zero();
    for (size_t i = 0; i < coords.size(); ++i) acc = acc + w_[i] * tower_->embed(coords[i]);
    return acc;
}

AmbientBasis find_basis(const Tower* tower, BasisKind kind) {
    const Field* top = tower->top();
    const Field* base = tower->base();
    uint32_t l = tower->l();
    bool q_even = base->p() == 2;

    switch (kind) {
        case BasisKind::SelfDual:
            if (!(q_even || l % 2 == 1))
                throw DomainError("self-dual basis exists only for even q, or odd q with odd l");
            break;
        case BasisKind::AlmostSelfDual:
            if (q_even || l % 2 != 0)
                throw DomainError("almost self-dual basis (non-square exceptional entry) needs odd q and even l");
            break;
        case BasisKind::TraceHermitianOdd:
            if (q_even || l % 2 != 0)
                throw DomainError("the twisted-form orthogonal basis needs odd q and even l");
            break;
        case BasisKind::SymplecticPairs:
            if (!q_even || l % 2 != 0) throw DomainError("hyperbolic pairs need even q and even l");
            break;
        case BasisKind::General:
            throw DomainError("a General basis is built from explicit elements, not searched");
    }

    bool twisted = kind == BasisKind::TraceHermitianOdd || kind == BasisKind::SymplecticPairs;
    auto form = [&](Element a, Element b) {
        return tower->trace(twisted ? a * tower->conjugate(b) : a * b);
    };

    uint32_t r = l / 2;
    bool has_eps = kind == BasisKind::AlmostSelfDual || kind == BasisKind::TraceHermitianOdd;
    // target entries: -1 marks "any nonzero" (the eps slot)
    auto target = [&](uint32_t i, uint32_t j) -> int64_t {
        if (kind == BasisKind::SymplecticPairs)
            return (i + r == j || j + r == i) ? 1 : 0;
        if (i != j) return 0;
        if (has_eps && i == l - 1) return -1;
        return 1;
    };

    std::vector<Element> w;
    std::function<bool()> search = [&]() -> bool {
        if (w.size() == l) return true;
        uint32_t depth = uint32_t(w.size());
        for (uint32_t v = 1; v < top->q(); ++v) {
            Element cand = top->from_index(v);
            bool ok = true;
            for (uint32_t i = 0; i < depth && ok; ++i) {
                int64_t t = target(i, depth);
                Element got = form(w[i], cand);
                ok = t == -1 ? !got.is_zero() : got == base->from_int(t);
                if (ok && twisted) {
                    Element got2 = form(cand, w[i]);
                    ok = t == -1 ? !got2.is_zero() : got2 == base->from_int(t);
                }
            }
            if (ok) {
                int64_t t = target(depth, depth);
                Element got = form(cand, cand);
                ok = t == -1 ? !got.is_zero() : got == base->from_int(t);
            }
            if (!ok) continue;
            w.push_back(cand);
            if (search()) return true;
            w.pop_back();
        }
        return false;
    };
    if (!search())
        throw InvariantViolation("no basis with the requested Gram profile exists in this tower");

    Element eps = base->one();
    if (has_eps) eps = form(w.back(), w.back());
    AmbientBasis out(tower, w, kind, eps);
    if (kind == BasisKind::AlmostSelfDual && !base->is_nonsquare(eps))
        throw InvariantViolation("almost self-dual exceptional entry turned out to be a square");
    return out;
}

Element basis_delta(const AmbientBasis& basis) {
    if (basis.tower()->l() != 2) throw DomainError("delta is defined for index-2 bases");
    return basis.tower()->trace(basis.w()[0] * basis.tower()->conjugate(basis.w()[1]));
}

Poly phi(const std::vector<Poly>& tuple, const AmbientBasis& basis) {
    const Tower* t = basis.tower();
    if (tuple.size() != t->l()) throw DomainError("tuple length does not match the basis");
    int maxdeg = -1;
    for (const auto& p : tuple) {
        if (p.field() != t->base()) throw DomainError("tuple components must live over the base field");
        maxdeg = std::max(maxdeg, p.degree());
    }
    if (maxdeg < 0) return Poly::zero(t->top());
    std::vector<uint32_t> c(size_t(maxdeg) + 1, 0);
    for (int j = 0; j <= maxdeg; ++j) {
        Element acc = t->top()->zero();
        for (size_t i = 0; i < tuple.size(); ++i)
            acc = acc + basis.w()[i] * t->embed(tuple[i].coeff(j));
        c[size_t(j)] = acc.v;
    }
    return Poly(t->top(), std::move(c));
}

std::vector<Poly> phi_inverse(const Poly& f, int l, const AmbientBasis& basis) {
    const Tower* t = basis.tower();
    if (f.field() != t->top()) throw DomainError("polynomial is not over the top field");
    if (l != int(t->l())) throw DomainError("index does not match the tower");
    std::vector<std::vector<uint32_t>> comps;
    comps.resize(size_t(l));
    for (auto& c : comps) c.assign(size_t(std::max(f.degree() + 1, 1)), 0);
    for (int j = 0; j <= f.degree(); ++j) {
        auto coords = basis.coordinates(f.coeff(j));
        for (int i = 0; i < l; ++i) comps[size_t(i)][size_t(j)] = coords[size_t(i)].v;
    }
    std::vector<Poly> out;
    for (auto& c : comps) out.emplace_back(t->base(), std::move(c));
    return out;
}

Element trace_inner_product(TraceForm kind, const Poly& a, const Poly& b, const AmbientBasis& basis) {
    const Tower* t = basis.tower();
    if (a.field() != t->top() || b.field() != t->top())
        throw DomainError("trace pairing operands must live over the top field");
    switch (kind) {
        case TraceForm::TraceEuclidean: {
            Element acc = t->top()->zero();
            int d = std::min(a.degree(), b.degree());
            for (int i = 0; i <= d; ++i) acc = acc + a.coeff(i) * b.coeff(i);
            return t->trace(acc);
        }
        case TraceForm::TraceHermitian: {
            Element acc = t->top()->zero();
            int d = std::min(a.degree(), b.degree());
            for (int i = 0; i <= d; ++i) acc = acc + a.coeff(i) * t->conjugate(b.coeff(i));
            return t->trace(acc);
        }
        case TraceForm::Symplectic: {
            auto as = phi_inverse(a, int(t->l()), basis);
            auto bs = phi_inverse(b, int(t->l()), basis);
            return inner_product(InnerProductKind::Symplectic, as, bs);
        }
    }
    throw DomainError("unknown trace form");
}

AdditiveCode::AdditiveCode(AmbientBasis basis, RingCtx ctx_top, Element lambda_base,
                           std::vector<Poly> gens, QTCode shadow)
    : basis_(std::move(basis)),
      ctx_top_(ctx_top),
      lambda_base_(lambda_base),
      gens_(std::move(gens)),
      shadow_(std::move(shadow)) {}

AdditiveCode AdditiveCode::from_qt(const QTCode& shadow, const AmbientBasis& basis) {
    const Tower* t = basis.tower();
    if (shadow.ctx().field != t->base()) throw DomainError("shadow code must live over the tower's base field");
    if (shadow.index() != int(t->l())) throw DomainError("shadow index must equal the extension degree l");
    RingCtx ctx_top = RingCtx::make(t->top(), shadow.ctx().m, t->embed(shadow.ctx().lambda));
    std::vector<Poly> gens;
    for (const auto& g : shadow.generators()) gens.push_back(phi(g, basis));
    return AdditiveCode(basis, ctx_top, shadow.ctx().lambda, std::move(gens), shadow);
}

AdditiveCode AdditiveCode::from_generators(const AmbientBasis& basis, Element lambda_base, int m,
                                           const std::vector<Poly>& gens) {
    const Tower* t = basis.tower();
    if (lambda_base.field != t->base())
        throw DomainError("lambda must lie in the base field: the base polynomial ring acts on R_A");
    RingCtx ctx_top = RingCtx::make(t->top(), m, t->embed(lambda_base));
    RingCtx ctx_base = RingCtx::make(t->base(), m, lambda_base);
    std::vector<Poly> reduced;
    std::vector<std::vector<Poly>> shadow_gens;
    for (const auto& g : gens) {
        Poly rg = reduce(g, ctx_top, Side::R);
        reduced.push_back(rg);
        shadow_gens.push_back(phi_inverse(rg, int(t->l()), basis));
    }
    QTCode shadow(ctx_base, int(t->l()), std::move(shadow_gens));
    return AdditiveCode(basis, ctx_top, lambda_base, std::move(reduced), std::move(shadow));
}

bool AdditiveCode::contains(const Poly& word) const {
    Poly rw = reduce(word, ctx_top_, Side::R);
    return shadow_.contains(phi_inverse(rw, shadow_.index(), basis_));
}

bool AdditiveCode::equals(const AdditiveCode& o) const {
    if (basis_.tower() != o.basis_.tower() || ctx_top_ != o.ctx_top_)
        throw DomainError("additive codes live in different ambient rings");
    // map o's generators through this code's coordinates
    std::vector<std::vector<Poly>> mapped;
    for (const auto& g : o.gens_) mapped.push_back(phi_inverse(g, shadow_.index(), basis_));
    QTCode os(shadow_.ctx(), shadow_.index(), std::move(mapped));
    return shadow_.equals(os);
}

namespace {

AdditiveCode map_shadow_dual(const AdditiveCode& code, QTCode shadow_dual, Element twist) {
    const Field* base = code.basis().tower()->base();
    if (twist == base->one()) return AdditiveCode::from_qt(shadow_dual, code.basis());
    std::vector<std::vector<Poly>> twisted;
    for (auto g : shadow_dual.generators()) {
        g.back() = g.back().scaled(twist);
        twisted.push_back(std::move(g));
    }
    QTCode tw(shadow_dual.ctx(), shadow_dual.index(), std::move(twisted));
    return AdditiveCode::from_qt(tw, code.basis());
}

AdditiveCode trace_dual_impl(const AdditiveCode& code, TraceForm kind, bool closed_form) {
    const Tower* t = code.basis().tower();
    const Field* base = t->base();
    bool q_even = base->p() == 2;
    uint32_t l = t->l();
    BasisKind bk = code.basis().kind();
    Element twist = base->one();
    InnerProductKind shadow_kind;

    switch (kind) {
        case TraceForm::TraceEuclidean:
            if (bk == BasisKind::AlmostSelfDual)
                twist = base->inv(code.basis().eps());
            else if (bk != BasisKind::SelfDual)
                throw DomainError("trace-Euclidean dual needs a self-dual or almost self-dual basis");
            shadow_kind = InnerProductKind::Euclidean;
            break;
        case TraceForm::TraceHermitian:
            if (l % 2 != 0) throw DomainError("trace-Hermitian form needs even extension degree");
            if (!q_even) {
                if (bk != BasisKind::TraceHermitianOdd)
                    throw DomainError("trace-Hermitian dual for odd q needs the twisted-form orthogonal basis");
                twist = base->inv(code.basis().eps());
                shadow_kind = InnerProductKind::Euclidean;
            } else {
                if (l != 2 && bk != BasisKind::SymplecticPairs)
                    throw DomainError("trace-Hermitian dual for even q, l > 2 needs the hyperbolic-pairs basis");
                shadow_kind = InnerProductKind::Symplectic;
            }
            break;
        case TraceForm::Symplectic:
            if (l % 2 != 0) throw DomainError("symplectic form needs even extension degree");
            shadow_kind = InnerProductKind::Symplectic;
            break;
        default:
            throw DomainError("unknown trace form");
    }

    QTCode shadow_dual = (closed_form && l == 2)
                             ? (shadow_kind == InnerProductKind::Euclidean
                                    ? euclidean_dual2(code.shadow()).code
                                    : symplectic_dual2(code.shadow()).code)
                             : brute_dual(code.shadow(), shadow_kind).code;
    return map_shadow_dual(code, std::move(shadow_dual), twist);
}

}  // namespace

AdditiveCode trace_dual(const AdditiveCode& code, TraceForm kind) {
    return trace_dual_impl(code, kind, true);
}

AdditiveCode index_l_trace_dual(const AdditiveCode& code, TraceForm kind) {
    return trace_dual_impl(code, kind, false);
}

AdditiveCode exhaustive_trace_dual(const AdditiveCode& code, TraceForm kind, uint64_t budget) {
    const Tower* t = code.basis().tower();
    const Field* top = t->top();
    int m = code.top_ctx().m;
    double total = 1;
    for (int i = 0; i < m; ++i) {
        total *= top->q();
        if (total > double(budget)) throw BudgetExceeded("exhaustive trace dual over budget");
    }

    // spanning elements of C_A: phi images of the shadow's spanning rows
    std::vector<Poly> span;
    for (const auto& row : code.shadow().generator_matrix().rows)
        span.push_back(phi(code.shadow().deinterleave(row), code.basis()));

    RingCtx base_dual = code.shadow().ctx().dual();
    std::vector<std::vector<Poly>> survivors;
    std::vector<uint32_t> c(size_t(m), 0);
    while (true) {
        Poly cand(top, c);
        bool orth = true;
        for (const auto& s : span)
            if (!trace_inner_product(kind, s, cand, code.basis()).is_zero()) {
                orth = false;
                break;
            }
        if (orth && !cand.is_zero()) survivors.push_back(phi_inverse(cand, int(t->l()), code.basis()));
        int pos = 0;
        while (pos < m && c[size_t(pos)] + 1 == top->q()) c[size_t(pos++)] = 0;
        if (pos == m) break;
        ++c[size_t(pos)];
    }
    QTCode shadow(base_dual, int(t->l()), std::move(survivors));
    return AdditiveCode::from_qt(shadow, code.basis());
}

}  // namespace qtw
