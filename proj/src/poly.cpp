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

#include "qtw/poly.hpp"

#include <algorithm>
#include <random>

namespace qtw {

Poly Poly::monomial(const Field* f, int deg, Element coeff) {
    if (deg < 0) throw DomainError("monomial degree must be nonnegative");
    if (coeff.is_zero()) return Poly(f);
    std::vector<uint32_t> c(size_t(deg) + 1, 0);
    c[size_t(deg)] = coeff.v;
    return Poly(f, std::move(c));
}

Element Poly::lead() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return f_->from_index(c_.back());
}

Element Poly::eval(Element at) const {
    Element acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + f_->from_index(c_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(lead()));
}

Poly Poly::scaled(Element s) const {
    if (s.field != f_) throw DomainError("scalar from a different field");
    if (s.is_zero()) return Poly(f_);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(f_->from_index(c_[i]), s).v;
    return Poly(f_, std::move(c));
}

Poly Poly::shifted(int e) const {
    if (e < 0) throw DomainError("shift exponent must be nonnegative");
    if (is_zero()) return *this;
    std::vector<uint32_t> c(c_.size() + size_t(e), 0);
    std::copy(c_.begin(), c_.end(), c.begin() + e);
    return Poly(f_, std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<uint32_t> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        Element e = f_->from_index(c_[i]);
        Element factor = f_->from_int(int64_t(i));
        c[i - 1] = f_->mul(e, factor).v;
    }
    return Poly(f_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same(b);
    std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        Element x = i < a.c_.size() ? a.f_->from_index(a.c_[i]) : a.f_->zero();
        Element y = i < b.c_.size() ? a.f_->from_index(b.c_[i]) : a.f_->zero();
        c[i] = (x + y).v;
    }
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<uint32_t> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->neg(a.f_->from_index(a.c_[i])).v;
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    const Field* f = a.f_;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        Element ai = f->from_index(a.c_[i]);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            Element prod = ai * f->from_index(b.c_[j]);
            c[i + j] = (f->from_index(c[i + j]) + prod).v;
        }
    }
    return Poly(f, std::move(c));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw DomainError("polynomials over different fields");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const Field* f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    Element linv = f->inv(b.lead());
    std::vector<uint32_t> rem(a.raw());
    std::vector<uint32_t> quo(size_t(a.degree() - b.degree()) + 1, 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        Element c = f->from_index(rem[size_t(i)]);
        if (c.is_zero()) continue;
        Element qc = c * linv;
        quo[size_t(i - b.degree())] = qc.v;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t idx = size_t(i - b.degree() + j);
            Element cur = f->from_index(rem[idx]);
            rem[idx] = (cur - qc * b.coeff(j)).v;
        }
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw InvariantViolation("expected exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    const Field* f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Element norm = f->inv(r0.lead());
    return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

Poly pow_mod(const Poly& base, uint64_t e, const Poly& f) {
    Poly acc = Poly::one(base.field());
    Poly b = base % f;
    while (e) {
        if (e & 1) acc = (acc * b) % f;
        b = (b * b) % f;
        e >>= 1;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Element c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = f_->to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else {
            std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
            if (c == f_->one())
                out += xs;
            else
                out += (needs_parens ? "(" + cs + ")" : cs) + "*" + xs;
        }
    }
    return out;
}

RingCtx RingCtx::make(const Field* f, int m, Element lambda) {
    if (lambda.field != f) throw DomainError("lambda from a different field");
    if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
    if (m < 1) throw DomainError("block length m must be positive");
    return {f, m, lambda, f->inv(lambda)};
}

Poly RingCtx::xm_minus_lambda() const {
    std::vector<uint32_t> c(size_t(m) + 1, 0);
    c[0] = field->neg(lambda).v;
    c[size_t(m)] = field->one().v;
    return Poly(field, std::move(c));
}

Poly RingCtx::xm_minus_lambda_inv() const {
    std::vector<uint32_t> c(size_t(m) + 1, 0);
    c[0] = field->neg(lambda_inv).v;
    c[size_t(m)] = field->one().v;
    return Poly(field, std::move(c));
}

Poly reduce(const Poly& p, const RingCtx& ctx, Side side) {
    if (p.field() != ctx.field) throw DomainError("polynomial field does not match the ring");
    if (p.degree() < ctx.m) return p;
    Element lam = side == Side::R ? ctx.lambda : ctx.lambda_inv;
    std::vector<uint32_t> c(p.raw());
    const Field* f = ctx.field;
    for (size_t i = c.size(); i-- > size_t(ctx.m);) {
        if (c[i] == 0) continue;
        Element carry = f->from_index(c[i]) * lam;
        size_t j = i - size_t(ctx.m);
        c[j] = (f->from_index(c[j]) + carry).v;
        c[i] = 0;
    }
    return Poly(f, std::move(c));
}

Poly reciprocal(const Poly& t) {
    if (t.is_zero()) throw DomainError("reciprocal of the zero polynomial is undefined");
    std::vector<uint32_t> c(t.raw());
    std::reverse(c.begin(), c.end());
    return Poly(t.field(), std::move(c));
}

Poly circ(const Poly& t, const RingCtx& ctx) {
    if (t.field() != ctx.field) throw DomainError("polynomial field does not match the ring");
    if (t.degree() > ctx.m) throw DomainError("circ transform needs deg t <= m");
    if (t.is_zero()) return t;
    // lambda * sum_i t_i x^(m-i)
    std::vector<uint32_t> c(size_t(ctx.m) + 1, 0);
    for (int i = 0; i <= t.degree(); ++i) c[size_t(ctx.m - i)] = (ctx.lambda * t.coeff(i)).v;
    return Poly(ctx.field, std::move(c));
}

Poly conj_poly(const Poly& t, const Tower& tower) {
    if (t.field() != tower.top()) throw DomainError("polynomial is not over the tower's top field");
    std::vector<uint32_t> c(t.raw());
    for (auto& v : c) v = tower.conjugate(tower.top()->from_index(v)).v;
    return Poly(t.field(), std::move(c));
}

Poly conj_reciprocal(const Poly& t, const Tower& tower) { return conj_poly(reciprocal(t), tower); }

namespace {

// coefficientwise p-th root: f must only have terms x^(i*p)
Poly pth_root(const Poly& f) {
    const Field* fd = f.field();
    uint32_t p = fd->p();
    std::vector<uint32_t> c(size_t(f.degree() / int(p)) + 1, 0);
    uint64_t root_exp = 1;
    for (uint32_t i = 0; i + 1 < fd->k(); ++i) root_exp *= p;  // a^(p^(k-1)) is the p-th root
    for (int i = 0; i <= f.degree(); ++i) {
        Element e = f.coeff(i);
        if (e.is_zero()) continue;
        if (i % int(p) != 0) throw InvariantViolation("polynomial is not a p-th power");
        c[size_t(i / int(p))] = fd->pow(e, root_exp).v;
    }
    return Poly(fd, std::move(c));
}

// multiplicity-tagged squarefree decomposition (characteristic p)
void squarefree_decompose(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    const Field* fd = f.field();
    if (f.degree() < 1) return;
    Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), mult * int(fd->p()), out);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = exact_div(f, c);
    int k = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, mult * k);
        w = y;
        c = exact_div(c, y);
        ++k;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c), mult * int(fd->p()), out);
}

// distinct-degree split of a monic squarefree polynomial
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    const Field* fd = f.field();
    Poly g = f;
    Poly h = Poly::x(fd) % g;
    int d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = pow_mod(h, fd->q(), g);
        Poly gd = gcd(h - Poly::x(fd), g);
        if (gd.degree() > 0) {
            out.emplace_back(gd, d);
            g = exact_div(g, gd);
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus) of a product of irreducibles
// of the given degree
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field* fd = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        std::vector<uint32_t> hc(size_t(f.degree()), 0);
        for (auto& v : hc) v = uint32_t(rng() % fd->q());
        Poly h(fd, std::move(hc));
        if (h.degree() < 1) continue;
        Poly g = gcd(h, f);
        if (g.degree() == 0) {
            if (fd->p() == 2) {
                // trace map over GF(2): sum of h^(2^i), i < log2(q)*d
                uint32_t bits = 0;
                for (uint32_t t = fd->q(); t > 1; t >>= 1) ++bits;
                Poly acc = h % f;
                Poly cur = acc;
                for (uint32_t i = 1; i < bits * uint32_t(d); ++i) {
                    cur = (cur * cur) % f;
                    acc = acc + cur;
                }
                g = gcd(acc, f);
            } else {
                // h^((q^d-1)/2) = (prod_i h^(q^i))^((q-1)/2)
                Poly norm = h % f;
                Poly hq = h % f;
                for (int i = 1; i < d; ++i) {
                    hq = pow_mod(hq, fd->q(), f);
                    norm = (norm * hq) % f;
                }
                Poly u = pow_mod(norm, (fd->q() - 1) / 2, f);
                g = gcd(u - Poly::one(fd), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i).v != b.coeff(i).v) return a.coeff(i).v < b.coeff(i).v;
    }
    return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> factorize(const Poly& f, uint64_t seed) {
    if (f.degree() < 1) throw DomainError("factorization needs a nonconstant polynomial");
    Poly g = f.monic();
    if (g != f) throw DomainError("factorization expects a monic polynomial");

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(g, 1, squarefree);

    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (const auto& p : irr) out.emplace_back(p, mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });

    Poly check = Poly::one(f.field());
    for (const auto& [p, e] : out)
        for (int i = 0; i < e; ++i) check = check * p;
    if (check != f) throw InvariantViolation("factor product does not reproduce the input");
    return out;
}

std::vector<std::pair<Poly, int>> factor_xm_minus_lambda(const RingCtx& ctx, uint64_t seed) {
    return factorize(ctx.xm_minus_lambda(), seed);
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Field* fd = f.field();
    // no root, then no irreducible divisor of degree <= deg/2 via gcd with
    // x^(q^d) - x
    Poly h = Poly::x(fd) % f;
    for (int d = 1; d <= f.degree() / 2; ++d) {
        h = pow_mod(h, fd->q(), f);
        if (gcd(h - Poly::x(fd), f).degree() > 0) return false;
    }
    return true;
}

}  // namespace qtw
