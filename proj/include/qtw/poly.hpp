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

#ifndef QTW_POLY_HPP
#define QTW_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qtw/field.hpp"

namespace qtw {

/// Dense polynomial over a finite field, always trimmed (no zero leading
/// coefficient). The zero polynomial has the distinguished degree
/// kNegInfDeg; code consuming degrees must branch on is_zero() first
/// rather than do arithmetic with the sentinel.
class Poly {
   public:
    static constexpr int kNegInfDeg = std::numeric_limits<int>::min();

    explicit Poly(const Field* f) : f_(f) {}
    Poly(const Field* f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly one(const Field* f) { return Poly(f, {f->one().v}); }
    static Poly constant(Element e) { return Poly(e.field, {e.v}); }
    static Poly x(const Field* f) { return monomial(f, 1, f->one()); }
    static Poly monomial(const Field* f, int deg, Element coeff);

    const Field* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == f_->one().v; }
    int degree() const { return c_.empty() ? kNegInfDeg : int(c_.size()) - 1; }
    Element coeff(int i) const { return (i < 0 || i >= int(c_.size())) ? f_->zero() : f_->from_index(c_[i]); }
    Element lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == f_->one().v; }
    const std::vector<uint32_t>& raw() const { return c_; }

    Element eval(Element at) const;
    Poly monic() const;
    Poly scaled(Element s) const;
    Poly shifted(int e) const;  // multiply by x^e, e >= 0
    Poly derivative() const;

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// "c_d*x^d + ... + c_0"; extension-field coefficients with more than
    /// one w-term are parenthesized.
    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same(const Poly& o) const {
        if (f_ != o.f_) throw DomainError("polynomials over different fields");
    }

    const Field* f_;
    std::vector<uint32_t> c_;
};

/// quotient, remainder with deg r < deg b; b != 0
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// a / b, raising InvariantViolation if the division is not exact
Poly exact_div(const Poly& a, const Poly& b);
/// monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0
Poly gcd(const Poly& a, const Poly& b);
/// (g, u, v) with u*a + v*b = g = monic gcd(a, b)
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// base^e mod f (e fits in 64 bits)
Poly pow_mod(const Poly& base, uint64_t e, const Poly& f);

/// The ambient pair of quotient rings R = F[x]/(x^m - lambda) and
/// R* = F[x]/(x^m - lambda^{-1}).
struct RingCtx {
    const Field* field;
    int m;
    Element lambda;
    Element lambda_inv;

    static RingCtx make(const Field* f, int m, Element lambda);
    RingCtx dual() const { return {field, m, lambda_inv, lambda}; }

    Poly xm_minus_lambda() const;
    Poly xm_minus_lambda_inv() const;

    bool operator==(const RingCtx& o) const {
        return field == o.field && m == o.m && lambda == o.lambda;
    }
    bool operator!=(const RingCtx& o) const { return !(*this == o); }
};

enum class Side { R, Rstar };

/// Reduce modulo x^m - lambda (side R) or x^m - lambda^{-1} (side R*).
Poly reduce(const Poly& p, const RingCtx& ctx, Side side);

/// t*(x) = x^(deg t) t(1/x): the reversed coefficient vector. Defined for
/// nonzero t only. No monic renormalization, so t** = t can differ by a
/// unit when t(0) = 0.
Poly reciprocal(const Poly& t);

/// t°(x) = lambda x^m t(1/x) = lambda x^(m - deg t) t*(x), the adjoint of
/// multiplication by t between R and R*. Returned unreduced (degree <= m);
/// callers reduce in R* as needed. Requires deg t <= m; maps 0 to 0.
Poly circ(const Poly& t, const RingCtx& ctx);

/// coefficientwise conjugation (x -> x^(q^(l/2)) on each coefficient)
Poly conj_poly(const Poly& t, const Tower& tower);
/// reciprocal with conjugated coefficients
Poly conj_reciprocal(const Poly& t, const Tower& tower);

/// Monic irreducible factors with multiplicities, product exactly equal to
/// the (monic) input. Deterministic: equal-degree splitting draws from a
/// PRNG seeded with `seed`, and the result is sorted by degree, then by
/// coefficient encodings from the leading coefficient down.
std::vector<std::pair<Poly, int>> factorize(const Poly& f, uint64_t seed = 0xC0DE);
std::vector<std::pair<Poly, int>> factor_xm_minus_lambda(const RingCtx& ctx, uint64_t seed = 0xC0DE);

bool is_irreducible(const Poly& f);

}  // namespace qtw

#endif
