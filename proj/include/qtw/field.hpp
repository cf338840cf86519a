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

#ifndef QTW_FIELD_HPP
#define QTW_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qtw/errors.hpp"

namespace qtw {

class Field;

/// Element of a finite field, stored as an index into the field's tables.
/// The index encodes the polynomial-basis coefficient vector over GF(p)
/// in base p (digit i = coefficient of w^i), so elements of prime fields
/// are plain residues.
struct Element {
    const Field* field = nullptr;
    uint32_t v = 0;

    bool is_zero() const { return v == 0; }
    bool operator==(const Element& o) const { return field == o.field && v == o.v; }
    bool operator!=(const Element& o) const { return !(*this == o); }
};

/// Exact arithmetic in GF(p^k), p^k <= 2^16.
///
/// Fields are interned: Field::get returns a canonical immutable instance
/// per (p, k, modulus), safe to share across threads. Multiplication runs
/// on log/antilog tables keyed to the smallest generator; addition uses a
/// full table for small fields and digitwise base-p arithmetic otherwise.
class Field {
   public:
    /// Canonical instance for GF(p^k). The modulus (coefficients over
    /// GF(p), constant term first, length k+1, monic) may be omitted for
    /// k == 1, or to pick the default: the monic irreducible of degree k
    /// whose non-leading coefficient vector encodes to the smallest base-p
    /// integer. Element labels are tied to the modulus, so tools using
    /// Conway polynomials may label elements differently.
    static const Field* get(uint32_t p, uint32_t k, std::vector<uint32_t> modulus = {});

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t generator() const { return gen_; }

    Element zero() const { return {this, 0}; }
    Element one() const { return {this, one_}; }
    /// Element from an integer residue (embeds Z -> GF(p) -> GF(p^k)).
    Element from_int(int64_t n) const;
    /// Element from its encoding index in [0, q).
    Element from_index(uint32_t v) const {
        if (v >= q_) throw DomainError("element index out of range");
        return {this, v};
    }
    /// Polynomial-basis coefficients over GF(p), length k.
    std::vector<uint32_t> coeffs(Element a) const;
    Element from_coeffs(const std::vector<uint32_t>& c) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, uint64_t e) const;
    /// Multiplicative order; a must be nonzero.
    uint32_t order(Element a) const;

    /// x -> x^p, the absolute Frobenius.
    Element frobenius(Element a) const { return pow(a, p_); }

    /// True iff a is a non-square: a^((q-1)/2) == -1. Requires a != 0 and
    /// odd characteristic.
    bool is_nonsquare(Element a) const;

    /// Text form: integer for prime fields, w-sums like "w^2+2*w+1" for
    /// extensions.
    std::string to_string(Element a) const;
    /// Header form "GF(p^k; modulus=...)" / "GF(p)".
    std::string name() const;

    bool same_spec(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

   private:
    Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

    void check(Element a) const {
        if (a.field != this) throw DomainError("element does not belong to this field");
    }

    uint32_t p_, k_, q_;
    uint32_t one_;
    uint32_t gen_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;   // size 2(q-1); exp_[i] = gen^i
    std::vector<int32_t> log_;    // size q; log_[0] = -1
    std::vector<uint32_t> addt_;  // q*q add table when q <= 256, else empty
    std::vector<uint32_t> negt_;  // size q
};

inline Element operator+(Element a, Element b) { return a.field->add(a, b); }
inline Element operator-(Element a, Element b) { return a.field->sub(a, b); }
inline Element operator-(Element a) { return a.field->neg(a); }
inline Element operator*(Element a, Element b) { return a.field->mul(a, b); }
inline Element operator/(Element a, Element b) { return a.field->div(a, b); }

/// A pair GF(q) = base, GF(q^l) = top of the same characteristic, with the
/// base embedded into the top by mapping the base's generator to the
/// smallest root of the base modulus in the top field. Carries the relative
/// trace and the order-2 conjugation x -> x^(q^(l/2)) used by Hermitian
/// forms. Interned and immutable like Field.
class Tower {
   public:
    static const Tower* get(const Field* base, const Field* top);

    const Field* base() const { return base_; }
    const Field* top() const { return top_; }
    uint32_t l() const { return l_; }

    /// Injects a base element into the top field.
    Element embed(Element a) const;
    /// True iff a (in top) lies in the embedded base field.
    bool in_base(Element a) const;
    /// Preimage under embed; DomainError if a is not in the base image.
    Element to_base(Element a) const;

    /// Relative trace: sum of x^(q^i), i = 0..l-1, landed in the base.
    Element trace(Element x) const;
    /// x -> x^(q^r) with l = 2r; DomainError for odd l.
    Element conjugate(Element x) const;
    /// x -> x^(q^j) for any j >= 0.
    Element frobenius_power(Element x, uint32_t j) const;

   private:
    Tower(const Field* base, const Field* top);

    void check_top(Element a) const {
        if (a.field != top_) throw DomainError("element does not live in the tower's top field");
    }

    const Field* base_;
    const Field* top_;
    uint32_t l_;
    std::vector<uint32_t> embed_;    // base index -> top index
    std::vector<int32_t> unembed_;   // top index -> base index or -1
    std::vector<uint32_t> trace_;    // top index -> base index
    std::vector<uint32_t> conj_;     // top index -> top index (empty for odd l)
};

}  // namespace qtw

#endif
