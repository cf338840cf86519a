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

#ifndef QTW_QTCODE_HPP
#define QTW_QTCODE_HPP

#include <optional>
#include <vector>

#include "qtw/linalg.hpp"
#include "qtw/poly.hpp"

namespace qtw {

/// The unique generator triple of an index-2 code: generators
/// (g11, g12), (0, g22) with g11, g22 monic divisors of x^m - lambda,
/// deg g12 < deg g22, g11*g22 | (x^m - lambda)*g12, and g12 reduced mod
/// g22. Entries are polynomials of degree <= m; a zero component is
/// represented by x^m - lambda itself (so the full-zero code is
/// (x^m - lambda, 0, x^m - lambda)).
struct CanonicalTriple {
    Poly g11, g12, g22;
};

/// A lambda-quasi-twisted code of length l*m and index l: the R-submodule
/// of R^l spanned by the generator tuples, R = F_q[x]/(x^m - lambda).
///
/// Words of GF(q)^(l*m) interleave components coefficient-first:
/// coordinate j*l + i is coefficient j of component i, so multiplying
/// every component by x equals the lambda-shift by l positions.
///
/// Immutable after construction; the generator matrix, its RREF and (for
/// l = 2) the canonical triple are computed eagerly, so all queries are
/// const and thread-safe.
class QTCode {
   public:
    QTCode(const RingCtx& ctx, int l, std::vector<std::vector<Poly>> gens);

    static QTCode zero_code(const RingCtx& ctx, int l) { return QTCode(ctx, l, {}); }
    static QTCode full_code(const RingCtx& ctx, int l);
    static QTCode from_triple(const RingCtx& ctx, const Poly& g11, const Poly& g12, const Poly& g22);

    const RingCtx& ctx() const { return ctx_; }
    int index() const { return l_; }
    int length() const { return l_ * ctx_.m; }
    const std::vector<std::vector<Poly>>& generators() const { return gens_; }

    /// l == 2 only.
    const CanonicalTriple& canonical2() const;
    int dimension() const { return dim_; }

    /// Spanning rows x^j * gen, j = 0..m-1, interleaved (not reduced).
    const Mat& generator_matrix() const { return genmat_; }
    const Rref& row_space() const { return rref_; }

    bool contains(const std::vector<uint32_t>& word) const;
    bool contains(const std::vector<Poly>& tuple) const { return contains(interleave(tuple)); }
    /// Canonical-triple comparison for l == 2, mutual row-space
    /// containment otherwise; DomainError across different rings.
    bool equals(const QTCode& o) const;

    std::vector<uint32_t> interleave(const std::vector<Poly>& tuple) const;
    std::vector<Poly> deinterleave(const std::vector<uint32_t>& word) const;

   private:
    RingCtx ctx_;
    int l_;
    std::vector<std::vector<Poly>> gens_;
    Mat genmat_;
    Rref rref_;
    std::optional<CanonicalTriple> canon2_;
    int dim_ = 0;
};

struct OneGenResult {
    enum class Status { Yes, No, Unknown } status;
    std::vector<Poly> witness;  // a single generating tuple when status == Yes
};

/// Necessary condition g11*g22 = 0 in R, with the constructive converse
/// when gcd(m, q) = 1. Returns Unknown when the product vanishes but
/// gcd(m, q) != 1, where the converse can fail.
OneGenResult is_one_generator_sufficient(const QTCode& code);

/// Dimension m - deg gcd(g11, g12) of the one-generator code spanned by
/// (g11, g12); requires gcd(m, q) = 1 and g11 | x^m - lambda. Cross-checked
/// against the generator-matrix rank.
int one_generator_dimension(const Poly& g11, const Poly& g12, const RingCtx& ctx);

/// Search every codeword for a single tuple whose R-span is the whole
/// code. Feasible for q^dim up to ~10^6.
std::optional<std::vector<Poly>> exhaustive_one_generator_search(const QTCode& code);

}  // namespace qtw

#endif
