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

#ifndef QTW_DUALITY_HPP
#define QTW_DUALITY_HPP

#include "qtw/qtcode.hpp"

namespace qtw {

/// The pairings of R^l with (R*)^l: coefficientwise dot product, the
/// antisymmetric cross pairing of component pairs (i, r+i), and the dot
/// product with conjugated right side.
enum class InnerProductKind { Euclidean, Symplectic, Hermitian };

enum class Provenance { ClosedForm, BruteForce };

/// A computed dual: the code in its dual ring (lambda^{-1}, or lambda^{-q}
/// for Hermitian), plus the generator tuples in the shape the closed form
/// produces them (kept unreduced against each other for reporting).
struct DualResult {
    QTCode code;
    InnerProductKind kind;
    Provenance provenance;
    std::vector<std::vector<Poly>> theorem_gens;
};

/// Pairing of reduced tuples: u over the primal ring, v over the matching
/// dual ring. Hermitian needs the index-2 tower over the coefficient field.
Element inner_product(InnerProductKind kind, const std::vector<Poly>& u, const std::vector<Poly>& v,
                      const Tower* tower = nullptr);

/// Closed-form Euclidean dual of an index-2 code with canonical triple
/// (g11, g12, g22): generated by ((x^m-L)/g11*, 0) and (f21, (x^m-L)/g22*)
/// with L = lambda^{-1} and
/// f21 = -lambda x^(m + deg g11 - deg g12) (x^m-L) g12* / (g11* g22*),
/// reduced mod f11. Every division is checked exact.
DualResult euclidean_dual2(const QTCode& code);

/// Symplectic counterpart: generated by ((x^m-L)/g22*, f12) and
/// (0, (x^m-L)/g11*), f12 = lambda x^(m - deg g12 + deg g11) (x^m-L) g12*
/// / (g11* g22*) reduced mod f22.
DualResult symplectic_dual2(const QTCode& code);

/// Hermitian counterpart over GF(q^2) with conjugate reciprocals and
/// L = lambda^{-q}.
DualResult hermitian_dual2(const QTCode& code, const Tower& tower);

/// Dual of the one-generator code spanned by (g11, g12) with
/// g11 | x^m - lambda and gcd(m, q) = 1.
DualResult one_generator_dual(const Poly& g11, const Poly& g12, const RingCtx& ctx,
                              InnerProductKind kind, const Tower* tower = nullptr);

/// Independent oracle: nullspace of the generator matrix under the
/// pairing, reinterpreted in the dual ring. Guarded to l*m <= 64, q <= 9.
DualResult brute_dual(const QTCode& code, InnerProductKind kind, const Tower* tower = nullptr);

/// C contained in its own dual. Euclidean/symplectic require lambda = ±1,
/// Hermitian requires lambda^(q+1) = 1 (so the dual ring coincides with R).
/// The closed-form congruences are evaluated and cross-checked against
/// pairwise generator-shift orthogonality.
bool is_self_orthogonal(const QTCode& code, InnerProductKind kind, const Tower* tower = nullptr);

/// C1 (lambda-QT) contained in C2-perp (C2 over lambda^{-1}), via the
/// congruence conditions on the canonical triple of C1 and the mirrored
/// triple (f11, 0), (f21, f22) of C2; cross-checked at the matrix level.
bool css_containment(const QTCode& c1, const QTCode& c2);

struct CssParams {
    int n, k, d;
    uint64_t scanned;
};

/// Quantum parameters of the CSS pair: n = 2m, k = dim C2-perp - dim C1,
/// d = min Hamming weight over (C2-perp \ C1) and (C1-perp \ C2), by
/// exhaustive enumeration within the budget.
CssParams css_parameters(const QTCode& c1, const QTCode& c2, uint64_t budget = 2'000'000);

}  // namespace qtw

#endif
