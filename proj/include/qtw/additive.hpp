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

#ifndef QTW_ADDITIVE_HPP
#define QTW_ADDITIVE_HPP

#include "qtw/duality.hpp"
#include "qtw/linalg.hpp"
#include "qtw/qtcode.hpp"

namespace qtw {

/// Gram profiles of a basis {w_i} of GF(q^l)/GF(q) under the trace form
/// Tr(ab) or the twisted form Tr(a b^(q^r)):
///   SelfDual           Tr(w_i w_j) = delta_ij          (q even, or q and l odd)
///   AlmostSelfDual     Tr(w_i w_j) = diag(1,..,1,eps)  (q odd, l even; eps a non-square)
///   TraceHermitianOdd  Tr(w_i w_j^(q^r)) = diag(1,..,1,eps)  (q odd, l = 2r)
///   SymplecticPairs    Tr(w_i w_j^(q^r)) hyperbolic: pairs (i, r+i) pair to 1  (q even, l = 2r)
///   General            any basis, no Gram constraint
enum class BasisKind { SelfDual, AlmostSelfDual, TraceHermitianOdd, SymplecticPairs, General };

/// A basis of the top field over the base together with its Gram profile
/// and the change-of-coordinates data used by phi and its inverse.
class AmbientBasis {
   public:
    static AmbientBasis general(const Tower* tower, std::vector<Element> w);
    /// Explicit elements claimed to carry a specific Gram profile; the
    /// profile is verified entry by entry (DomainError on mismatch).
    static AmbientBasis with_kind(const Tower* tower, std::vector<Element> w, BasisKind kind);

    const Tower* tower() const { return tower_; }
    BasisKind kind() const { return kind_; }
    const std::vector<Element>& w() const { return w_; }
    /// The exceptional diagonal entry (base field); one() unless the kind
    /// has an eps slot.
    Element eps() const { return eps_; }

    /// Base-field coordinates of a top element in this basis.
    std::vector<Element> coordinates(Element top) const;
    /// Inverse of coordinates: sum w_i * embed(a_i).
    Element combine(const std::vector<Element>& coords) const;

   private:
    friend AmbientBasis find_basis(const Tower* tower, BasisKind kind);
    AmbientBasis(const Tower* tower, std::vector<Element> w, BasisKind kind, Element eps);

    const Tower* tower_;
    std::vector<Element> w_;
    BasisKind kind_;
    Element eps_;
    Rref solve_;  // RREF of [B | I] over GF(p) for coordinate extraction
};

/// Deterministic search for a basis with the requested Gram profile
/// (lexicographically smallest in element encoding). DomainError when the
/// (q parity, l parity) combination makes the kind infeasible.
AmbientBasis find_basis(const Tower* tower, BasisKind kind);

/// Tr(w1 * conj(w2)) for an index-2 basis; nonzero for every basis when q
/// is even.
Element basis_delta(const AmbientBasis& basis);

/// phi(c_1..c_l) = sum_i w_i c_i(x): the GF(q)-linear R-module bijection
/// of R^l with R_A = GF(q^l)[x]/(x^m - lambda).
Poly phi(const std::vector<Poly>& tuple, const AmbientBasis& basis);
std::vector<Poly> phi_inverse(const Poly& f, int l, const AmbientBasis& basis);

enum class TraceForm { TraceEuclidean, TraceHermitian, Symplectic };

/// Base-field pairing of reduced elements of R_A x R_A*:
///   TraceEuclidean  Tr(<a, b>_e)
///   TraceHermitian  Tr(<a, conj b>_e), l even
///   Symplectic      basis-dependent cross pairing of the phi coordinates
Element trace_inner_product(TraceForm kind, const Poly& a, const Poly& b, const AmbientBasis& basis);

/// An additive lambda-constacyclic code of length m over GF(q^l): an
/// R-submodule of R_A, stored with its quasi-twisted shadow (the
/// phi-preimage) which answers all structural queries. lambda lives in
/// the base field.
class AdditiveCode {
   public:
    static AdditiveCode from_qt(const QTCode& shadow, const AmbientBasis& basis);
    static AdditiveCode from_generators(const AmbientBasis& basis, Element lambda_base, int m,
                                        const std::vector<Poly>& gens);

    const AmbientBasis& basis() const { return basis_; }
    const QTCode& shadow() const { return shadow_; }
    const RingCtx& top_ctx() const { return ctx_top_; }
    Element lambda_base() const { return lambda_base_; }
    const std::vector<Poly>& generators() const { return gens_; }

    /// |C_A| = q^exponent over the base field q.
    std::pair<uint32_t, int> cardinality() const { return {basis_.tower()->base()->q(), shadow_.dimension()}; }
    bool contains(const Poly& word) const;
    bool equals(const AdditiveCode& o) const;

   private:
    AdditiveCode(AmbientBasis basis, RingCtx ctx_top, Element lambda_base, std::vector<Poly> gens,
                 QTCode shadow);

    AmbientBasis basis_;
    RingCtx ctx_top_;
    Element lambda_base_;
    std::vector<Poly> gens_;
    QTCode shadow_;
};

/// Dual under the trace form via the closed-form dual of the shadow
/// (index 2), with the eps^{-1} twist on the last component where the
/// basis kind requires it.
AdditiveCode trace_dual(const AdditiveCode& code, TraceForm kind);

/// Same dual through the brute-force shadow dual; no closed form needed,
/// any index. Coincides with trace_dual at l = 2.
AdditiveCode index_l_trace_dual(const AdditiveCode& code, TraceForm kind);

/// Independent oracle: enumerate all q^(l*m) elements of R_A* and keep
/// those pairing to zero with every codeword spanning element.
AdditiveCode exhaustive_trace_dual(const AdditiveCode& code, TraceForm kind,
                                   uint64_t budget = 1'000'000);

}  // namespace qtw

#endif
