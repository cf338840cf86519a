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

#ifndef QTW_IO_HPP
#define QTW_IO_HPP

#include <optional>
#include <string>

#include "qtw/additive.hpp"
#include "qtw/qtcode.hpp"

namespace qtw {

/// Parse "3*x^2 + (w+1)*x + 2" style polynomial text over the given
/// field. Accepts '^', explicit '*' and juxtaposition products, parentheses
/// and unary minus; 'w' is the polynomial-basis generator of an extension
/// field. Column positions in errors are 1-based; `line` tags messages
/// when the text comes from a larger document.
Poly parse_poly(const std::string& text, const Field* f, int line = 1);

/// Degree-0 restriction of parse_poly.
Element parse_element(const std::string& text, const Field* f, int line = 1);

/// GF(q) for a prime power q with an optional modulus string over GF(p).
const Field* field_from_q(uint64_t q, const std::string& modulus_text = "");

/// A parsed code description: either quasi-twisted or additive.
struct ParsedCode {
    std::optional<QTCode> qt;
    std::optional<AdditiveCode> additive;

    bool is_qt() const { return qt.has_value(); }
};

/// Key = value document with one "generator = c0 | c1 | ..." line per
/// generator tuple. Keys: kind (qt / additive), q, modulus, base_modulus,
/// m, lambda, l, basis (kind name or elements), basis_kind, generator.
/// Lines starting with '#' are comments; unknown keys are rejected.
ParsedCode parse_code_text(const std::string& text);
ParsedCode read_code_file(const std::string& path);

/// Round-trippable description (parse_code_text reconstructs an equal
/// code); derived facts ride along as comments.
std::string describe(const QTCode& code, const std::string& note = "");
std::string describe(const AdditiveCode& code, const std::string& note = "");

/// Basis kind names used by files and the CLI: self-dual,
/// almost-self-dual, trace-hermitian-orthogonal, symplectic-pairs, general.
std::string basis_kind_name(BasisKind kind);
BasisKind basis_kind_from_name(const std::string& name);

}  // namespace qtw

#endif
