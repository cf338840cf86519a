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

#include "qtw/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace qtw {

namespace {

// ---- polynomial expression parser ----

struct Token {
    enum class Kind { Int, X, W, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    int64_t value = 0;
    int col = 1;
};

class Lexer {
   public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

   private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.col = int(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus; ++pos_; return;
            case '-': tok_.kind = Token::Kind::Minus; ++pos_; return;
            case '*': tok_.kind = Token::Kind::Star; ++pos_; return;
            case '^': tok_.kind = Token::Kind::Caret; ++pos_; return;
            case '(': tok_.kind = Token::Kind::LParen; ++pos_; return;
            case ')': tok_.kind = Token::Kind::RParen; ++pos_; return;
            case 'x': tok_.kind = Token::Kind::X; ++pos_; return;
            case 'w': tok_.kind = Token::Kind::W; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int64_t v = 0;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > (int64_t(1) << 40)) fail("integer literal too large", int(start) + 1);
                ++pos_;
            }
            tok_.kind = Token::Kind::Int;
            tok_.value = v;
            return;
        }
        fail(std::string("unexpected character '") + c + "'", tok_.col);
    }

    const std::string& text_;
    int line_;
    size_t pos_ = 0;
    Token tok_;
};

constexpr int kMaxDegree = 1 << 20;

class PolyParser {
   public:
    PolyParser(const std::string& text, const Field* f, int line) : lex_(text, line), f_(f) {}

    Poly run() {
        Poly p = expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input", lex_.peek().col);
        return p;
    }

   private:
    static bool starts_atom(Token::Kind k) {
        return k == Token::Kind::Int || k == Token::Kind::X || k == Token::Kind::W ||
               k == Token::Kind::LParen;
    }

    Poly expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Plus) lex_.take();
        else if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Token::Kind::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (starts_atom(k)) {
                acc = acc * factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Int) lex_.fail("exponent must be an integer", caret.col);
            if (e.value < 0 || e.value > kMaxDegree) lex_.fail("exponent out of range", e.col);
            if (base.degree() * std::max<int64_t>(e.value, 1) > kMaxDegree)
                lex_.fail("resulting degree too large", e.col);
            Poly acc = Poly::one(f_);
            for (int64_t i = 0; i < e.value; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Int:
                return Poly::constant(f_->from_int(t.value));
            case Token::Kind::X:
                return Poly::x(f_);
            case Token::Kind::W:
                if (f_->k() < 2) lex_.fail("'w' needs an extension field", t.col);
                return Poly::constant(f_->from_coeffs({0, 1}));
            case Token::Kind::LParen: {
                Poly inner = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) lex_.fail("expected ')'", close.col);
                return inner;
            }
            default:
                lex_.fail("expected a value", t.col);
        }
    }

    Lexer lex_;
    const Field* f_;
};

// ---- key = value document ----

struct Document {
    // key -> list of (line, value), preserving order for repeated keys
    std::map<std::string, std::vector<std::pair<int, std::string>>> entries;

    const std::string& one(const std::string& key, int& line) const {
        auto it = entries.find(key);
        if (it == entries.end()) throw ParseError("missing required key '" + key + "'", 1, 1);
        if (it->second.size() > 1)
            throw ParseError("key '" + key + "' given more than once", it->second[1].first, 1);
        line = it->second[0].first;
        return it->second[0].second;
    }
    std::optional<std::string> maybe(const std::string& key, int& line) const {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        line = it->second[0].first;
        return it->second[0].second;
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Document split_document(const std::string& text) {
    static const std::map<std::string, int> known = {
        {"kind", 0},  {"q", 0},     {"modulus", 0}, {"base_modulus", 0}, {"m", 0},
        {"lambda", 0}, {"l", 0},    {"basis", 0},   {"basis_kind", 0},   {"generator", 0}};
    Document doc;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, 1);
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (!known.count(key)) throw ParseError("unknown key '" + key + "'", line, 1);
        if (value.empty()) throw ParseError("empty value for '" + key + "'", line, int(eq) + 2);
        doc.entries[key].emplace_back(line, value);
    }
    return doc;
}

uint64_t parse_uint(const std::string& s, int line) {
    try {
        size_t used = 0;
        uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an unsigned integer, got '" + s + "'", line, 1);
    }
}

std::vector<std::string> split_components(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t bar = s.find('|', start);
        if (bar == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, bar - start)));
        start = bar + 1;
    }
}

std::vector<uint32_t> modulus_from_text(std::string text, uint32_t p, int line) {
    // the modulus is a polynomial in w over GF(p); reuse the parser with
    // w as the indeterminate
    for (auto& c : text)
        if (c == 'w') c = 'x';
    Poly m = parse_poly(text, Field::get(p, 1), line);
    return m.raw();
}

}  // namespace

Poly parse_poly(const std::string& text, const Field* f, int line) {
    return PolyParser(text, f, line).run();
}

Element parse_element(const std::string& text, const Field* f, int line) {
    Poly p = parse_poly(text, f, line);
    if (p.degree() > 0) throw ParseError("expected a field element, got a polynomial in x", line, 1);
    return p.coeff(0);
}

const Field* field_from_q(uint64_t q, const std::string& modulus_text) {
    if (q < 2) throw DomainError("field size must be at least 2");
    uint32_t p = 0;
    for (uint32_t d = 2; uint64_t(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = uint32_t(q);
    uint32_t k = 0;
    uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw DomainError(std::to_string(q) + " is not a prime power");
        t /= p;
        ++k;
    }
    std::vector<uint32_t> modulus;
    if (!modulus_text.empty()) modulus = modulus_from_text(modulus_text, p, 1);
    return Field::get(p, k, modulus);
}

ParsedCode parse_code_text(const std::string& text) {
    Document doc = split_document(text);
    int ln = 1;
    std::string kind = doc.maybe("kind", ln).value_or("qt");
    uint64_t q = parse_uint(doc.one("q", ln), ln);
    int m = int(parse_uint(doc.one("m", ln), ln));

    if (kind == "qt") {
        std::string modulus = doc.maybe("modulus", ln).value_or("");
        const Field* f = field_from_q(q, modulus);
        Element lambda = parse_element(doc.one("lambda", ln), f, ln);
        int l = int(parse_uint(doc.maybe("l", ln).value_or("2"), ln));
        RingCtx ctx = RingCtx::make(f, m, lambda);
        std::vector<std::vector<Poly>> gens;
        auto it = doc.entries.find("generator");
        if (it != doc.entries.end()) {
            for (const auto& [line, value] : it->second) {
                std::vector<Poly> tuple;
                for (const std::string& comp : split_components(value))
                    tuple.push_back(parse_poly(comp, f, line));
                if (int(tuple.size()) != l)
                    throw ParseError("generator needs " + std::to_string(l) + " components", line, 1);
                gens.push_back(std::move(tuple));
            }
        }
        ParsedCode out;
        out.qt.emplace(ctx, l, std::move(gens));
        return out;
    }
    if (kind == "additive") {
        int l = int(parse_uint(doc.one("l", ln), ln));
        std::string base_modulus = doc.maybe("base_modulus", ln).value_or("");
        const Field* base = field_from_q(q, base_modulus);
        std::string modulus = doc.maybe("modulus", ln).value_or("");
        uint64_t qtop = 1;
        for (int i = 0; i < l; ++i) qtop *= q;
        const Field* top = field_from_q(qtop, modulus);
        const Tower* tower = Tower::get(base, top);
        Element lambda = parse_element(doc.one("lambda", ln), base, ln);

        int bline = 1;
        std::string basis_text = doc.one("basis", bline);
        std::optional<std::string> kind_text = doc.maybe("basis_kind", ln);
        AmbientBasis basis = [&]() {
            if (basis_text.find('|') == std::string::npos && !std::isdigit((unsigned char)basis_text[0]) &&
                basis_text != "w") {
                if (kind_text) throw ParseError("basis_kind only applies to explicit elements", ln, 1);
                return find_basis(tower, basis_kind_from_name(basis_text));
            }
            std::vector<Element> w;
            for (const std::string& comp : split_components(basis_text))
                w.push_back(parse_element(comp, top, bline));
            BasisKind bk = kind_text ? basis_kind_from_name(*kind_text) : BasisKind::General;
            return AmbientBasis::with_kind(tower, std::move(w), bk);
        }();

        std::vector<Poly> gens;
        auto it = doc.entries.find("generator");
        if (it != doc.entries.end())
            for (const auto& [line, value] : it->second) gens.push_back(parse_poly(value, top, line));
        ParsedCode out;
        out.additive.emplace(AdditiveCode::from_generators(basis, lambda, m, gens));
        return out;
    }
    throw ParseError("kind must be 'qt' or 'additive'", ln, 1);
}

ParsedCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open code file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code_text(buf.str());
}

namespace {

std::string modulus_line(const Field* f, const std::string& key) {
    if (f->k() < 2) return "";
    Poly m(Field::get(f->p(), 1), f->modulus());
    std::string s = m.to_string();
    // modulus uses 'w' as the variable
    for (auto& c : s)
        if (c == 'x') c = 'w';
    return key + " = " + s + "\n";
}

}  // namespace

std::string describe(const QTCode& code, const std::string& note) {
    const RingCtx& ctx = code.ctx();
    const Field* f = ctx.field;
    std::ostringstream out;
    if (!note.empty()) out << "# " << note << "\n";
    out << "kind = qt\n";
    out << "q = " << f->q() << "\n";
    out << modulus_line(f, "modulus");
    out << "m = " << ctx.m << "\n";
    out << "lambda = " << f->to_string(ctx.lambda) << "\n";
    out << "l = " << code.index() << "\n";
    for (const auto& g : code.generators()) {
        out << "generator = ";
        for (size_t i = 0; i < g.size(); ++i) out << (i ? " | " : "") << g[i].to_string();
        out << "\n";
    }
    out << "# field: " << f->name() << "\n";
    out << "# dimension = " << code.dimension() << "\n";
    if (code.index() == 2) {
        const CanonicalTriple& t = code.canonical2();
        out << "# canonical g11 = " << t.g11.to_string() << "\n";
        out << "# canonical g12 = " << t.g12.to_string() << "\n";
        out << "# canonical g22 = " << t.g22.to_string() << "\n";
    }
    return out.str();
}

std::string describe(const AdditiveCode& code, const std::string& note) {
    const Tower* t = code.basis().tower();
    std::ostringstream out;
    if (!note.empty()) out << "# " << note << "\n";
    out << "kind = additive\n";
    out << "q = " << t->base()->q() << "\n";
    out << modulus_line(t->base(), "base_modulus");
    out << "l = " << t->l() << "\n";
    out << modulus_line(t->top(), "modulus");
    out << "m = " << code.top_ctx().m << "\n";
    out << "lambda = " << t->base()->to_string(code.lambda_base()) << "\n";
    out << "basis = ";
    for (size_t i = 0; i < code.basis().w().size(); ++i)
        out << (i ? " | " : "") << t->top()->to_string(code.basis().w()[i]);
    out << "\n";
    if (code.basis().kind() != BasisKind::General)
        out << "basis_kind = " << basis_kind_name(code.basis().kind()) << "\n";
    for (const auto& g : code.generators()) out << "generator = " << g.to_string() << "\n";
    auto [q, k] = code.cardinality();
    out << "# cardinality = " << q << "^" << k << "\n";
    return out.str();
}

std::string basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::SelfDual: return "self-dual";
        case BasisKind::AlmostSelfDual: return "almost-self-dual";
        case BasisKind::TraceHermitianOdd: return "trace-hermitian-orthogonal";
        case BasisKind::SymplecticPairs: return "symplectic-pairs";
        case BasisKind::General: return "general";
    }
    throw DomainError("unknown basis kind");
}

BasisKind basis_kind_from_name(const std::string& name) {
    if (name == "self-dual") return BasisKind::SelfDual;
    if (name == "almost-self-dual") return BasisKind::AlmostSelfDual;
    if (name == "trace-hermitian-orthogonal") return BasisKind::TraceHermitianOdd;
    if (name == "symplectic-pairs") return BasisKind::SymplecticPairs;
    if (name == "general") return BasisKind::General;
    throw DomainError("unknown basis kind '" + name +
                      "' (expected self-dual, almost-self-dual, trace-hermitian-orthogonal, "
                      "symplectic-pairs or general)");
}

}  // namespace qtw
