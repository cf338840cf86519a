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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtw/distance.hpp"
#include "qtw/io.hpp"
#include "qtw/kat.hpp"

namespace py = pybind11;
using namespace qtw;

namespace {

InnerProductKind kind_from_name(const std::string& name) {
    if (name == "euclidean") return InnerProductKind::Euclidean;
    if (name == "symplectic") return InnerProductKind::Symplectic;
    if (name == "hermitian") return InnerProductKind::Hermitian;
    throw DomainError("unknown inner product '" + name + "'");
}

TraceForm trace_form_from_name(const std::string& name) {
    if (name == "trace-euclidean") return TraceForm::TraceEuclidean;
    if (name == "trace-hermitian") return TraceForm::TraceHermitian;
    if (name == "symplectic") return TraceForm::Symplectic;
    throw DomainError("unknown trace form '" + name + "'");
}

const Tower* hermitian_tower(const Field* f) {
    if (f->k() % 2 != 0)
        throw DomainError("Hermitian operations need a field GF(q^2); " + f->name() +
                          " has odd degree over GF(p)");
    return Tower::get(Field::get(f->p(), f->k() / 2), f);
}

struct PyDual;

struct PyCode {
    QTCode code;

    static PyCode parse(const std::string& text) {
        ParsedCode pc = parse_code_text(text);
        if (!pc.is_qt()) throw DomainError("expected a quasi-twisted description");
        return {*pc.qt};
    }

    static PyCode from_triple(uint64_t q, int m, const std::string& lambda, const std::string& g11,
                              const std::string& g12, const std::string& g22,
                              const std::string& modulus) {
        const Field* f = field_from_q(q, modulus);
        RingCtx ctx = RingCtx::make(f, m, parse_element(lambda, f));
        return {QTCode(ctx, 2,
                       {{parse_poly(g11, f), parse_poly(g12, f)},
                        {Poly::zero(f), parse_poly(g22, f)}})};
    }

    static PyCode from_generators(uint64_t q, int m, const std::string& lambda,
                                  const std::vector<std::vector<std::string>>& gens, int l,
                                  const std::string& modulus) {
        const Field* f = field_from_q(q, modulus);
        RingCtx ctx = RingCtx::make(f, m, parse_element(lambda, f));
        std::vector<std::vector<Poly>> parsed;
        for (const auto& g : gens) {
            std::vector<Poly> tuple;
            for (const auto& comp : g) tuple.push_back(parse_poly(comp, f));
            parsed.push_back(std::move(tuple));
        }
        return {QTCode(ctx, l, std::move(parsed))};
    }

    std::vector<std::string> canonical() const {
        const CanonicalTriple& t = code.canonical2();
        return {t.g11.to_string(), t.g12.to_string(), t.g22.to_string()};
    }

    std::string one_generator_status() const {
        OneGenResult r = is_one_generator_sufficient(code);
        switch (r.status) {
            case OneGenResult::Status::Yes: return "yes";
            case OneGenResult::Status::No: return "no";
            default: return "unknown";
        }
    }
};

struct PyDual {
    DualResult result;

    PyCode dual_code() const { return {result.code}; }
    std::vector<std::vector<std::string>> generators() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& g : result.theorem_gens) {
            std::vector<std::string> row;
            for (const auto& p : g) row.push_back(p.to_string());
            out.push_back(std::move(row));
        }
        return out;
    }
};

struct PyBasis {
    AmbientBasis basis;

    std::vector<std::string> elements() const {
        std::vector<std::string> out;
        for (Element e : basis.w()) out.push_back(basis.tower()->top()->to_string(e));
        return out;
    }
};

struct PyAdditive {
    AdditiveCode code;

    static PyAdditive parse(const std::string& text) {
        ParsedCode pc = parse_code_text(text);
        if (pc.is_qt()) throw DomainError("expected an additive description");
        return {*pc.additive};
    }
};

PyBasis make_basis(uint64_t q, int l, const std::string& kind_or_elements,
                   const std::string& modulus, const std::string& base_modulus) {
    const Field* base = field_from_q(q, base_modulus);
    uint64_t qtop = 1;
    for (int i = 0; i < l; ++i) qtop *= q;
    const Field* top = field_from_q(qtop, modulus);
    const Tower* tower = Tower::get(base, top);
    if (kind_or_elements.find('|') != std::string::npos) {
        std::vector<Element> w;
        size_t start = 0;
        const std::string& s = kind_or_elements;
        while (true) {
            size_t bar = s.find('|', start);
            w.push_back(parse_element(
                s.substr(start, bar == std::string::npos ? std::string::npos : bar - start), top));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        return {AmbientBasis::general(tower, std::move(w))};
    }
    return {find_basis(tower, basis_kind_from_name(kind_or_elements))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact constructions for quasi-twisted and additive constacyclic codes";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<InvariantViolation>(m, "InvariantViolation");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<ParseError>(m, "ParseFailure");

    py::class_<DistanceReport>(m, "DistanceReport")
        .def_readonly("n", &DistanceReport::n)
        .def_readonly("k", &DistanceReport::k)
        .def_readonly("d", &DistanceReport::d)
        .def_readonly("codewords_scanned", &DistanceReport::codewords_scanned)
        .def_readonly("exhaustive", &DistanceReport::exhaustive)
        .def("__str__", &DistanceReport::to_line)
        .def("__repr__", &DistanceReport::to_line);

    py::class_<PyDual>(m, "DualResult")
        .def_property_readonly("code", &PyDual::dual_code)
        .def_property_readonly("generators", &PyDual::generators)
        .def_property_readonly("provenance", [](const PyDual& d) {
            return d.result.provenance == Provenance::ClosedForm ? "closed-form" : "brute-force";
        });

    py::class_<PyBasis>(m, "Basis")
        .def_property_readonly("elements", &PyBasis::elements)
        .def_property_readonly("kind",
                               [](const PyBasis& b) { return basis_kind_name(b.basis.kind()); })
        .def_property_readonly("eps", [](const PyBasis& b) {
            return b.basis.tower()->base()->to_string(b.basis.eps());
        });

    py::class_<PyCode>(m, "Code")
        .def_static("parse", &PyCode::parse, py::arg("text"))
        .def_static("from_triple", &PyCode::from_triple, py::arg("q"), py::arg("m"),
                    py::arg("lambda_"), py::arg("g11"), py::arg("g12"), py::arg("g22"),
                    py::arg("modulus") = "")
        .def_static("from_generators", &PyCode::from_generators, py::arg("q"), py::arg("m"),
                    py::arg("lambda_"), py::arg("generators"), py::arg("l") = 2,
                    py::arg("modulus") = "")
        .def_property_readonly("n", [](const PyCode& c) { return c.code.length(); })
        .def_property_readonly("m", [](const PyCode& c) { return c.code.ctx().m; })
        .def_property_readonly("l", [](const PyCode& c) { return c.code.index(); })
        .def_property_readonly("q", [](const PyCode& c) { return c.code.ctx().field->q(); })
        .def_property_readonly("dimension", [](const PyCode& c) { return c.code.dimension(); })
        .def_property_readonly(
            "lambda_",
            [](const PyCode& c) { return c.code.ctx().field->to_string(c.code.ctx().lambda); })
        .def_property_readonly("canonical", &PyCode::canonical)
        .def("describe", [](const PyCode& c) { return describe(c.code); })
        .def("equals", [](const PyCode& a, const PyCode& b) { return a.code.equals(b.code); })
        .def(
            "dual",
            [](const PyCode& c, const std::string& kind, const std::string& method) {
                InnerProductKind k = kind_from_name(kind);
                const Tower* tower = k == InnerProductKind::Hermitian
                                         ? hermitian_tower(c.code.ctx().field)
                                         : nullptr;
                if (method == "brute") return PyDual{brute_dual(c.code, k, tower)};
                switch (k) {
                    case InnerProductKind::Euclidean: return PyDual{euclidean_dual2(c.code)};
                    case InnerProductKind::Symplectic: return PyDual{symplectic_dual2(c.code)};
                    default: return PyDual{hermitian_dual2(c.code, *tower)};
                }
            },
            py::arg("kind") = "euclidean", py::arg("method") = "closed")
        .def(
            "is_self_orthogonal",
            [](const PyCode& c, const std::string& kind) {
                InnerProductKind k = kind_from_name(kind);
                const Tower* tower = k == InnerProductKind::Hermitian
                                         ? hermitian_tower(c.code.ctx().field)
                                         : nullptr;
                return is_self_orthogonal(c.code, k, tower);
            },
            py::arg("kind") = "euclidean")
        .def("one_generator_status", &PyCode::one_generator_status)
        .def(
            "min_distance",
            [](const PyCode& c, const std::string& metric, uint64_t budget, int threads) {
                return min_distance(
                    c.code, metric == "symplectic" ? Metric::SymplecticBlock : Metric::Hamming,
                    budget, threads);
            },
            py::arg("metric") = "hamming", py::arg("budget") = 100'000'000, py::arg("threads") = 0)
        .def(
            "to_additive",
            [](const PyCode& c, const std::string& basis, const std::string& modulus) {
                PyBasis b = make_basis(c.code.ctx().field->q(), c.code.index(), basis, modulus, "");
                return PyAdditive{AdditiveCode::from_qt(c.code, b.basis)};
            },
            py::arg("basis") = "self-dual", py::arg("modulus") = "");

    py::class_<PyAdditive>(m, "AdditiveCode")
        .def_static("parse", &PyAdditive::parse, py::arg("text"))
        .def_property_readonly("m", [](const PyAdditive& c) { return c.code.top_ctx().m; })
        .def_property_readonly("cardinality", [](const PyAdditive& c) { return c.code.cardinality(); })
        .def_property_readonly("shadow", [](const PyAdditive& c) { return PyCode{c.code.shadow()}; })
        .def("describe", [](const PyAdditive& c) { return describe(c.code); })
        .def("equals",
             [](const PyAdditive& a, const PyAdditive& b) { return a.code.equals(b.code); })
        .def(
            "trace_dual",
            [](const PyAdditive& c, const std::string& kind) {
                return PyAdditive{trace_dual(c.code, trace_form_from_name(kind))};
            },
            py::arg("kind") = "trace-euclidean")
        .def(
            "min_distance",
            [](const PyAdditive& c, uint64_t budget, int threads) {
                return min_distance(c.code, budget, threads);
            },
            py::arg("budget") = 100'000'000, py::arg("threads") = 0);

    m.def(
        "factor",
        [](uint64_t q, int m, const std::string& lambda, const std::string& modulus, uint64_t seed) {
            const Field* f = field_from_q(q, modulus);
            RingCtx ctx = RingCtx::make(f, m, parse_element(lambda, f));
            std::vector<std::pair<std::string, int>> out;
            for (const auto& [p, e] : factor_xm_minus_lambda(ctx, seed))
                out.emplace_back(p.to_string(), e);
            return out;
        },
        py::arg("q"), py::arg("m"), py::arg("lambda_"), py::arg("modulus") = "",
        py::arg("seed") = 0xC0DE);

    m.def(
        "find_basis",
        [](uint64_t q, int l, const std::string& kind, const std::string& modulus,
           const std::string& base_modulus) { return make_basis(q, l, kind, modulus, base_modulus); },
        py::arg("q"), py::arg("l"), py::arg("kind"), py::arg("modulus") = "",
        py::arg("base_modulus") = "");

    m.def("css_check",
          [](const PyCode& c1, const PyCode& c2) { return css_containment(c1.code, c2.code); });
    m.def(
        "css_parameters",
        [](const PyCode& c1, const PyCode& c2, uint64_t budget) {
            CssParams p = css_parameters(c1.code, c2.code, budget);
            return std::make_tuple(p.n, p.k, p.d);
        },
        py::arg("c1"), py::arg("c2"), py::arg("budget") = 2'000'000);

    m.def("parse_code", [](const std::string& text) -> py::object {
        ParsedCode pc = parse_code_text(text);
        if (pc.is_qt()) return py::cast(PyCode{*pc.qt});
        return py::cast(PyAdditive{*pc.additive});
    });

    m.def("reproduce_targets", []() {
        std::vector<std::string> out = {"all"};
        for (const std::string& t : kat::targets()) out.push_back(t);
        return out;
    });
    m.def(
        "reproduce",
        [](const std::string& target, uint64_t budget, int threads, uint64_t seed,
           const std::string& data) {
            kat::Options opt;
            opt.budget = budget;
            opt.threads = threads;
            opt.seed = seed;
            opt.data_path = data;
            kat::Report rep = kat::run(target, opt);
            py::dict out;
            out["target"] = rep.target;
            out["ok"] = rep.ok;
            out["lines"] = rep.lines;
            return out;
        },
        py::arg("target"), py::arg("budget") = 100'000'000, py::arg("threads") = 0,
        py::arg("seed") = 0xC0DE, py::arg("data") = "");
}
