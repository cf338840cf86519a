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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qtw/distance.hpp"
#include "qtw/io.hpp"
#include "qtw/kat.hpp"

using namespace qtw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot write to " + out_path);
    out << text;
}

const Tower* hermitian_tower(const Field* f) {
    if (f->k() % 2 != 0)
        throw DomainError("Hermitian operations need a field GF(q^2); " + f->name() +
                          " has odd degree over GF(p)");
    return Tower::get(Field::get(f->p(), f->k() / 2), f);
}

InnerProductKind kind_from_name(const std::string& name) {
    if (name == "euclidean") return InnerProductKind::Euclidean;
    if (name == "symplectic") return InnerProductKind::Symplectic;
    if (name == "hermitian") return InnerProductKind::Hermitian;
    throw DomainError("unknown inner product '" + name + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"exact constructions for quasi-twisted and additive constacyclic codes"};
    app.require_subcommand(1);

    uint64_t budget = 100'000'000;
    int threads = 0;
    uint64_t seed = 0xC0DE;
    app.add_option("--budget", budget, "enumeration budget in codewords")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "factor x^m - lambda over GF(q)");
    uint64_t fq = 0;
    int fm = 0;
    std::string flambda, fmodulus;
    factor_cmd->add_option("--q", fq, "field size")->required();
    factor_cmd->add_option("--m", fm, "block length")->required();
    factor_cmd->add_option("--lambda", flambda, "twist constant")->required();
    factor_cmd->add_option("--modulus", fmodulus, "field modulus in w over GF(p)");

    // info
    auto* info_cmd = app.add_subcommand("info", "describe a code file (round-trippable output)");
    std::string info_file;
    bool info_distance = false;
    info_cmd->add_option("file", info_file, "code description file")->required();
    info_cmd->add_flag("--distance", info_distance, "also compute the minimum distance");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "compute a dual code");
    std::string dual_file, dual_kind = "euclidean", dual_method = "closed", dual_out;
    dual_cmd->add_option("file", dual_file)->required();
    dual_cmd->add_option("--kind", dual_kind, "euclidean | symplectic | hermitian")
        ->check(CLI::IsMember({"euclidean", "symplectic", "hermitian"}));
    dual_cmd->add_option("--method", dual_method, "closed | brute")
        ->check(CLI::IsMember({"closed", "brute"}));
    dual_cmd->add_option("-o,--output", dual_out, "write the dual description here");

    // self-orth
    auto* so_cmd = app.add_subcommand("self-orth", "test self-orthogonality");
    std::string so_file, so_kind = "euclidean";
    so_cmd->add_option("file", so_file)->required();
    so_cmd->add_option("--kind", so_kind, "euclidean | symplectic | hermitian")
        ->check(CLI::IsMember({"euclidean", "symplectic", "hermitian"}));

    // css
    auto* css_cmd = app.add_subcommand("css", "CSS containment check / quantum parameters");
    std::string css_mode, css_c1, css_c2;
    css_cmd->add_option("mode", css_mode, "check | params")
        ->required()
        ->check(CLI::IsMember({"check", "params"}));
    css_cmd->add_option("c1", css_c1, "lambda-twisted code file")->required();
    css_cmd->add_option("c2", css_c2, "lambda^{-1}-twisted code file")->required();

    // convert
    auto* conv_cmd = app.add_subcommand("convert", "convert between qt and additive descriptions");
    std::string conv_file, conv_to, conv_basis = "self-dual", conv_elements, conv_out, conv_modulus;
    conv_cmd->add_option("file", conv_file)->required();
    conv_cmd->add_option("--to", conv_to, "additive | qt")
        ->required()
        ->check(CLI::IsMember({"additive", "qt"}));
    conv_cmd->add_option("--basis", conv_basis,
                         "basis kind to search (self-dual, almost-self-dual, "
                         "trace-hermitian-orthogonal, symplectic-pairs)");
    conv_cmd->add_option("--basis-elements", conv_elements, "explicit basis elements, '|' separated");
    conv_cmd->add_option("--modulus", conv_modulus, "modulus of the extension field in w");
    conv_cmd->add_option("-o,--output", conv_out);

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "exact minimum distance by enumeration");
    std::string dist_file, dist_metric = "hamming";
    dist_cmd->add_option("file", dist_file)->required();
    dist_cmd->add_option("--metric", dist_metric, "hamming | symplectic")
        ->check(CLI::IsMember({"hamming", "symplectic"}));

    // reproduce
    auto* rep_cmd = app.add_subcommand("reproduce", "re-derive the bundled reference results");
    std::string rep_target, rep_data;
    std::string target_help = "all";
    for (const std::string& t : kat::targets()) target_help += " | " + t;
    rep_cmd->add_option("target", rep_target, target_help)->required();
    rep_cmd->add_option("--data", rep_data, "external known-answers JSON");

    // list targets
    auto* targets_cmd = app.add_subcommand("targets", "list reproduction targets");

    CLI11_PARSE(app, argc, argv);

    if (*factor_cmd) {
        const Field* f = field_from_q(fq, fmodulus);
        RingCtx ctx = RingCtx::make(f, fm, parse_element(flambda, f));
        std::cout << "field=" << f->name() << "\n";
        std::cout << "modulus-polynomial=" << ctx.xm_minus_lambda().to_string() << "\n";
        for (const auto& [p, e] : factor_xm_minus_lambda(ctx, seed))
            std::cout << "factor=" << p.to_string() << " multiplicity=" << e << "\n";
        return kExitOk;
    }

    if (*info_cmd) {
        ParsedCode pc = read_code_file(info_file);
        if (pc.is_qt()) {
            std::cout << describe(*pc.qt);
            if (info_distance)
                std::cout << "# " << min_distance(*pc.qt, Metric::Hamming, budget, threads).to_line()
                          << "\n";
        } else {
            std::cout << describe(*pc.additive);
            if (info_distance)
                std::cout << "# " << min_distance(*pc.additive, budget, threads).to_line() << "\n";
        }
        return kExitOk;
    }

    if (*dual_cmd) {
        ParsedCode pc = read_code_file(dual_file);
        if (!pc.is_qt()) {
            // additive duals go through the trace forms
            TraceForm form = dual_kind == "euclidean"    ? TraceForm::TraceEuclidean
                             : dual_kind == "hermitian"  ? TraceForm::TraceHermitian
                                                         : TraceForm::Symplectic;
            AdditiveCode dual = trace_dual(*pc.additive, form);
            emit(describe(dual, "trace-" + dual_kind + " dual, provenance=closed-form"), dual_out);
            return kExitOk;
        }
        InnerProductKind kind = kind_from_name(dual_kind);
        const Tower* tower =
            kind == InnerProductKind::Hermitian ? hermitian_tower(pc.qt->ctx().field) : nullptr;
        DualResult d = dual_method == "brute"
                           ? brute_dual(*pc.qt, kind, tower)
                           : (kind == InnerProductKind::Euclidean   ? euclidean_dual2(*pc.qt)
                              : kind == InnerProductKind::Symplectic ? symplectic_dual2(*pc.qt)
                                                                     : hermitian_dual2(*pc.qt, *tower));
        std::string note = dual_kind + " dual, provenance=" +
                           (d.provenance == Provenance::ClosedForm ? "closed-form" : "brute-force");
        emit(describe(d.code, note), dual_out);
        return kExitOk;
    }

    if (*so_cmd) {
        ParsedCode pc = read_code_file(so_file);
        if (!pc.is_qt()) throw DomainError("self-orth applies to quasi-twisted code files");
        InnerProductKind kind = kind_from_name(so_kind);
        const Tower* tower =
            kind == InnerProductKind::Hermitian ? hermitian_tower(pc.qt->ctx().field) : nullptr;
        bool so = is_self_orthogonal(*pc.qt, kind, tower);
        std::cout << "kind=" << so_kind << ",self_orthogonal=" << (so ? "true" : "false") << "\n";
        return kExitOk;
    }

    if (*css_cmd) {
        ParsedCode p1 = read_code_file(css_c1);
        ParsedCode p2 = read_code_file(css_c2);
        if (!p1.is_qt() || !p2.is_qt()) throw DomainError("css expects quasi-twisted code files");
        bool contained = css_containment(*p1.qt, *p2.qt);
        std::cout << "containment=" << (contained ? "true" : "false") << "\n";
        if (css_mode == "params") {
            if (!contained) {
                std::cerr << "error: C1 is not contained in the Euclidean dual of C2\n";
                return kExitDomain;
            }
            CssParams p = css_parameters(*p1.qt, *p2.qt, budget);
            std::cout << "n=" << p.n << ",k=" << p.k << ",d=" << p.d
                      << ",codewords_scanned=" << p.scanned << "\n";
        }
        return kExitOk;
    }

    if (*conv_cmd) {
        ParsedCode pc = read_code_file(conv_file);
        if (conv_to == "qt") {
            if (pc.is_qt()) throw DomainError("input is already a quasi-twisted description");
            emit(describe(pc.additive->shadow(), "shadow of the additive code under phi^{-1}"),
                 conv_out);
            return kExitOk;
        }
        if (!pc.is_qt()) throw DomainError("input is already an additive description");
        const QTCode& qt = *pc.qt;
        const Field* base = qt.ctx().field;
        uint64_t qtop = 1;
        for (int i = 0; i < qt.index(); ++i) qtop *= base->q();
        const Field* top = field_from_q(qtop, conv_modulus);
        const Tower* tower = Tower::get(base, top);
        AmbientBasis basis = [&]() {
            if (!conv_elements.empty()) {
                std::vector<Element> w;
                std::string text = conv_elements;
                size_t start = 0;
                while (true) {
                    size_t bar = text.find('|', start);
                    std::string piece = text.substr(start, bar == std::string::npos
                                                               ? std::string::npos
                                                               : bar - start);
                    w.push_back(parse_element(piece, top));
                    if (bar == std::string::npos) break;
                    start = bar + 1;
                }
                return AmbientBasis::general(tower, std::move(w));
            }
            return find_basis(tower, basis_kind_from_name(conv_basis));
        }();
        AdditiveCode ca = AdditiveCode::from_qt(qt, basis);
        emit(describe(ca, "phi image of the quasi-twisted code"), conv_out);
        return kExitOk;
    }

    if (*dist_cmd) {
        ParsedCode pc = read_code_file(dist_file);
        DistanceReport rep =
            pc.is_qt() ? min_distance(*pc.qt,
                                      dist_metric == "symplectic" ? Metric::SymplecticBlock
                                                                  : Metric::Hamming,
                                      budget, threads)
                       : min_distance(*pc.additive, budget, threads);
        std::cout << rep.to_line() << "\n";
        return kExitOk;
    }

    if (*rep_cmd) {
        kat::Options opt;
        opt.budget = budget;
        opt.threads = threads;
        opt.seed = seed;
        opt.data_path = rep_data;
        kat::Report rep = kat::run(rep_target, opt);
        std::cout << "target=" << rep.target << "\n";
        for (const std::string& line : rep.lines) std::cout << line << "\n";
        std::cout << "result=" << (rep.ok ? "pass" : "fail") << "\n";
        return rep.ok ? kExitOk : kExitMismatch;
    }

    if (*targets_cmd) {
        std::cout << "all\n";
        for (const std::string& t : kat::targets()) std::cout << t << "\n";
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
