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

// End-to-end acceptance suite: every bundled reference result re-derived
// from scratch, one pass/fail line per criterion. The budget is raised to
// 2*10^8 codewords so the borderline 3^17 enumeration runs; everything
// beyond that is asserted k-only and flagged, never skipped silently.

#include <cstdio>
#include <string>
#include <vector>

#include "qtw/kat.hpp"

namespace {

struct Criterion {
    const char* name;
    std::vector<std::string> targets;
};

}  // namespace

int main(int argc, char** argv) {
    qtw::kat::Options opt;
    opt.budget = 200'000'000;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string key = argv[i];
        if (key == "--budget") opt.budget = std::stoull(argv[i + 1]);
        if (key == "--threads") opt.threads = std::stoi(argv[i + 1]);
    }

    const std::vector<Criterion> criteria = {
        {"1: Euclidean dual of the [22,11,8] code over GF(5), exact generators and both distances",
         {"example-4"}},
        {"2: symplectic dual of the same code, exact generators", {"example-5"}},
        {"3: Hermitian dual over GF(4), exact generators, dims 16/6, d(dual)=11", {"example-6"}},
        {"4: the three self-orthogonal constructions with exhaustive distances",
         {"selforth-euclidean", "selforth-symplectic", "selforth-hermitian"}},
        {"5: CSS pair over GF(4) yields [[10,2,4]]", {"quantum-css"}},
        {"6: the gcd(m,q)!=1 code is not one-generated (criterion + exhaustive search)",
         {"example-3"}},
        {"7: every tabulated code has the stated n and k; d verified within budget else flagged",
         {"table-1", "table-2", "table-3"}},
        {"8: closed-form duals equal brute force on 500 random codes; adjoint identity",
         {"oracle-equivalence"}},
        {"9: trace duals equal the exhaustive duals; delta nonzero; the (71, 2^106, 8) code",
         {"trace-duality", "example-9"}},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        bool ok = true;
        std::vector<std::string> details;
        for (const std::string& target : c.targets) {
            qtw::kat::Report rep = qtw::kat::run(target, opt);
            if (!rep.ok) {
                ok = false;
                for (const std::string& line : rep.lines)
                    if (line.find("ok=false") != std::string::npos ||
                        line.rfind("error=", 0) == 0)
                        details.push_back(target + ": " + line);
            }
        }
        std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", c.name);
        for (const std::string& d : details) std::printf("       %s\n", d.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
