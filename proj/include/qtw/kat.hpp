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

#ifndef QTW_KAT_HPP
#define QTW_KAT_HPP

#include <string>
#include <vector>

namespace qtw::kat {

/// Knobs for the reproduction runs. The default budget covers every
/// enumeration up to 10^8 codewords; distance claims beyond it are
/// reported as flagged, never silently asserted.
struct Options {
    uint64_t budget = 100'000'000;
    int threads = 0;
    uint64_t seed = 0xC0DE;
    std::string data_path;  // external known-answers JSON; embedded copy when empty
};

struct Report {
    std::string target;
    bool ok = true;
    std::vector<std::string> lines;

    void note(const std::string& text) { lines.push_back("note=" + text); }
    void check(const std::string& name, bool pass, const std::string& detail = "");
};

/// Reproduction target names, in execution order of `all`.
std::vector<std::string> targets();

/// Run one target (or "all"). Mismatches mark the report failed and are
/// detailed in its lines; they never throw.
Report run(const std::string& target, const Options& opt = {});

}  // namespace qtw::kat

#endif
