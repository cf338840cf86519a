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

#ifndef QTW_DISTANCE_HPP
#define QTW_DISTANCE_HPP

#include <string>

#include "qtw/additive.hpp"
#include "qtw/qtcode.hpp"

namespace qtw {

enum class Metric { Hamming, SymplecticBlock };

struct DistanceReport {
    int n = 0;
    int k = 0;
    int d = 0;
    Metric metric = Metric::Hamming;
    uint64_t codewords_scanned = 0;
    bool exhaustive = false;

    /// "n=..,k=..,d=..,metric=..,exhaustive=.."
    std::string to_line() const;
};

/// Exact minimum weight by enumerating all q^k - 1 nonzero messages of the
/// row-reduced generator matrix in reflected Gray order (one row-add per
/// codeword). SymplecticBlock counts nonzero l-coordinate blocks instead
/// of nonzero coordinates. Throws BudgetExceeded when q^k > budget and
/// DomainError for the zero code. threads = 0 picks the hardware count.
DistanceReport min_distance(const QTCode& code, Metric metric, uint64_t budget = 100'000'000,
                            int threads = 0);

/// Hamming distance of the additive code over GF(q^l): by the phi isometry
/// this is the symplectic block distance of the shadow. n is the length m,
/// k the base-q exponent of the cardinality.
DistanceReport min_distance(const AdditiveCode& code, uint64_t budget = 100'000'000, int threads = 0);

struct ProbeReport {
    int best_weight = -1;         // lightest codeword seen, -1 if none
    uint64_t codewords_scanned = 0;
    bool reached_target = false;  // found weight <= target
};

/// Non-exhaustive search for low-weight codewords, used when q^k is out of
/// enumeration range: sparse combinations of generator-matrix rows plus
/// seeded random information sets re-enumerated with sparse messages.
/// Stops early once a word of weight <= target is seen (target 0 never
/// stops early). Deterministic for a fixed seed.
ProbeReport low_weight_probe(const QTCode& code, Metric metric, int target, int max_combo_rows,
                             int info_set_rounds, uint64_t seed = 0xC0DE);

}  // namespace qtw

#endif
