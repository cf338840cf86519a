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

#include "qtw/distance.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace qtw {

namespace {

// per-row step data: delta rows restricted to the row's support
struct RowSteps {
    std::vector<uint32_t> support;                 // column indices
    std::vector<std::vector<uint32_t>> up;         // up[t] = (e_{t+1}-e_t)*row on support
    std::vector<std::vector<uint32_t>> down;       // negation of up[t]
    std::vector<std::vector<uint32_t>> level;      // level[v] = e_v*row on support
};

struct Kernel {
    const Field* f;
    size_t n;
    int group;
    std::vector<RowSteps> rows;

    Kernel(const Field* f, const std::vector<std::vector<uint32_t>>& basis, size_t n, int group)
        : f(f), n(n), group(group) {
        uint32_t q = f->q();
        for (const auto& r : basis) {
            RowSteps rs;
            for (size_t j = 0; j < n; ++j)
                if (r[j] != 0) rs.support.push_back(uint32_t(j));
            rs.level.resize(q);
            for (uint32_t v = 0; v < q; ++v) {
                Element e = f->from_index(v);
                std::vector<uint32_t> lv;
                lv.reserve(rs.support.size());
                for (uint32_t j : rs.support) lv.push_back((e * f->from_index(r[j])).v);
                rs.level[v] = std::move(lv);
            }
            rs.up.resize(q - 1);
            rs.down.resize(q - 1);
            for (uint32_t t = 0; t + 1 < q; ++t) {
                Element delta = f->from_index(t + 1) - f->from_index(t);
                std::vector<uint32_t> du, dd;
                du.reserve(rs.support.size());
                dd.reserve(rs.support.size());
                for (uint32_t j : rs.support) {
                    Element d = delta * f->from_index(r[j]);
                    du.push_back(d.v);
                    dd.push_back(f->neg(d).v);
                }
                rs.up[t] = std::move(du);
                rs.down[t] = std::move(dd);
            }
            rows.push_back(std::move(rs));
        }
    }
};

// enumeration state for one partition job
struct Walker {
    const Kernel& ker;
    std::vector<uint32_t> word;
    std::vector<int> cnt;  // nonzero coordinates per group
    int wt = 0;

    explicit Walker(const Kernel& k) : ker(k), word(k.n, 0), cnt(k.n / size_t(k.group), 0) {}

    void apply(size_t row, const std::vector<uint32_t>& delta) {
        const RowSteps& rs = ker.rows[row];
        for (size_t idx = 0; idx < rs.support.size(); ++idx) {
            if (delta[idx] == 0) continue;
            uint32_t pos = rs.support[idx];
            uint32_t old = word[pos];
            uint32_t nw = ker.f->add(ker.f->from_index(old), ker.f->from_index(delta[idx])).v;
            word[pos] = nw;
            if ((old == 0) == (nw == 0)) continue;
            size_t g = pos / size_t(ker.group);
            if (nw != 0) {
                if (cnt[g]++ == 0) ++wt;
            } else {
                if (--cnt[g] == 0) --wt;
            }
        }
    }
};

struct JobResult {
    int best = -1;
    uint64_t scanned = 0;
};

// enumerate the partition with the top digits of the message fixed; rows
// [0, free) run through the full reflected Gray order
JobResult run_partition(const Kernel& ker, const std::vector<uint32_t>& fixed_digits, size_t free) {
    const Field* f = ker.f;
    uint32_t q = f->q();
    Walker w(ker);
    bool zero_msg = true;
    for (size_t i = 0; i < fixed_digits.size(); ++i) {
        if (fixed_digits[i] == 0) continue;
        zero_msg = false;
        w.apply(free + i, ker.rows[free + i].level[fixed_digits[i]]);
    }

    JobResult res;
    auto visit = [&]() {
        ++res.scanned;
        if (res.best < 0 || w.wt < res.best) res.best = w.wt;
    };

    if (!zero_msg) visit();
    if (free == 0) return res;

    std::vector<uint32_t> a(free, 0);
    std::vector<int> dir(free, 1);
    while (true) {
        size_t i = 0;
        while (i < free) {
            int na = int(a[i]) + dir[i];
            if (na >= 0 && na < int(q)) {
                const auto& delta = dir[i] > 0 ? ker.rows[i].up[a[i]] : ker.rows[i].down[size_t(na)];
                a[i] = uint32_t(na);
                w.apply(i, delta);
                break;
            }
            dir[i] = -dir[i];
            ++i;
        }
        if (i == free) break;
        visit();
    }
    return res;
}

JobResult enumerate_all(const Field* f, const std::vector<std::vector<uint32_t>>& basis, size_t n,
                        int group, int threads) {
    Kernel ker(f, basis, n, group);
    size_t k = basis.size();
    uint32_t q = f->q();
    if (threads <= 0) threads = int(std::max(1u, std::thread::hardware_concurrency()));

    // fix enough top digits to make at least ~4 jobs per thread
    size_t fixed = 0;
    uint64_t jobs = 1;
    while (fixed < k && jobs < uint64_t(4 * threads) && jobs * q <= 4096) {
        jobs *= q;
        ++fixed;
    }
    size_t free = k - fixed;

    std::vector<std::vector<uint32_t>> assignments;
    assignments.reserve(jobs);
    std::vector<uint32_t> digits(fixed, 0);
    while (true) {
        assignments.push_back(digits);
        size_t pos = 0;
        while (pos < fixed && digits[pos] + 1 == q) digits[pos++] = 0;
        if (pos == fixed) break;
        ++digits[pos];
    }

    std::atomic<size_t> next(0);
    std::vector<JobResult> results(assignments.size());
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= assignments.size()) return;
            results[idx] = run_partition(ker, assignments[idx], free);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    JobResult out;
    for (const auto& r : results) {
        out.scanned += r.scanned;
        if (r.best >= 0 && (out.best < 0 || r.best < out.best)) out.best = r.best;
    }
    return out;
}

void check_budget(const Field* f, int k, uint64_t budget, const char* what) {
    long double total = 1;
    for (int i = 0; i < k; ++i) total *= f->q();
    if (total > (long double)(budget))
        throw BudgetExceeded(std::string(what) +
                             ": enumeration budget exceeded, minimum distance not exhaustively verified "
                             "(need " +
                             std::to_string((double)total) + " codewords, budget " +
                             std::to_string(budget) + ")");
}

}  // namespace

std::string DistanceReport::to_line() const {
    std::string m = metric == Metric::Hamming ? "hamming" : "symplectic-block";
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) +
           ",metric=" + m + ",exhaustive=" + (exhaustive ? "true" : "false");
}

DistanceReport min_distance(const QTCode& code, Metric metric, uint64_t budget, int threads) {
    const Field* f = code.ctx().field;
    int k = code.dimension();
    if (k == 0) throw DomainError("the zero code has no nonzero codeword");
    if (metric == Metric::SymplecticBlock && code.index() < 1)
        throw DomainError("block metric needs a positive index");
    check_budget(f, k, budget, "min_distance");
    int group = metric == Metric::SymplecticBlock ? code.index() : 1;
    JobResult r = enumerate_all(f, code.row_space().mat.rows, size_t(code.length()), group, threads);
    DistanceReport rep;
    rep.n = code.length();
    rep.k = k;
    rep.d = r.best;
    rep.metric = metric;
    rep.codewords_scanned = r.scanned;
    rep.exhaustive = true;
    return rep;
}

DistanceReport min_distance(const AdditiveCode& code, uint64_t budget, int threads) {
    DistanceReport rep = min_distance(code.shadow(), Metric::SymplecticBlock, budget, threads);
    rep.n = code.top_ctx().m;
    rep.metric = Metric::Hamming;  // Hamming over GF(q^l) via the phi isometry
    return rep;
}

namespace {

struct SupportRow {
    std::vector<uint32_t> idx;
    std::vector<uint32_t> val;
};

std::vector<SupportRow> support_rows(const std::vector<std::vector<uint32_t>>& rows) {
    std::vector<SupportRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        SupportRow sr;
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) {
                sr.idx.push_back(uint32_t(j));
                sr.val.push_back(r[j]);
            }
        out.push_back(std::move(sr));
    }
    return out;
}

// probe state with incremental group-weight bookkeeping
struct ProbeCtx {
    const Field* f;
    int group;
    int target;
    std::vector<uint32_t> word;
    std::vector<int> cnt;
    int wt = 0;
    ProbeReport rep;

    ProbeCtx(const Field* f, size_t n, int group, int target)
        : f(f), group(group), target(target), word(n, 0), cnt(n / size_t(group), 0) {}

    void add(const SupportRow& row, Element c) {
        for (size_t t = 0; t < row.idx.size(); ++t) {
            uint32_t pos = row.idx[t];
            uint32_t old = word[pos];
            uint32_t nw = (f->from_index(old) + c * f->from_index(row.val[t])).v;
            word[pos] = nw;
            if ((old == 0) == (nw == 0)) continue;
            size_t g = pos / size_t(group);
            if (nw != 0) {
                if (cnt[g]++ == 0) ++wt;
            } else {
                if (--cnt[g] == 0) --wt;
            }
        }
    }

    bool note() {
        ++rep.codewords_scanned;
        if (wt == 0) return false;  // dependent rows can cancel to the zero word
        if (rep.best_weight < 0 || wt < rep.best_weight) rep.best_weight = wt;
        if (target > 0 && wt <= target) {
            rep.reached_target = true;
            return true;
        }
        return false;
    }
};

// depth-first sparse combinations of up to `depth` rows, each with every
// nonzero coefficient
bool sparse_combos(ProbeCtx& pc, const std::vector<SupportRow>& rows, size_t from, int depth) {
    const Field* f = pc.f;
    for (size_t i = from; i < rows.size(); ++i) {
        for (uint32_t cv = 1; cv < f->q(); ++cv) {
            Element c = f->from_index(cv);
            pc.add(rows[i], c);
            if (pc.note()) return true;
            if (depth > 1 && sparse_combos(pc, rows, i + 1, depth - 1)) return true;
            pc.add(rows[i], f->neg(c));
        }
    }
    return false;
}

}  // namespace

ProbeReport low_weight_probe(const QTCode& code, Metric metric, int target, int max_combo_rows,
                             int info_set_rounds, uint64_t seed) {
    const Field* f = code.ctx().field;
    int group = metric == Metric::SymplecticBlock ? code.index() : 1;
    size_t n = size_t(code.length());
    ProbeCtx pc(f, n, group, target);

    // arm 1: sparse combinations of generator shifts
    {
        auto rows = support_rows(code.generator_matrix().rows);
        if (sparse_combos(pc, rows, 0, std::min(max_combo_rows, 3))) return pc.rep;
    }

    // arm 2: random information sets, sparse messages over the re-reduced basis
    std::mt19937_64 rng(seed);
    const Mat& base = code.row_space().mat;
    for (int round = 0; round < info_set_rounds; ++round) {
        std::vector<uint32_t> perm(n);
        for (size_t i = 0; i < n; ++i) perm[i] = uint32_t(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        Mat shuffled(f, n);
        for (const auto& row : base.rows) {
            std::vector<uint32_t> r(n);
            for (size_t j = 0; j < n; ++j) r[j] = row[perm[j]];
            shuffled.append_row(std::move(r));
        }
        Rref rr = rref(shuffled);
        // un-permute back to code coordinates
        std::vector<std::vector<uint32_t>> rows;
        for (const auto& row : rr.mat.rows) {
            std::vector<uint32_t> r(n);
            for (size_t j = 0; j < n; ++j) r[perm[j]] = row[j];
            rows.push_back(std::move(r));
        }
        auto srows = support_rows(rows);
        if (sparse_combos(pc, srows, 0, max_combo_rows)) return pc.rep;
    }
    return pc.rep;
}

}  // namespace qtw
