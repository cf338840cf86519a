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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtw/distance.hpp"
#include "test_util.hpp"

using namespace qtw;
using namespace qtw::testutil;

namespace {

// naive oracle: every codeword materialized from the row space
std::pair<int, int> naive_min(const QTCode& code, int group) {
    const Field* f = code.ctx().field;
    const Mat& b = code.row_space().mat;
    std::vector<uint32_t> msg(b.nrows(), 0);
    int best = -1;
    int count = 0;
    while (true) {
        size_t pos = 0;
        while (pos < msg.size() && msg[pos] + 1 == f->q()) msg[pos++] = 0;
        if (pos == msg.size()) break;
        ++msg[pos];
        std::vector<uint32_t> word(b.cols, 0);
        for (size_t i = 0; i < b.nrows(); ++i) {
            if (msg[i] == 0) continue;
            Element c = f->from_index(msg[i]);
            for (size_t j = 0; j < b.cols; ++j)
                word[j] = (f->from_index(word[j]) + c * f->from_index(b.rows[i][j])).v;
        }
        int wt = 0;
        for (size_t g = 0; g < word.size(); g += size_t(group)) {
            for (int i = 0; i < group; ++i)
                if (word[g + size_t(i)] != 0) {
                    ++wt;
                    break;
                }
        }
        if (best < 0 || wt < best) best = wt;
        ++count;
    }
    return {best, count};
}

}  // namespace

TEST_CASE("enumeration equals the naive double loop on random codes") {
    std::mt19937_64 rng(41);
    for (auto [q, lam] : {std::pair<uint32_t, int64_t>{2, 1}, {3, -1}, {5, 2}}) {
        const Field* f = Field::get(q, 1);
        for (int m = 3; m <= 6; ++m) {
            RingCtx ctx = RingCtx::make(f, m, f->from_int(lam));
            for (int trial = 0; trial < 6; ++trial) {
                QTCode c = random_code2(ctx, rng);
                if (c.dimension() == 0) continue;
                double words = std::pow(double(q), c.dimension());
                if (words > 1e5) continue;
                auto [want_h, count] = naive_min(c, 1);
                DistanceReport got = min_distance(c, Metric::Hamming);
                CHECK(got.d == want_h);
                CHECK(got.codewords_scanned == uint64_t(count));
                CHECK(got.exhaustive);
                auto [want_s, count_s] = naive_min(c, 2);
                DistanceReport got_s = min_distance(c, Metric::SymplecticBlock);
                CHECK(got_s.d == want_s);
                (void)count_s;
            }
        }
    }
}

TEST_CASE("single and multi threaded runs agree") {
    std::mt19937_64 rng(42);
    const Field* f3 = Field::get(3, 1);
    RingCtx ctx = RingCtx::make(f3, 8, f3->from_int(-1));
    for (int trial = 0; trial < 5; ++trial) {
        QTCode c = random_code2(ctx, rng);
        if (c.dimension() == 0) continue;
        DistanceReport one = min_distance(c, Metric::Hamming, 100'000'000, 1);
        DistanceReport four = min_distance(c, Metric::Hamming, 100'000'000, 4);
        CHECK(one.d == four.d);
        CHECK(one.codewords_scanned == four.codewords_scanned);
    }
}

TEST_CASE("trivial codes and guards") {
    const Field* f5 = Field::get(5, 1);
    RingCtx ctx = RingCtx::make(f5, 4, f5->from_int(2));
    CHECK_THROWS_AS(min_distance(QTCode::zero_code(ctx, 2), Metric::Hamming), DomainError);
    DistanceReport full = min_distance(QTCode::full_code(ctx, 2), Metric::Hamming);
    CHECK(full.d == 1);
    // budget guard fires before any work
    QTCode big = QTCode::full_code(RingCtx::make(f5, 11, f5->from_int(2)), 2);
    CHECK_THROWS_AS(min_distance(big, Metric::Hamming, 1000), BudgetExceeded);
}

TEST_CASE("the [22,11,8] code over GF(5) has distance 8 both ways") {
    const Field* f5 = Field::get(5, 1);
    RingCtx ctx = RingCtx::make(f5, 11, f5->from_int(2));
    Poly g11 = from_ints(f5, {2, 1});
    Poly g12 = from_ints(f5, {3, 1, 3, 2, 0, 4, 1});
    Poly g22 = from_ints(f5, {2, 1, 2, 1, 1, 1}) * from_ints(f5, {2, 3, 2, 1, 2, 1});
    QTCode c = QTCode::from_triple(ctx, g11, g12, g22);
    DistanceReport rep = min_distance(c, Metric::Hamming);
    CHECK(rep.n == 22);
    CHECK(rep.k == 11);
    CHECK(rep.d == 8);
    CHECK(rep.codewords_scanned == 48828124);  // 5^11 - 1
    CHECK(rep.to_line() == "n=22,k=11,d=8,metric=hamming,exhaustive=true");
}

TEST_CASE("monotonicity on nested codes") {
    std::mt19937_64 rng(43);
    const Field* f3 = Field::get(3, 1);
    RingCtx ctx = RingCtx::make(f3, 7, f3->from_int(2));
    for (int trial = 0; trial < 10; ++trial) {
        QTCode c = random_code2(ctx, rng);
        if (c.dimension() == 0 || c.generators().size() < 2) continue;
        QTCode sub(ctx, 2, {c.generators()[0]});
        if (sub.dimension() == 0 || sub.dimension() == c.dimension()) continue;
        DistanceReport dc = min_distance(c, Metric::Hamming);
        DistanceReport ds = min_distance(sub, Metric::Hamming);
        CHECK(dc.d <= ds.d);
    }
}

TEST_CASE("additive distance is the shadow block distance") {
    const Field* f2 = Field::get(2, 1);
    const Field* f4 = Field::get(2, 2, {1, 1, 1});
    AmbientBasis basis = find_basis(Tower::get(f2, f4), BasisKind::SelfDual);
    std::mt19937_64 rng(44);
    RingCtx ctx = RingCtx::make(f2, 6, f2->one());
    for (int trial = 0; trial < 5; ++trial) {
        QTCode shadow = random_code2(ctx, rng);
        if (shadow.dimension() == 0) continue;
        AdditiveCode ca = AdditiveCode::from_qt(shadow, basis);
        DistanceReport rep = min_distance(ca);
        CHECK(rep.n == 6);
        CHECK(rep.k == shadow.dimension());
        CHECK(rep.d == min_distance(shadow, Metric::SymplecticBlock).d);
    }
}

TEST_CASE("low-weight probe finds the true distance on enumerable codes") {
    std::mt19937_64 rng(45);
    const Field* f3 = Field::get(3, 1);
    RingCtx ctx = RingCtx::make(f3, 7, f3->from_int(2));
    for (int trial = 0; trial < 8; ++trial) {
        QTCode c = random_code2(ctx, rng);
        if (c.dimension() == 0) continue;
        int truth = min_distance(c, Metric::Hamming).d;
        ProbeReport probe = low_weight_probe(c, Metric::Hamming, truth, 3, 12, 99);
        CHECK(probe.reached_target);
        CHECK(probe.best_weight == truth);  // cannot be below the minimum
    }
}
