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

#include "qtw/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qtw {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Minimal polynomial arithmetic over GF(p) used only while constructing a
// field: coefficient vectors, index i = coefficient of x^i, trimmed.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

// a mod f, f monic
PPoly pmod(PPoly a, const PPoly& f, uint32_t p) {
    ptrim(a);
    while (a.size() >= f.size()) {
        uint32_t c = a.back();
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) % p * f[i]) % p;
        ptrim(a);
    }
    return a;
}

// exact divisibility test: does d divide f (both over GF(p), d monic)?
bool pdivides(const PPoly& d, const PPoly& f, uint32_t p) { return pmod(f, d, p).empty(); }

// Monic irreducible over GF(p): no monic divisor of degree 1..deg/2.
bool pirreducible(const PPoly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t enc = 0; enc < count; ++enc) {
            PPoly g(d + 1, 0);
            uint64_t e = enc;
            for (size_t i = 0; i < d; ++i) {
                g[i] = uint32_t(e % p);
                e /= p;
            }
            g[d] = 1;
            if (pdivides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t k) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
        PPoly f(k + 1, 0);
        uint64_t e = enc;
        for (uint32_t i = 0; i < k; ++i) {
            f[i] = uint32_t(e % p);
            e /= p;
        }
        f[k] = 1;
        if (pirreducible(f, p)) return f;
    }
    throw InvariantViolation("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) : p_(p), k_(k) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw DomainError("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > (1u << 16)) throw DomainError("field size exceeds 2^16");
    }
    q_ = uint32_t(q);

    if (k == 1) {
        if (!modulus.empty()) throw DomainError("prime fields take no modulus");
    } else {
        if (modulus.empty()) modulus = default_modulus(p, k);
        if (modulus.size() != k + 1 || modulus.back() != 1)
            throw DomainError("modulus must be monic of degree k");
        for (uint32_t c : modulus)
            if (c >= p) throw DomainError("modulus coefficients must be reduced mod p");
        if (!pirreducible(modulus, p)) throw DomainError("modulus is not irreducible over GF(p)");
    }
    modulus_ = std::move(modulus);
    one_ = 1;

    // slow digit arithmetic used to bootstrap the tables
    auto digits = [&](uint32_t v) {
        PPoly d(k_, 0);
        for (uint32_t i = 0; i < k_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    };
    auto encode = [&](const PPoly& d) {
        uint32_t v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return v;
    };
    auto slow_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        if (a == 0 || b == 0) return 0;
        if (k_ == 1) return uint32_t(uint64_t(a) * b % p_);
        PPoly r = pmulmod(digits(a), digits(b), p_);
        r = pmod(r, modulus_, p_);
        r.resize(k_, 0);
        return encode(r);
    };

    negt_.resize(q_);
    for (uint32_t v = 0; v < q_; ++v) {
        PPoly d = digits(v);
        for (auto& c : d) c = (p_ - c) % p_;
        negt_[v] = encode(d);
    }
    if (q_ <= 256) {
        addt_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a) {
            PPoly da = digits(a);
            for (uint32_t b = 0; b < q_; ++b) {
                PPoly d = digits(b);
                for (uint32_t i = 0; i < k_; ++i) d[i] = (d[i] + da[i]) % p_;
                addt_[size_t(a) * q_ + b] = encode(d);
            }
        }
    }

    // generator: smallest element of full multiplicative order
    gen_ = 0;
    for (uint32_t g = 1; g < q_; ++g) {
        uint32_t x = g;
        uint32_t ord = 1;
        while (x != one_) {
            x = slow_mul(x, g);
            ++ord;
        }
        if (ord == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0) throw InvariantViolation("multiplicative group has no generator");

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, -1);
    uint32_t x = one_;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = int32_t(i);
        x = slow_mul(x, gen_);
    }
    for (uint32_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
}

const Field* Field::get(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<Field>> registry;
    if (k > 1 && modulus.empty()) {
        if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
        modulus = default_modulus(p, k);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, k, modulus);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, k, modulus))).first;
    return it->second.get();
}

Element Field::from_int(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += p_;
    return {this, uint32_t(r)};
}

std::vector<uint32_t> Field::coeffs(Element a) const {
    check(a);
    std::vector<uint32_t> d(k_, 0);
    uint32_t v = a.v;
    for (uint32_t i = 0; i < k_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

Element Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) throw DomainError("too many coefficients for this field");
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw DomainError("coefficient not reduced mod p");
        v = v * p_ + c[i];
    }
    return {this, v};
}

Element Field::add(Element a, Element b) const {
    check(a);
    check(b);
    if (!addt_.empty()) return {this, addt_[size_t(a.v) * q_ + b.v]};
    uint32_t va = a.v, vb = b.v, out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        out += (va % p_ + vb % p_) % p_ * mult;
        va /= p_;
        vb /= p_;
        mult *= p_;
    }
    return {this, out};
}

Element Field::neg(Element a) const {
    check(a);
    return {this, negt_[a.v]};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a.v == 0 || b.v == 0) return zero();
    return {this, exp_[size_t(log_[a.v]) + size_t(log_[b.v])]};
}

Element Field::inv(Element a) const {
    check(a);
    if (a.v == 0) throw DomainError("division by zero in " + name());
    return {this, exp_[q_ - 1 - uint32_t(log_[a.v])]};
}

Element Field::pow(Element a, uint64_t e) const {
    check(a);
    if (a.v == 0) return e == 0 ? one() : zero();
    uint64_t le = uint64_t(log_[a.v]) * (e % (q_ - 1)) % (q_ - 1);
    return {this, exp_[le]};
}

uint32_t Field::order(Element a) const {
    check(a);
    if (a.v == 0) throw DomainError("zero has no multiplicative order");
    uint32_t n = q_ - 1;
    uint32_t l = uint32_t(log_[a.v]);
    // order of gen^l is n / gcd(n, l)
    uint32_t x = n, y = l;
    while (y) {
        uint32_t t = x % y;
        x = y;
        y = t;
    }
    return n / x;
}

bool Field::is_nonsquare(Element a) const {
    check(a);
    if (p_ == 2) throw DomainError("non-square classification needs odd characteristic");
    if (a.v == 0) throw DomainError("zero is neither square nor non-square");
    return (uint32_t(log_[a.v]) & 1u) != 0;
}

std::string Field::to_string(Element a) const {
    check(a);
    if (k_ == 1) return std::to_string(a.v);
    auto d = coeffs(a);
    std::string out;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string Field::name() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    std::string mod;
    for (size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!mod.empty()) mod += "+";
        if (i == 0) {
            mod += std::to_string(modulus_[i]);
        } else {
            if (modulus_[i] != 1) mod += std::to_string(modulus_[i]) + "*";
            mod += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + "; modulus=" + mod + ")";
}

Tower::Tower(const Field* base, const Field* top) : base_(base), top_(top) {
    if (base->p() != top->p()) throw DomainError("tower fields must share characteristic");
    if (top->k() % base->k() != 0 || top->k() == base->k())
        throw DomainError("top field degree must be a proper multiple of the base degree");
    l_ = top->k() / base->k();

    // root of the base modulus (or of x - x, i.e. identity for prime base)
    uint32_t root = 0;
    if (base->k() == 1) {
        root = 1;  // unused: prime base embeds as constants
    } else {
        bool found = false;
        for (uint32_t v = 0; v < top->q() && !found; ++v) {
            Element x = top->from_index(v);
            Element acc = top->zero();
            Element xp = top->one();
            for (size_t i = 0; i < base->modulus().size(); ++i) {
                acc = acc + top->from_int(int64_t(base->modulus()[i])) * xp;
                xp = xp * x;
            }
            if (acc.is_zero()) {
                root = v;
                found = true;
            }
        }
        if (!found) throw InvariantViolation("base modulus has no root in the top field");
    }

    embed_.resize(base->q());
    unembed_.assign(top->q(), -1);
    for (uint32_t v = 0; v < base->q(); ++v) {
        auto d = base->coeffs(base->from_index(v));
        Element acc = top->zero();
        Element rp = top->one();
        Element r = top->from_index(root);
        for (uint32_t i = 0; i < base->k(); ++i) {
            acc = acc + top->from_int(int64_t(d[i])) * rp;
            rp = rp * r;
        }
        embed_[v] = acc.v;
        unembed_[acc.v] = int32_t(v);
    }

    trace_.resize(top->q());
    uint64_t qb = base->q();
    for (uint32_t v = 0; v < top->q(); ++v) {
        Element x = top->from_index(v);
        Element acc = top->zero();
        Element term = x;
        for (uint32_t i = 0; i < l_; ++i) {
            acc = acc + term;
            term = top->pow(term, qb);
        }
        if (unembed_[acc.v] < 0) throw InvariantViolation("trace left the base field");
        trace_[v] = uint32_t(unembed_[acc.v]);
    }

    if (l_ % 2 == 0) {
        conj_.resize(top->q());
        uint64_t e = 1;
        for (uint32_t i = 0; i < l_ / 2; ++i) e *= qb;
        for (uint32_t v = 0; v < top->q(); ++v) conj_[v] = top->pow(top->from_index(v), e).v;
    }
}

const Tower* Tower::get(const Field* base, const Field* top) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Tower>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(base, top);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Tower>(new Tower(base, top))).first;
    return it->second.get();
}

Element Tower::embed(Element a) const {
    if (a.field != base_) throw DomainError("element does not live in the tower's base field");
    return {top_, embed_[a.v]};
}

bool Tower::in_base(Element a) const {
    check_top(a);
    return unembed_[a.v] >= 0;
}

Element Tower::to_base(Element a) const {
    check_top(a);
    if (unembed_[a.v] < 0) throw DomainError("element is not in the embedded base field");
    return {base_, uint32_t(unembed_[a.v])};
}

Element Tower::trace(Element x) const {
    check_top(x);
    return {base_, trace_[x.v]};
}

Element Tower::conjugate(Element x) const {
    check_top(x);
    if (conj_.empty()) throw DomainError("conjugation needs an even extension degree, have l=" + std::to_string(l_));
    return {top_, conj_[x.v]};
}

Element Tower::frobenius_power(Element x, uint32_t j) const {
    check_top(x);
    Element r = x;
    for (uint32_t i = 0; i < j; ++i) r = top_->pow(r, base_->q());
    return r;
}

}  // namespace qtw
