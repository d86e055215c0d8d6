/*
   Copyright 2026 the lffc authors

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

#include "lffc/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lffc {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1ull << 22;  // tables stay desk-sized

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over the prime field F_p, dense low-to-high, used only to
// bootstrap extension fields before the tables exist.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return out;
}

void pmod(PPoly& a, const PPoly& m, std::uint64_t p) {
    // m monic
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c) {
            for (size_t j = 0; j < m.size(); ++j) {
                std::uint64_t t = (static_cast<std::uint64_t>(m[j]) * c) % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() < m.size()) break;
    }
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
    PPoly acc{1};
    pmod(base, m, p);
    while (e) {
        if (e & 1) {
            acc = pmul(acc, base, p);
            pmod(acc, m, p);
        }
        base = pmul(base, base, p);
        pmod(base, m, p);
        e >>= 1;
    }
    return acc;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic for the reduction
        std::uint64_t lead = b.back(), inv = 1;
        // inverse mod p by Fermat
        std::uint64_t e = p - 2, base = lead;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        PPoly bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>(c * inv % p);
        pmod(a, bm, p);
        std::swap(a, b);
        ptrim(b);
    }
    return a;
}

// Rabin's criterion over F_p.
bool pirreducible(const PPoly& f, std::uint64_t p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    PPoly x{0, 1};
    std::vector<PPoly> frob(d + 1);  // frob[e] = t^{p^e} mod f
    frob[0] = x;
    for (int e = 1; e <= d; ++e) frob[e] = ppowmod(frob[e - 1], p, f, p);
    PPoly xd = frob[d];
    ptrim(xd);
    if (xd != x) return false;
    for (std::uint64_t r = 2; r <= static_cast<std::uint64_t>(d); ++r) {
        if (d % r || !is_prime_u64(r)) continue;
        PPoly g = frob[d / r];
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        ptrim(g);
        PPoly gc = pgcd(g, f, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) n /= d, ++e;
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

FqField::Ptr FqField::make(std::uint64_t p, unsigned k) {
    if (k == 0) throw std::invalid_argument("FqField: extension degree must be positive");
    if (!is_prime_u64(p)) throw std::invalid_argument("FqField: p is not prime");
    if (k == 1) return make(p, 1, {0, 1});
    // first monic irreducible of degree k in enumeration order
    std::uint64_t qk = 1;
    for (unsigned i = 0; i < k; ++i) {
        qk *= p;
        if (qk > kMaxFieldSize) throw std::invalid_argument("FqField: field too large");
    }
    for (std::uint64_t idx = 0; idx < qk; ++idx) {
        PPoly f(k + 1);
        std::uint64_t r = idx;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        f[k] = 1;
        if (pirreducible(f, p)) return make(p, k, std::vector<std::uint32_t>(f.begin(), f.end()));
    }
    throw std::logic_error("FqField: no irreducible modulus found");
}

FqField::Ptr FqField::make(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FqField: p is not prime");
    std::shared_ptr<FqField> f(new FqField());
    f->p_ = p;
    f->k_ = k;
    f->q_ = 1;
    for (unsigned i = 0; i < k; ++i) {
        f->q_ *= p;
        if (f->q_ > kMaxFieldSize) throw std::invalid_argument("FqField: field too large");
    }
    if (k > 1) {
        if (modulus.size() != k + 1 || modulus.back() != 1)
            throw std::invalid_argument("FqField: modulus must be monic of degree k");
        for (auto& c : modulus) c %= static_cast<std::uint32_t>(p);
        if (!pirreducible(modulus, p)) throw std::invalid_argument("FqField: modulus is not irreducible");
    } else {
        modulus = {0, 1};
    }
    f->modulus_ = std::move(modulus);
    f->unit_order_factors_ = factor_u64(f->q_ - 1);
    f->init_tables();
    return f;
}

std::uint32_t FqField::mul_poly(std::uint32_t a, std::uint32_t b) const {
    // digit convolution mod the modulus; only used to bootstrap tables
    std::vector<std::uint64_t> da(k_), db(k_), conv(2 * k_ - 1, 0);
    std::uint64_t ra = a, rb = b;
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = ra % p_;
        ra /= p_;
        db[i] = rb % p_;
        rb /= p_;
    }
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
    for (int d = static_cast<int>(2 * k_ - 2); d >= static_cast<int>(k_); --d) {
        std::uint64_t c = conv[d];
        if (!c) continue;
        conv[d] = 0;
        for (unsigned j = 0; j < k_; ++j)
            conv[d - k_ + j] = (conv[d - k_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    std::uint64_t out = 0;
    for (unsigned i = k_; i-- > 0;) out = out * p_ + conv[i];
    return static_cast<std::uint32_t>(out);
}

void FqField::init_tables() {
    // find a multiplicative generator
    auto order_ok = [&](std::uint32_t g) {
        for (auto& [r, e] : unit_order_factors_) {
            (void)e;
            std::uint32_t t = 1;
            std::uint64_t exp = (q_ - 1) / r;
            std::uint32_t base = g;
            while (exp) {
                if (exp & 1) t = (k_ == 1) ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) * base % p_) : mul_poly(t, base);
                base = (k_ == 1) ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(base) * base % p_) : mul_poly(base, base);
                exp >>= 1;
            }
            if (t == 1) return false;
        }
        return true;
    };
    generator_ = 0;
    for (std::uint32_t g = (k_ == 1 ? 2u : static_cast<std::uint32_t>(p_)); g < q_; ++g) {
        if (g == 0 || g == 1) continue;
        if (order_ok(g)) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0 && q_ == 2) generator_ = 1;
    if (generator_ == 0 && q_ == 3) generator_ = 2;
    if (generator_ == 0) throw std::logic_error("FqField: no generator found");
    if (k_ > 1) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        std::uint32_t cur = 1;
        for (std::uint64_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_poly(cur, generator_);
        }
        if (cur != 1) throw std::logic_error("FqField: generator order mismatch");
    }
}

std::uint32_t FqField::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint64_t out = 0, mult = 1, ra = a, rb = b;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = ra % p_ + rb % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        ra /= p_;
        rb /= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FqField::neg(std::uint32_t a) const {
    if (k_ == 1) return a ? static_cast<std::uint32_t>(p_ - a) : 0;
    std::uint64_t out = 0, mult = 1, ra = a;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = ra % p_;
        out += (d ? p_ - d : 0) * mult;
        mult *= p_;
        ra /= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FqField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FqField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint32_t FqField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    if (k_ == 1) return pow(a, p_ - 2);
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FqField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t FqField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r);
}

std::uint64_t FqField::elem_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FqField: order of zero");
    std::uint64_t order = q_ - 1;
    for (auto& [r, e] : unit_order_factors_)
        for (unsigned i = 0; i < e; ++i)
            if (pow(a, order / r) == 1)
                order /= r;
            else
                break;
    return order;
}

int FqField::quad_char(std::uint32_t a) const {
    if (p_ == 2) throw std::domain_error("quadratic character undefined in characteristic 2");
    if (a == 0) return 0;
    if (k_ > 1) return (log_[a] & 1) ? -1 : +1;
    return pow(a, (q_ - 1) / 2) == 1 ? +1 : -1;
}

std::vector<std::uint32_t> FqField::digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    std::uint64_t r = a;
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = static_cast<std::uint32_t>(r % p_);
        r /= p_;
    }
    return d;
}

std::string FqField::elem_str(std::uint32_t a) const {
    if (k_ == 1 || a < p_) return std::to_string(a);
    auto d = digits(a);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = k_; i-- > 0;) {
        if (!d[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || d[i] != 1) os << d[i];
        if (i >= 1) {
            if (d[i] != 1) os << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace lffc
