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

#include "lffc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lffc {

namespace {

using ZPoly = std::vector<Integer>;

// Exact division of integer polynomials, num = den * quotient. Used only for
// the cyclotomic recursion where divisibility is guaranteed.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    ZPoly quot(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd] / den[dd];
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Integer& r : num)
        if (r != 0) throw std::logic_error("cyclotomic: non-exact division");
    return quot;
}

struct CycloTable {
    unsigned m = 1;
    unsigned phi = 1;
    ZPoly modulus;                   // Phi_m
    std::vector<ZPoly> zeta_power;   // zeta^j on the power basis, j = 0..m-1
};

const CycloTable& cyclo_table(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, CycloTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CycloTable t;
    t.m = m;
    t.modulus = cyclotomic_polynomial(m);
    t.phi = static_cast<unsigned>(t.modulus.size()) - 1;
    // Successive powers of zeta, reducing with the monic modulus; x^m = 1 so
    // m rows cover every exponent that can appear.
    ZPoly cur(t.phi, 0);
    cur[0] = 1;
    for (unsigned j = 0; j < m; ++j) {
        t.zeta_power.push_back(cur);
        ZPoly next(t.phi, 0);
        Integer lead = (t.phi >= 1) ? cur[t.phi - 1] : Integer(0);
        for (unsigned i = 0; i + 1 < t.phi; ++i) next[i + 1] = cur[i];
        if (lead != 0)
            for (unsigned i = 0; i < t.phi; ++i) next[i] -= lead * t.modulus[i];
        cur = std::move(next);
    }
    return cache.emplace(m, std::move(t)).first->second;
}

using RPoly = std::vector<Rational>;  // dense, may carry trailing zeros

int rdeg(const RPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

// Remainder of a modulo the monic integer polynomial mod.
void rreduce(RPoly& a, const ZPoly& mod) {
    const int dm = static_cast<int>(mod.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= dm; --k) {
        if (a[k].is_zero()) continue;
        Rational c = a[k];
        a[k] = Rational(0);
        for (int j = 0; j < dm; ++j) a[k - dm + j] -= c * Rational(mod[j]);
    }
    a.resize(dm);
}

std::pair<RPoly, RPoly> rdivmod(const RPoly& a, const RPoly& b) {
    int db = rdeg(b);
    if (db < 0) throw std::domain_error("cyclotomic: polynomial division by zero");
    RPoly rem = a;
    int dr = rdeg(rem);
    RPoly quot(std::max(0, dr - db + 1));
    while (dr >= db) {
        Rational c = rem[dr] / b[db];
        quot[dr - db] = c;
        for (int j = 0; j <= db; ++j) rem[dr - db + j] -= c * b[j];
        dr = rdeg(rem);
    }
    return {quot, rem};
}

// Inverse of a modulo Phi_m via the extended Euclidean algorithm. Phi_m is
// irreducible over Q, so any nonzero a is invertible.
RPoly rinvert(const RPoly& a, const ZPoly& mod) {
    RPoly r0(mod.begin(), mod.end());
    RPoly r1 = a;
    RPoly s0{Rational(0)}, s1{Rational(1)};
    while (rdeg(r1) > 0) {
        auto [q, r] = rdivmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        // s_{k+1} = s_{k-1} - q * s_k
        RPoly qs(q.size() + s1.size());
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        RPoly s2(std::max(s0.size(), qs.size()));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (rdeg(r1) < 0) throw std::domain_error("cyclotomic: inverse of zero");
    Rational lead = r1[0];
    for (Rational& c : s1) c /= lead;
    rreduce(s1, mod);
    return s1;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, ZPoly> cache;
    if (m == 0) throw std::domain_error("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(mu);

    // Iterative worklist so Phi_d for divisors d is available first.
    std::vector<unsigned> todo{m};
    while (!todo.empty()) {
        unsigned n = todo.back();
        if (cache.count(n)) {
            todo.pop_back();
            continue;
        }
        if (n == 1) {
            cache[1] = ZPoly{Integer(-1), Integer(1)};
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            for (unsigned dd : {d, n / d})
                if (dd < n && !cache.count(dd)) {
                    todo.push_back(dd);
                    ready = false;
                }
        }
        if (!ready) continue;
        ZPoly num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        ZPoly acc{Integer(1)};
        for (unsigned d = 1; d < n; ++d) {
            if (n % d) continue;
            const ZPoly& phi_d = cache[d];
            ZPoly prod(acc.size() + phi_d.size() - 1);
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += acc[i] * phi_d[j];
            acc = std::move(prod);
        }
        cache[n] = divide_exact(std::move(num), acc);
        todo.pop_back();
    }
    return cache[m];
}

Cyclo Cyclo::root_of_unity(unsigned m, long e) {
    if (m == 0) throw std::domain_error("root_of_unity: m must be positive");
    const CycloTable& t = cyclo_table(m);
    long r = e % static_cast<long>(m);
    if (r < 0) r += m;
    Cyclo out;
    out.m_ = m;
    out.c_.assign(t.phi, Rational(0));
    for (unsigned i = 0; i < t.phi; ++i) out.c_[i] = Rational(t.zeta_power[r][i]);
    out.normalize();
    return out;
}

Cyclo Cyclo::from_coords(unsigned m, std::vector<Rational> coords) {
    if (coords.size() != euler_phi(m))
        throw std::invalid_argument("Cyclo: coords length must equal phi(m)");
    Cyclo out;
    out.m_ = m;
    out.c_ = std::move(coords);
    out.normalize();
    return out;
}

void Cyclo::normalize() {
    if (m_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return;
    Rational r = c_[0];
    m_ = 1;
    c_.assign(1, r);
}

bool Cyclo::is_zero() const {
    for (const Rational& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

const Rational& Cyclo::rational_value() const {
    if (m_ != 1) throw std::domain_error("Cyclo: not a rational value");
    return c_[0];
}

std::vector<Rational> Cyclo::lifted_coords(unsigned target) const {
    if (target % m_ != 0)
        throw std::invalid_argument("Cyclo: conductor does not divide target");
    if (target == m_) return c_;
    const CycloTable& t = cyclo_table(target);
    const unsigned step = target / m_;  // zeta_m = zeta_target^step
    std::vector<Rational> out(t.phi);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const ZPoly& row = t.zeta_power[(i * step) % target];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += c_[i] * Rational(row[j]);
    }
    return out;
}

Cyclo Cyclo::in_conductor(unsigned target) const {
    Cyclo out;
    out.m_ = target;
    out.c_ = lifted_coords(target);
    out.normalize();
    return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.m_, b.m_);
    Cyclo x;
    x.m_ = m;
    x.c_ = a.lifted_coords(m);
    auto yc = b.lifted_coords(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += yc[i];
    x.normalize();
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.m_, b.m_);
    Cyclo x;
    x.m_ = m;
    x.c_ = a.lifted_coords(m);
    auto yc = b.lifted_coords(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= yc[i];
    x.normalize();
    return x;
}

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (Rational& r : x.c_) r = -r;
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.m_, b.m_);
    if (m == 1) {
        Cyclo x = a;
        x.c_[0] *= b.c_[0];
        return x;
    }
    const CycloTable& t = cyclo_table(m);
    auto xc = a.lifted_coords(m), yc = b.lifted_coords(m);
    std::vector<Rational> conv(2 * t.phi - 1);
    for (size_t i = 0; i < xc.size(); ++i) {
        if (xc[i].is_zero()) continue;
        for (size_t j = 0; j < yc.size(); ++j) {
            if (yc[j].is_zero()) continue;
            conv[i + j] += xc[i] * yc[j];
        }
    }
    Cyclo out;
    out.m_ = m;
    out.c_.assign(t.phi, Rational(0));
    for (unsigned k = 0; k < t.phi; ++k) out.c_[k] = conv[k];
    for (unsigned k = t.phi; k < conv.size(); ++k) {
        if (conv[k].is_zero()) continue;
        const auto& row = t.zeta_power[k % m];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out.c_[j] += conv[k] * Rational(row[j]);
    }
    out.normalize();
    return out;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (m_ == 1) return Cyclo(c_[0].inverse());
    const CycloTable& t = cyclo_table(m_);
    RPoly inv = rinvert(c_, t.modulus);
    inv.resize(t.phi);
    Cyclo out;
    out.m_ = m_;
    out.c_ = std::move(inv);
    out.normalize();
    return out;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.m_, b.m_);
    return a.lifted_coords(m) == b.lifted_coords(m);
}

Cyclo Cyclo::conjugated() const {
    if (m_ == 1) return *this;
    const CycloTable& t = cyclo_table(m_);
    Cyclo out;
    out.m_ = m_;
    out.c_.assign(t.phi, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const ZPoly& row = t.zeta_power[(i * (m_ - 1)) % m_];
        for (unsigned j = 0; j < t.phi; ++j)
            if (row[j] != 0) out.c_[j] += c_[i] * Rational(row[j]);
    }
    out.normalize();
    return out;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> Cyclo::embed() const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> zeta = m_ == 1
        ? std::complex<double>(1.0, 0.0)
        : std::complex<double>(std::cos(two_pi / m_), std::sin(two_pi / m_));
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * zeta + c_[i].to_double();
    return acc;
}

std::string Cyclo::str() const {
    if (m_ == 1) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) os << "-", v = -v;
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        bool unit = (v == Rational(1));
        if (i == 0 || !unit) os << v.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

Cyclo apply_endo(FieldEndo c, const Cyclo& a) {
    return c == FieldEndo::identity ? a : a.conjugated();
}

}  // namespace lffc
