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

#include "lffc/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lffc {

namespace {
const Cyclo kZero;
}

Poly::Poly(const Cyclo& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Cyclo& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Cyclo> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Cyclo> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    std::vector<Cyclo> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Cyclo> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Cyclo& c) const {
    std::vector<Cyclo> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = *this;
    int dd = d.degree();
    if (rem.degree() < dd) return {Poly(), rem};
    std::vector<Cyclo> quot(rem.degree() - dd + 1);
    Cyclo lead_inv = d.c_.back().inverse();
    for (int k = rem.degree(); k >= dd; --k) {
        Cyclo c = rem.coeff(k) * lead_inv;
        if (!c.is_zero()) {
            quot[k - dd] = c;
            for (int j = 0; j <= dd; ++j) rem.c_[k - dd + j] -= c * d.c_[j];
        }
        rem.c_.pop_back();
        rem.trim();
        if (rem.degree() < dd) break;
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Cyclo> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Cyclo(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(c_.back().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

unsigned Poly::value_conductor() const {
    unsigned m = 1;
    for (const Cyclo& c : c_) m = std::lcm(m, c.conductor());
    return m;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (!first) {
            if (cs.size() && cs[0] == '-' && cs.find(' ') == std::string::npos) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool unit = (cs == "1");
        bool wrap = cs.find(' ') != std::string::npos || (i > 0 && cs.find('/') != std::string::npos);
        if (i == 0 || !unit) os << (wrap ? "(" + cs + ")" : cs);
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TruncSeries TruncSeries::one(int order) {
    TruncSeries s(order);
    s.c_[0] = Cyclo(1);
    return s;
}

TruncSeries TruncSeries::from_poly(const Poly& p, int order) {
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
    return s;
}

Poly TruncSeries::to_poly() const { return Poly(c_); }

TruncSeries TruncSeries::truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("TruncSeries: cannot extend by truncation");
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s.c_[i] = c_[i];
    return s;
}

TruncSeries trunc_mul(const TruncSeries& a, const TruncSeries& b, int order) {
    if (order > a.order() || order > b.order())
        throw std::invalid_argument("trunc_mul: order exceeds operand order");
    TruncSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

TruncSeries trunc_inv(const TruncSeries& a, int order) {
    if (order > a.order()) throw std::invalid_argument("trunc_inv: order exceeds operand order");
    if (a.coeff(0).is_zero()) throw std::domain_error("trunc_inv: constant term is zero");
    TruncSeries out(order);
    Cyclo a0_inv = a.coeff(0).inverse();
    out.coeff(0) = a0_inv;
    for (int k = 1; k <= order; ++k) {
        Cyclo acc;
        for (int j = 1; j <= k; ++j) {
            if (a.coeff(j).is_zero()) continue;
            acc += a.coeff(j) * out.coeff(k - j);
        }
        out.coeff(k) = -(acc * a0_inv);
    }
    return out;
}

}  // namespace lffc
