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

#include "lffc/fqpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lffc {

FqPoly::FqPoly(FqField::Ptr f, std::vector<std::uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::constant(FqField::Ptr f, std::uint32_t c) {
    FqPoly p(std::move(f));
    if (c) p.c_ = {c};
    return p;
}

FqPoly FqPoly::variable(FqField::Ptr f) {
    FqPoly p(std::move(f));
    p.c_ = {0, 1};
    return p;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    const auto& F = a.f_ ? a.f_ : b.f_;
    FqPoly out(F);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = F->add(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    const auto& F = a.f_ ? a.f_ : b.f_;
    FqPoly out(F);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = F->sub(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

FqPoly FqPoly::operator-() const {
    FqPoly out(f_);
    out.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = f_->neg(c_[i]);
    return out;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    const auto& F = a.f_ ? a.f_ : b.f_;
    FqPoly out(F);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] = F->add(out.c_[i + j], F->mul(a.c_[i], b.c_[j]));
    }
    return out;
}

FqPoly FqPoly::scaled(std::uint32_t c) const {
    FqPoly out(f_);
    if (!c) return out;
    out.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = f_->mul(c_[i], c);
    out.trim();
    return out;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
    if (d.is_zero()) throw std::domain_error("FqPoly: division by zero polynomial");
    FqPoly rem = *this, quot(f_);
    int dd = d.degree();
    if (rem.degree() < dd) return {quot, rem};
    quot.c_.assign(rem.degree() - dd + 1, 0);
    std::uint32_t lead_inv = f_->inv(d.leading());
    for (int k = rem.degree(); k >= dd; --k) {
        std::uint32_t c = f_->mul(rem.coeff(k), lead_inv);
        if (c) {
            quot.c_[k - dd] = c;
            for (int j = 0; j <= dd; ++j)
                rem.c_[k - dd + j] = f_->sub(rem.c_[k - dd + j], f_->mul(c, d.c_[j]));
        }
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

bool FqPoly::divides(const FqPoly& other) const { return other.divmod(*this).second.is_zero(); }

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

FqPoly FqPoly::derivative() const {
    FqPoly out(f_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        std::uint32_t m = f_->from_int(static_cast<long long>(i));
        out.c_[i - 1] = f_->mul(c_[i], m);
    }
    out.trim();
    return out;
}

FqPoly FqPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(f_->inv(leading()));
}

FqPoly FqPoly::pow(unsigned e) const {
    FqPoly acc = FqPoly::constant(f_, 1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::uint32_t FqPoly::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

std::string FqPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool prime = f_->ext_degree() == 1;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = f_->elem_str(c_[i]);
        bool unit = (c_[i] == 1);
        bool needs_parens = !prime && cs.find('+') != std::string::npos;
        if (i == 0 || !unit) {
            if (needs_parens) os << "(" << cs << ")";
            else os << cs;
        }
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Tiny recursive-descent evaluator over F_q[t]. Supports + - * ^, integers,
// t, w, parentheses and implicit multiplication ("2t^2", "(w+1)t").
struct PolyParser {
    const FqField::Ptr& F;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool starts_primary() {
        skip();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'w' || c == '(';
    }

    FqPoly parse_expr() {
        skip();
        bool neg = false;
        if (peek_is('-')) {
            ++pos;
            neg = true;
        } else if (peek_is('+')) {
            ++pos;
        }
        FqPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (peek_is('+')) {
                ++pos;
                acc = acc + parse_term();
            } else if (peek_is('-')) {
                ++pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    FqPoly parse_term() {
        FqPoly acc = parse_factor();
        while (true) {
            skip();
            if (peek_is('*')) {
                ++pos;
                acc = acc * parse_factor();
            } else if (starts_primary()) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    FqPoly parse_factor() {
        FqPoly base = parse_primary();
        skip();
        if (peek_is('^')) {
            ++pos;
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("polynomial parse: exponent expected in '" + s + "'");
            unsigned e = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            return base.pow(e);
        }
        return base;
    }

    FqPoly parse_primary() {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("polynomial parse: unexpected end of '" + s + "'");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FqPoly inner = parse_expr();
            if (!peek_is(')')) throw std::invalid_argument("polynomial parse: missing ')' in '" + s + "'");
            ++pos;
            return inner;
        }
        if (c == 't') {
            ++pos;
            return FqPoly::variable(F);
        }
        if (c == 'w') {
            if (F->ext_degree() == 1)
                throw std::invalid_argument("polynomial parse: 'w' needs an extension field");
            ++pos;
            return FqPoly::constant(F, static_cast<std::uint32_t>(F->p()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long long v = std::stoll(s.substr(start, pos - start));
            return FqPoly::constant(F, F->from_int(v));
        }
        throw std::invalid_argument(std::string("polynomial parse: unexpected '") + c + "' in '" + s + "'");
    }
};

}  // namespace

FqPoly FqPoly::parse(const FqField::Ptr& f, const std::string& text) {
    PolyParser p{f, text};
    FqPoly out = p.parse_expr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("polynomial parse: trailing input in '" + text + "'");
    return out;
}

FqRatFunc FqRatFunc::of(FqPoly n) {
    FqRatFunc r;
    r.den = FqPoly::constant(n.field(), 1);
    r.num = std::move(n);
    return r;
}

FqRatFunc FqRatFunc::of(FqPoly n, FqPoly d) {
    if (d.is_zero()) throw std::domain_error("FqRatFunc: zero denominator");
    FqPoly g = FqPoly::gcd(n, d);
    if (g.degree() > 0) {
        n = n / g;
        d = d / g;
    }
    // normalize: monic denominator
    std::uint32_t lead = d.leading();
    if (lead != 1) {
        auto F = d.field();
        std::uint32_t li = F->inv(lead);
        n = n.scaled(li);
        d = d.scaled(li);
    }
    FqRatFunc r;
    r.num = std::move(n);
    r.den = std::move(d);
    return r;
}

FqRatFunc FqRatFunc::parse(const FqField::Ptr& f, const std::string& text) {
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0)
            return of(FqPoly::parse(f, text.substr(0, i)), FqPoly::parse(f, text.substr(i + 1)));
    }
    return of(FqPoly::parse(f, text));
}

FqRatFunc operator+(const FqRatFunc& a, const FqRatFunc& b) {
    return FqRatFunc::of(a.num * b.den + b.num * a.den, a.den * b.den);
}

FqRatFunc operator*(const FqRatFunc& a, const FqRatFunc& b) {
    return FqRatFunc::of(a.num * b.num, a.den * b.den);
}

std::string FqRatFunc::str() const {
    if (den.is_one()) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

Place Place::at_infinity(const FqField::Ptr& f) {
    Place v;
    v.infinite = true;
    v.generator = FqPoly(f);
    v.degree = 1;
    return v;
}

Place Place::finite(FqPoly gen) {
    Place v;
    v.degree = static_cast<unsigned>(gen.degree());
    v.generator = std::move(gen);
    return v;
}

std::string Place::str() const { return infinite ? "(1/t)" : "(" + generator.str() + ")"; }

bool is_irreducible(const FqPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const auto& F = f.field();
    FqPoly fm = f.monic();
    const std::uint64_t q = F->q();
    FqPoly t = FqPoly::variable(F);

    auto powmod = [&](FqPoly base, std::uint64_t e) {
        FqPoly acc = FqPoly::constant(F, 1);
        base = base % fm;
        while (e) {
            if (e & 1) acc = (acc * base) % fm;
            base = (base * base) % fm;
            e >>= 1;
        }
        return acc;
    };

    // frobenius iterates t^{q^e} mod f
    std::vector<FqPoly> frob(d + 1, FqPoly(F));
    frob[0] = t;
    for (int e = 1; e <= d; ++e) frob[e] = powmod(frob[e - 1], q);
    if (frob[d] != t) return false;
    for (std::uint64_t r = 2; r <= static_cast<std::uint64_t>(d); ++r) {
        if (d % r) continue;
        bool prime = true;
        for (std::uint64_t x = 2; x * x <= r; ++x)
            if (r % x == 0) prime = false;
        if (!prime) continue;
        if (FqPoly::gcd(frob[d / r] - t, fm).degree() != 0) return false;
    }
    return true;
}

std::vector<FqPoly> monic_irreducibles(const FqField::Ptr& f, unsigned d) {
    if (d == 0) throw std::invalid_argument("monic_irreducibles: degree must be positive");
    const std::uint64_t q = f->q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        total *= q;
        if (total > (1ull << 26)) throw std::invalid_argument("monic_irreducibles: enumeration too large");
    }
    std::vector<FqPoly> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> coeffs(d + 1);
        std::uint64_t r = idx;
        for (unsigned i = 0; i < d; ++i) {
            coeffs[i] = static_cast<std::uint32_t>(r % q);
            r /= q;
        }
        coeffs[d] = 1;
        FqPoly cand(f, std::move(coeffs));
        if (d > 1 && cand.coeff(0) == 0) continue;  // divisible by t
        if (is_irreducible(cand)) out.push_back(std::move(cand));
    }
    return out;
}

std::vector<Place> places_up_to(const FqField::Ptr& f, unsigned r, bool include_infinity) {
    std::vector<Place> out;
    if (include_infinity) out.push_back(Place::at_infinity(f));
    for (unsigned d = 1; d <= r; ++d)
        for (auto& g : monic_irreducibles(f, d)) out.push_back(Place::finite(std::move(g)));
    return out;
}

}  // namespace lffc
