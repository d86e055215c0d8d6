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

#include "lffc/residue.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace lffc {

namespace {
constexpr std::uint64_t kSquaresTableLimit = 1ull << 24;
}

ResidueField::ResidueField(FqField::Ptr base, FqPoly modulus) : f_(std::move(base)), mod_(std::move(modulus)) {
    if (!mod_.is_monic() || mod_.degree() < 1)
        throw std::invalid_argument("ResidueField: modulus must be monic non-constant");
    if (!is_irreducible(mod_)) throw std::invalid_argument("ResidueField: modulus must be irreducible");
    d_ = static_cast<unsigned>(mod_.degree());
    size_ = 1;
    for (unsigned i = 0; i < d_; ++i) {
        size_ *= f_->q();
        if (size_ > (1ull << 40)) throw std::invalid_argument("ResidueField: field too large");
    }
    // reduction rows t^(d+j) mod P
    FqPoly t = FqPoly::variable(f_);
    FqPoly cur = t.pow(d_) % mod_;
    for (unsigned j = 0; j + 1 < d_; ++j) {
        std::vector<std::uint32_t> row(d_, 0);
        for (unsigned i = 0; i < d_; ++i) row[i] = cur.coeff(i);
        tpow_.push_back(std::move(row));
        cur = (cur * t) % mod_;
    }
}

std::uint64_t ResidueField::add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t q = f_->q();
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += static_cast<std::uint64_t>(f_->add(static_cast<std::uint32_t>(a % q), static_cast<std::uint32_t>(b % q))) * mult;
        a /= q;
        b /= q;
        mult *= q;
    }
    return out;
}

std::uint64_t ResidueField::neg(std::uint64_t a) const {
    const std::uint64_t q = f_->q();
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += static_cast<std::uint64_t>(f_->neg(static_cast<std::uint32_t>(a % q))) * mult;
        a /= q;
        mult *= q;
    }
    return out;
}

std::uint64_t ResidueField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t q = f_->q();
    std::uint32_t da[64], db[64], conv[128] = {0};
    for (unsigned i = 0; i < d_; ++i) {
        da[i] = static_cast<std::uint32_t>(a % q);
        a /= q;
        db[i] = static_cast<std::uint32_t>(b % q);
        b /= q;
    }
    for (unsigned i = 0; i < d_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < d_; ++j) {
            if (!db[j]) continue;
            conv[i + j] = f_->add(conv[i + j], f_->mul(da[i], db[j]));
        }
    }
    for (unsigned k = 2 * d_ - 2; k >= d_; --k) {
        std::uint32_t c = conv[k];
        if (c) {
            const auto& row = tpow_[k - d_];
            for (unsigned i = 0; i < d_; ++i)
                conv[i] = f_->add(conv[i], f_->mul(c, row[i]));
        }
        if (k == d_) break;
    }
    std::uint64_t out = 0;
    for (unsigned i = d_; i-- > 0;) out = out * q + conv[i];
    return out;
}

std::uint64_t ResidueField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t ResidueField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("ResidueField: inverse of zero");
    return pow(a, size_ - 2);
}

std::uint64_t ResidueField::reduce(const FqPoly& a) const {
    FqPoly r = a % mod_;
    const std::uint64_t q = f_->q();
    std::uint64_t out = 0;
    for (unsigned i = d_; i-- > 0;) out = out * q + r.coeff(i);
    return out;
}

FqPoly ResidueField::lift(std::uint64_t a) const {
    const std::uint64_t q = f_->q();
    std::vector<std::uint32_t> coeffs(d_);
    for (unsigned i = 0; i < d_; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(a % q);
        a /= q;
    }
    return FqPoly(f_, std::move(coeffs));
}

void ResidueField::ensure_squares() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!squares_.empty()) return;
    std::vector<bool> sq(size_, false);
    for (std::uint64_t y = 1; y < size_; ++y) sq[mul(y, y)] = true;
    squares_ = std::move(sq);
}

int ResidueField::quad_char(std::uint64_t a) const {
    if (f_->p() == 2) throw std::domain_error("quadratic character undefined in characteristic 2");
    if (a == 0) return 0;
    if (size_ <= kSquaresTableLimit) {
        if (squares_.empty()) ensure_squares();
        return squares_[a] ? +1 : -1;
    }
    return pow(a, (size_ - 1) / 2) == 1 ? +1 : -1;
}

std::uint64_t ResidueField::multiplicative_generator() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (generator_) return generator_;
    }
    auto factors = factor_u64(size_ - 1);
    std::uint64_t found = 0;
    for (std::uint64_t g = 2; g < size_; ++g) {
        bool ok = true;
        for (auto& [r, e] : factors) {
            (void)e;
            if (pow(g, (size_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            found = g;
            break;
        }
    }
    if (!found && size_ == 2) found = 1;
    if (!found) throw std::logic_error("ResidueField: no generator found");
    std::lock_guard<std::mutex> lock(mu_);
    generator_ = found;
    return generator_;
}

std::uint64_t ResidueField::elem_order(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("ResidueField: order of zero");
    std::uint64_t order = size_ - 1;
    for (auto& [r, e] : factor_u64(size_ - 1))
        for (unsigned i = 0; i < e; ++i)
            if (pow(a, order / r) == 1)
                order /= r;
            else
                break;
    return order;
}

std::uint64_t unit_discrete_log(const FqPoly& modulus, const FqPoly& base, const FqPoly& target) {
    ResidueField R(modulus.field(), modulus);
    std::uint64_t g = R.reduce(base), h = R.reduce(target);
    if (g == 0 || h == 0) throw std::invalid_argument("unit_discrete_log: arguments must be units");
    const std::uint64_t N = R.size() - 1;
    if (R.elem_order(g) != N)
        throw std::invalid_argument("unit_discrete_log: base does not generate the unit group");
    if (h == 1) return 0;
    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(N))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = R.mul(cur, g);
    }
    const std::uint64_t giant = R.inv(R.pow(g, m));
    cur = h;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * m + it->second) % N;
        cur = R.mul(cur, giant);
    }
    throw std::logic_error("unit_discrete_log: search exhausted");
}

}  // namespace lffc
