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

#ifndef LFFC_SERIES_HPP
#define LFFC_SERIES_HPP

#include <string>
#include <vector>

#include "lffc/cyclotomic.hpp"

namespace lffc {

/// Exact dense polynomial in T over cyclotomic coefficients. Numerators,
/// denominators and Euler factors all live here; truncated working state
/// lives in TruncSeries.
class Poly {
  public:
    Poly() = default;
    Poly(const Cyclo& c);
    explicit Poly(std::vector<Cyclo> coeffs);
    static Poly one() { return Poly(Cyclo(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Cyclo& coeff(int i) const;
    const std::vector<Cyclo>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Cyclo& c) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly derivative() const;
    Poly monic() const;
    static Poly gcd(Poly a, Poly b);

    /// Smallest m with every coefficient in Q(zeta_m).
    unsigned value_conductor() const;

    std::string str(const char* var = "T") const;

  private:
    void trim();
    std::vector<Cyclo> c_;  // low to high, no trailing zeros; empty = 0
};

/// Polynomial truncated at a fixed order: the object [P(T)]_i that the
/// product algorithms manipulate. Coefficients for degrees 0..order are all
/// stored, including zeros.
class TruncSeries {
  public:
    explicit TruncSeries(int order) : c_(order + 1) {}
    static TruncSeries one(int order);
    static TruncSeries from_poly(const Poly& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Cyclo& coeff(int i) const { return c_[i]; }
    Cyclo& coeff(int i) { return c_[i]; }
    const std::vector<Cyclo>& coeffs() const { return c_; }

    Poly to_poly() const;
    TruncSeries truncated(int order) const;
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  private:
    std::vector<Cyclo> c_;
};

/// Coefficientwise-exact product truncated at `order`; requires
/// order <= min(a.order, b.order).
TruncSeries trunc_mul(const TruncSeries& a, const TruncSeries& b, int order);

/// Multiplicative inverse truncated at `order`; the constant term must be
/// nonzero.
TruncSeries trunc_inv(const TruncSeries& a, int order);

}  // namespace lffc

#endif
