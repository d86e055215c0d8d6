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

#ifndef LFFC_FQPOLY_HPP
#define LFFC_FQPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "lffc/fq.hpp"

namespace lffc {

/// Dense polynomial in F_q[t], coefficients low to high as packed field
/// indices, no trailing zeros (the zero polynomial has an empty vector).
class FqPoly {
  public:
    FqPoly() = default;
    explicit FqPoly(FqField::Ptr f) : f_(std::move(f)) {}
    FqPoly(FqField::Ptr f, std::vector<std::uint32_t> coeffs);

    static FqPoly constant(FqField::Ptr f, std::uint32_t c);
    static FqPoly variable(FqField::Ptr f);  // t

    const FqField::Ptr& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return leading() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator-() const;
    FqPoly scaled(std::uint32_t c) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
    FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
    FqPoly operator/(const FqPoly& d) const { return divmod(d).first; }
    bool divides(const FqPoly& other) const;

    static FqPoly gcd(FqPoly a, FqPoly b);
    FqPoly derivative() const;
    FqPoly monic() const;
    FqPoly pow(unsigned e) const;
    std::uint32_t eval(std::uint32_t x) const;

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return a.c_ != b.c_; }

    std::string str(const char* var = "t") const;

    /// Expression parser: integers, `t`, the field generator `w` (k > 1),
    /// `+ - * ^`, parentheses, implicit multiplication as in "2t^2".
    static FqPoly parse(const FqField::Ptr& f, const std::string& text);

  private:
    void trim();
    FqField::Ptr f_;
    std::vector<std::uint32_t> c_;
};

/// Numerator/denominator pair in F_q(t); denominator monic after reduction.
struct FqRatFunc {
    FqPoly num, den;
    static FqRatFunc parse(const FqField::Ptr& f, const std::string& text);
    static FqRatFunc of(FqPoly n);
    static FqRatFunc of(FqPoly n, FqPoly d);
    bool is_zero() const { return num.is_zero(); }
    std::string str() const;
};

FqRatFunc operator+(const FqRatFunc& a, const FqRatFunc& b);
FqRatFunc operator*(const FqRatFunc& a, const FqRatFunc& b);

/// A place of F_q(t): a monic irreducible generator, or the degree-one place
/// at infinity written 1/t.
struct Place {
    bool infinite = false;
    FqPoly generator;  // monic irreducible; zero polynomial when infinite
    unsigned degree = 1;

    static Place at_infinity(const FqField::Ptr& f);
    static Place finite(FqPoly gen);
    std::string str() const;
    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite == b.infinite && (a.infinite || a.generator == b.generator);
    }
};

/// Rabin irreducibility test (gcd with Frobenius powers) over any F_q.
bool is_irreducible(const FqPoly& f);

/// All monic irreducibles of degree exactly d, in enumeration order
/// (coefficient tuples read as base-q counters).
std::vector<FqPoly> monic_irreducibles(const FqField::Ptr& f, unsigned d);

/// Places of degree <= r: infinity first (when requested), then finite
/// places by (degree, enumeration order).
std::vector<Place> places_up_to(const FqField::Ptr& f, unsigned r, bool include_infinity);

}  // namespace lffc

#endif
