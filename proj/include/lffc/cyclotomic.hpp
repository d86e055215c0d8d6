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

#ifndef LFFC_CYCLOTOMIC_HPP
#define LFFC_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "lffc/rational.hpp"

namespace lffc {

unsigned euler_phi(unsigned m);

/// m-th cyclotomic polynomial, monic with integer coefficients, low to high.
/// Computed once per m by exact division of x^m - 1 and cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

/// The two field endomorphisms of Q(zeta_m) the functional equation needs.
enum class FieldEndo { identity, complex_conjugation };

/// Exact element of the cyclotomic field Q(zeta_m), stored as coordinates on
/// the power basis 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic
/// polynomial. Conductor 1 is plain Q; arithmetic between different
/// conductors coerces both sides into Q(zeta_lcm). Values whose higher
/// coordinates all vanish are demoted back to conductor 1, so rationals
/// always compare and print as rationals.
class Cyclo {
  public:
    Cyclo() : m_(1), c_(1) {}
    Cyclo(long n) : m_(1), c_{Rational(n)} {}
    Cyclo(const Rational& r) : m_(1), c_{r} {}

    /// zeta_m^e, reduced to the power basis.
    static Cyclo root_of_unity(unsigned m, long e = 1);
    /// coords must have length phi(m).
    static Cyclo from_coords(unsigned m, std::vector<Rational> coords);

    unsigned conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return m_ == 1 && c_[0] == Rational(1); }
    bool is_rational() const { return m_ == 1; }
    const Rational& rational_value() const;

    /// Rewrites the element in Q(zeta_target); conductor() must divide target.
    Cyclo in_conductor(unsigned target) const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// Image under complex conjugation, zeta_m -> zeta_m^{m-1}.
    Cyclo conjugated() const;

    Cyclo inverse() const;
    Cyclo pow(long e) const;

    /// Numeric value at zeta_m = exp(2*pi*i/m), standard double precision.
    std::complex<double> embed() const;

    /// Human-readable form, e.g. "9*z8^3 - 9*z8^2 - 9*z8".
    std::string str() const;

  private:
    unsigned m_;
    std::vector<Rational> c_;
    void normalize();
    // Coordinates on the power basis of Q(zeta_target), length phi(target),
    // without the rational demotion applied by in_conductor.
    std::vector<Rational> lifted_coords(unsigned target) const;
};

Cyclo apply_endo(FieldEndo c, const Cyclo& a);
inline std::complex<double> complex_embed(const Cyclo& a) { return a.embed(); }

}  // namespace lffc

#endif
