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

#include <cmath>
#include <random>

#include "doctest.h"
#include "lffc/cyclotomic.hpp"

using namespace lffc;

namespace {

// Independent oracle: Phi_m as the Moebius product of (x^{m/d} - 1)^{mu(d)},
// evaluated by exact multiplication and division of integer polynomials.
int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<Integer> xn_minus_1(unsigned n) {
    std::vector<Integer> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

std::vector<Integer> zmul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Integer> zdiv_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<Integer> q(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd] / den[dd];
        q[k] = c;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (auto& r : num) REQUIRE(r == 0);
    return q;
}

std::vector<Integer> moebius_cyclotomic(unsigned m) {
    std::vector<Integer> num{Integer(1)}, den{Integer(1)};
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = moebius(d);
        if (mu == 1) num = zmul(num, xn_minus_1(m / d));
        if (mu == -1) den = zmul(den, xn_minus_1(m / d));
    }
    return zdiv_exact(std::move(num), den);
}

Cyclo zeta8(long e) { return Cyclo::root_of_unity(8, e); }
Cyclo imag_unit() { return Cyclo::root_of_unity(4, 1); }

// epsilon(chi) of the F_3(t) Dirichlet example, on the power basis of Q(zeta_8).
Cyclo example_epsilon() {
    return zeta8(3) * Cyclo(9) - imag_unit() * Cyclo(9) - zeta8(1) * Cyclo(9);
}

std::mt19937_64 rng(20260811);

Rational random_small_rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
}

Cyclo random_cyclo(unsigned m) {
    std::vector<Rational> coords(euler_phi(m));
    for (auto& c : coords) c = random_small_rational();
    return Cyclo::from_coords(m, coords);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(22, 8).str() == "11/4");
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational::parse("-9/1").str() == "-9");
    CHECK(Rational::parse("7").str_with_denominator() == "7/1");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    // Derived via the Moebius-product oracle.
    CHECK(moebius_cyclotomic(8) == std::vector<Integer>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(8) == moebius_cyclotomic(8));
    for (unsigned m : {2u, 3u, 5u, 6u, 9u, 12u, 15u, 24u, 30u}) {
        CHECK(cyclotomic_polynomial(m) == moebius_cyclotomic(m));
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("field arithmetic in Q(zeta_m)") {
    CHECK(zeta8(1) * zeta8(1) == imag_unit());
    Cyclo one_plus_i = Cyclo(1) + imag_unit();
    Cyclo one_minus_i = Cyclo(1) - imag_unit();
    CHECK(one_plus_i * one_minus_i == Cyclo(2));

    // The epsilon division worked out in the Dirichlet example:
    // (2 zeta_8^3 - i - 1) / ((1 - i)/9).
    Cyclo num = zeta8(3) * Cyclo(2) - imag_unit() - Cyclo(1);
    Cyclo den = one_minus_i / Cyclo(9);
    CHECK(num / den == example_epsilon());

    CHECK_THROWS_AS(one_plus_i / Cyclo(0), std::domain_error);
}

TEST_CASE("rational demotion keeps exact equality simple") {
    Cyclo x = zeta8(1) * zeta8(7);
    CHECK(x.is_rational());
    CHECK(x.rational_value() == Rational(1));
    CHECK(zeta8(4) == Cyclo(-1));
}

TEST_CASE("complex conjugation endomorphism") {
    CHECK(apply_endo(FieldEndo::identity, zeta8(1)) == zeta8(1));
    CHECK(apply_endo(FieldEndo::complex_conjugation, zeta8(1)) == -zeta8(3));
    Cyclo one_plus_i = Cyclo(1) + imag_unit();
    CHECK(apply_endo(FieldEndo::complex_conjugation, one_plus_i) == Cyclo(1) - imag_unit());
    for (int i = 0; i < 25; ++i) {
        Cyclo a = random_cyclo(8);
        CHECK(a.conjugated().conjugated() == a);
    }
}

TEST_CASE("complex embedding") {
    auto z = complex_embed(zeta8(1));
    CHECK(std::abs(z.real() - 0.7071067811865476) < 1e-12);
    CHECK(std::abs(z.imag() - 0.7071067811865476) < 1e-12);
    CHECK(complex_embed(Cyclo(2)) == std::complex<double>(2.0, 0.0));

    // |epsilon(chi)| = 3^{5/2}, the Prop-2.2 closed form with q = 3,
    // deg f = 7, g = 0, dim = 1, w = 0.
    double target = std::pow(3.0, 2.5);
    CHECK(std::abs(std::abs(complex_embed(example_epsilon())) - target) < 1e-10 * target);
}

TEST_CASE("embedding is a ring homomorphism (numerically)") {
    for (int i = 0; i < 30; ++i) {
        Cyclo a = random_cyclo(8), b = random_cyclo(12);
        auto ea = complex_embed(a), eb = complex_embed(b);
        CHECK(std::abs(complex_embed(a + b) - (ea + eb)) < 1e-10);
        CHECK(std::abs(complex_embed(a * b) - (ea * eb)) < 1e-10);
    }
}

TEST_CASE("division and inverse properties") {
    for (int i = 0; i < 30; ++i) {
        Cyclo a = random_cyclo(8);
        if (a.is_zero()) continue;
        CHECK(a / a == Cyclo(1));
        Cyclo b = random_cyclo(8);
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
        CHECK(a * a.inverse() == Cyclo(1));
    }
}

TEST_CASE("coercion into a larger conductor") {
    Cyclo i4 = imag_unit();
    Cyclo i8 = i4.in_conductor(8);
    CHECK(i8.conductor() == 8);
    CHECK(i8 == zeta8(2));
    CHECK(i8 == i4);
    for (int i = 0; i < 20; ++i) {
        Cyclo a = random_cyclo(4), b = random_cyclo(4);
        CHECK(a.in_conductor(8) == a);
        CHECK((a * b).in_conductor(8) == a.in_conductor(8) * b.in_conductor(8));
    }
    CHECK_THROWS_AS(zeta8(1).in_conductor(12), std::invalid_argument);
}

TEST_CASE("string forms") {
    CHECK(example_epsilon().str() == "-9*z8 - 9*z8^2 + 9*z8^3");
    CHECK(Cyclo(Rational(-9, 2)).str() == "-9/2");
    CHECK(Cyclo(0).str() == "0");
}
