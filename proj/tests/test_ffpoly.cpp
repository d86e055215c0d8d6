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

#include <random>

#include "doctest.h"
#include "lffc/residue.hpp"

using namespace lffc;

namespace {

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

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
    // (1/d) sum_{e | d} mu(d/e) q^e
    long long total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= static_cast<long long>(q);
        total += moebius(d / e) * qe;
    }
    return static_cast<std::uint64_t>(total / d);
}

// Brute-force irreducibility oracle: trial division by every monic
// polynomial of smaller positive degree.
bool brute_irreducible(const FqPoly& f) {
    auto F = f.field();
    const std::uint64_t q = F->q();
    int d = f.degree();
    if (d <= 0) return false;
    for (int e = 1; e < d; ++e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> c(e + 1);
            std::uint64_t r = idx;
            for (int i = 0; i < e; ++i) {
                c[i] = static_cast<std::uint32_t>(r % q);
                r /= q;
            }
            c[e] = 1;
            if (FqPoly(F, c).divides(f)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("field construction and canonical moduli") {
    auto F9 = FqField::make(3, 2);
    CHECK(F9->q() == 9);
    CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // w^2 + 1
    CHECK(F9->elem_order(F9->generator()) == 8);
    CHECK_THROWS_AS(FqField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FqField::make(3, 2, {1, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("extension field arithmetic") {
    auto F9 = FqField::make(3, 2);
    std::uint32_t w = 3;  // index of the generator symbol w
    CHECK(F9->mul(w, w) == F9->from_int(-1));  // w^2 = -1 for the canonical modulus
    for (std::uint32_t a = 1; a < 9; ++a) {
        CHECK(F9->mul(a, F9->inv(a)) == 1);
        CHECK(F9->pow(a, 8) == 1);
    }
    // additive structure: characteristic 3
    for (std::uint32_t a = 0; a < 9; ++a) CHECK(F9->add(F9->add(a, a), a) == 0);
}

TEST_CASE("monic irreducible enumeration") {
    auto F3 = FqField::make(3);
    auto irr2 = monic_irreducibles(F3, 2);
    REQUIRE(irr2.size() == 3);
    CHECK(irr2[0] == FqPoly::parse(F3, "t^2+1"));
    CHECK(irr2[1] == FqPoly::parse(F3, "t^2+t+2"));  // = t^2+t-1
    CHECK(irr2[2] == FqPoly::parse(F3, "t^2+2t+2"));  // = t^2-t-1

    auto F7 = FqField::make(7);
    CHECK(monic_irreducibles(F7, 1).size() == 7);
    CHECK(monic_irreducibles(F3, 3).size() == 8);  // (3^3 - 3)/3, checked against the oracle below
}

TEST_CASE("irreducibility matches the brute-force oracle") {
    for (auto [p, k, d] : {std::tuple<int, int, int>{3, 1, 3}, {3, 1, 4}, {5, 1, 3}, {2, 1, 6}, {3, 2, 2}}) {
        auto F = FqField::make(p, k);
        const std::uint64_t q = F->q();
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        std::uint64_t found = 0;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> c(d + 1);
            std::uint64_t r = idx;
            for (int i = 0; i < d; ++i) {
                c[i] = static_cast<std::uint32_t>(r % q);
                r /= q;
            }
            c[d] = 1;
            FqPoly f(F, c);
            bool fast = is_irreducible(f);
            CHECK(fast == brute_irreducible(f));
            if (fast) ++found;
        }
        CHECK(found == necklace_count(q, d));
        CHECK(monic_irreducibles(F, d).size() == necklace_count(q, d));
    }
}

TEST_CASE("places enumeration") {
    auto F3 = FqField::make(3);
    auto pl = places_up_to(F3, 1, true);
    REQUIRE(pl.size() == 4);
    CHECK(pl[0].infinite);
    CHECK(pl[0].str() == "(1/t)");
    CHECK(pl[1].generator == FqPoly::parse(F3, "t"));
    CHECK(pl[2].generator == FqPoly::parse(F3, "t+1"));
    CHECK(pl[3].generator == FqPoly::parse(F3, "t+2"));

    auto F7 = FqField::make(7);
    CHECK(places_up_to(F7, 2, true).size() == 1 + 7 + 21);
    CHECK(places_up_to(F3, 3, true).size() == 15);  // rows of the degree <= 3 table over F_3
}

TEST_CASE("quadratic character") {
    auto F7 = FqField::make(7);
    // Euler criterion oracle: (-1)^3 mod 7 = 6 != 1
    CHECK(F7->pow(F7->from_int(-1), 3) == 6);
    CHECK(F7->quad_char(F7->from_int(-1)) == -1);
    // squares mod 7 enumerated: {1, 2, 4}
    CHECK(F7->quad_char(2) == +1);
    CHECK(F7->quad_char(0) == 0);
    for (std::uint32_t x = 1; x < 7; ++x) CHECK(F7->quad_char(F7->mul(x, x)) == +1);

    // multiplicativity over a few fields
    for (auto [p, k] : {std::pair<int, int>{7, 1}, {3, 2}, {5, 2}}) {
        auto F = FqField::make(p, k);
        for (std::uint32_t a = 1; a < F->q(); ++a)
            for (std::uint32_t b = 1; b < F->q(); ++b)
                CHECK(F->quad_char(F->mul(a, b)) == F->quad_char(a) * F->quad_char(b));
    }
    auto F2 = FqField::make(2);
    CHECK_THROWS_AS(F2->quad_char(1), std::domain_error);
}

TEST_CASE("polynomial arithmetic and parsing") {
    auto F3 = FqField::make(3);
    FqPoly f = FqPoly::parse(F3, "t^7 - t + 1");
    CHECK(f.degree() == 7);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 2);
    CHECK(f.coeff(7) == 1);
    CHECK(f.str() == "t^7 + 2*t + 1");
    CHECK(FqPoly::parse(F3, "(t+1)(t+2)") == FqPoly::parse(F3, "t^2 + 2"));
    CHECK(FqPoly::parse(F3, "2t^2") == FqPoly::parse(F3, "2*t^2"));
    CHECK(FqPoly::gcd(f, f.derivative()).degree() == 0);  // square-free
    CHECK_THROWS_AS(FqPoly::parse(F3, "t +"), std::invalid_argument);
    CHECK_THROWS_AS(FqPoly::parse(F3, "x"), std::invalid_argument);

    auto F9 = FqField::make(3, 2);
    CHECK(FqPoly::parse(F9, "w^2 + 1").is_zero());  // w^2 = -1 under the canonical modulus
    CHECK(FqPoly::parse(F9, "(w+1)t + w").degree() == 1);

    auto [quo, rem] = f.divmod(FqPoly::parse(F3, "t^2+1"));
    CHECK(quo * FqPoly::parse(F3, "t^2+1") + rem == f);

    auto rf = FqRatFunc::parse(F3, "(t^2+2)/(t+1)");
    CHECK(rf.num == FqPoly::parse(F3, "t+2"));  // t^2+2 = (t+1)(t+2) over F_3
    CHECK(rf.den.is_one());
    auto rf2 = FqRatFunc::parse(F3, "(t^2+1)/(2t+2)");
    CHECK(rf2.den == FqPoly::parse(F3, "t+1"));  // denominator normalized monic
    CHECK(rf2.num == FqPoly::parse(F3, "2t^2+2"));
}

TEST_CASE("residue fields") {
    auto F3 = FqField::make(3);
    ResidueField R(F3, FqPoly::parse(F3, "t^2+2t+2"));  // t^2 - t - 1
    CHECK(R.size() == 9);
    std::uint64_t t = R.reduce(FqPoly::variable(F3));
    CHECK(R.pow(t, 4) == R.from_base(2));  // t^4 = 2 in F_3[t]/(t^2-t-1)
    CHECK(R.elem_order(t) == 8);
    for (std::uint64_t a = 1; a < 9; ++a) CHECK(R.mul(a, R.inv(a)) == 1);
    // quadratic character in F_9 via the squares table agrees with Euler
    for (std::uint64_t a = 1; a < 9; ++a)
        CHECK(R.quad_char(a) == (R.pow(a, 4) == 1 ? +1 : -1));
}

TEST_CASE("unit discrete log") {
    auto F3 = FqField::make(3);
    FqPoly P = FqPoly::parse(F3, "t^2+2t+2");  // t^2 - t - 1
    FqPoly t = FqPoly::variable(F3);
    CHECK(unit_discrete_log(P, t, FqPoly::constant(F3, 2)) == 4);
    CHECK(unit_discrete_log(P, t, t) == 1);

    FqPoly Q = FqPoly::parse(F3, "t^2+1");
    FqPoly g = FqPoly::parse(F3, "t+1");
    FqPoly g3 = (g * g * g) % Q;
    CHECK(unit_discrete_log(Q, g, g3) == 3);
    // t has order 4 in (F_3[t]/(t^2+1))^x, not a generator
    CHECK_THROWS_AS(unit_discrete_log(Q, t, g), std::invalid_argument);

    // round-trip property on random exponents for a larger group
    auto F5 = FqField::make(5);
    FqPoly P5 = monic_irreducibles(F5, 3).front();
    ResidueField R(F5, P5);
    std::uint64_t gen = R.multiplicative_generator();
    FqPoly gen_poly = R.lift(gen);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        std::uint64_t e = rng() % (R.size() - 1);
        CHECK(unit_discrete_log(P5, gen_poly, R.lift(R.pow(gen, e))) == e);
    }
}
