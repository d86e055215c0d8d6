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
#include "lffc/series.hpp"

using namespace lffc;

namespace {

Poly poly_i(std::initializer_list<long> cs) {
    std::vector<Cyclo> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

std::mt19937_64 rng(42);

TruncSeries random_unit_series(int order) {
    TruncSeries s(order);
    s.coeff(0) = Cyclo(1);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int i = 1; i <= order; ++i) s.coeff(i) = Cyclo(Rational(d(rng), 1 + (i % 3)));
    return s;
}

}  // namespace

TEST_CASE("truncated products") {
    // (1 - T)(1 - 3T) truncated at 2 = 1 - 4T + 3T^2, the zeta denominator
    auto a = TruncSeries::from_poly(poly_i({1, -1}), 2);
    auto b = TruncSeries::from_poly(poly_i({1, -3}), 2);
    CHECK(trunc_mul(a, b, 2).to_poly() == poly_i({1, -4, 3}));

    auto s = random_unit_series(6);
    CHECK(trunc_mul(s, TruncSeries::one(6), 6) == s);

    // (1-T)^7 (1-T^2)^3 (1-T^3)^10 truncated at 3
    Poly p = Poly::one();
    for (int i = 0; i < 7; ++i) p = p * poly_i({1, -1});
    for (int i = 0; i < 3; ++i) p = p * poly_i({1, 0, -1});
    for (int i = 0; i < 10; ++i) p = p * poly_i({1, 0, 0, -1});
    CHECK(TruncSeries::from_poly(p, 3).to_poly() == poly_i({1, -7, 18, -24}));
}

TEST_CASE("truncated inverses") {
    auto a = TruncSeries::from_poly(poly_i({1, -7, 18, -24}), 3);
    CHECK(trunc_inv(a, 3).to_poly() == poly_i({1, 7, 31, 115}));
    CHECK(trunc_inv(TruncSeries::one(4), 4) == TruncSeries::one(4));
    CHECK(trunc_inv(TruncSeries::from_poly(poly_i({1, -1}), 2), 2).to_poly() == poly_i({1, 1, 1}));

    TruncSeries z(3);
    CHECK_THROWS_AS(trunc_inv(z, 3), std::domain_error);
}

TEST_CASE("ring properties at fixed order") {
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_unit_series(5), b = random_unit_series(5), c = random_unit_series(5);
        CHECK(trunc_mul(a, b, 5) == trunc_mul(b, a, 5));
        CHECK(trunc_mul(trunc_mul(a, b, 5), c, 5) == trunc_mul(a, trunc_mul(b, c, 5), 5));
        CHECK(trunc_mul(a, trunc_inv(a, 5), 5) == TruncSeries::one(5));
    }
}

TEST_CASE("re-truncation is consistent") {
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_unit_series(7);
        CHECK(a.truncated(5).truncated(3) == a.truncated(3));
        auto b = random_unit_series(7);
        CHECK(trunc_mul(a, b, 7).truncated(4) == trunc_mul(a.truncated(4), b.truncated(4), 4));
    }
}

TEST_CASE("exact polynomial helpers") {
    Poly n = poly_i({1, 3, 6, 12, 18, 27, 27});
    Poly d = poly_i({1, -4, 3});
    auto [q, r] = n.divmod(d);
    CHECK(q * d + r == n);
    CHECK(Poly::gcd(n * d, d) == d.monic());
    CHECK(poly_i({1, -4, 3}).str() == "1 - 4*T + 3*T^2");
    CHECK(Poly::gcd(n, n.derivative()).degree() == 0);

    Poly sq = d * d * n;
    CHECK(Poly::gcd(sq, sq.derivative()).degree() == 2);  // repeated (1-T)(1-3T)
}
