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

#ifndef LFFC_RESIDUE_HPP
#define LFFC_RESIDUE_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "lffc/fqpoly.hpp"

namespace lffc {

/// The residue field F_q[t]/(P) of a finite place, P monic irreducible of
/// degree d. Elements are indices in [0, q^d) whose base-q digits are the
/// coefficients of the canonical representative. This is how every
/// F_{q^{deg v}} in the backends is realized: polynomial coefficients over
/// F_q embed as constants, so no field-embedding tables are needed.
class ResidueField {
  public:
    ResidueField(FqField::Ptr base, FqPoly modulus);

    const FqField::Ptr& base() const { return f_; }
    const FqPoly& modulus() const { return mod_; }
    unsigned degree() const { return d_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    std::uint64_t from_base(std::uint32_t c) const { return c; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t reduce(const FqPoly& a) const;
    FqPoly lift(std::uint64_t a) const;

    /// Quadratic character; builds a squares table on first use for fields of
    /// desk size, falls back to exponentiation beyond that. Characteristic 2
    /// is rejected.
    int quad_char(std::uint64_t a) const;

    /// A generator of the cyclic unit group, found on first use.
    std::uint64_t multiplicative_generator() const;
    std::uint64_t elem_order(std::uint64_t a) const;

  private:
    FqField::Ptr f_;
    FqPoly mod_;
    unsigned d_;
    std::uint64_t size_;
    std::vector<std::vector<std::uint32_t>> tpow_;  // t^(d+j) mod P, j = 0..d-2

    mutable std::mutex mu_;
    mutable std::vector<bool> squares_;  // lazily built
    mutable std::uint64_t generator_ = 0;
    void ensure_squares() const;
};

/// Least e >= 0 with base^e = target in (F_q[t]/modulus)^x, by baby-step
/// giant-step. The base must generate the unit group; anything else is
/// reported, not silently mis-solved.
std::uint64_t unit_discrete_log(const FqPoly& modulus, const FqPoly& base, const FqPoly& target);

}  // namespace lffc

#endif
