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

#ifndef LFFC_FQ_HPP
#define LFFC_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lffc {

/// The finite field F_{p^k}. Elements are packed indices in [0, p^k): the
/// base-p digits of an index are the coordinates on the power basis of the
/// generator w, so the prime subfield occupies indices 0..p-1. For k > 1 the
/// field is F_p[w]/(modulus) with exp/log tables built at construction;
/// multiplication, inversion and the quadratic character are table lookups.
///
/// Fields are immutable and shared via FqField::Ptr; all operations are
/// const and safe to call concurrently.
class FqField : public std::enable_shared_from_this<FqField> {
  public:
    using Ptr = std::shared_ptr<const FqField>;

    /// Field with the canonical modulus: the first monic irreducible of
    /// degree k over F_p in enumeration order. p is checked prime by trial
    /// division.
    static Ptr make(std::uint64_t p, unsigned k = 1);
    /// Explicit monic modulus digits (length k+1), checked irreducible.
    static Ptr make(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint64_t p() const { return p_; }
    std::uint64_t q() const { return q_; }
    unsigned ext_degree() const { return k_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t from_int(long long n) const;

    /// A fixed generator of the multiplicative group.
    std::uint32_t generator() const { return generator_; }
    std::uint64_t elem_order(std::uint32_t a) const;

    /// +1 squares, -1 non-squares, 0 at zero. Undefined in characteristic 2.
    int quad_char(std::uint32_t a) const;

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::string elem_str(std::uint32_t a) const;

  private:
    FqField() = default;
    void init_tables();
    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

    std::uint64_t p_ = 0, q_ = 0;
    unsigned k_ = 1;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_, log_;  // k > 1 only
    std::vector<std::pair<std::uint64_t, unsigned>> unit_order_factors_;
};

/// A field element that carries its parent, for API-level use. Hot loops work
/// on raw indices through the field instead.
struct FqElem {
    FqField::Ptr field;
    std::uint32_t v = 0;

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.field->q() == b.field->q() && a.field->modulus() == b.field->modulus() && a.v == b.v;
    }
    friend FqElem operator+(const FqElem& a, const FqElem& b) { return {a.field, a.field->add(a.v, b.v)}; }
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return {a.field, a.field->sub(a.v, b.v)}; }
    friend FqElem operator*(const FqElem& a, const FqElem& b) { return {a.field, a.field->mul(a.v, b.v)}; }
    std::string str() const { return field->elem_str(v); }
};

inline int quadratic_character(const FqElem& a) { return a.field->quad_char(a.v); }

/// Prime factors of n with multiplicities, trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

}  // namespace lffc

#endif
