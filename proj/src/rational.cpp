// Copyright 2026 The lazygeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lazygeo/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "lazygeo/stats.hpp"

namespace lazygeo {

BigInt::BigInt(std::string_view decimal) {
    const std::string s(decimal);
    if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
        mpz_clear(v_);
        throw std::invalid_argument("BigInt: cannot parse \"" + s + "\"");
    }
}

std::string BigInt::to_string() const {
    char* raw = mpz_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*free_fn)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, s.size() + 1);
    return s;
}

BigRational::BigRational(long num, long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("BigRational: zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.v_);
    mpz_set(mpq_denref(v_), den.v_);
    mpq_canonicalize(v_);
}

BigRational::BigRational(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("BigRational: non-finite input");
    mpq_init(v_);
    mpq_set_d(v_, x);  // exact for finite doubles
}

BigRational::BigRational(std::string_view text) {
    const std::string s(text);
    mpq_init(v_);
    if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
        mpq_clear(v_);
        throw std::invalid_argument("BigRational: cannot parse \"" + s + "\"");
    }
    mpq_canonicalize(v_);
}

std::string BigRational::to_string() const {
    return numerator().to_string() + "/" + denominator().to_string();
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    stats::count_exact_op();
    BigRational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    stats::count_exact_op();
    BigRational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    stats::count_exact_op();
    BigRational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
    stats::count_exact_op();
    BigRational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

BigRational operator-(const BigRational& a) {
    stats::count_exact_op();
    BigRational r;
    mpq_neg(r.v_, a.v_);
    return r;
}

Interval BigRational::to_interval() const {
    // mpq_get_d rounds toward zero, but containment is established by
    // explicit comparison so the bracket is correct regardless.
    const double d = mpq_get_d(v_);
    if (!std::isfinite(d)) {
        return sign() > 0 ? Interval(std::numeric_limits<double>::max(),
                                     std::numeric_limits<double>::infinity())
                          : Interval(-std::numeric_limits<double>::infinity(),
                                     -std::numeric_limits<double>::max());
    }
    mpq_t back;
    mpq_init(back);
    mpq_set_d(back, d);
    const int c = mpq_cmp(back, v_);
    mpq_clear(back);
    if (c == 0) return Interval(d, d);
    return c < 0 ? Interval(d, next_up(d)) : Interval(next_down(d), d);
}

}  // namespace lazygeo
