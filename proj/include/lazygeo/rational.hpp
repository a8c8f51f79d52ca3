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

#pragma once

#include <gmp.h>

#include <string>
#include <string_view>
#include <utility>

#include "lazygeo/interval.hpp"

namespace lazygeo {

/// Arbitrary-precision integer.  Thin value wrapper over GMP's mpz layer;
/// canonical by construction (GMP never keeps leading zero limbs and
/// represents zero with positive sign).
class BigInt {
public:
    BigInt() noexcept { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); }
    BigInt(int n) : BigInt(long(n)) {}
    explicit BigInt(std::string_view decimal);

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    int sign() const noexcept { return mpz_sgn(v_); }
    bool is_zero() const noexcept { return mpz_sgn(v_) == 0; }

    std::string to_string() const;

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r.v_, a.v_);
        return r;
    }

    friend int compare(const BigInt& a, const BigInt& b) noexcept {
        const int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
        return mpz_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator<(const BigInt& a, const BigInt& b) noexcept {
        return mpz_cmp(a.v_, b.v_) < 0;
    }

    friend class BigRational;

private:
    mpz_t v_;
};

/// Arbitrary-precision rational in canonical form: positive denominator,
/// gcd(|num|, den) = 1.  Every finite binary64 converts exactly.
///
/// Arithmetic is counted in stats::exact_ops so tests and the benchmark can
/// observe how much exact work a pipeline performed.
class BigRational {
public:
    BigRational() noexcept { mpq_init(v_); }
    BigRational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRational(int n) : BigRational(long(n)) {}
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);

    /// Exact value of a finite double (denominator a power of two).
    explicit BigRational(double x);

    /// Parses "num/den" or a bare decimal integer; canonicalizes.
    explicit BigRational(std::string_view text);

    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    int sign() const noexcept { return mpq_sgn(v_); }
    bool is_zero() const noexcept { return mpq_sgn(v_) == 0; }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.v_, mpq_numref(v_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.v_, mpq_denref(v_));
        return d;
    }

    /// "num/den", always with an explicit denominator.
    std::string to_string() const;

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a);

    friend int compare(const BigRational& a, const BigRational& b) noexcept {
        const int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    friend bool operator==(const BigRational& a, const BigRational& b) noexcept {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) noexcept {
        return !(a == b);
    }
    friend bool operator<(const BigRational& a, const BigRational& b) noexcept {
        return mpq_cmp(a.v_, b.v_) < 0;
    }

    /// Tightest double bracket containing this value: a singleton when the
    /// value is representable, two adjacent doubles otherwise.
    Interval to_interval() const;

private:
    mpq_t v_;
};

inline int sign(const BigRational& a) noexcept { return a.sign(); }

inline Interval to_interval(const BigRational& q) { return q.to_interval(); }

}  // namespace lazygeo
