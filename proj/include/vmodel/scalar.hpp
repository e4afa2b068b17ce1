#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vmodel {

// Exact rational number. Values whose numerator and denominator fit in
// int64 are stored inline; anything larger spills into a shared, immutable
// GMP rational. Arithmetic never rounds.
class Rational {
public:
    Rational() = default;
    Rational(long long value) // NOLINT(google-explicit-constructor)
    {
        if (value == kMin)
            *this = Rational(mpq_class(mpz_class(static_cast<long>(value))));
        else
            num_ = value;
    }
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& value);

    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    // True when the value lives in the GMP representation; the inline
    // accessors below are meaningful only otherwise.
    bool is_big() const { return big_ != nullptr; }
    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    mpq_class to_mpq() const;
    // Always "p/q", also for integers ("3/1").
    std::string to_string() const;

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static constexpr std::int64_t kMin = INT64_MIN;

    static Rational from_wide(__int128 num, __int128 den);
    static Rational normalized(mpq_class value);

    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static Rational div_slow(const Rational& a, const Rational& b);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

inline Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != Rational::kMin)
            return Rational(r);
    }
    return Rational::add_slow(a, b);
}

inline Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

inline Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0)
            return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != Rational::kMin)
                return Rational(r);
        }
    }
    return Rational::mul_slow(a, b);
}

inline Rational operator/(const Rational& a, const Rational& b)
{
    return Rational::div_slow(a, b);
}

// Which exact field a scalar lives in: Q or Q[i].
enum class Ring { rational, gaussian };

std::string to_string(Ring ring);

// Exact scalar: a rational, or a Gaussian rational re + im*i. Mixing the
// two in arithmetic promotes to Gaussian; equality compares values only.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long value) : re_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(Rational value) : re_(std::move(value)) {} // NOLINT(google-explicit-constructor)

    static Scalar gaussian(Rational re, Rational im = Rational());
    static Scalar zero(Ring ring) { return ring == Ring::gaussian ? gaussian(0) : Scalar(); }
    static Scalar one(Ring ring) { return ring == Ring::gaussian ? gaussian(1) : Scalar(1); }

    // Accepts "p/q", "p", or a Gaussian "a+b*i" / "a-b*i" / "b*i".
    static Scalar parse(std::string_view text);

    Ring ring() const { return ring_; }
    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    // "p/q" for rationals, "p/q+r/s*i" (or "p/q-r/s*i") for Gaussians.
    std::string to_string() const;

    Scalar operator-() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Total order used only for deterministic containers (real part first).
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
    {
        if (auto c = a.re_ <=> b.re_; c != 0)
            return c;
        return a.im_ <=> b.im_;
    }

private:
    Rational re_;
    Rational im_;
    Ring ring_ = Ring::rational;
};

inline Scalar operator+(const Scalar& a, const Scalar& b)
{
    if (a.ring_ == Ring::rational && b.ring_ == Ring::rational)
        return Scalar(a.re_ + b.re_);
    Scalar r = Scalar::gaussian(a.re_ + b.re_, a.im_ + b.im_);
    return r;
}

inline Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

inline Scalar operator*(const Scalar& a, const Scalar& b)
{
    if (a.ring_ == Ring::rational && b.ring_ == Ring::rational)
        return Scalar(a.re_ * b.re_);
    return Scalar::gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Scalar pow(const Scalar& base, unsigned exponent);

} // namespace vmodel
