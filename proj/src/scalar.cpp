#include "vmodel/scalar.hpp"

#include "vmodel/error.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace vmodel {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v)
{
    return v < 0 ? u128(-(v + 1)) + 1 : u128(v);
}

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v)
{
    return v > std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v)
{
    bool neg = v < 0;
    u128 mag = abs128(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_fits64(const mpz_class& z)
{
    // long is 64-bit on the supported platforms; INT64_MIN stays big so that
    // negation never overflows.
    return z.fits_slong_p() && z != std::numeric_limits<long>::min();
}

} // namespace

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw PreconditionError("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value)
{
    *this = normalized(value);
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        return Rational();
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (fits64(num) && fits64(den)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    return normalized(std::move(q));
}

Rational Rational::normalized(mpq_class value)
{
    value.canonicalize();
    Rational r;
    if (mpz_fits64(value.get_num()) && mpz_fits64(value.get_den())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
            t.pop_back();
        std::size_t i = 0;
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i])))
            ++i;
        t.erase(0, i);
    };
    trim(s);
    if (s.empty())
        throw ParseError("empty rational");
    std::string body = s;
    if (!body.empty() && body.front() == '+')
        body.erase(0, 1);
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && part[i] == '-')
            ++i;
        if (i == part.size())
            throw ParseError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational '" + s + "'");
    };
    auto slash = body.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        check_digits(body, true);
        q = mpq_class(mpz_class(body));
    } else {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        check_digits(num, true);
        check_digits(den, false);
        mpz_class d(den);
        if (d == 0)
            throw ParseError("zero denominator in '" + s + "'");
        q = mpq_class(mpz_class(num), d);
    }
    return normalized(std::move(q));
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
}

std::string Rational::to_string() const
{
    if (big_)
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return normalized(-*big_);
}

Rational Rational::add_slow(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        __int128 num = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
        __int128 den = __int128(a.den_) * b.den_;
        return from_wide(num, den);
    }
    return normalized(a.to_mpq() + b.to_mpq());
}

Rational Rational::mul_slow(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
    return normalized(a.to_mpq() * b.to_mpq());
}

Rational Rational::div_slow(const Rational& a, const Rational& b)
{
    if (b.is_zero())
        throw PreconditionError("division by zero");
    if (!a.big_ && !b.big_)
        return from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
    return normalized(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b)
{
    // Normalization keeps small values out of GMP, so representations are
    // unique.
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        __int128 l = __int128(a.num_) * b.den_;
        __int128 r = __int128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::string to_string(Ring ring)
{
    return ring == Ring::gaussian ? "gaussian" : "rational";
}

Scalar Scalar::gaussian(Rational re, Rational im)
{
    Scalar s;
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    s.ring_ = Ring::gaussian;
    return s;
}

Scalar Scalar::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty scalar");
    if (s.back() != 'i')
        return Scalar(Rational::parse(s));

    // Gaussian: [real](+|-)imag*i or imag*i
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*')
        body.pop_back();
    // The split point is the last sign that is not at position 0 and not
    // directly after another sign ("1/2+-3/4").
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string im = body.empty() || body == "+" ? "1" : (body == "-" ? "-1" : body);
        return gaussian(Rational(), Rational::parse(im));
    }
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im.size() >= 2 && im[0] == '+' && im[1] == '-')
        im.erase(0, 1);
    if (im == "+" || im == "-")
        im += "1";
    return gaussian(Rational::parse(re), Rational::parse(im));
}

std::string Scalar::to_string() const
{
    if (ring_ == Ring::rational)
        return re_.to_string();
    if (im_.sign() < 0)
        return re_.to_string() + "-" + (-im_).to_string() + "*i";
    return re_.to_string() + "+" + im_.to_string() + "*i";
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.re_ = -re_;
    if (ring_ == Ring::gaussian)
        r.im_ = -im_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    if (b.is_zero())
        throw PreconditionError("division by zero");
    if (a.ring_ == Ring::rational && b.ring_ == Ring::rational)
        return Scalar(a.re_ / b.re_);
    Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
    Rational re = (a.re_ * b.re_ + a.im_ * b.im_) / norm;
    Rational im = (a.im_ * b.re_ - a.re_ * b.im_) / norm;
    return Scalar::gaussian(std::move(re), std::move(im));
}

Scalar pow(const Scalar& base, unsigned exponent)
{
    Scalar result = Scalar::one(base.ring());
    Scalar b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

} // namespace vmodel
