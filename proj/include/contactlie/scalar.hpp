#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace contactlie {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

/// An element re + im*i of the Gaussian rationals Q(i).
///
/// mpq_class keeps numerator/denominator canonical after every arithmetic
/// operation, so two scalars are equal iff their parts compare equal.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar ratio(long num, long den) { return Scalar(make_rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const
    {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        if (is_real()) return Scalar(Rational(1 / re_));
        Rational n = norm2();
        return Scalar(Rational(re_ / n), Rational(-im_ / n));
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o)
    {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o)
    {
        if (o.is_real()) {
            if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
            re_ /= o.re_;
            if (sgn(im_) != 0) im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Integer power; negative exponents invert.
    Scalar pow(long k) const
    {
        if (k < 0) return inverse().pow(-k);
        Scalar result(1), base(*this);
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

    /// Textual form: "3/2", "-i", "1/2+3i", "-1-2/3i". Imaginary unit is an explicit `i`.
    std::string to_string() const
    {
        if (sgn(im_) == 0) return re_.get_str();
        std::string imag;
        if (im_ == 1) imag = "i";
        else if (im_ == -1) imag = "-i";
        else imag = im_.get_str() + "i";
        if (sgn(re_) == 0) return imag;
        std::string out = re_.get_str();
        if (sgn(im_) > 0) out += "+";
        return out + imag;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Integer value of a real scalar, if it has one.
inline bool scalar_to_integer(const Scalar& s, long& out)
{
    if (!s.is_real() || s.re().get_den() != 1 || !s.re().get_num().fits_slong_p()) return false;
    out = s.re().get_num().get_si();
    return true;
}

}  // namespace contactlie
