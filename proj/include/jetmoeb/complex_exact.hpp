#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"
#include "rational.hpp"

namespace jetmoeb {

// Exact Gaussian-rational complex number re + im*i. This is the default
// coefficient field of every jet in the library.
class ComplexExact {
public:
    ComplexExact() = default;
    ComplexExact(Rational re) : re_(std::move(re)) {}
    ComplexExact(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexExact(long re) : re_(re) {}

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ComplexExact conj() const { return {re_, -im_}; }
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

    ComplexExact inverse() const
    {
        if (is_zero()) {
            throw jet_error(errc::division_by_zero, "inverse of zero");
        }
        const Rational n = norm();
        return {Rational(re_ / n), Rational(-im_ / n)};
    }

    ComplexExact& operator+=(const ComplexExact& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexExact& operator-=(const ComplexExact& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexExact& operator*=(const ComplexExact& o)
    {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    ComplexExact& operator/=(const ComplexExact& o) { return *this *= o.inverse(); }

    friend ComplexExact operator+(ComplexExact a, const ComplexExact& b) { return a += b; }
    friend ComplexExact operator-(ComplexExact a, const ComplexExact& b) { return a -= b; }
    friend ComplexExact operator*(ComplexExact a, const ComplexExact& b) { return a *= b; }
    friend ComplexExact operator/(ComplexExact a, const ComplexExact& b) { return a /= b; }
    friend ComplexExact operator-(const ComplexExact& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

    friend bool operator==(const ComplexExact& a, const ComplexExact& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexExact& z) { return os << to_string(z); }

    // Human-readable form, also accepted by parse_complex: "3/2", "-i",
    // "1/2+3/4i".
    friend std::string to_string(const ComplexExact& z)
    {
        if (z.is_real()) {
            return jetmoeb::to_string(z.re_);
        }
        std::string im;
        if (z.im_ == 1) {
            im = "i";
        } else if (z.im_ == -1) {
            im = "-i";
        } else {
            im = jetmoeb::to_string(z.im_) + "i";
        }
        if (sgn(z.re_) == 0) {
            return im;
        }
        return jetmoeb::to_string(z.re_) + (im.front() == '-' ? "" : "+") + im;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

// Parses the literals produced by to_string: "a", "bi", "a+bi", "a-bi",
// with "i" and "-i" for unit imaginary parts.
inline ComplexExact parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw parse_error("empty complex literal");
    }
    if (text.back() != 'i') {
        return ComplexExact(parse_rational(text));
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view s) -> Rational {
        if (s.empty() || s == "+") {
            return Rational(1);
        }
        if (s == "-") {
            return Rational(-1);
        }
        return parse_rational(s);
    };
    if (split == std::string_view::npos) {
        return ComplexExact(Rational(0), imag_part(body));
    }
    return ComplexExact(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

} // namespace jetmoeb
