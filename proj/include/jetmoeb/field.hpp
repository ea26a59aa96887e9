#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>

#include "complex_exact.hpp"

namespace jetmoeb {

// Coefficient-field adapter. Every jet algorithm is written against this
// interface so the exact backend and the floating backend share one code
// path.
template <class F>
struct field_traits;

template <>
struct field_traits<ComplexExact> {
    static constexpr bool exact = true;
    static ComplexExact from_rational(const Rational& q) { return ComplexExact(q); }
    static ComplexExact from_int(long k) { return ComplexExact(k); }
    static bool is_zero(const ComplexExact& x) { return x.is_zero(); }
    static bool equal(const ComplexExact& a, const ComplexExact& b) { return a == b; }
};

// Machine complex numbers compared with a relative tolerance
// |a - b| <= RelTol * max(1, |a|, |b|). Mirrors ComplexExact's interface.
template <double RelTol = 1e-10>
class ApproxComplex {
public:
    static constexpr double tolerance = RelTol;

    ApproxComplex() = default;
    ApproxComplex(std::complex<double> v) : v_(v) {}
    ApproxComplex(double re, double im = 0.0) : v_(re, im) {}
    ApproxComplex(long k) : v_(static_cast<double>(k), 0.0) {}
    ApproxComplex(int k) : v_(static_cast<double>(k), 0.0) {}

    std::complex<double> value() const noexcept { return v_; }
    double re() const noexcept { return v_.real(); }
    double im() const noexcept { return v_.imag(); }

    bool is_zero() const { return approx_equal(*this, ApproxComplex{}); }

    ApproxComplex inverse() const
    {
        if (v_ == std::complex<double>{}) {
            throw jet_error(errc::division_by_zero, "inverse of zero");
        }
        return {1.0 / v_};
    }

    ApproxComplex& operator+=(const ApproxComplex& o) { v_ += o.v_; return *this; }
    ApproxComplex& operator-=(const ApproxComplex& o) { v_ -= o.v_; return *this; }
    ApproxComplex& operator*=(const ApproxComplex& o) { v_ *= o.v_; return *this; }
    ApproxComplex& operator/=(const ApproxComplex& o) { return *this *= o.inverse(); }

    friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
    friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
    friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
    friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
    friend ApproxComplex operator-(const ApproxComplex& a) { return {-a.v_}; }

    friend bool approx_equal(const ApproxComplex& a, const ApproxComplex& b)
    {
        const double scale = std::max({1.0, std::abs(a.v_), std::abs(b.v_)});
        return std::abs(a.v_ - b.v_) <= RelTol * scale;
    }
    friend bool operator==(const ApproxComplex& a, const ApproxComplex& b) { return approx_equal(a, b); }

    friend std::ostream& operator<<(std::ostream& os, const ApproxComplex& z) { return os << z.v_; }

private:
    std::complex<double> v_{};
};

template <double RelTol>
struct field_traits<ApproxComplex<RelTol>> {
    static constexpr bool exact = false;
    static ApproxComplex<RelTol> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
    static ApproxComplex<RelTol> from_int(long k) { return ApproxComplex<RelTol>(k); }
    static bool is_zero(const ApproxComplex<RelTol>& x) { return x.is_zero(); }
    static bool equal(const ApproxComplex<RelTol>& a, const ApproxComplex<RelTol>& b) { return approx_equal(a, b); }
};

using FloatComplex = ApproxComplex<>;

template <class F>
concept Field = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { field_traits<F>::is_zero(a) } -> std::convertible_to<bool>;
    { field_traits<F>::from_rational(Rational{}) } -> std::convertible_to<F>;
};

template <class F>
bool is_zero(const F& x)
{
    return field_traits<F>::is_zero(x);
}

template <class F>
F from_int(long k)
{
    return field_traits<F>::from_int(k);
}

template <class F>
F from_rational(const Rational& q)
{
    return field_traits<F>::from_rational(q);
}

} // namespace jetmoeb
