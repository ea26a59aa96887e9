#pragma once

#include <array>
#include <utility>

#include "error.hpp"
#include "field.hpp"
#include "series.hpp"

namespace jetmoeb {

// A point of CP^1 = C u {inf}. Infinity has exactly one representation.
template <Field F = ComplexExact>
class PointCP1 {
public:
    PointCP1() : z_(from_int<F>(0)) {}
    PointCP1(F z) : z_(std::move(z)) {} // NOLINT: finite points convert implicitly

    static PointCP1 infinity()
    {
        PointCP1 p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const noexcept { return infinite_; }

    const F& value() const
    {
        if (infinite_) {
            throw jet_error(errc::invalid_argument, "the point at infinity has no finite coordinate");
        }
        return z_;
    }

    friend bool operator==(const PointCP1& p, const PointCP1& q)
    {
        if (p.infinite_ || q.infinite_) {
            return p.infinite_ == q.infinite_;
        }
        return field_traits<F>::equal(p.z_, q.z_);
    }

private:
    bool infinite_ = false;
    F z_;
};

// z -> (a z + b) / (c z + d). Matrices are never normalized to det 1 (that
// needs square roots); equality is projective.
template <Field F = ComplexExact>
class Moebius {
public:
    Moebius(F a, F b, F c, F d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)}
    {
        if (is_zero(det())) {
            throw jet_error(errc::invalid_moebius, "degenerate matrix (ad - bc = 0)");
        }
    }

    static Moebius identity() { return Moebius(from_int<F>(1), from_int<F>(0), from_int<F>(0), from_int<F>(1)); }
    static Moebius translation(const F& t) { return Moebius(from_int<F>(1), t, from_int<F>(0), from_int<F>(1)); }

    const F& a() const noexcept { return m_[0]; }
    const F& b() const noexcept { return m_[1]; }
    const F& c() const noexcept { return m_[2]; }
    const F& d() const noexcept { return m_[3]; }

    F det() const { return a() * d() - b() * c(); }

    Moebius inverse() const { return Moebius(d(), -b(), -c(), a()); }

    // Composition g * h = g o h.
    friend Moebius operator*(const Moebius& g, const Moebius& h)
    {
        return Moebius(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                       g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
    }

    // Equal as elements of PGL(2): every 2x2 minor of the stacked entry rows
    // vanishes.
    friend bool operator==(const Moebius& g, const Moebius& h)
    {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (!is_zero(g.m_[i] * h.m_[j] - g.m_[j] * h.m_[i])) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    std::array<F, 4> m_;
};

template <Field F>
PointCP1<F> apply_point(const Moebius<F>& g, const PointCP1<F>& p)
{
    if (p.is_infinity()) {
        if (is_zero(g.c())) {
            return PointCP1<F>::infinity();
        }
        return PointCP1<F>(g.a() / g.c());
    }
    const F den = g.c() * p.value() + g.d();
    if (is_zero(den)) {
        return PointCP1<F>::infinity();
    }
    return PointCP1<F>((g.a() * p.value() + g.b()) / den);
}

// A map-germ into CP^1. With a finite value the jet is the map itself (its
// constant term is the value); at infinity the jet is that of the reciprocal
// map, which vanishes at the center.
template <Field F = ComplexExact>
struct MapGerm {
    PowerJet<F> jet;
    PointCP1<F> value;

    friend bool operator==(const MapGerm& x, const MapGerm& y) { return x.value == y.value && x.jet == y.jet; }
};

template <Field F>
void check_chart(const PowerJet<F>& jet, const PointCP1<F>& value)
{
    const F expected = value.is_infinity() ? from_int<F>(0) : value.value();
    if (!field_traits<F>::equal(jet[0], expected)) {
        throw jet_error(errc::center_mismatch, "jet constant term does not match the chart value");
    }
}

// Postcomposition g o (map).
template <Field F>
MapGerm<F> act_on_powerjet(const Moebius<F>& g, const PowerJet<F>& jet, const PointCP1<F>& value)
{
    check_chart(jet, value);
    const int k = jet.order();
    const auto one = PowerJet<F>::constant(from_int<F>(1), k);
    // Homogeneous pair (num : den) of the map.
    const PowerJet<F>& num = value.is_infinity() ? one : jet;
    const PowerJet<F>& den = value.is_infinity() ? jet : one;
    const PowerJet<F> new_num = g.a() * num + g.b() * den;
    const PowerJet<F> new_den = g.c() * num + g.d() * den;
    if (!is_zero(new_den[0])) {
        PowerJet<F> image = new_num * reciprocal(new_den);
        return {image, PointCP1<F>(image[0])};
    }
    return {new_den * reciprocal(new_num), PointCP1<F>::infinity()};
}

template <Field F>
MapGerm<F> act_on_powerjet(const Moebius<F>& g, const MapGerm<F>& germ)
{
    return act_on_powerjet(g, germ.jet, germ.value);
}

// (p0 + p1 t + p2 t^2) d/dt, a global holomorphic vector field on CP^1.
template <Field F = ComplexExact>
struct Sl2Field {
    F p0, p1, p2;

    friend Sl2Field operator+(const Sl2Field& v, const Sl2Field& w) { return {v.p0 + w.p0, v.p1 + w.p1, v.p2 + w.p2}; }
    friend Sl2Field operator-(const Sl2Field& v, const Sl2Field& w) { return {v.p0 - w.p0, v.p1 - w.p1, v.p2 - w.p2}; }
    friend Sl2Field operator*(const F& s, const Sl2Field& v) { return {s * v.p0, s * v.p1, s * v.p2}; }
    friend bool operator==(const Sl2Field& v, const Sl2Field& w)
    {
        return field_traits<F>::equal(v.p0, w.p0) && field_traits<F>::equal(v.p1, w.p1) &&
               field_traits<F>::equal(v.p2, w.p2);
    }
};

// [p d/dt, q d/dt] = (p q' - q p') d/dt. The cubic terms cancel.
template <Field F>
Sl2Field<F> sl2_bracket(const Sl2Field<F>& p, const Sl2Field<F>& q)
{
    return {p.p0 * q.p1 - q.p0 * p.p1, from_int<F>(2) * (p.p0 * q.p2 - q.p0 * p.p2), p.p1 * q.p2 - q.p1 * p.p2};
}

// s * (t - t0)^2 / 2 d/dt expanded in powers of t.
template <Field F>
Sl2Field<F> half_square_field(const F& s, const F& t0)
{
    const F half = from_rational<F>(Rational(1, 2));
    return {s * half * t0 * t0, -(s * t0), s * half};
}

// The vector field on CP^1 generated by a matrix X in gl(2) acting through
// d/de (exp(eX) . t) at e = 0.
template <Field F>
Sl2Field<F> field_of_matrix(const F& x11, const F& x12, const F& x21, const F& x22)
{
    return {x12, x11 - x22, -x21};
}

// The Moebius map sharing the 2-jet (f0, f1, f2) of a germ at t0.
template <Field F>
Moebius<F> osculating_moebius(const F& f0, const F& f1, const F& f2, const F& t0)
{
    if (is_zero(f1)) {
        throw jet_error(errc::branched_jet_not_osculable, "f'(t0) = 0");
    }
    const F two = from_int<F>(2);
    const F a = f0 * f2 - two * f1 * f1;
    const F b = -(two * f0 * f1) - t0 * a;
    const F c = f2;
    const F d = -(two * f1) - t0 * f2;
    return Moebius<F>(a, b, c, d);
}

// f is the jet at t0, in the coordinate s = t - t0.
template <Field F>
Moebius<F> osculating_moebius(const PowerJet<F>& f, const F& t0)
{
    if (f.order() < 2) {
        throw jet_error(errc::insufficient_order, "osculation needs a 2-jet");
    }
    return osculating_moebius(f[0], f[1], from_int<F>(2) * f[2], t0);
}

// Derivative at t0 of the osculating family t -> g(t), as the vector field
// of g(t0)^-1 g'(t0). The entries a(t)..d(t) of the family are built as jets
// in t and differentiated; the Schwarzian is not used.
template <Field F>
Sl2Field<F> osculating_derivative(const PowerJet<F>& f, const F& t0)
{
    if (f.order() < 3) {
        throw jet_error(errc::insufficient_order, "osculating derivative needs a 3-jet");
    }
    if (is_zero(f[1])) {
        throw jet_error(errc::branched_jet_not_osculable, "f'(t0) = 0");
    }
    const int k = f.order();
    const F two = from_int<F>(2);
    const PowerJet<F> t = PowerJet<F>::constant(t0, k) + PowerJet<F>::identity(k);
    const PowerJet<F> f1 = derivative(f);
    const PowerJet<F> f2 = derivative(f1);

    const PowerJet<F> a = f * f2 - two * (f1 * f1);
    const PowerJet<F> b = -(two * (f * f1)) - t * a;
    const PowerJet<F> c = f2;
    const PowerJet<F> d = -(two * f1) - t * f2;

    // (a b; c d) at t0 and its t-derivative.
    const F& A = a[0];
    const F& B = b[0];
    const F& C = c[0];
    const F& D = d[0];
    const F& dA = a[1];
    const F& dB = b[1];
    const F& dC = c[1];
    const F& dD = d[1];
    const F det = A * D - B * C;

    // adj(g) g' / det
    const F x11 = (D * dA - B * dC) / det;
    const F x12 = (D * dB - B * dD) / det;
    const F x21 = (A * dC - C * dA) / det;
    const F x22 = (A * dD - C * dB) / det;
    return field_of_matrix(x11, x12, x21, x22);
}

// (v(0), v'(0), v''(0)) of a vector-field coefficient.
template <Field F = ComplexExact>
struct VectorJet2 {
    F a0, a1, a2;

    friend bool operator==(const VectorJet2& x, const VectorJet2& y)
    {
        return field_traits<F>::equal(x.a0, y.a0) && field_traits<F>::equal(x.a1, y.a1) &&
               field_traits<F>::equal(x.a2, y.a2);
    }
};

// delta phi (a0, a1, a2) = (phi' a0, phi'' a0 + phi' a1,
//                           phi''' a0 + 2 phi'' a1 + phi' a2), at the center.
// This is the 2-jet of phi' v in the source coordinate.
template <Field F>
VectorJet2<F> pushforward_vectorjet(const PowerJet<F>& phi, const VectorJet2<F>& v)
{
    if (phi.order() < 3) {
        throw jet_error(errc::insufficient_order, "pushforward needs a 3-jet of phi");
    }
    if (is_zero(phi[1])) {
        throw jet_error(errc::not_a_biholomorphism_germ, "phi'(0) = 0");
    }
    const F d1 = phi[1];
    const F d2 = from_int<F>(2) * phi[2];
    const F d3 = from_int<F>(6) * phi[3];
    return {d1 * v.a0, d2 * v.a0 + d1 * v.a1, d3 * v.a0 + from_int<F>(2) * d2 * v.a1 + d1 * v.a2};
}

// Given the 2-jet of W = V o phi in the source coordinate, returns the
// 2-jet of V in the image coordinate.
template <Field F>
VectorJet2<F> to_image_chart(const PowerJet<F>& phi, const VectorJet2<F>& w)
{
    if (phi.order() < 2) {
        throw jet_error(errc::insufficient_order, "chart change needs a 2-jet of phi");
    }
    if (is_zero(phi[1])) {
        throw jet_error(errc::not_a_biholomorphism_germ, "phi'(0) = 0");
    }
    const F d1 = phi[1];
    const F d2 = from_int<F>(2) * phi[2];
    const F v1 = w.a1 / d1;
    return {w.a0, v1, (w.a2 - v1 * d2) / (d1 * d1)};
}

} // namespace jetmoeb
