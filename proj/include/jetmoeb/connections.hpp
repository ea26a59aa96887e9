#pragma once

#include <algorithm>

#include "error.hpp"
#include "series.hpp"

// Local comparison of two sections of an osculating CP^1-bundle in the
// affine chart where the first section sits at z = infinity and the
// canonical section at z = w. The second section is z = lambda(w). All
// w-series are jets in u = w - w0.

namespace jetmoeb {

// (q0(w) + q1(w) z + q2(w) z^2) d/dz.
template <Field F = ComplexExact>
struct VFieldWSeries {
    PowerJet<F> q0, q1, q2;

    int order() const { return std::min({q0.order(), q1.order(), q2.order()}); }
};

// coeff(w) dw, or coeff(w) d/dw for a connection difference.
template <Field F = ComplexExact>
struct OneFormWSeries {
    PowerJet<F> coeff;
};

// [p d/dz, q d/dz] = (p q_z - q p_z) d/dz; the z^3 terms cancel.
template <Field F>
VFieldWSeries<F> vf_bracket(const VFieldWSeries<F>& p, const VFieldWSeries<F>& q)
{
    const F two = from_int<F>(2);
    return {p.q0 * q.q1 - q.q0 * p.q1, two * (p.q0 * q.q2 - q.q0 * p.q2), p.q1 * q.q2 - q.q1 * p.q2};
}

namespace detail {

template <Field F>
PowerJet<F> w_coordinate(const F& w0, int order)
{
    return PowerJet<F>::constant(w0, order) + PowerJet<F>::identity(order);
}

// 1 / (lambda(w) - w).
template <Field F>
PowerJet<F> inverse_gap(const PowerJet<F>& lambda, const F& w0)
{
    const PowerJet<F> gap = lambda - w_coordinate(w0, lambda.order());
    if (is_zero(gap[0])) {
        throw jet_error(errc::sections_intersect, "lambda(w0) = w0");
    }
    return reciprocal(gap);
}

// c (z - s)^2 d/dz.
template <Field F>
VFieldWSeries<F> square_field(const PowerJet<F>& c, const PowerJet<F>& s)
{
    return {c * (s * s), -from_int<F>(2) * (c * s), c};
}

} // namespace detail

// omega_2 - omega_1 = lambda'(w) / (lambda(w) - w)^2 (z - w)^2 d/dz dw.
template <Field F>
VFieldWSeries<F> connection_difference(const PowerJet<F>& lambda, const F& w0 = from_int<F>(0))
{
    const PowerJet<F> inv = detail::inverse_gap(lambda, w0);
    const PowerJet<F> coeff = derivative(lambda) * (inv * inv);
    return detail::square_field(coeff, detail::w_coordinate(w0, lambda.order()));
}

// sigma_2 - sigma_1 = -2 / (lambda(w) - w) dw.
template <Field F>
OneFormWSeries<F> section_difference(const PowerJet<F>& lambda, const F& w0 = from_int<F>(0))
{
    return {-from_int<F>(2) * detail::inverse_gap(lambda, w0)};
}

// (nabla_2 - nabla_1)(d/dw)(d/dw). In the line L_2 spanned by
// (z - lambda)^2 d/dz, d/dw corresponds to (z - lambda)^2 / (w - lambda)^2 d/dz;
// its covariant derivative is d/dw of that field plus the bracket with
// omega_2 - omega_1. The result lies in L_2 and is read back as a multiple
// of d/dw.
template <Field F>
OneFormWSeries<F> nabla_difference(const PowerJet<F>& lambda, const F& w0 = from_int<F>(0))
{
    const PowerJet<F> inv = detail::inverse_gap(lambda, w0);
    // 1 / (w - lambda)^2 = 1 / (lambda - w)^2
    const VFieldWSeries<F> section = detail::square_field(inv * inv, lambda);
    const VFieldWSeries<F> omega = connection_difference(lambda, w0);
    const VFieldWSeries<F> moved{derivative(section.q0), derivative(section.q1), derivative(section.q2)};
    const VFieldWSeries<F> br = vf_bracket(omega, section);
    const VFieldWSeries<F> total{moved.q0 + br.q0, moved.q1 + br.q1, moved.q2 + br.q2};

    // total = r (z - lambda)^2 d/dz
    const PowerJet<F>& r = total.q2;
    const VFieldWSeries<F> expected = detail::square_field(r, lambda);
    const int k = std::min(total.order(), expected.order());
    if (!agree_through(total.q1, expected.q1, k) || !agree_through(total.q0, expected.q0, k)) {
        throw jet_error(errc::non_proportional_result, "covariant derivative left the line L_2");
    }
    // d/dw = (z - lambda)^2 / (w - lambda)^2 d/dz, so the d/dw component is
    // r (w - lambda)^2.
    const PowerJet<F> gap = lambda - detail::w_coordinate(w0, lambda.order());
    return {r * (gap * gap)};
}

struct CorrespondenceCertificate {
    int order_checked;
};

// Checks sigma_2 - sigma_1 = -(a_2 - a_1) coefficientwise.
template <Field F>
CorrespondenceCertificate verify_correspondence(const PowerJet<F>& lambda, const F& w0 = from_int<F>(0))
{
    const OneFormWSeries<F> sigma = section_difference(lambda, w0);
    const OneFormWSeries<F> nabla = nabla_difference(lambda, w0);
    const int k = std::min(sigma.coeff.order(), nabla.coeff.order());
    if (!agree_through(sigma.coeff, -nabla.coeff, k)) {
        throw jet_error(errc::correspondence_violated, "sigma_2 - sigma_1 != -(a_2 - a_1)");
    }
    return {k};
}

} // namespace jetmoeb
