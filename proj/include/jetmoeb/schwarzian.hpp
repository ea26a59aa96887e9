#pragma once

#include <string>

#include "error.hpp"
#include "series.hpp"

namespace jetmoeb {

// Order n of vanishing of f' at the center (0 for an unbranched germ).
template <Field F>
int branch_order(const PowerJet<F>& f)
{
    const PowerJet<F> df = derivative(f);
    const int n = df.valuation();
    if (n > df.order()) {
        throw jet_error(errc::branch_order_mismatch, "f' vanishes to the full known order");
    }
    return n;
}

// f''/f' for a germ whose derivative vanishes to order exactly n. The result
// has a simple pole with residue n when n >= 1.
template <Field F>
LaurentJet<F> pre_schwarzian(const PowerJet<F>& f, int n)
{
    if (n < 0) {
        throw jet_error(errc::invalid_argument, "negative branch order");
    }
    const PowerJet<F> df = derivative(f);
    if (df.valuation() != n) {
        throw jet_error(errc::branch_order_mismatch,
                        "f' vanishes to order " + std::to_string(df.valuation()) + ", expected " + std::to_string(n));
    }
    const LaurentJet<F> d1(df);
    return derivative(d1) * laurent_reciprocal(d1);
}

template <Field F>
LaurentJet<F> pre_schwarzian(const PowerJet<F>& f)
{
    return pre_schwarzian(f, branch_order(f));
}

// S(f) = (f''/f')' - (f''/f')^2 / 2. At a branch point of order n >= 1 the
// double-pole coefficient is (1 - (n+1)^2) / 2.
template <Field F>
LaurentJet<F> schwarzian(const PowerJet<F>& f, int n)
{
    const LaurentJet<F> u = pre_schwarzian(f, n);
    return derivative(u) - from_rational<F>(Rational(1, 2)) * (u * u);
}

template <Field F>
LaurentJet<F> schwarzian(const PowerJet<F>& f)
{
    return schwarzian(f, branch_order(f));
}

// The germ F with z2 = F(z1), in the coordinate centered at z1(0).
template <Field F>
PowerJet<F> express_in_coordinate(const PowerJet<F>& z2, const PowerJet<F>& z1)
{
    if (z1.order() < 1 || is_zero(z1[1])) {
        throw jet_error(errc::coordinate_not_invertible, "z1 is branched at the center");
    }
    const PowerJet<F> centered = z1 - PowerJet<F>::constant(z1[0], z1.order());
    return compose(z2, compositional_inverse(centered));
}

// {z2, z1} = S(F) where z2 = F(z1).
template <Field F>
LaurentJet<F> relative_schwarzian(const PowerJet<F>& z2, const PowerJet<F>& z1)
{
    return schwarzian(express_in_coordinate(z2, z1));
}

} // namespace jetmoeb
