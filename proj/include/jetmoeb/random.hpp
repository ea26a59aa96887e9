#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <vector>

#include "branching.hpp"
#include "complex_exact.hpp"
#include "field.hpp"
#include "moebius.hpp"
#include "rational.hpp"
#include "series.hpp"

// Seeded generators of small exact test data. Draws use only the raw
// mt19937_64 stream, whose output the standard fixes, so a seed gives the
// same data on every platform.

namespace jetmoeb {

class TestRng {
public:
    explicit TestRng(std::uint64_t seed = 0) : eng_(seed) {}

    // Uniform in [lo, hi].
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    bool coin() { return (eng_() & 1U) != 0; }

    // p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Rational rational(long num_bound = 5, long den_bound = 4)
    {
        return make_rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
    }

    Rational nonzero_rational(long num_bound = 5, long den_bound = 4)
    {
        Rational q;
        do {
            q = rational(num_bound, den_bound);
        } while (q == 0);
        return q;
    }

    ComplexExact complex() { return {rational(), coin() ? rational() : Rational(0)}; }

    ComplexExact nonzero_complex()
    {
        ComplexExact z;
        do {
            z = complex();
        } while (z.is_zero());
        return z;
    }

private:
    std::mt19937_64 eng_;
};

// Carries an exact Gaussian rational into any backend.
template <Field F>
F embed(const ComplexExact& z)
{
    if constexpr (std::same_as<F, ComplexExact>) {
        return z;
    } else {
        return F(z.re().get_d(), z.im().get_d());
    }
}

template <Field F>
F random_scalar(TestRng& rng)
{
    return embed<F>(rng.complex());
}

template <Field F>
F random_nonzero(TestRng& rng)
{
    return embed<F>(rng.nonzero_complex());
}

template <Field F>
std::vector<F> random_scalars(TestRng& rng, int count)
{
    std::vector<F> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        v.push_back(random_scalar<F>(rng));
    }
    return v;
}

template <Field F>
PowerJet<F> random_jet(TestRng& rng, int order)
{
    return PowerJet<F>(random_scalars<F>(rng, order + 1));
}

// A germ vanishing at 0 with nonzero linear term.
template <Field F>
PowerJet<F> random_unbranched(TestRng& rng, int order, bool centered = true)
{
    std::vector<F> c = random_scalars<F>(rng, order + 1);
    if (centered) {
        c[0] = from_int<F>(0);
    }
    c[1] = random_nonzero<F>(rng);
    return PowerJet<F>(std::move(c));
}

template <Field F>
Moebius<F> random_moebius(TestRng& rng)
{
    for (;;) {
        const F a = random_scalar<F>(rng);
        const F b = random_scalar<F>(rng);
        const F c = random_scalar<F>(rng);
        const F d = random_scalar<F>(rng);
        if (!is_zero(a * d - b * c)) {
            return Moebius<F>(a, b, c, d);
        }
    }
}

// Moebius maps sending `p` to infinity.
template <Field F>
Moebius<F> random_moebius_to_infinity(TestRng& rng, const F& p)
{
    const F c = random_nonzero<F>(rng);
    for (;;) {
        const F a = random_scalar<F>(rng);
        const F b = random_scalar<F>(rng);
        const F d = -(c * p);
        if (!is_zero(a * d - b * c)) {
            return Moebius<F>(a, b, c, d);
        }
    }
}

template <Field F>
BranchedJet<F> random_branched(TestRng& rng, int n, bool allow_infinity = true)
{
    std::vector<F> a = random_scalars<F>(rng, n + 2);
    a[0] = random_nonzero<F>(rng);
    if (allow_infinity && rng.uniform(0, 4) == 0) {
        return BranchedJet<F>(n, PointCP1<F>::infinity(), std::move(a));
    }
    return BranchedJet<F>(n, PointCP1<F>(random_scalar<F>(rng)), std::move(a));
}

template <Field F>
BranchingClass<F> random_class(TestRng& rng, int n)
{
    return {n, random_scalars<F>(rng, n)};
}

} // namespace jetmoeb
