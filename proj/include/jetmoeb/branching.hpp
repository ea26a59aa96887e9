#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "moebius.hpp"
#include "series.hpp"

namespace jetmoeb {

// A 2(n+1)-jet of an n-fold ramified map-germ,
//   a0 + a_{n+1} z^{n+1} + ... + a_{2(n+1)} z^{2(n+1)}.
// `a` holds a_{n+1}..a_{2(n+1)}. When the value is infinite, `a` holds the
// coefficients of the reciprocal map (whose value is 0).
template <Field F = ComplexExact>
class BranchedJet {
public:
    BranchedJet(int n, PointCP1<F> value, std::vector<F> a) : n_(n), value_(std::move(value)), a_(std::move(a))
    {
        if (n_ < 1) {
            throw jet_error(errc::invalid_argument, "branch order must be at least 1");
        }
        if (static_cast<int>(a_.size()) != n_ + 2) {
            throw jet_error(errc::invalid_argument, "expected " + std::to_string(n_ + 2) + " coefficients a_{n+1}..a_{2(n+1)}");
        }
        if (is_zero(a_.front())) {
            throw jet_error(errc::branch_order_mismatch, "a_{n+1} must be nonzero");
        }
    }

    int n() const noexcept { return n_; }
    const PointCP1<F>& value() const noexcept { return value_; }
    const std::vector<F>& a() const noexcept { return a_; }

    // Coefficient of z^k for n+1 <= k <= 2(n+1).
    const F& coeff(int k) const { return a_.at(static_cast<std::size_t>(k - n_ - 1)); }

    int jet_order() const noexcept { return 2 * (n_ + 1); }

    friend bool operator==(const BranchedJet& x, const BranchedJet& y)
    {
        if (x.n_ != y.n_ || !(x.value_ == y.value_)) {
            return false;
        }
        for (std::size_t k = 0; k < x.a_.size(); ++k) {
            if (!field_traits<F>::equal(x.a_[k], y.a_[k])) {
                return false;
            }
        }
        return true;
    }

private:
    int n_;
    PointCP1<F> value_;
    std::vector<F> a_;
};

// A point of C^n labelling a G-orbit of branched jets.
template <Field F = ComplexExact>
struct BranchingClass {
    int n;
    std::vector<F> c;

    friend bool operator==(const BranchingClass& x, const BranchingClass& y)
    {
        if (x.n != y.n || x.c.size() != y.c.size()) {
            return false;
        }
        for (std::size_t k = 0; k < x.c.size(); ++k) {
            if (!field_traits<F>::equal(x.c[k], y.c[k])) {
                return false;
            }
        }
        return true;
    }
};

template <Field F>
MapGerm<F> to_germ(const BranchedJet<F>& j)
{
    std::vector<F> c(static_cast<std::size_t>(j.jet_order()) + 1, from_int<F>(0));
    if (!j.value().is_infinity()) {
        c[0] = j.value().value();
    }
    for (int k = j.n() + 1; k <= j.jet_order(); ++k) {
        c[static_cast<std::size_t>(k)] = j.coeff(k);
    }
    return {PowerJet<F>(std::move(c)), j.value()};
}

// Reads a germ back as an n-fold branched jet; z^1..z^n must vanish.
template <Field F>
BranchedJet<F> from_germ(const MapGerm<F>& g, int n)
{
    check_chart(g.jet, g.value);
    if (g.jet.order() < 2 * (n + 1)) {
        throw jet_error(errc::insufficient_order, "germ is not known to order 2(n+1)");
    }
    for (int k = 1; k <= n; ++k) {
        if (!is_zero(g.jet[k])) {
            throw jet_error(errc::branch_order_mismatch, "coefficient of z^" + std::to_string(k) + " is nonzero");
        }
    }
    std::vector<F> a;
    for (int k = n + 1; k <= 2 * (n + 1); ++k) {
        a.push_back(g.jet[k]);
    }
    return BranchedJet<F>(n, g.value, std::move(a));
}

// Postcomposition by g in G = PSL(2, C).
template <Field F>
BranchedJet<F> act(const Moebius<F>& g, const BranchedJet<F>& j)
{
    return from_germ(act_on_powerjet(g, to_germ(j)), j.n());
}

// Action of h = (alpha 0; gamma delta) in H on R^0:
//   (0, r a_{n+1}, ..., r a_{2n+1}, r a_{2(n+1)} - (alpha gamma / delta^2) a_{n+1}^2),
// with r = alpha / delta.
template <Field F>
BranchedJet<F> h_act(const F& alpha, const F& gamma, const F& delta, const BranchedJet<F>& j)
{
    if (j.value().is_infinity() || !is_zero(j.value().value())) {
        throw jet_error(errc::not_in_r_zero, "h_act needs a jet with value 0");
    }
    if (is_zero(alpha) || is_zero(delta)) {
        throw jet_error(errc::invalid_moebius, "alpha * delta must be nonzero");
    }
    const F ratio = alpha / delta;
    std::vector<F> a;
    a.reserve(j.a().size());
    for (std::size_t k = 0; k + 1 < j.a().size(); ++k) {
        a.push_back(ratio * j.a()[k]);
    }
    const F& lead = j.a().front();
    a.push_back(ratio * j.a().back() - alpha * gamma / (delta * delta) * lead * lead);
    return BranchedJet<F>(j.n(), j.value(), std::move(a));
}

// pi(0, a_{n+1}, ..., a_{2(n+1)}) = (a_{n+2}/a_{n+1}, ..., a_{2n+1}/a_{n+1}).
// A finite value is moved to 0 by a translation, which leaves the a_k alone;
// a value at infinity is moved to 0 by inversion, which turns the jet into its
// reciprocal-chart coefficients, already stored.
template <Field F>
BranchingClass<F> class_of(const BranchedJet<F>& j)
{
    const F inv_lead = j.a().front().inverse();
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(j.n()));
    for (int k = j.n() + 2; k <= 2 * j.n() + 1; ++k) {
        c.push_back(j.coeff(k) * inv_lead);
    }
    return {j.n(), std::move(c)};
}

// The orbit representative (0, 1, c_1, ..., c_n, 0), i.e. the germ
// z^{n+1} + c_1 z^{n+2} + ... + c_n z^{2n+1}.
template <Field F>
BranchedJet<F> normal_form(const BranchingClass<F>& cls)
{
    if (cls.n < 1 || static_cast<int>(cls.c.size()) != cls.n) {
        throw jet_error(errc::invalid_argument, "branching class must carry n >= 1 coordinates");
    }
    std::vector<F> a;
    a.reserve(cls.c.size() + 2);
    a.push_back(from_int<F>(1));
    a.insert(a.end(), cls.c.begin(), cls.c.end());
    a.push_back(from_int<F>(0));
    return BranchedJet<F>(cls.n, PointCP1<F>(from_int<F>(0)), std::move(a));
}

// Class of a (2n+1)-jet, using that the affine group acts on these with the
// same orbits. The constant term is irrelevant (translation).
template <Field F>
BranchingClass<F> class_from_affine_jet(const PowerJet<F>& j, int n)
{
    if (n < 1) {
        throw jet_error(errc::invalid_argument, "branch order must be at least 1");
    }
    if (j.order() < 2 * n + 1) {
        throw jet_error(errc::insufficient_order, "need the jet through index 2n+1");
    }
    for (int k = 1; k <= n; ++k) {
        if (!is_zero(j[k])) {
            throw jet_error(errc::branch_order_mismatch, "coefficient of z^" + std::to_string(k) + " is nonzero");
        }
    }
    if (is_zero(j[n + 1])) {
        throw jet_error(errc::branch_order_mismatch, "a_{n+1} = 0");
    }
    const F inv_lead = j[n + 1].inverse();
    std::vector<F> c;
    for (int k = n + 2; k <= 2 * n + 1; ++k) {
        c.push_back(j[k] * inv_lead);
    }
    return {n, std::move(c)};
}

// alpha o phi for an unbranched germ alpha at the value of phi. alpha is
// written in the chart the jet uses at its value: u = w - value when finite,
// u = 1/w at infinity. The result has the finite value alpha(0).
template <Field F>
BranchedJet<F> postcompose_germ(const BranchedJet<F>& j, const PowerJet<F>& alpha)
{
    if (alpha.order() < 1 || is_zero(alpha[1])) {
        throw jet_error(errc::not_a_biholomorphism_germ, "alpha is branched at the value");
    }
    const MapGerm<F> g = to_germ(j);
    const PowerJet<F> local = j.value().is_infinity()
                                  ? g.jet
                                  : g.jet - PowerJet<F>::constant(j.value().value(), g.jet.order());
    const PowerJet<F> image = compose(alpha, local);
    if (image.order() < j.jet_order()) {
        throw jet_error(errc::insufficient_order, "alpha is not known to enough order");
    }
    const PowerJet<F> trimmed = image.truncated(j.jet_order());
    return from_germ(MapGerm<F>{trimmed, PointCP1<F>(trimmed[0])}, j.n());
}

} // namespace jetmoeb
