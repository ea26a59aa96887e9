#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

// Truncated power series and finite-principal-part Laurent series in a
// centered coordinate u = z - z0. The base point never lives in the series.
//
// A jet of order K carries exactly the coefficients of indices <= K; every
// operation propagates K pessimistically so that a reported coefficient is
// always the true one. Asking for an index past K throws OrderExceeded.

namespace jetmoeb {

namespace detail {

// Coefficients of (a * b) at indices lo..hi, where a lives on la..la+|a|-1
// and b on lb..lb+|b|-1. Missing coefficients are treated as zero; callers
// pick hi so that this does not matter.
template <class F>
std::vector<F> product_range(const std::vector<F>& a, int la, const std::vector<F>& b, int lb, int lo, int hi)
{
    std::vector<F> out;
    if (hi < lo) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    const int ha = la + static_cast<int>(a.size()) - 1;
    const int hb = lb + static_cast<int>(b.size()) - 1;
    for (int m = lo; m <= hi; ++m) {
        F acc = from_int<F>(0);
        const int i0 = std::max(la, m - hb);
        const int i1 = std::min(ha, m - lb);
        for (int i = i0; i <= i1; ++i) {
            const F& ai = a[static_cast<std::size_t>(i - la)];
            if (is_zero(ai)) {
                continue;
            }
            acc += ai * b[static_cast<std::size_t>(m - i - lb)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// Index of the first nonzero coefficient, or one past the order when every
// known coefficient vanishes (the jet is then O(u^(order+1))).
template <class F>
int first_nonzero(const std::vector<F>& c, int low)
{
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!is_zero(c[k])) {
            return low + static_cast<int>(k);
        }
    }
    return low + static_cast<int>(c.size());
}

inline int checked_sum(long a, long b)
{
    const long s = a + b;
    return static_cast<int>(std::min<long>(s, std::numeric_limits<int>::max() / 4));
}

} // namespace detail

template <Field F = ComplexExact>
class PowerJet {
public:
    using value_type = F;

    // Coefficients of indices 0..K; the order is K = coeffs.size() - 1.
    explicit PowerJet(std::vector<F> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw jet_error(errc::insufficient_order, "a power jet needs at least the constant coefficient");
        }
    }

    static PowerJet zero(int order) { return PowerJet(std::vector<F>(checked_size(order), from_int<F>(0))); }

    static PowerJet constant(const F& value, int order)
    {
        PowerJet j = zero(order);
        j.c_[0] = value;
        return j;
    }

    static PowerJet monomial(int power, const F& coeff, int order)
    {
        PowerJet j = zero(order);
        if (power <= order) {
            j.c_[static_cast<std::size_t>(power)] = coeff;
        }
        return j;
    }

    // The centered coordinate u itself.
    static PowerJet identity(int order) { return monomial(1, from_int<F>(1), order); }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const F& operator[](int k) const
    {
        if (k < 0) {
            throw jet_error(errc::invalid_argument, "negative index into a power jet");
        }
        if (k > order()) {
            throw jet_error(errc::order_exceeded,
                            "coefficient " + std::to_string(k) + " requested from a jet of order " +
                                std::to_string(order()));
        }
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<F>& coeffs() const noexcept { return c_; }

    int valuation() const { return detail::first_nonzero(c_, 0); }

    PowerJet truncated(int order) const
    {
        if (order > this->order()) {
            throw jet_error(errc::order_exceeded, "cannot extend a jet past its valid order");
        }
        return PowerJet(std::vector<F>(c_.begin(), c_.begin() + order + 1));
    }

    PowerJet with_coeff(int k, F value) const
    {
        PowerJet j = *this;
        j.c_.at(static_cast<std::size_t>(k)) = std::move(value);
        return j;
    }

    friend bool operator==(const PowerJet& a, const PowerJet& b)
    {
        if (a.order() != b.order()) {
            return false;
        }
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            if (!field_traits<F>::equal(a.c_[k], b.c_[k])) {
                return false;
            }
        }
        return true;
    }

    PowerJet& operator+=(const PowerJet& o)
    {
        c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }

    PowerJet& operator-=(const PowerJet& o)
    {
        c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }

    PowerJet& operator*=(const F& s)
    {
        for (auto& x : c_) {
            x *= s;
        }
        return *this;
    }

    friend PowerJet operator+(PowerJet a, const PowerJet& b) { return a += b; }
    friend PowerJet operator-(PowerJet a, const PowerJet& b) { return a -= b; }
    friend PowerJet operator*(PowerJet a, const F& s) { return a *= s; }
    friend PowerJet operator*(const F& s, PowerJet a) { return a *= s; }
    friend PowerJet operator-(PowerJet a)
    {
        for (auto& x : a.c_) {
            x = -x;
        }
        return a;
    }

    friend PowerJet operator*(const PowerJet& a, const PowerJet& b)
    {
        const int va = a.valuation();
        const int vb = b.valuation();
        const int order = std::min(detail::checked_sum(a.order(), vb), detail::checked_sum(b.order(), va));
        return PowerJet(detail::product_range(a.c_, 0, b.c_, 0, 0, order));
    }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) {
            throw jet_error(errc::insufficient_order, "negative truncation order");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<F> c_;
};

template <Field F = ComplexExact>
class LaurentJet {
public:
    using value_type = F;

    // Coefficients of indices -pole..K. Leading zeros in the principal part
    // are stripped so that a nonzero jet with pole > 0 has a nonzero
    // coefficient at -pole.
    LaurentJet(int pole, std::vector<F> coeffs) : pole_(pole), c_(std::move(coeffs))
    {
        if (pole_ < 0) {
            throw jet_error(errc::invalid_argument, "negative pole order");
        }
        if (static_cast<int>(c_.size()) - 1 - pole_ < 0) {
            throw jet_error(errc::insufficient_order, "Laurent jet must be known at least through index 0");
        }
        std::size_t strip = 0;
        while (pole_ > 0 && is_zero(c_[strip])) {
            --pole_;
            ++strip;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(strip));
    }

    LaurentJet(const PowerJet<F>& p) : LaurentJet(0, p.coeffs()) {} // NOLINT: implicit by intent

    int pole_order() const noexcept { return pole_; }
    int order() const noexcept { return static_cast<int>(c_.size()) - 1 - pole_; }
    int low() const noexcept { return -pole_; }

    F coeff(int k) const
    {
        if (k > order()) {
            throw jet_error(errc::order_exceeded,
                            "coefficient " + std::to_string(k) + " requested from a jet of order " +
                                std::to_string(order()));
        }
        if (k < -pole_) {
            return from_int<F>(0);
        }
        return c_[static_cast<std::size_t>(k + pole_)];
    }

    F operator[](int k) const { return coeff(k); }

    // Listed from index -pole upward.
    const std::vector<F>& coeffs() const noexcept { return c_; }

    int valuation() const { return detail::first_nonzero(c_, -pole_); }

    bool is_zero_jet() const { return valuation() > order(); }

    PowerJet<F> to_power() const
    {
        if (pole_ != 0) {
            throw jet_error(errc::invalid_argument, "Laurent jet has a pole");
        }
        return PowerJet<F>(c_);
    }

    LaurentJet truncated(int order) const
    {
        if (order > this->order()) {
            throw jet_error(errc::order_exceeded, "cannot extend a jet past its valid order");
        }
        return LaurentJet(pole_, std::vector<F>(c_.begin(), c_.begin() + order + pole_ + 1));
    }

    friend bool operator==(const LaurentJet& a, const LaurentJet& b)
    {
        if (a.pole_ != b.pole_ || a.order() != b.order()) {
            return false;
        }
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            if (!field_traits<F>::equal(a.c_[k], b.c_[k])) {
                return false;
            }
        }
        return true;
    }

    friend LaurentJet operator+(const LaurentJet& a, const LaurentJet& b) { return combine(a, b, false); }
    friend LaurentJet operator-(const LaurentJet& a, const LaurentJet& b) { return combine(a, b, true); }

    friend LaurentJet operator-(LaurentJet a)
    {
        for (auto& x : a.c_) {
            x = -x;
        }
        return a;
    }

    friend LaurentJet operator*(LaurentJet a, const F& s)
    {
        for (auto& x : a.c_) {
            x *= s;
        }
        return LaurentJet(a.pole_, std::move(a.c_));
    }
    friend LaurentJet operator*(const F& s, LaurentJet a) { return std::move(a) * s; }

    friend LaurentJet operator*(const LaurentJet& a, const LaurentJet& b)
    {
        const int va = a.valuation();
        const int vb = b.valuation();
        const int order = std::min(detail::checked_sum(a.order(), vb), detail::checked_sum(b.order(), va));
        if (order < 0) {
            throw jet_error(errc::insufficient_order, "product has no valid coefficient at index 0");
        }
        const int lo = a.low() + b.low();
        return LaurentJet(-lo, detail::product_range(a.c_, a.low(), b.c_, b.low(), lo, order));
    }

private:
    static LaurentJet combine(const LaurentJet& a, const LaurentJet& b, bool subtract)
    {
        const int order = std::min(a.order(), b.order());
        const int pole = std::max(a.pole_, b.pole_);
        std::vector<F> c;
        c.reserve(static_cast<std::size_t>(order + pole + 1));
        for (int k = -pole; k <= order; ++k) {
            F x = a.coeff(k);
            if (subtract) {
                x -= b.coeff(k);
            } else {
                x += b.coeff(k);
            }
            c.push_back(std::move(x));
        }
        return LaurentJet(pole, std::move(c));
    }

    int pole_;
    std::vector<F> c_;
};

template <Field F>
LaurentJet<F> to_laurent(const PowerJet<F>& p)
{
    return LaurentJet<F>(p);
}

// ---------------------------------------------------------------------------
// Calculus

template <Field F>
PowerJet<F> derivative(const PowerJet<F>& j)
{
    if (j.order() < 1) {
        throw jet_error(errc::insufficient_order, "derivative of an order-0 jet");
    }
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(j.order()));
    for (int k = 1; k <= j.order(); ++k) {
        c.push_back(from_int<F>(k) * j[k]);
    }
    return PowerJet<F>(std::move(c));
}

template <Field F>
LaurentJet<F> derivative(const LaurentJet<F>& j)
{
    if (j.order() < 1) {
        throw jet_error(errc::insufficient_order, "derivative of an order-0 jet");
    }
    // u^k -> k u^(k-1); the new lowest index is low - 1.
    const int lo = j.low() - 1;
    std::vector<F> c;
    for (int m = lo; m <= j.order() - 1; ++m) {
        c.push_back(from_int<F>(m + 1) * j.coeff(m + 1));
    }
    return LaurentJet<F>(-lo, std::move(c));
}

template <Field F>
PowerJet<F> integrate(const PowerJet<F>& j)
{
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(j.order()) + 2);
    c.push_back(from_int<F>(0));
    for (int k = 0; k <= j.order(); ++k) {
        c.push_back(j[k] / from_int<F>(k + 1));
    }
    return PowerJet<F>(std::move(c));
}

// Antiderivative with zero constant term. A nonzero u^-1 coefficient has no
// Laurent antiderivative.
template <Field F>
LaurentJet<F> integrate(const LaurentJet<F>& j)
{
    if (j.pole_order() >= 1 && !is_zero(j.coeff(-1))) {
        throw jet_error(errc::residue_obstruction, "nonzero residue " + std::string("at u^-1"));
    }
    const int lo = std::min(j.low() + 1, 0);
    std::vector<F> c;
    for (int m = lo; m <= j.order() + 1; ++m) {
        if (m == 0) {
            c.push_back(from_int<F>(0));
        } else {
            c.push_back(j.coeff(m - 1) / from_int<F>(m));
        }
    }
    return LaurentJet<F>(-lo, std::move(c));
}

// ---------------------------------------------------------------------------
// Division

template <Field F>
PowerJet<F> reciprocal(const PowerJet<F>& j)
{
    if (is_zero(j[0])) {
        throw jet_error(errc::division_by_zero_series, "reciprocal of a jet with zero constant term");
    }
    const F inv0 = j[0].inverse();
    std::vector<F> r;
    r.reserve(j.coeffs().size());
    r.push_back(inv0);
    for (int m = 1; m <= j.order(); ++m) {
        F acc = from_int<F>(0);
        for (int k = 1; k <= m; ++k) {
            if (!is_zero(j[k])) {
                acc += j[k] * r[static_cast<std::size_t>(m - k)];
            }
        }
        r.push_back(-(acc * inv0));
    }
    return PowerJet<F>(std::move(r));
}

// For j = u^v * w with w a unit known through index K - v, the reciprocal is
// u^-v * w^-1, valid through index K - 2v.
template <Field F>
LaurentJet<F> laurent_reciprocal(const LaurentJet<F>& j)
{
    const int v = j.valuation();
    if (v > j.order()) {
        throw jet_error(errc::division_by_zero_series, "reciprocal of a jet with no known nonzero coefficient");
    }
    const int result_order = j.order() - 2 * v;
    if (result_order < 0) {
        throw jet_error(errc::insufficient_order, "reciprocal would have no valid coefficient at index 0");
    }
    std::vector<F> unit;
    for (int k = v; k <= j.order(); ++k) {
        unit.push_back(j.coeff(k));
    }
    std::vector<F> inv = reciprocal(PowerJet<F>(std::move(unit))).coeffs();
    // inv lives on indices -v .. -v + (K - v); keep through result_order.
    const int lo = -v;
    inv.resize(static_cast<std::size_t>(result_order - lo + 1));
    if (lo > 0) {
        std::vector<F> padded(static_cast<std::size_t>(lo), from_int<F>(0));
        padded.insert(padded.end(), inv.begin(), inv.end());
        padded.resize(static_cast<std::size_t>(result_order + 1));
        return LaurentJet<F>(0, std::move(padded));
    }
    return LaurentJet<F>(-lo, std::move(inv));
}

template <Field F>
LaurentJet<F> operator/(const LaurentJet<F>& a, const LaurentJet<F>& b)
{
    return a * laurent_reciprocal(b);
}

// ---------------------------------------------------------------------------
// Composition

// outer(inner). The inner jet is a centered map-germ: its constant term must
// vanish, since outer is expanded in the coordinate centered at inner(0).
template <Field F>
PowerJet<F> compose(const PowerJet<F>& outer, const PowerJet<F>& inner)
{
    if (!is_zero(inner[0])) {
        throw jet_error(errc::center_mismatch, "inner jet must vanish at the center; re-center the outer jet");
    }
    const int v = inner.valuation();
    int outer_v = outer.order() + 1;
    for (int k = 1; k <= outer.order(); ++k) {
        if (!is_zero(outer[k])) {
            outer_v = k;
            break;
        }
    }
    // Dropped outer terms start at u^((Ko+1)v); the inner truncation error is
    // damped by outer'(inner), which has valuation (outer_v - 1) v.
    const long from_outer = static_cast<long>(outer.order() + 1) * v - 1;
    const long from_inner = inner.order() + static_cast<long>(outer_v - 1) * v;
    const int order = static_cast<int>(std::min(from_outer, from_inner));

    std::vector<F> in = inner.coeffs();
    in.resize(static_cast<std::size_t>(order) + 1, from_int<F>(0));

    std::vector<F> result(static_cast<std::size_t>(order) + 1, from_int<F>(0));
    result[0] = outer[0];
    std::vector<F> power{from_int<F>(1)};
    for (int k = 1; k <= outer.order() && static_cast<long>(k) * v <= order; ++k) {
        power = detail::product_range(power, 0, in, 0, 0, order);
        if (is_zero(outer[k])) {
            continue;
        }
        for (int m = 0; m <= order; ++m) {
            if (!is_zero(power[static_cast<std::size_t>(m)])) {
                result[static_cast<std::size_t>(m)] += outer[k] * power[static_cast<std::size_t>(m)];
            }
        }
    }
    return PowerJet<F>(std::move(result));
}

// The germ g with j(g(u)) = g(j(u)) = u, to the order of j.
template <Field F>
PowerJet<F> compositional_inverse(const PowerJet<F>& j)
{
    if (j.order() < 1 || !is_zero(j[0]) || is_zero(j[1])) {
        throw jet_error(errc::not_invertible_germ, "compositional inverse needs c0 = 0 and c1 != 0");
    }
    const int order = j.order();
    const F inv1 = j[1].inverse();
    std::vector<F> g(static_cast<std::size_t>(order) + 1, from_int<F>(0));
    g[1] = inv1;
    for (int m = 2; m <= order; ++m) {
        // With g known through m-1 and g_m = 0, the u^m coefficient of j(g)
        // equals residual + c1 g_m.
        const PowerJet<F> trial = compose(j.truncated(m), PowerJet<F>(std::vector<F>(g.begin(), g.begin() + m + 1)));
        g[static_cast<std::size_t>(m)] = -(trial[m] * inv1);
    }
    return PowerJet<F>(std::move(g));
}

// exp of a jet with zero constant term, via E' = j' E.
template <Field F>
PowerJet<F> exp(const PowerJet<F>& j)
{
    if (!is_zero(j[0])) {
        throw jet_error(errc::unsupported_constant_term, "exp needs a jet with zero constant term");
    }
    std::vector<F> e;
    e.reserve(j.coeffs().size());
    e.push_back(from_int<F>(1));
    for (int m = 1; m <= j.order(); ++m) {
        F acc = from_int<F>(0);
        for (int k = 1; k <= m; ++k) {
            if (!is_zero(j[k])) {
                acc += from_int<F>(k) * j[k] * e[static_cast<std::size_t>(m - k)];
            }
        }
        e.push_back(acc / from_int<F>(m));
    }
    return PowerJet<F>(std::move(e));
}

// True when a and b agree through index k (both must be known that far).
template <Field F>
bool agree_through(const LaurentJet<F>& a, const LaurentJet<F>& b, int k)
{
    if (a.order() < k || b.order() < k) {
        return false;
    }
    for (int m = std::min(a.low(), b.low()); m <= k; ++m) {
        if (!field_traits<F>::equal(a.coeff(m), b.coeff(m))) {
            return false;
        }
    }
    return true;
}

template <Field F>
bool agree_through(const PowerJet<F>& a, const PowerJet<F>& b, int k)
{
    return agree_through(LaurentJet<F>(a), LaurentJet<F>(b), k);
}

} // namespace jetmoeb
