#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branching.hpp"
#include "fuchs.hpp"
#include "schwarzian.hpp"

// Affine structure on branching classes. Two classes at the same point differ
// by the (n-1)-jet of a holomorphic one-form (pre-Schwarzian mode) or of a
// quadratic differential with at most a simple pole (Schwarzian mode).

namespace jetmoeb {

enum class DeltaMode { preschwarzian, schwarzian };

inline std::string_view to_string(DeltaMode m)
{
    return m == DeltaMode::preschwarzian ? "preschwarzian" : "schwarzian";
}

inline DeltaMode parse_delta_mode(std::string_view s)
{
    if (s == "preschwarzian") {
        return DeltaMode::preschwarzian;
    }
    if (s == "schwarzian") {
        return DeltaMode::schwarzian;
    }
    throw parse_error("unknown mode '" + std::string(s) + "'");
}

// A direction of the torsor at one point. In pre-Schwarzian mode the
// coefficients are eta_0..eta_{n-1} of a one-form jet; in Schwarzian mode
// they are beta_{-1}..beta_{n-2} of a quadratic-differential jet.
template <Field F = ComplexExact>
struct ClassDelta {
    int n;
    DeltaMode mode;
    std::vector<F> coeffs;

    int lowest_index() const noexcept { return mode == DeltaMode::preschwarzian ? 0 : -1; }

    static ClassDelta zero(int n, DeltaMode mode)
    {
        return {n, mode, std::vector<F>(static_cast<std::size_t>(n), from_int<F>(0))};
    }

    friend ClassDelta operator+(const ClassDelta& x, const ClassDelta& y) { return combine(x, y, false); }
    friend ClassDelta operator-(const ClassDelta& x, const ClassDelta& y) { return combine(x, y, true); }

    friend bool operator==(const ClassDelta& x, const ClassDelta& y)
    {
        if (x.n != y.n || x.mode != y.mode || x.coeffs.size() != y.coeffs.size()) {
            return false;
        }
        for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
            if (!field_traits<F>::equal(x.coeffs[k], y.coeffs[k])) {
                return false;
            }
        }
        return true;
    }

private:
    static ClassDelta combine(const ClassDelta& x, const ClassDelta& y, bool subtract)
    {
        if (x.n != y.n || x.mode != y.mode) {
            throw jet_error(errc::order_mismatch, "deltas of different order or mode");
        }
        ClassDelta out = x;
        for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
            if (subtract) {
                out.coeffs[k] -= y.coeffs[k];
            } else {
                out.coeffs[k] += y.coeffs[k];
            }
        }
        return out;
    }
};

template <Field F = ComplexExact>
using OneFormDelta = ClassDelta<F>;
template <Field F = ComplexExact>
using QuadDiffDelta = ClassDelta<F>;

namespace detail {

// The germ moved to value 0: a translation for finite values, the
// reciprocal chart at infinity.
template <Field F>
PowerJet<F> centered_germ(const BranchedJet<F>& j)
{
    const MapGerm<F> g = to_germ(j);
    if (g.value.is_infinity()) {
        return g.jet;
    }
    return g.jet - PowerJet<F>::constant(g.value.value(), g.jet.order());
}

} // namespace detail

// Difference between two branched germs of the same order, from any orbit
// representatives: [g,z] - [f,z] or {g,z} - {f,z}, truncated to its (n-1)-jet.
template <Field F>
ClassDelta<F> diff_germs(const BranchedJet<F>& g, const BranchedJet<F>& f, DeltaMode mode)
{
    if (g.n() != f.n()) {
        throw jet_error(errc::order_mismatch, "branch orders differ");
    }
    const int n = f.n();
    const PowerJet<F> gj = detail::centered_germ(g);
    const PowerJet<F> fj = detail::centered_germ(f);
    std::vector<F> out;
    if (mode == DeltaMode::preschwarzian) {
        const LaurentJet<F> d = pre_schwarzian(gj, n) - pre_schwarzian(fj, n);
        for (int k = 0; k < n; ++k) {
            out.push_back(d.coeff(k));
        }
    } else {
        const LaurentJet<F> d = schwarzian(gj, n) - schwarzian(fj, n);
        for (int k = -1; k <= n - 2; ++k) {
            out.push_back(d.coeff(k));
        }
    }
    return {n, mode, std::move(out)};
}

template <Field F>
ClassDelta<F> diff_classes(const BranchingClass<F>& c2, const BranchingClass<F>& c1, DeltaMode mode)
{
    if (c2.n != c1.n) {
        throw jet_error(errc::order_mismatch, "branch orders differ");
    }
    return diff_germs(normal_form(c2), normal_form(c1), mode);
}

// The class c' with diff_classes(c', c) = d.
template <Field F>
BranchingClass<F> translate_class(const BranchingClass<F>& c, const ClassDelta<F>& d)
{
    if (c.n != d.n || static_cast<int>(d.coeffs.size()) != d.n) {
        throw jet_error(errc::order_mismatch, "class and delta have different orders");
    }
    std::vector<F> coords = d.mode == DeltaMode::preschwarzian ? d_map(c) : s_map(c);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        coords[k] += d.coeffs[k];
    }
    return d.mode == DeltaMode::preschwarzian ? d_map_inverse(c.n, coords) : s_map_inverse(c.n, coords);
}

template <Field F = ComplexExact>
struct DivisorPoint {
    std::string label;
    BranchingClass<F> cls;
};

// A branching class for each point of a divisor sum n_i y_i.
template <Field F = ComplexExact>
struct DivisorClassData {
    std::vector<DivisorPoint<F>> points;

    void validate() const
    {
        std::set<std::string> seen;
        for (const auto& p : points) {
            if (!seen.insert(p.label).second) {
                throw jet_error(errc::divisor_mismatch, "duplicate label '" + p.label + "'");
            }
            if (p.cls.n < 1) {
                throw jet_error(errc::divisor_mismatch, "branch order must be at least 1 at '" + p.label + "'");
            }
        }
    }

    // deg D = sum n_i.
    int degree() const
    {
        int d = 0;
        for (const auto& p : points) {
            d += p.cls.n;
        }
        return d;
    }
};

template <Field F = ComplexExact>
struct DivisorDelta {
    DeltaMode mode;
    std::vector<std::pair<std::string, ClassDelta<F>>> points;

    int dimension() const
    {
        int d = 0;
        for (const auto& [label, delta] : points) {
            d += static_cast<int>(delta.coeffs.size());
        }
        return d;
    }
};

namespace detail {

template <class Point, class Getter>
const Point& find_label(const std::vector<Point>& pts, const std::string& label, Getter get)
{
    for (const auto& p : pts) {
        if (get(p) == label) {
            return p;
        }
    }
    throw jet_error(errc::divisor_mismatch, "label '" + label + "' missing");
}

} // namespace detail

// Pointwise diff_classes(a_i, b_i), in the order of a's points.
template <Field F>
DivisorDelta<F> divisor_diff(const DivisorClassData<F>& a, const DivisorClassData<F>& b, DeltaMode mode)
{
    a.validate();
    b.validate();
    if (a.points.size() != b.points.size()) {
        throw jet_error(errc::divisor_mismatch, "divisors have different supports");
    }
    DivisorDelta<F> out{mode, {}};
    for (const auto& p : a.points) {
        const auto& q = detail::find_label(b.points, p.label, [](const DivisorPoint<F>& x) { return x.label; });
        if (p.cls.n != q.cls.n) {
            throw jet_error(errc::divisor_mismatch, "branch orders differ at '" + p.label + "'");
        }
        out.points.emplace_back(p.label, diff_classes(p.cls, q.cls, mode));
    }
    return out;
}

template <Field F>
DivisorClassData<F> divisor_translate(const DivisorClassData<F>& a, const DivisorDelta<F>& d)
{
    a.validate();
    if (a.points.size() != d.points.size()) {
        throw jet_error(errc::divisor_mismatch, "delta does not cover the divisor");
    }
    DivisorClassData<F> out;
    for (const auto& p : a.points) {
        using Entry = std::pair<std::string, ClassDelta<F>>;
        const auto& e = detail::find_label(d.points, p.label, [](const Entry& x) { return x.first; });
        if (e.second.n != p.cls.n) {
            throw jet_error(errc::divisor_mismatch, "branch orders differ at '" + p.label + "'");
        }
        out.points.push_back({p.label, translate_class(p.cls, e.second)});
    }
    return out;
}

} // namespace jetmoeb
