#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "branching.hpp"
#include "complex_exact.hpp"
#include "connections.hpp"
#include "error.hpp"
#include "field.hpp"
#include "fuchs.hpp"
#include "moebius.hpp"
#include "series.hpp"
#include "torsor.hpp"

// JSON forms of every library value. Rationals travel as strings "p/q" (or
// "p" when integral) so no reader ever rounds them; a complex number is its
// real part as such a string when real, otherwise {"re": ..., "im": ...}.
// Encoding an exact value and decoding it again is the identity.

namespace jetmoeb::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object()) {
        throw parse_error(std::string("expected an object with field '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw parse_error(std::string("missing field '") + key + "'");
    }
    return *it;
}

inline const json& require_array(const json& j, const char* key)
{
    const json& a = require(j, key);
    if (!a.is_array()) {
        throw parse_error(std::string("field '") + key + "' must be an array");
    }
    return a;
}

inline int require_int(const json& j, const char* key)
{
    const json& v = require(j, key);
    if (!v.is_number_integer()) {
        throw parse_error(std::string("field '") + key + "' must be an integer");
    }
    const auto x = v.get<long long>();
    if (x < -1'000'000 || x > 1'000'000) {
        throw parse_error(std::string("field '") + key + "' out of range");
    }
    return static_cast<int>(x);
}

inline std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline double parse_double(std::string_view s)
{
    if (s.find('/') != std::string_view::npos) {
        return parse_rational(s).get_d();
    }
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw parse_error("malformed number '" + std::string(s) + "'");
    }
    return x;
}

} // namespace detail

inline json rational_to_json(const Rational& q)
{
    return to_string(q);
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(mpz_class(j.dump(), 10));
    }
    throw parse_error("a rational must be a string \"p/q\" or an integer");
}

// Scalar codecs, one per backend.
template <class F>
struct scalar_codec;

template <>
struct scalar_codec<ComplexExact> {
    static json encode(const ComplexExact& z)
    {
        if (z.is_real()) {
            return rational_to_json(z.re());
        }
        return json{{"re", rational_to_json(z.re())}, {"im", rational_to_json(z.im())}};
    }

    static ComplexExact decode(const json& j)
    {
        if (j.is_object()) {
            return ComplexExact(rational_from_json(detail::require(j, "re")), rational_from_json(detail::require(j, "im")));
        }
        return ComplexExact(rational_from_json(j));
    }
};

template <double Tol>
struct scalar_codec<ApproxComplex<Tol>> {
    static json encode(const ApproxComplex<Tol>& z)
    {
        if (z.im() == 0.0) {
            return detail::format_double(z.re());
        }
        return json{{"re", detail::format_double(z.re())}, {"im", detail::format_double(z.im())}};
    }

    static double part(const json& j)
    {
        if (j.is_string()) {
            return detail::parse_double(j.get<std::string>());
        }
        if (j.is_number()) {
            return j.get<double>();
        }
        throw parse_error("a number must be a string or a JSON number");
    }

    static ApproxComplex<Tol> decode(const json& j)
    {
        if (j.is_object()) {
            return {part(detail::require(j, "re")), part(detail::require(j, "im"))};
        }
        return {part(j), 0.0};
    }
};

template <class F>
json scalar_to_json(const F& x)
{
    return scalar_codec<F>::encode(x);
}

template <class F>
F scalar_from_json(const json& j)
{
    return scalar_codec<F>::decode(j);
}

template <class F>
json scalars_to_json(const std::vector<F>& xs)
{
    json a = json::array();
    for (const auto& x : xs) {
        a.push_back(scalar_to_json(x));
    }
    return a;
}

template <class F>
std::vector<F> scalars_from_json(const json& a)
{
    if (!a.is_array()) {
        throw parse_error("expected an array of numbers");
    }
    std::vector<F> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        out.push_back(scalar_from_json<F>(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jets: {"pole": p, "order": K, "coeffs": [c_{-p}, ..., c_K]}

template <class F>
json jet_to_json(const LaurentJet<F>& j)
{
    return json{{"pole", j.pole_order()}, {"order", j.order()}, {"coeffs", scalars_to_json(j.coeffs())}};
}

template <class F>
json jet_to_json(const PowerJet<F>& j)
{
    return json{{"pole", 0}, {"order", j.order()}, {"coeffs", scalars_to_json(j.coeffs())}};
}

template <class F>
LaurentJet<F> laurent_from_json(const json& j)
{
    const int pole = detail::require_int(j, "pole");
    const int order = detail::require_int(j, "order");
    auto coeffs = scalars_from_json<F>(detail::require_array(j, "coeffs"));
    if (pole < 0 || order < 0 || static_cast<long>(coeffs.size()) != static_cast<long>(pole) + order + 1) {
        throw parse_error("jet needs pole + order + 1 coefficients");
    }
    if (pole > 0 && is_zero(coeffs.front())) {
        throw parse_error("leading coefficient of a jet with a pole must be nonzero");
    }
    return LaurentJet<F>(pole, std::move(coeffs));
}

template <class F>
PowerJet<F> power_from_json(const json& j)
{
    const LaurentJet<F> l = laurent_from_json<F>(j);
    if (l.pole_order() != 0) {
        throw parse_error("expected a power jet (pole 0)");
    }
    return l.to_power();
}

// ---------------------------------------------------------------------------
// Moebius types

template <class F>
json point_to_json(const PointCP1<F>& p)
{
    return p.is_infinity() ? json("inf") : scalar_to_json(p.value());
}

template <class F>
PointCP1<F> point_from_json(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf") {
        return PointCP1<F>::infinity();
    }
    return PointCP1<F>(scalar_from_json<F>(j));
}

template <class F>
json moebius_to_json(const Moebius<F>& g)
{
    return json{{"a", scalar_to_json(g.a())}, {"b", scalar_to_json(g.b())}, {"c", scalar_to_json(g.c())}, {"d", scalar_to_json(g.d())}};
}

template <class F>
Moebius<F> moebius_from_json(const json& j)
{
    return Moebius<F>(scalar_from_json<F>(detail::require(j, "a")), scalar_from_json<F>(detail::require(j, "b")),
                      scalar_from_json<F>(detail::require(j, "c")), scalar_from_json<F>(detail::require(j, "d")));
}

template <class F>
json sl2_to_json(const Sl2Field<F>& v)
{
    return json{{"p0", scalar_to_json(v.p0)}, {"p1", scalar_to_json(v.p1)}, {"p2", scalar_to_json(v.p2)}};
}

template <class F>
Sl2Field<F> sl2_from_json(const json& j)
{
    return {scalar_from_json<F>(detail::require(j, "p0")), scalar_from_json<F>(detail::require(j, "p1")),
            scalar_from_json<F>(detail::require(j, "p2"))};
}

// ---------------------------------------------------------------------------
// Branching types

template <class F>
json branched_to_json(const BranchedJet<F>& j)
{
    return json{{"n", j.n()}, {"value", point_to_json(j.value())}, {"a", scalars_to_json(j.a())}};
}

template <class F>
BranchedJet<F> branched_from_json(const json& j)
{
    return BranchedJet<F>(detail::require_int(j, "n"), point_from_json<F>(detail::require(j, "value")),
                          scalars_from_json<F>(detail::require_array(j, "a")));
}

template <class F>
json class_to_json(const BranchingClass<F>& c)
{
    return json{{"n", c.n}, {"c", scalars_to_json(c.c)}};
}

template <class F>
BranchingClass<F> class_from_json(const json& j)
{
    BranchingClass<F> c{detail::require_int(j, "n"), scalars_from_json<F>(detail::require_array(j, "c"))};
    if (c.n < 1 || static_cast<int>(c.c.size()) != c.n) {
        throw parse_error("a branching class needs n >= 1 and n coordinates");
    }
    return c;
}

template <class F>
json divisor_to_json(const DivisorClassData<F>& d)
{
    json pts = json::array();
    for (const auto& p : d.points) {
        pts.push_back(json{{"label", p.label}, {"n", p.cls.n}, {"class", scalars_to_json(p.cls.c)}});
    }
    return json{{"points", pts}};
}

template <class F>
DivisorClassData<F> divisor_from_json(const json& j)
{
    DivisorClassData<F> d;
    for (const auto& p : detail::require_array(j, "points")) {
        const json& label = detail::require(p, "label");
        if (!label.is_string()) {
            throw parse_error("label must be a string");
        }
        BranchingClass<F> c{detail::require_int(p, "n"), scalars_from_json<F>(detail::require_array(p, "class"))};
        if (c.n < 1 || static_cast<int>(c.c.size()) != c.n) {
            throw parse_error("point '" + label.get<std::string>() + "' needs n >= 1 and n class coordinates");
        }
        d.points.push_back({label.get<std::string>(), std::move(c)});
    }
    return d;
}

template <class F>
json delta_to_json(const ClassDelta<F>& d)
{
    return json{{"n", d.n}, {"mode", std::string(to_string(d.mode))}, {"coeffs", scalars_to_json(d.coeffs)}};
}

template <class F>
ClassDelta<F> delta_from_json(const json& j)
{
    const json& mode = detail::require(j, "mode");
    if (!mode.is_string()) {
        throw parse_error("mode must be a string");
    }
    ClassDelta<F> d{detail::require_int(j, "n"), parse_delta_mode(mode.get<std::string>()),
                    scalars_from_json<F>(detail::require_array(j, "coeffs"))};
    if (d.n < 1 || static_cast<int>(d.coeffs.size()) != d.n) {
        throw parse_error("a delta needs n >= 1 and n coefficients");
    }
    return d;
}

template <class F>
json divisor_delta_to_json(const DivisorDelta<F>& d)
{
    json pts = json::array();
    for (const auto& [label, delta] : d.points) {
        pts.push_back(json{{"label", label}, {"n", delta.n}, {"delta", scalars_to_json(delta.coeffs)}});
    }
    return json{{"mode", std::string(to_string(d.mode))}, {"dimension", d.dimension()}, {"points", pts}};
}

template <class F>
DivisorDelta<F> divisor_delta_from_json(const json& j)
{
    const json& mode = detail::require(j, "mode");
    if (!mode.is_string()) {
        throw parse_error("mode must be a string");
    }
    DivisorDelta<F> d{parse_delta_mode(mode.get<std::string>()), {}};
    for (const auto& p : detail::require_array(j, "points")) {
        const json& label = detail::require(p, "label");
        if (!label.is_string()) {
            throw parse_error("label must be a string");
        }
        ClassDelta<F> delta{detail::require_int(p, "n"), d.mode, scalars_from_json<F>(detail::require_array(p, "delta"))};
        if (delta.n < 1 || static_cast<int>(delta.coeffs.size()) != delta.n) {
            throw parse_error("point '" + label.get<std::string>() + "' needs n >= 1 and n delta coefficients");
        }
        d.points.emplace_back(label.get<std::string>(), std::move(delta));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Fuchs types

// {"n": n, "alpha": [alpha_{-2}, alpha_{-1}, ...]}
template <class F>
json quad_to_json(const QuadDiffLaurent<F>& q)
{
    return json{{"n", q.n()}, {"alpha", scalars_to_json(q.coeffs())}};
}

template <class F>
QuadDiffLaurent<F> quad_from_json(const json& j)
{
    const int n = detail::require_int(j, "n");
    if (n < 1) {
        throw parse_error("n must be at least 1");
    }
    auto alpha = scalars_from_json<F>(detail::require_array(j, "alpha"));
    if (alpha.empty()) {
        throw parse_error("alpha must start with alpha_{-2}");
    }
    return QuadDiffLaurent<F>(n, std::move(alpha));
}

// Monomials over X_1..X_{n+1}, exponent vectors padded to n+1 entries.
inline json obstruction_to_json(const ObstructionPoly& p)
{
    json monos = json::array();
    const std::size_t vars = static_cast<std::size_t>(p.n) + 1;
    for (const auto& [exps, coeff] : p.poly.terms()) {
        std::vector<unsigned> e = exps;
        e.resize(std::max(vars, e.size()), 0);
        monos.push_back(json{{"exps", e}, {"coeff", rational_to_json(coeff)}});
    }
    return json{{"n", p.n}, {"monomials", monos}};
}

inline ObstructionPoly obstruction_from_json(const json& j)
{
    ObstructionPoly p{detail::require_int(j, "n"), {}};
    for (const auto& m : detail::require_array(j, "monomials")) {
        Polynomial term(rational_from_json(detail::require(m, "coeff")));
        const json& exps = detail::require_array(m, "exps");
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (!exps[k].is_number_unsigned()) {
                throw parse_error("exponents must be nonnegative integers");
            }
            for (unsigned e = exps[k].get<unsigned>(); e > 0; --e) {
                term = term * Polynomial::variable(k + 1);
            }
        }
        p.poly += term;
    }
    return p;
}

template <class F>
json vector_jet_to_json(const VectorJet2<F>& v)
{
    return json{{"a0", scalar_to_json(v.a0)}, {"a1", scalar_to_json(v.a1)}, {"a2", scalar_to_json(v.a2)}};
}

} // namespace jetmoeb::io
