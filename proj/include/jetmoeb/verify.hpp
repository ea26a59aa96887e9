#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "branching.hpp"
#include "connections.hpp"
#include "error.hpp"
#include "fuchs.hpp"
#include "moebius.hpp"
#include "random.hpp"
#include "schwarzian.hpp"
#include "series.hpp"
#include "torsor.hpp"

// Randomized property suites, runnable from the command line.

namespace jetmoeb {

// Float backend for the suites. Order-8 chains of compositions lose about
// nine digits to cancellation, so the default 1e-10 is too tight here.
using VerifyFloat = ApproxComplex<1e-7>;

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
};

struct VerifyOptions {
    int order = 8;
    std::uint64_t seed = 0;
    int cases = 20;
};

inline const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names{"branching", "connections", "fuchs", "moebius", "schwarzian"};
    return names;
}

namespace detail {

class Tally {
public:
    explicit Tally(std::string name) : r_{std::move(name)} {}

    // A property that throws a library error counts as failed.
    void check(const std::function<bool()>& property)
    {
        bool ok = false;
        try {
            ok = property();
        } catch (const jet_error&) {
            ok = false;
        }
        ++(ok ? r_.passed : r_.failed);
    }

    SuiteResult result() const { return r_; }

private:
    SuiteResult r_;
};

inline int pick_n(TestRng& rng, int hi = 4)
{
    return static_cast<int>(rng.uniform(1, hi));
}

} // namespace detail

template <Field F>
SuiteResult verify_moebius(const VerifyOptions& opt)
{
    TestRng rng(opt.seed);
    detail::Tally t("moebius");
    const int k = std::max(opt.order, 3);
    for (int i = 0; i < opt.cases; ++i) {
        const Moebius<F> g = random_moebius<F>(rng);
        const Moebius<F> h = random_moebius<F>(rng);
        const PowerJet<F> jet = random_jet<F>(rng, k);
        const MapGerm<F> germ{jet, PointCP1<F>(jet[0])};
        t.check([&] { return act_on_powerjet(g * h, germ) == act_on_powerjet(g, act_on_powerjet(h, germ)); });
        t.check([&] { return g * g.inverse() == Moebius<F>::identity(); });

        const Sl2Field<F> p{random_scalar<F>(rng), random_scalar<F>(rng), random_scalar<F>(rng)};
        const Sl2Field<F> q{random_scalar<F>(rng), random_scalar<F>(rng), random_scalar<F>(rng)};
        const Sl2Field<F> r{random_scalar<F>(rng), random_scalar<F>(rng), random_scalar<F>(rng)};
        t.check([&] {
            const Sl2Field<F> jac = sl2_bracket(p, sl2_bracket(q, r)) + sl2_bracket(q, sl2_bracket(r, p)) +
                                    sl2_bracket(r, sl2_bracket(p, q));
            const Sl2Field<F> zero{from_int<F>(0), from_int<F>(0), from_int<F>(0)};
            return jac == zero;
        });

        const PowerJet<F> f = random_unbranched<F>(rng, k, false);
        const F t0 = random_scalar<F>(rng);
        t.check([&] { return osculating_derivative(f, t0) == half_square_field(schwarzian(f).coeff(0), t0); });
    }
    return t.result();
}

template <Field F>
SuiteResult verify_schwarzian(const VerifyOptions& opt)
{
    TestRng rng(opt.seed);
    detail::Tally t("schwarzian");
    const int k = std::max(opt.order, 4);
    for (int i = 0; i < opt.cases; ++i) {
        const PowerJet<F> f = random_unbranched<F>(rng, k);
        const PowerJet<F> g = random_unbranched<F>(rng, k);
        t.check([&] {
            const LaurentJet<F> lhs = schwarzian(compose(f, g));
            const PowerJet<F> dg = derivative(g);
            const LaurentJet<F> rhs = LaurentJet<F>(compose(schwarzian(f).to_power(), g) * dg * dg) + schwarzian(g);
            return agree_through(lhs, rhs, std::min(lhs.order(), rhs.order()));
        });

        t.check([&] {
            const Moebius<F> m = random_moebius<F>(rng);
            const MapGerm<F> image = act_on_powerjet(m, f, PointCP1<F>(from_int<F>(0)));
            // At infinity the reciprocal chart is itself a Moebius image.
            const LaurentJet<F> s = schwarzian(image.jet);
            const LaurentJet<F> s0 = schwarzian(f);
            return agree_through(s, s0, std::min(s.order(), s0.order()));
        });

        const int n = detail::pick_n(rng);
        t.check([&] {
            std::vector<F> c(static_cast<std::size_t>(n + 1), from_int<F>(0));
            c.push_back(random_nonzero<F>(rng));
            for (int j = n + 2; j <= k + n; ++j) {
                c.push_back(random_scalar<F>(rng));
            }
            const LaurentJet<F> s = schwarzian(PowerJet<F>(std::move(c)), n);
            return s.pole_order() == 2 && field_traits<F>::equal(s.coeff(-2), QuadDiffLaurent<F>::indicial(n));
        });
    }
    return t.result();
}

template <Field F>
SuiteResult verify_branching(const VerifyOptions& opt)
{
    TestRng rng(opt.seed);
    detail::Tally t("branching");
    for (int i = 0; i < opt.cases; ++i) {
        const int n = detail::pick_n(rng);
        const BranchedJet<F> j = random_branched<F>(rng, n);
        const Moebius<F> g = random_moebius<F>(rng);
        t.check([&] { return class_of(act(g, j)) == class_of(j); });

        const BranchingClass<F> c = random_class<F>(rng, n);
        t.check([&] { return class_of(normal_form(c)) == c; });

        const PowerJet<F> alpha = random_unbranched<F>(rng, j.jet_order(), false);
        t.check([&] { return class_of(postcompose_germ(j, alpha)) == class_of(j); });

        const BranchingClass<F> c2 = random_class<F>(rng, n);
        for (DeltaMode mode : {DeltaMode::preschwarzian, DeltaMode::schwarzian}) {
            t.check([&] { return translate_class(c, diff_classes(c2, c, mode)) == c2; });
        }
    }
    return t.result();
}

template <Field F>
SuiteResult verify_fuchs(const VerifyOptions& opt)
{
    TestRng rng(opt.seed);
    detail::Tally t("fuchs");
    for (int i = 0; i < opt.cases; ++i) {
        const int n = detail::pick_n(rng);
        const int top = std::max(opt.order, n);
        std::vector<F> alpha{QuadDiffLaurent<F>::indicial(n)};
        for (int m = -1; m <= n - 2; ++m) {
            alpha.push_back(random_scalar<F>(rng));
        }
        alpha.push_back(forced_alpha(QuadDiffLaurent<F>(n, alpha)));
        for (int m = n; m <= top; ++m) {
            alpha.push_back(random_scalar<F>(rng));
        }
        const QuadDiffLaurent<F> phi(n, alpha);
        const F delta_n = random_scalar<F>(rng);
        t.check([&] {
            const LaurentJet<F> s = schwarzian(solve_schwarzian_germ(phi, delta_n), n);
            const int k = std::min(s.order(), phi.order());
            return k >= n - 1 && agree_through(s, phi.to_laurent(), k);
        });
        t.check([&] { return class_of(solve_schwarzian(phi)) == class_of(solve_schwarzian(phi, delta_n)); });

        std::vector<F> point;
        for (int m = -1; m <= n - 1; ++m) {
            point.push_back(random_scalar<F>(rng));
        }
        t.check([&] {
            std::vector<F> a{QuadDiffLaurent<F>::indicial(n)};
            a.insert(a.end(), point.begin(), point.end());
            const F direct = obstruction_value(QuadDiffLaurent<F>(n, a));
            return field_traits<F>::equal(obstruction_polynomial(n).poly.template evaluate<F>(point), direct);
        });

        const BranchingClass<F> c = random_class<F>(rng, n);
        t.check([&] { return d_map_inverse(n, d_map(c)) == c; });
        t.check([&] { return s_map_inverse(n, s_map(c)) == c; });
    }
    return t.result();
}

template <Field F>
SuiteResult verify_connections(const VerifyOptions& opt)
{
    TestRng rng(opt.seed);
    detail::Tally t("connections");
    const int k = std::max(opt.order, 1) + 1;
    for (int i = 0; i < opt.cases; ++i) {
        const F w0 = random_scalar<F>(rng);
        std::vector<F> c = random_scalars<F>(rng, k + 1);
        while (is_zero(c[0] - w0)) {
            c[0] = random_scalar<F>(rng);
        }
        const PowerJet<F> lambda(std::move(c));
        t.check([&] { return verify_correspondence(lambda, w0).order_checked >= k - 1; });
        t.check([&] {
            try {
                verify_correspondence(detail::w_coordinate(w0, k), w0);
            } catch (const jet_error& e) {
                return e.code() == errc::sections_intersect;
            }
            return false;
        });

        const VFieldWSeries<F> p{random_jet<F>(rng, k), random_jet<F>(rng, k), random_jet<F>(rng, k)};
        const VFieldWSeries<F> q{random_jet<F>(rng, k), random_jet<F>(rng, k), random_jet<F>(rng, k)};
        const VFieldWSeries<F> r{random_jet<F>(rng, k), random_jet<F>(rng, k), random_jet<F>(rng, k)};
        t.check([&] {
            const auto a = vf_bracket(p, vf_bracket(q, r));
            const auto b = vf_bracket(q, vf_bracket(r, p));
            const auto d = vf_bracket(r, vf_bracket(p, q));
            const PowerJet<F> zero = PowerJet<F>::zero(k);
            return agree_through(a.q0 + b.q0 + d.q0, zero, k) && agree_through(a.q1 + b.q1 + d.q1, zero, k) &&
                   agree_through(a.q2 + b.q2 + d.q2, zero, k);
        });
    }
    return t.result();
}

// Runs the named suite ("all" runs every suite, ordered by name).
template <Field F>
std::vector<SuiteResult> run_suites(std::string_view suite, const VerifyOptions& opt)
{
    std::vector<SuiteResult> out;
    for (std::string_view name : suite_names()) {
        if (suite != "all" && suite != name) {
            continue;
        }
        if (name == "branching") {
            out.push_back(verify_branching<F>(opt));
        } else if (name == "connections") {
            out.push_back(verify_connections<F>(opt));
        } else if (name == "fuchs") {
            out.push_back(verify_fuchs<F>(opt));
        } else if (name == "moebius") {
            out.push_back(verify_moebius<F>(opt));
        } else {
            out.push_back(verify_schwarzian<F>(opt));
        }
    }
    if (out.empty()) {
        throw jet_error(errc::invalid_argument, "unknown suite '" + std::string(suite) + "'");
    }
    return out;
}

} // namespace jetmoeb
