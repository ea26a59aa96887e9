#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "branching.hpp"
#include "error.hpp"
#include "polynomial.hpp"
#include "schwarzian.hpp"
#include "series.hpp"

// Local solution of the branched Schwarzian equation S(f) = phi at a cone
// point of order n. Writing u = f''/f' = n/z + sum_k delta_k z^k turns
// S = u' - u^2/2 into the recursion
//
//   (m + 1 - n) delta_{m+1} - 1/2 sum_{i+j=m} delta_i delta_j = alpha_m,
//
// for m >= -1. At m = n - 1 the left coefficient vanishes: delta_n is free
// and the equation becomes the obstruction P_n(alpha_{-1}, ..., alpha_{n-1}) = 0.

namespace jetmoeb {

// phi = sum_{k >= -2} alpha_k z^k, the quadratic differential to be realized
// by a germ branched to order n. Coefficients are stored from alpha_{-2}.
template <Field F = ComplexExact>
class QuadDiffLaurent {
public:
    QuadDiffLaurent(int n, std::vector<F> alpha) : n_(n), alpha_(std::move(alpha))
    {
        if (n_ < 1) {
            throw jet_error(errc::invalid_argument, "branch order must be at least 1");
        }
        if (alpha_.empty()) {
            throw jet_error(errc::insufficient_order, "need at least alpha_{-2}");
        }
    }

    static QuadDiffLaurent from_laurent(int n, const LaurentJet<F>& phi)
    {
        if (phi.pole_order() > 2) {
            throw jet_error(errc::indicial_mismatch, "pole of order greater than 2");
        }
        std::vector<F> alpha;
        for (int k = -2; k <= phi.order(); ++k) {
            alpha.push_back(phi.coeff(k));
        }
        return QuadDiffLaurent(n, std::move(alpha));
    }

    // (1 - (n+1)^2) / 2, the only admissible double-pole coefficient.
    static F indicial(int n) { return from_rational<F>(make_rational(1 - (n + 1) * (n + 1), 2)); }

    int n() const noexcept { return n_; }
    int order() const noexcept { return static_cast<int>(alpha_.size()) - 3; }
    const std::vector<F>& coeffs() const noexcept { return alpha_; }

    const F& alpha(int k) const
    {
        if (k < -2) {
            throw jet_error(errc::invalid_argument, "alpha index below -2");
        }
        if (k > order()) {
            throw jet_error(errc::order_exceeded, "alpha_" + std::to_string(k) + " is not known");
        }
        return alpha_[static_cast<std::size_t>(k + 2)];
    }

    LaurentJet<F> to_laurent() const { return LaurentJet<F>(2, alpha_); }

    void check_indicial() const
    {
        if (!field_traits<F>::equal(alpha(-2), indicial(n_))) {
            throw jet_error(errc::indicial_mismatch, "alpha_{-2} must equal (1 - (n+1)^2)/2");
        }
    }

private:
    int n_;
    std::vector<F> alpha_;
};

template <Field F = ComplexExact>
struct RiccatiSolution {
    int n;
    std::vector<F> delta; // delta_0 .. delta_K of u - n/z
    F free_param;         // the chosen delta_n
};

struct ObstructionPoly {
    int n;
    Polynomial poly;
};

namespace detail {

template <class R>
struct RiccatiRun {
    std::vector<R> delta;
    R obstruction;
};

// alpha[k] holds alpha_{k-1}. Runs the equations m = -1 .. last_m.
template <class R>
RiccatiRun<R> run_riccati(int n, std::span<const R> alpha, const R& delta_n, int last_m)
{
    const R half = from_rational<R>(Rational(1, 2));
    RiccatiRun<R> run{{}, from_int<R>(0)};
    for (int m = -1; m <= last_m; ++m) {
        R sum = from_int<R>(0);
        for (int i = 0; i <= m; ++i) {
            sum += run.delta[static_cast<std::size_t>(i)] * run.delta[static_cast<std::size_t>(m - i)];
        }
        R rhs = alpha[static_cast<std::size_t>(m + 1)] + half * sum;
        if (m == n - 1) {
            run.obstruction = std::move(rhs);
            run.delta.push_back(delta_n);
        } else {
            run.delta.push_back(from_rational<R>(make_rational(1, m + 1 - n)) * rhs);
        }
    }
    return run;
}

template <Field F>
std::vector<F> alphas_from_minus_one(const QuadDiffLaurent<F>& phi, int last)
{
    std::vector<F> a;
    for (int k = -1; k <= last; ++k) {
        a.push_back(phi.alpha(k));
    }
    return a;
}

} // namespace detail

// P_n(alpha_{-1}, ..., alpha_{n-1}), normalized so X_{n+1} has coefficient 1.
template <Field F>
F obstruction_value(const QuadDiffLaurent<F>& phi)
{
    phi.check_indicial();
    const int n = phi.n();
    if (phi.order() < n - 1) {
        throw jet_error(errc::insufficient_order, "need alpha through alpha_{n-1}");
    }
    const auto a = detail::alphas_from_minus_one(phi, n - 1);
    return detail::run_riccati<F>(n, a, from_int<F>(0), n - 1).obstruction;
}

// The unique alpha_{n-1} making the obstruction vanish, given alpha through
// alpha_{n-2}.
template <Field F>
F forced_alpha(const QuadDiffLaurent<F>& phi)
{
    phi.check_indicial();
    const int n = phi.n();
    if (phi.order() < n - 2) {
        throw jet_error(errc::insufficient_order, "need alpha through alpha_{n-2}");
    }
    auto a = detail::alphas_from_minus_one(phi, n - 2);
    a.push_back(from_int<F>(0));
    return -detail::run_riccati<F>(n, a, from_int<F>(0), n - 1).obstruction;
}

template <Field F>
RiccatiSolution<F> riccati_solve(const QuadDiffLaurent<F>& phi, const F& delta_n)
{
    phi.check_indicial();
    const int n = phi.n();
    if (phi.order() < n - 1) {
        throw jet_error(errc::insufficient_order, "need alpha through alpha_{n-1}");
    }
    const auto a = detail::alphas_from_minus_one(phi, phi.order());
    auto run = detail::run_riccati<F>(n, a, delta_n, phi.order());
    if (!is_zero(run.obstruction)) {
        std::optional<std::string> payload;
        if constexpr (field_traits<F>::exact) {
            payload = to_string(run.obstruction);
        }
        throw jet_error(errc::obstruction_violated, "P_n(alpha) != 0", payload);
    }
    return {n, std::move(run.delta), delta_n};
}

inline constexpr int default_obstruction_bound = 8;

// P_n as a polynomial in X_1..X_{n+1} (X_k standing for alpha_{k-2}),
// obtained by running the recursion over Q[X_1, ..., X_{n+1}].
inline ObstructionPoly obstruction_polynomial(int n, int bound = default_obstruction_bound)
{
    if (n < 1) {
        throw jet_error(errc::invalid_argument, "branch order must be at least 1");
    }
    if (n > bound) {
        throw jet_error(errc::degree_bound_exceeded,
                        "n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
    }
    std::vector<Polynomial> x;
    for (int k = 1; k <= n + 1; ++k) {
        x.push_back(Polynomial::variable(static_cast<std::size_t>(k)));
    }
    auto run = detail::run_riccati<Polynomial>(n, x, Polynomial{}, n - 1);
    return {n, std::move(run.obstruction)};
}

// f with f(0) = 0, f' = (n+1) z^n exp(int (u - n/z)), so a_{n+1} = 1.
template <Field F>
PowerJet<F> reconstruct_germ(const RiccatiSolution<F>& sol)
{
    const int n = sol.n;
    const PowerJet<F> e = exp(integrate(PowerJet<F>(sol.delta)));
    std::vector<F> df(static_cast<std::size_t>(n), from_int<F>(0));
    for (const F& c : e.coeffs()) {
        df.push_back(from_int<F>(n + 1) * c);
    }
    return integrate(PowerJet<F>(std::move(df)));
}

template <Field F>
BranchedJet<F> reconstruct_map(const RiccatiSolution<F>& sol)
{
    const PowerJet<F> f = reconstruct_germ(sol);
    const int top = 2 * (sol.n + 1);
    if (f.order() < top) {
        throw jet_error(errc::insufficient_order, "solution too short to fix the 2(n+1)-jet");
    }
    return from_germ(MapGerm<F>{f.truncated(top), PointCP1<F>(from_int<F>(0))}, sol.n);
}

template <Field F>
PowerJet<F> solve_schwarzian_germ(const QuadDiffLaurent<F>& phi, const F& delta_n = from_int<F>(0))
{
    return reconstruct_germ(riccati_solve(phi, delta_n));
}

template <Field F>
BranchedJet<F> solve_schwarzian(const QuadDiffLaurent<F>& phi, const F& delta_n = from_int<F>(0))
{
    return reconstruct_map(riccati_solve(phi, delta_n));
}

// D_n: class -> (delta_0, ..., delta_{n-1}) of the normal-form germ.
template <Field F>
std::vector<F> d_map(const BranchingClass<F>& cls)
{
    const LaurentJet<F> u = pre_schwarzian(to_germ(normal_form(cls)).jet, cls.n);
    std::vector<F> out;
    for (int k = 0; k < cls.n; ++k) {
        out.push_back(u.coeff(k));
    }
    return out;
}

// S_n: class -> (alpha_{-1}, ..., alpha_{n-2}) of the normal-form germ.
template <Field F>
std::vector<F> s_map(const BranchingClass<F>& cls)
{
    const LaurentJet<F> s = schwarzian(to_germ(normal_form(cls)).jet, cls.n);
    std::vector<F> out;
    for (int k = -1; k <= cls.n - 2; ++k) {
        out.push_back(s.coeff(k));
    }
    return out;
}

template <Field F>
BranchingClass<F> d_map_inverse(int n, const std::vector<F>& delta)
{
    if (static_cast<int>(delta.size()) != n) {
        throw jet_error(errc::order_mismatch, "expected n pre-Schwarzian coefficients");
    }
    std::vector<F> d = delta;
    d.push_back(from_int<F>(0));
    return class_of(reconstruct_map(RiccatiSolution<F>{n, std::move(d), from_int<F>(0)}));
}

template <Field F>
BranchingClass<F> s_map_inverse(int n, const std::vector<F>& alpha)
{
    if (static_cast<int>(alpha.size()) != n) {
        throw jet_error(errc::order_mismatch, "expected n Schwarzian coefficients");
    }
    std::vector<F> a{QuadDiffLaurent<F>::indicial(n)};
    a.insert(a.end(), alpha.begin(), alpha.end());
    a.push_back(forced_alpha(QuadDiffLaurent<F>(n, a)));
    return class_of(solve_schwarzian(QuadDiffLaurent<F>(n, std::move(a))));
}

} // namespace jetmoeb
