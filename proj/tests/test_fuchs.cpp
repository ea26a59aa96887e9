#include "helpers.hpp"
#include "oracle.hpp"

#include <jetmoeb/random.hpp>

using namespace jetmoeb;
using namespace jt;

namespace {

using Q = QuadDiffLaurent<C>;

Q quad(int n, std::initializer_list<const char*> alpha_from_minus_one)
{
    std::vector<C> a{Q::indicial(n)};
    for (const char* t : alpha_from_minus_one) {
        a.push_back(z(t));
    }
    return Q(n, a);
}

Polynomial X(std::size_t k)
{
    return Polynomial::variable(k);
}

Polynomial R(long p, long d = 1)
{
    return Polynomial(make_rational(p, d));
}

// An admissible phi: indicial alpha_{-2}, forced alpha_{n-1}, random elsewhere.
Q admissible(TestRng& rng, int n, int top)
{
    std::vector<C> a{Q::indicial(n)};
    for (int m = -1; m <= n - 2; ++m) {
        a.push_back(random_scalar<C>(rng));
    }
    a.push_back(forced_alpha(Q(n, a)));
    for (int m = n; m <= top; ++m) {
        a.push_back(random_scalar<C>(rng));
    }
    return Q(n, a);
}

} // namespace

TEST(Indicial, Values)
{
    EXPECT_EQ(Q::indicial(1), q(-3, 2));
    EXPECT_EQ(Q::indicial(2), q(-4));
    EXPECT_EQ(Q::indicial(5), q(-35, 2));
}

TEST(RiccatiSolve, Examples)
{
    const auto sol = riccati_solve(quad(1, {"0", "0", "0", "0"}), q(0));
    for (const C& d : sol.delta) {
        EXPECT_TRUE(d.is_zero());
    }
    EXPECT_EQ(reconstruct_map(riccati_solve(quad(1, {"0", "0", "0", "0", "0"}), q(0))),
              BranchedJet<C>(1, PointCP1<C>(q(0)), cs({"1", "0", "0"})));

    const auto sol2 = riccati_solve(quad(1, {"2", "-2", "0", "0"}), q(0));
    EXPECT_EQ(sol2.delta[0], q(-2));
    EXPECT_EQ(sol2.delta[1], q(0));

    try {
        riccati_solve(quad(1, {"0", "1"}), q(0));
        ADD_FAILURE() << "expected ObstructionViolated";
    } catch (const jet_error& e) {
        EXPECT_EQ(e.code(), errc::obstruction_violated);
        ASSERT_TRUE(e.payload().has_value());
        EXPECT_EQ(*e.payload(), "1");
    }
}

TEST(RiccatiSolve, ResidualsVanish)
{
    TestRng rng(41);
    for (int n = 1; n <= 4; ++n) {
        const Q phi = admissible(rng, n, 8);
        const C dn = random_scalar<C>(rng);
        const auto sol = riccati_solve(phi, dn);
        EXPECT_EQ(sol.delta[static_cast<std::size_t>(n)], dn);
        for (int m = -1; m < phi.order(); ++m) {
            if (m == n - 1) {
                continue;
            }
            C sum = q(0);
            for (int i = 0; i <= m; ++i) {
                sum += sol.delta[static_cast<std::size_t>(i)] * sol.delta[static_cast<std::size_t>(m - i)];
            }
            EXPECT_EQ(q(m + 1 - n) * sol.delta[static_cast<std::size_t>(m + 1)] - q(1, 2) * sum, phi.alpha(m));
        }
    }
}

TEST(RiccatiSolve, IndicialLaw)
{
    TestRng rng(42);
    for (int n = 1; n <= 4; ++n) {
        Q good = admissible(rng, n, 4);
        EXPECT_NO_THROW(riccati_solve(good, q(0)));
        std::vector<C> bad = good.coeffs();
        bad[0] += q(1, 3);
        EXPECT_JET_ERROR(riccati_solve(Q(n, bad), q(0)), errc::indicial_mismatch);
        EXPECT_JET_ERROR(obstruction_value(Q(n, bad)), errc::indicial_mismatch);
        EXPECT_JET_ERROR(forced_alpha(Q(n, bad)), errc::indicial_mismatch);
    }
}

TEST(Obstruction, ValueExamples)
{
    EXPECT_EQ(obstruction_value(quad(1, {"2", "-2"})), q(0));
    EXPECT_EQ(obstruction_value(quad(1, {"0", "1"})), q(1));
    // n = 2: alpha_1 = -1/2 alpha_{-1} alpha_0 - alpha_{-1}^3 / 16 makes P_2 vanish.
    const C am1 = z("3/2+i");
    const C a0 = z("-2/3");
    const C a1 = -(q(1, 2) * am1 * a0) - am1 * am1 * am1 * q(1, 16);
    EXPECT_EQ(obstruction_value(Q(2, {Q::indicial(2), am1, a0, a1})), q(0));
    EXPECT_JET_ERROR(obstruction_value(quad(2, {"1", "1"})), errc::insufficient_order);
}

TEST(Obstruction, ForcedAlphaExamples)
{
    EXPECT_EQ(forced_alpha(quad(1, {"2"})), q(-2));
    EXPECT_EQ(forced_alpha(quad(1, {"0"})), q(0));
    EXPECT_EQ(forced_alpha(quad(2, {"0", "0"})), q(0));
}

TEST(Obstruction, PolynomialsMatchFrozenValues)
{
    const Polynomial p1 = X(2) + R(1, 2) * X(1) * X(1);
    const Polynomial p2 = X(3) + R(1, 2) * X(1) * X(2) + R(1, 16) * X(1) * X(1) * X(1);
    EXPECT_EQ(obstruction_polynomial(1).poly, p1);
    EXPECT_EQ(obstruction_polynomial(2).poly, p2);
    EXPECT_EQ(p1.to_string(), "X2 + 1/2*X1^2");
    EXPECT_EQ(p2.to_string(), "X3 + 1/2*X1*X2 + 1/16*X1^3");
}

TEST(Obstruction, PolynomialsMatchFrobeniusOracle)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(obstruction_polynomial(n).poly, frobenius_obstruction(n)) << "n = " << n;
    }
}

TEST(Obstruction, StructureAndBound)
{
    for (int n = 1; n <= 6; ++n) {
        const Polynomial p = obstruction_polynomial(n).poly;
        std::vector<unsigned> top(static_cast<std::size_t>(n + 1), 0);
        top.back() = 1;
        EXPECT_EQ(p.coeff(top), Rational(1));
        EXPECT_EQ((p - X(static_cast<std::size_t>(n + 1))).degree_in(static_cast<std::size_t>(n + 1)), 0U);
    }
    EXPECT_JET_ERROR(obstruction_polynomial(9), errc::degree_bound_exceeded);
    EXPECT_NO_THROW(obstruction_polynomial(9, 9));
    EXPECT_JET_ERROR(obstruction_polynomial(0), errc::invalid_argument);
}

TEST(Obstruction, EvaluationMatchesValue)
{
    TestRng rng(43);
    for (int n = 1; n <= 5; ++n) {
        const Polynomial p = obstruction_polynomial(n).poly;
        for (int i = 0; i < 20; ++i) {
            std::vector<C> x = random_scalars<C>(rng, n + 1);
            std::vector<C> a{Q::indicial(n)};
            a.insert(a.end(), x.begin(), x.end());
            EXPECT_EQ(p.evaluate<C>(x), obstruction_value(Q(n, a)));
        }
    }
}

TEST(Solve, RoundTripAndGaugeIndependence)
{
    TestRng rng(44);
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 10; ++i) {
            const Q phi = admissible(rng, n, 2 * n + 4);
            const C dn = random_scalar<C>(rng);
            const Jet f = solve_schwarzian_germ(phi, dn);
            const LJet s = schwarzian(f, n);
            ASSERT_GE(s.order(), n - 1);
            EXPECT_TRUE(agree_through(s, phi.to_laurent(), std::min(s.order(), phi.order())));
            EXPECT_EQ(class_of(solve_schwarzian(phi, dn)), class_of(solve_schwarzian(phi)));
        }
    }
}

TEST(Solve, DeltaShiftOnlyMovesTopCoefficient)
{
    TestRng rng(45);
    for (int n = 1; n <= 4; ++n) {
        const Q phi = admissible(rng, n, 2 * n + 2);
        const BranchedJet<C> a = solve_schwarzian(phi, q(0));
        const BranchedJet<C> b = solve_schwarzian(phi, q(5));
        for (int k = n + 1; k < 2 * (n + 1); ++k) {
            EXPECT_EQ(a.coeff(k), b.coeff(k));
        }
        EXPECT_NE(a.coeff(2 * (n + 1)), b.coeff(2 * (n + 1)));
    }
}

TEST(Solve, ReconstructedGermReproducesPreSchwarzian)
{
    TestRng rng(46);
    for (int n = 1; n <= 4; ++n) {
        const auto sol = riccati_solve(admissible(rng, n, 8), random_scalar<C>(rng));
        const Jet f = reconstruct_germ(sol);
        const LJet u = pre_schwarzian(f, n);
        EXPECT_EQ(u.coeff(-1), q(n));
        const int top = std::min(u.order(), static_cast<int>(sol.delta.size()) - 1);
        ASSERT_GE(top, n);
        for (int k = 0; k <= top; ++k) {
            EXPECT_EQ(u.coeff(k), sol.delta[static_cast<std::size_t>(k)]);
        }
    }
}

TEST(DnSn, Examples)
{
    const BranchingClass<C> c{1, cs({"2/7"})};
    EXPECT_EQ(d_map(c), cs({"3/7"}));
    EXPECT_EQ(s_map(c), cs({"-3/7"}));
    EXPECT_EQ(d_map(BranchingClass<C>{3, cs({"0", "0", "0"})}), cs({"0", "0", "0"}));
    EXPECT_JET_ERROR(d_map_inverse(2, cs({"1"})), errc::order_mismatch);
}

TEST(DnSn, Bijective)
{
    TestRng rng(47);
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i < 10; ++i) {
            const BranchingClass<C> c = random_class<C>(rng, n);
            EXPECT_EQ(d_map_inverse(n, d_map(c)), c);
            EXPECT_EQ(s_map_inverse(n, s_map(c)), c);
            const std::vector<C> v = random_scalars<C>(rng, n);
            EXPECT_EQ(d_map(d_map_inverse(n, v)), v);
            EXPECT_EQ(s_map(s_map_inverse(n, v)), v);
        }
    }
}
