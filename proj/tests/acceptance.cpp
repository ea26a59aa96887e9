// Acceptance suite: one PASS/FAIL line per criterion, exact backend.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <jetmoeb/jetmoeb.hpp>
#include <jetmoeb/random.hpp>

#include "golden.hpp"
#include "oracle.hpp"

using namespace jetmoeb;
using C = ComplexExact;
using Jet = PowerJet<C>;

namespace {

struct Tally {
    long checked = 0;
    long failed = 0;
    std::string note;

    void expect(bool ok, const std::string& what = {})
    {
        ++checked;
        if (!ok) {
            ++failed;
            if (note.empty()) {
                note = what;
            }
        }
    }

    // A library error inside a check is a failure, not a crash.
    void expect(const std::function<bool()>& f, const std::string& what = {})
    {
        bool ok = false;
        try {
            ok = f();
        } catch (const jet_error& e) {
            expect(false, what + " threw " + e.what());
            return;
        }
        expect(ok, what);
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Tally&)>& body)
{
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("aborted: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget_s;
    const bool pass = t.failed == 0 && t.checked > 0 && in_time;
    if (!pass) {
        ++failures;
    }
    std::printf("criterion %d %-4s %s: %ld/%ld checks, %.2f s (budget %.0f s)%s%s\n", id, pass ? "PASS" : "FAIL", title,
                t.checked - t.failed, t.checked, secs, budget_s, t.note.empty() ? "" : "; ", t.note.c_str());
    if (!in_time) {
        std::printf("  over time budget\n");
    }
}

QuadDiffLaurent<C> admissible(TestRng& rng, int n, int top)
{
    std::vector<C> a{QuadDiffLaurent<C>::indicial(n)};
    for (int m = -1; m <= n - 2; ++m) {
        a.push_back(random_scalar<C>(rng));
    }
    a.push_back(forced_alpha(QuadDiffLaurent<C>(n, a)));
    for (int m = n; m <= top; ++m) {
        a.push_back(random_scalar<C>(rng));
    }
    return QuadDiffLaurent<C>(n, std::move(a));
}

} // namespace

int main()
{
    criterion(1, "indicial coefficient of the Schwarzian", 5, [](Tally& t) {
        TestRng rng(1);
        for (int n = 1; n <= 5; ++n) {
            for (int i = 0; i < 100; ++i) {
                const BranchedJet<C> j = random_branched<C>(rng, n);
                const Jet f = detail::centered_germ(j);
                t.expect([&] { return schwarzian(f, n).coeff(-2) == QuadDiffLaurent<C>::indicial(n); },
                         "n=" + std::to_string(n));
            }
        }
    });

    criterion(2, "Schwarzian cocycle at order 12", 5, [](Tally& t) {
        TestRng rng(2);
        for (int i = 0; i < 100; ++i) {
            const Jet f2 = random_unbranched<C>(rng, 12);
            const Jet f1 = random_unbranched<C>(rng, 12);
            t.expect([&] {
                const LaurentJet<C> lhs = schwarzian(compose(f2, f1));
                const Jet d1 = derivative(f1);
                const LaurentJet<C> rhs =
                    LaurentJet<C>(compose(schwarzian(f2).to_power(), f1) * d1 * d1) + schwarzian(f1);
                const int k = std::min(lhs.order(), rhs.order());
                return k >= 9 && agree_through(lhs, rhs, k);
            });
        }
    });

    criterion(3, "osculating derivative equals S(f)(t0)(t-t0)^2/2", 5, [](Tally& t) {
        TestRng rng(3);
        for (int i = 0; i < 100; ++i) {
            const Jet f = random_unbranched<C>(rng, 6, false);
            const C t0 = random_scalar<C>(rng);
            t.expect([&] { return osculating_derivative(f, t0) == half_square_field(schwarzian(f).coeff(0), t0); });
        }
    });

    criterion(4, "branching class invariance", 10, [](Tally& t) {
        TestRng rng(4);
        int at_infinity = 0;
        for (int i = 0; i < 200; ++i) {
            const int n = static_cast<int>(rng.uniform(1, 4));
            const BranchedJet<C> j = random_branched<C>(rng, n);
            const Moebius<C> g = (i % 4 == 0 && !j.value().is_infinity())
                                     ? random_moebius_to_infinity<C>(rng, j.value().value())
                                     : random_moebius<C>(rng);
            t.expect([&] {
                const BranchedJet<C> moved = act(g, j);
                at_infinity += (moved.value().is_infinity() || j.value().is_infinity()) ? 1 : 0;
                return class_of(moved) == class_of(j);
            });
        }
        t.expect(at_infinity >= 50, "too few infinity-valued cases");
        for (int i = 0; i < 100; ++i) {
            const int n = static_cast<int>(rng.uniform(1, 4));
            const BranchedJet<C> j = random_branched<C>(rng, n);
            const Jet alpha = random_unbranched<C>(rng, j.jet_order(), false);
            t.expect([&] { return class_of(postcompose_germ(j, alpha)) == class_of(j); });
        }
    });

    criterion(5, "Fuchs round trip", 30, [](Tally& t) {
        TestRng rng(5);
        for (int n = 1; n <= 4; ++n) {
            for (int i = 0; i < 50; ++i) {
                const QuadDiffLaurent<C> phi = admissible(rng, n, 2 * n + 4);
                t.expect([&] {
                    const LaurentJet<C> s = schwarzian(solve_schwarzian_germ(phi), n);
                    // The contract order: every alpha the input supplies.
                    return s.order() >= phi.order() && agree_through(s, phi.to_laurent(), phi.order());
                }, "n=" + std::to_string(n));
                t.expect([&] {
                    const BranchedJet<C> j = solve_schwarzian(phi);
                    return agree_through(to_germ(j).jet, solve_schwarzian_germ(phi), j.jet_order());
                });
            }
        }
    });

    criterion(6, "obstruction polynomials", 30, [](Tally& t) {
        const Polynomial x1 = Polynomial::variable(1);
        const Polynomial x2 = Polynomial::variable(2);
        const Polynomial x3 = Polynomial::variable(3);
        const Polynomial p1 = x2 + Polynomial(make_rational(1, 2)) * x1 * x1;
        const Polynomial p2 = x3 + Polynomial(make_rational(1, 2)) * x1 * x2 + Polynomial(make_rational(1, 16)) * x1 * x1 * x1;
        t.expect(jt::frobenius_obstruction(1) == p1, "oracle P1");
        t.expect(jt::frobenius_obstruction(2) == p2, "oracle P2");
        t.expect(obstruction_polynomial(1).poly == p1, "P1 = " + obstruction_polynomial(1).poly.to_string());
        t.expect(obstruction_polynomial(2).poly == p2, "P2 = " + obstruction_polynomial(2).poly.to_string());
        TestRng rng(6);
        for (int n = 1; n <= 5; ++n) {
            t.expect(obstruction_polynomial(n).poly == jt::frobenius_obstruction(n), "oracle n=" + std::to_string(n));
            const Polynomial p = obstruction_polynomial(n).poly;
            for (int i = 0; i < 50; ++i) {
                const std::vector<C> x = random_scalars<C>(rng, n + 1);
                std::vector<C> a{QuadDiffLaurent<C>::indicial(n)};
                a.insert(a.end(), x.begin(), x.end());
                t.expect([&] { return p.evaluate<C>(x) == obstruction_value(QuadDiffLaurent<C>(n, a)); });
            }
        }
        if (t.failed == 0) {
            t.note = "P2 = " + p2.to_string();
        }
    });

    criterion(7, "torsor axioms and D_n/S_n bijectivity", 30, [](Tally& t) {
        TestRng rng(7);
        for (DeltaMode mode : {DeltaMode::preschwarzian, DeltaMode::schwarzian}) {
            for (int n = 1; n <= 4; ++n) {
                for (int i = 0; i < 100; ++i) {
                    const BranchingClass<C> c1 = random_class<C>(rng, n);
                    const BranchingClass<C> c2 = random_class<C>(rng, n);
                    const BranchingClass<C> c3 = random_class<C>(rng, n);
                    t.expect([&] { return translate_class(c1, diff_classes(c2, c1, mode)) == c2; });
                    t.expect([&] {
                        return diff_classes(c3, c2, mode) + diff_classes(c2, c1, mode) == diff_classes(c3, c1, mode);
                    });
                }
            }
        }
        for (int n = 1; n <= 5; ++n) {
            for (int i = 0; i < 20; ++i) {
                const BranchingClass<C> c = random_class<C>(rng, n);
                const std::vector<C> v = random_scalars<C>(rng, n);
                t.expect([&] { return d_map_inverse(n, d_map(c)) == c && s_map_inverse(n, s_map(c)) == c; });
                t.expect([&] { return d_map(d_map_inverse(n, v)) == v && s_map(s_map_inverse(n, v)) == v; });
            }
        }
    });

    criterion(8, "section/connection correspondence to w-order 8", 10, [](Tally& t) {
        TestRng rng(8);
        for (int i = 0; i < 100; ++i) {
            const C w0 = random_scalar<C>(rng);
            const int degree = static_cast<int>(rng.uniform(0, 5));
            std::vector<C> c = random_scalars<C>(rng, degree + 1);
            while (c[0] == w0) {
                c[0] = random_scalar<C>(rng);
            }
            c.resize(10, C(0));
            const Jet lambda(std::move(c));
            t.expect([&] { return verify_correspondence(lambda, w0).order_checked >= 8; });
        }
        const C w0 = random_scalar<C>(rng);
        bool rejected = false;
        try {
            verify_correspondence(Jet::constant(w0, 9) + Jet::identity(9), w0);
        } catch (const jet_error& e) {
            rejected = e.code() == errc::sections_intersect;
        }
        t.expect(rejected, "lambda = w not rejected");
    });

    criterion(9, "CLI golden files and exit codes", 5, [](Tally& t) {
        for (const auto& r : jt::run_golden(JETMOEB_GOLDEN_DIR)) {
            t.expect(r.ok, r.name + ": " + r.detail);
        }
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
