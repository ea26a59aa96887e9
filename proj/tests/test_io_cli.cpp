#include "golden.hpp"
#include "helpers.hpp"

#include <jetmoeb/io.hpp>
#include <jetmoeb/random.hpp>

using namespace jetmoeb;
using namespace jt;
using io::json;

TEST(Json, ScalarForms)
{
    EXPECT_EQ(io::scalar_to_json(z("3/2")).dump(), "\"3/2\"");
    EXPECT_EQ(io::scalar_to_json(z("1/2-i")).dump(), R"({"re":"1/2","im":"-1"})");
    EXPECT_EQ(io::scalar_from_json<C>(json::parse(R"({"re":"1/2","im":"-1"})")), z("1/2-i"));
    EXPECT_EQ(io::scalar_from_json<C>(json(7)), q(7));
    EXPECT_THROW(io::scalar_from_json<C>(json(0.5)), parse_error);
    EXPECT_THROW(io::scalar_from_json<C>(json("x")), parse_error);
    EXPECT_THROW(io::scalar_from_json<C>(json::parse(R"({"re":"1"})")), parse_error);
}

TEST(Json, ExactRoundTrips)
{
    TestRng rng(61);
    for (int i = 0; i < 30; ++i) {
        const Jet j = random_jet<C>(rng, 5);
        EXPECT_EQ(io::power_from_json<C>(io::jet_to_json(j)), j);

        std::vector<C> lc = random_scalars<C>(rng, 6);
        lc[0] = random_nonzero<C>(rng);
        const LJet l(2, lc);
        const json lj = io::jet_to_json(l);
        EXPECT_EQ(lj["pole"], 2);
        EXPECT_EQ(lj["order"], 3);
        EXPECT_EQ(io::laurent_from_json<C>(lj), l);
        EXPECT_EQ(io::laurent_from_json<C>(json::parse(lj.dump())), l);

        const Moebius<C> g = random_moebius<C>(rng);
        const Moebius<C> g2 = io::moebius_from_json<C>(io::moebius_to_json(g));
        EXPECT_TRUE(g2.a() == g.a() && g2.b() == g.b() && g2.c() == g.c() && g2.d() == g.d());

        const Sl2Field<C> v{random_scalar<C>(rng), random_scalar<C>(rng), random_scalar<C>(rng)};
        EXPECT_EQ(io::sl2_from_json<C>(io::sl2_to_json(v)), v);

        const int n = static_cast<int>(rng.uniform(1, 4));
        const BranchedJet<C> b = random_branched<C>(rng, n);
        EXPECT_EQ(io::branched_from_json<C>(io::branched_to_json(b)), b);

        const BranchingClass<C> c = random_class<C>(rng, n);
        EXPECT_EQ(io::class_from_json<C>(io::class_to_json(c)), c);

        const ClassDelta<C> d{n, DeltaMode::schwarzian, random_scalars<C>(rng, n)};
        EXPECT_EQ(io::delta_from_json<C>(io::delta_to_json(d)), d);

        std::vector<C> alpha{QuadDiffLaurent<C>::indicial(n)};
        for (const C& x : random_scalars<C>(rng, n + 2)) {
            alpha.push_back(x);
        }
        const QuadDiffLaurent<C> phi(n, alpha);
        EXPECT_EQ(io::quad_from_json<C>(io::quad_to_json(phi)).coeffs(), phi.coeffs());
    }
}

TEST(Json, PointsDivisorsAndPolynomials)
{
    EXPECT_EQ(io::point_to_json(PointCP1<C>::infinity()), json("inf"));
    EXPECT_TRUE(io::point_from_json<C>(json("inf")).is_infinity());
    EXPECT_EQ(io::point_from_json<C>(json("2")), PointCP1<C>(q(2)));

    const DivisorClassData<C> d{{{"p", {1, cs({"1/2"})}}, {"q", {2, cs({"i", "0"})}}}};
    const auto back = io::divisor_from_json<C>(json::parse(io::divisor_to_json(d).dump()));
    ASSERT_EQ(back.points.size(), 2U);
    EXPECT_EQ(back.points[1].label, "q");
    EXPECT_EQ(back.points[1].cls, d.points[1].cls);

    for (int n = 1; n <= 4; ++n) {
        const ObstructionPoly p = obstruction_polynomial(n);
        const ObstructionPoly p2 = io::obstruction_from_json(json::parse(io::obstruction_to_json(p).dump()));
        EXPECT_EQ(p2.n, n);
        EXPECT_EQ(p2.poly, p.poly);
    }
}

TEST(Json, MalformedJets)
{
    EXPECT_THROW(io::laurent_from_json<C>(json::parse(R"({"pole":0,"order":2,"coeffs":["1"]})")), parse_error);
    EXPECT_THROW(io::laurent_from_json<C>(json::parse(R"({"pole":1,"order":0,"coeffs":["0","1"]})")), parse_error);
    EXPECT_THROW(io::laurent_from_json<C>(json::parse(R"({"order":0,"coeffs":["1"]})")), parse_error);
    EXPECT_THROW(io::power_from_json<C>(json::parse(R"({"pole":1,"order":0,"coeffs":["1","1"]})")), parse_error);
}

TEST(Json, FloatBackendRoundTripIsBitExact)
{
    TestRng rng(62);
    for (int i = 0; i < 50; ++i) {
        const ComplexExact e = rng.complex();
        const FloatComplex x(e.re().get_d() / 3.0, e.im().get_d() / 7.0);
        const FloatComplex y = io::scalar_from_json<FloatComplex>(json::parse(io::scalar_to_json(x).dump()));
        EXPECT_EQ(x.re(), y.re());
        EXPECT_EQ(x.im(), y.im());
    }
    EXPECT_EQ(io::scalar_from_json<FloatComplex>(json("1/4")).re(), 0.25);
    EXPECT_EQ(io::scalar_from_json<FloatComplex>(json("-0.5")).re(), -0.5);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_cli({"class"}, R"({"n":1,"value":"0","a":["2","3","5"]})").out, "{\"n\":1,\"c\":[\"3/2\"]}\n");
    EXPECT_EQ(run_cli({"class"}, "{not json").code, 1);
    EXPECT_EQ(run_cli({"class"}, R"({"n":1,"value":"0"})").code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}, "").code, 1);
    EXPECT_EQ(run_cli({"class", "--backend", "fast"}, "").code, 1);
    EXPECT_EQ(run_cli({"obstruction-poly"}, "").code, 1);
    EXPECT_EQ(run_cli({}, "").code, 1);

    const CliRun bad = run_cli({"class"}, R"({"n":1,"value":"0","a":["0","3","5"]})");
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(json::parse(bad.out)["error"], "BranchOrderMismatch");

    const CliRun obstructed = run_cli({"solve"}, R"({"n":1,"alpha":["-3/2","0","1","0"]})");
    EXPECT_EQ(obstructed.code, 2);
    const json report = json::parse(obstructed.out);
    EXPECT_EQ(report["error"], "ObstructionViolated");
    EXPECT_EQ(report["payload"], "1");
}

TEST(Cli, FloatBackendAgreesWithExact)
{
    const std::string input = R"({"n":2,"value":"1/3","a":["2","3","5","7"]})";
    const json exact = json::parse(run_cli({"class"}, input).out);
    const json approx = json::parse(run_cli({"class", "--backend", "float"}, input).out);
    ASSERT_EQ(exact["c"].size(), approx["c"].size());
    for (std::size_t k = 0; k < exact["c"].size(); ++k) {
        EXPECT_DOUBLE_EQ(parse_rational(exact["c"][k].get<std::string>()).get_d(), std::stod(approx["c"][k].get<std::string>()));
    }
}

TEST(Cli, GoldenFiles)
{
    const auto results = run_golden(JETMOEB_GOLDEN_DIR);
    EXPECT_GE(results.size(), 9U);
    for (const auto& r : results) {
        EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
    }
}
