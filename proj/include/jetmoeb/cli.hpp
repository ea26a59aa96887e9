#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jetmoeb.hpp"
#include "io.hpp"
#include "verify.hpp"

// The jetmoeb command-line tool. Exit status: 0 success, 1 malformed input
// or usage, 2 library error (reported on stdout as {"error": name, ...}).

namespace jetmoeb::cli {

using io::json;

struct Options {
    std::string subcommand;
    std::string input = "-";
    std::string backend = "exact";
    std::optional<int> n;
    int order = 8;
    std::optional<std::string> delta_n;
    std::uint64_t seed = 0;
    std::string suite = "all";
};

namespace detail {

inline json read_input(const Options& opt, std::istream& in)
{
    std::string text;
    if (opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(opt.input, std::ios::binary);
        if (!file) {
            throw parse_error("cannot open '" + opt.input + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

inline DeltaMode mode_of(const json& j)
{
    auto it = j.find("mode");
    if (it == j.end()) {
        return DeltaMode::preschwarzian;
    }
    if (!it->is_string()) {
        throw parse_error("mode must be a string");
    }
    return parse_delta_mode(it->get<std::string>());
}

inline bool is_divisor(const json& j)
{
    return j.is_object() && j.contains("points");
}

template <Field F>
F parse_scalar_flag(const std::string& text)
{
    if constexpr (field_traits<F>::exact) {
        return parse_complex(text);
    } else {
        return io::scalar_from_json<F>(json(text));
    }
}

template <Field F>
json run_class(const Options& opt, const json& in)
{
    if (in.contains("coeffs")) {
        if (!opt.n) {
            throw parse_error("a plain jet needs --n");
        }
        return io::class_to_json(class_from_affine_jet(io::power_from_json<F>(in), *opt.n));
    }
    return io::class_to_json(class_of(io::branched_from_json<F>(in)));
}

template <Field F>
json run_act(const json& in)
{
    const BranchedJet<F> j = io::branched_from_json<F>(io::detail::require(in, "jet"));
    if (in.contains("germ")) {
        return io::branched_to_json(postcompose_germ(j, io::power_from_json<F>(in["germ"])));
    }
    return io::branched_to_json(act(io::moebius_from_json<F>(io::detail::require(in, "moebius")), j));
}

template <Field F>
json run_diff(const json& in)
{
    const DeltaMode mode = mode_of(in);
    const json& c2 = io::detail::require(in, "c2");
    const json& c1 = io::detail::require(in, "c1");
    if (is_divisor(c2) || is_divisor(c1)) {
        return io::divisor_delta_to_json(divisor_diff(io::divisor_from_json<F>(c2), io::divisor_from_json<F>(c1), mode));
    }
    return io::delta_to_json(diff_classes(io::class_from_json<F>(c2), io::class_from_json<F>(c1), mode));
}

template <Field F>
json run_translate(const json& in)
{
    const json& c = io::detail::require(in, "class");
    const json& d = io::detail::require(in, "delta");
    if (is_divisor(c) || is_divisor(d)) {
        return io::divisor_to_json(divisor_translate(io::divisor_from_json<F>(c), io::divisor_delta_from_json<F>(d)));
    }
    return io::class_to_json(translate_class(io::class_from_json<F>(c), io::delta_from_json<F>(d)));
}

template <Field F>
json run_solve(const Options& opt, const json& in)
{
    const QuadDiffLaurent<F> phi = io::quad_from_json<F>(in);
    const F delta_n = opt.delta_n ? parse_scalar_flag<F>(*opt.delta_n) : from_int<F>(0);
    const RiccatiSolution<F> sol = riccati_solve(phi, delta_n);
    const BranchedJet<F> jet = reconstruct_map(sol);
    json out;
    out["germ"] = io::jet_to_json(reconstruct_germ(sol));
    out["jet"] = io::branched_to_json(jet);
    out["class"] = io::class_to_json(class_of(jet));
    return out;
}

template <Field F>
json run_obstruction(const json& in)
{
    const QuadDiffLaurent<F> phi = io::quad_from_json<F>(in);
    json out;
    out["n"] = phi.n();
    out["forced_alpha"] = io::scalar_to_json(forced_alpha(phi));
    if (phi.order() >= phi.n() - 1) {
        const F value = obstruction_value(phi);
        out["value"] = io::scalar_to_json(value);
        out["admissible"] = is_zero(value);
    }
    return out;
}

template <Field F>
int run_verify(const Options& opt, std::ostream& out)
{
    VerifyOptions vo;
    vo.order = opt.order;
    vo.seed = opt.seed;
    const auto results = run_suites<F>(opt.suite, vo);
    json suites = json::array();
    int failed = 0;
    for (const auto& r : results) {
        suites.push_back(json{{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}});
        failed += r.failed;
    }
    out << json{{"seed", opt.seed}, {"order", opt.order}, {"suites", suites}}.dump() << '\n';
    return failed == 0 ? 0 : 2;
}

template <Field F>
int dispatch(const Options& opt, std::istream& in, std::ostream& out)
{
    const std::string& cmd = opt.subcommand;
    if (cmd == "obstruction-poly") {
        if (!opt.n) {
            throw parse_error("obstruction-poly needs --n");
        }
        out << io::obstruction_to_json(obstruction_polynomial(*opt.n)).dump() << '\n';
        return 0;
    }
    if (cmd == "verify") {
        return run_verify<std::conditional_t<field_traits<F>::exact, F, VerifyFloat>>(opt, out);
    }
    const json input = read_input(opt, in);
    json result;
    if (cmd == "class") {
        result = run_class<F>(opt, input);
    } else if (cmd == "normal-form") {
        result = io::branched_to_json(normal_form(io::class_from_json<F>(input)));
    } else if (cmd == "act") {
        result = run_act<F>(input);
    } else if (cmd == "diff") {
        result = run_diff<F>(input);
    } else if (cmd == "translate") {
        result = run_translate<F>(input);
    } else if (cmd == "solve") {
        result = run_solve<F>(opt, input);
    } else {
        result = run_obstruction<F>(input);
    }
    out << result.dump() << '\n';
    return 0;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Branched projective structures: jets, Schwarzians, branching classes", "jetmoeb"};
    app.require_subcommand(1);
    Options opt;

    for (const char* name : {"class", "normal-form", "act", "diff", "translate", "solve", "obstruction",
                             "obstruction-poly", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "JSON input file, or - for standard input");
        sub->add_option("--backend", opt.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--n", opt.n, "branch order")->check(CLI::Range(1, 64));
        sub->add_option("--order", opt.order, "truncation order")->check(CLI::Range(1, 64));
        sub->add_option("--delta-n", opt.delta_n, "free Riccati coefficient, a complex literal");
        sub->add_option("--seed", opt.seed, "random seed for verify");
        sub->add_option("--suite", opt.suite, "verify suite")
            ->check(CLI::IsMember({"all", "branching", "connections", "fuchs", "moebius", "schwarzian"}));
        sub->callback([&opt, name] { opt.subcommand = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "jetmoeb: " << e.what() << '\n';
        return 1;
    }

    try {
        if (opt.backend == "float") {
            return detail::dispatch<FloatComplex>(opt, in, out);
        }
        return detail::dispatch<ComplexExact>(opt, in, out);
    } catch (const jet_error& e) {
        json report{{"error", std::string(e.name())}, {"message", std::string(e.what())}};
        report["payload"] = e.payload() ? json(*e.payload()) : json(nullptr);
        out << report.dump() << '\n';
        return 2;
    } catch (const parse_error& e) {
        err << "jetmoeb: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << "jetmoeb: malformed input: " << e.what() << '\n';
        return 1;
    }
}

} // namespace jetmoeb::cli
