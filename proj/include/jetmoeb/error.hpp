#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetmoeb {

// Domain failures raised by the library. Each code has a stable name that
// the command-line tool reports verbatim.
enum class errc {
    insufficient_order,
    order_exceeded,
    center_mismatch,
    division_by_zero_series,
    division_by_zero,
    not_invertible_germ,
    residue_obstruction,
    unsupported_constant_term,
    invalid_moebius,
    branched_jet_not_osculable,
    not_a_biholomorphism_germ,
    branch_order_mismatch,
    coordinate_not_invertible,
    not_in_r_zero,
    order_mismatch,
    divisor_mismatch,
    indicial_mismatch,
    obstruction_violated,
    degree_bound_exceeded,
    sections_intersect,
    non_proportional_result,
    correspondence_violated,
    invalid_argument,
};

constexpr std::string_view error_name(errc e) noexcept
{
    switch (e) {
        case errc::insufficient_order: return "InsufficientOrder";
        case errc::order_exceeded: return "OrderExceeded";
        case errc::center_mismatch: return "CenterMismatch";
        case errc::division_by_zero_series: return "DivisionByZeroSeries";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_invertible_germ: return "NotInvertibleGerm";
        case errc::residue_obstruction: return "ResidueObstruction";
        case errc::unsupported_constant_term: return "UnsupportedConstantTerm";
        case errc::invalid_moebius: return "InvalidMoebius";
        case errc::branched_jet_not_osculable: return "BranchedJetNotOsculable";
        case errc::not_a_biholomorphism_germ: return "NotABiholomorphismGerm";
        case errc::branch_order_mismatch: return "BranchOrderMismatch";
        case errc::coordinate_not_invertible: return "CoordinateNotInvertible";
        case errc::not_in_r_zero: return "NotInRZero";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::divisor_mismatch: return "DivisorMismatch";
        case errc::indicial_mismatch: return "IndicialMismatch";
        case errc::obstruction_violated: return "ObstructionViolated";
        case errc::degree_bound_exceeded: return "DegreeBoundExceeded";
        case errc::sections_intersect: return "SectionsIntersect";
        case errc::non_proportional_result: return "NonProportionalResult";
        case errc::correspondence_violated: return "CorrespondenceViolated";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class jet_error : public std::runtime_error {
public:
    jet_error(errc code, const std::string& what, std::optional<std::string> payload = std::nullopt)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code),
          payload_(std::move(payload))
    {
    }

    errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

    // Optional machine-readable datum, e.g. the nonzero obstruction value.
    const std::optional<std::string>& payload() const noexcept { return payload_; }

private:
    errc code_;
    std::optional<std::string> payload_;
};

// Malformed textual input (bad rational literal, wrong JSON shape). Distinct
// from jet_error so that front ends can tell user input apart from math.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jetmoeb
