#ifndef CAUSAL_VALIDATE_HPP
#define CAUSAL_VALIDATE_HPP

// Full slice validation: structural boundary checks plus the round-trip
// certificate (the midsection passes membership and reconstructing it gives
// the slice back), which certifies the ball / shell topology without any
// general 3-manifold recognition.

#include <string>

#include "causal/complex3.hpp"
#include "causal/midsection.hpp"
#include "causal/reconstruct.hpp"

namespace causal {

struct SliceReport {
    bool verdict = false;
    std::string failed_check;  // empty when valid
    std::string detail;        // error text or mismatch description

    nlohmann::json to_json() const {
        return {{"verdict", verdict},
                {"failed_check",
                 failed_check.empty() ? nlohmann::json() : nlohmann::json(failed_check)},
                {"detail", detail.empty() ? nlohmann::json() : nlohmann::json(detail)}};
    }
};

/// Checks, in order: monochrome simplices on the boundary, boundary topology
/// for the kind, the Euler characteristic, midsection membership, and the
/// reconstruction isomorphism.  Never throws; failures land in the report.
inline SliceReport validate_slice(const Complex3& m, SliceKind kind) {
    auto fail = [](const std::string& check, const std::string& detail) {
        return SliceReport{false, check, detail};
    };
    try {
        if (detail::require_slice_structure(m) != kind)
            return fail("boundary", "boundary has the other kind's shape");
    } catch (const Error& e) {
        std::string check = (e.code() == Errc::InteriorMonochrome) ? "interior_monochrome"
                                                                   : "boundary";
        return fail(check, e.what());
    }
    int want = (kind == SliceKind::Disc) ? 1 : 2;
    if (m.euler() != want)
        return fail("euler", "expected " + std::to_string(want) + ", got " +
                                 std::to_string(m.euler()));
    try {
        auto [s, labels] = midsection(m);
        MidsectionKind mk =
            (kind == SliceKind::Disc) ? MidsectionKind::Disc : MidsectionKind::Sphere;
        ConditionReport member = membership(s, mk);
        if (!member.verdict) return fail("midsection_membership", member.to_json().dump());
        Complex3 back = reconstruct(s, mk);
        if (!isomorphic3(back, m))
            return fail("reconstruction", "reconstructed slice is not isomorphic");
    } catch (const Error& e) {
        return fail("roundtrip", e.what());
    }
    return SliceReport{true, "", ""};
}

}  // namespace causal

#endif  // CAUSAL_VALIDATE_HPP
