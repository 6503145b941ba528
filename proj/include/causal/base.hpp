#ifndef CAUSAL_BASE_HPP
#define CAUSAL_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace causal {

using VertexId = int;

enum class Colour : std::uint8_t { Red, Blue };

inline Colour complement(Colour c) {
    return c == Colour::Red ? Colour::Blue : Colour::Red;
}

inline const char* to_string(Colour c) {
    return c == Colour::Red ? "red" : "blue";
}

/// Error codes for structural rejections and precondition failures.
enum class Errc {
    EdgeColourConflict,
    EdgeInTooManyCells,
    CellsShareTwoEdges,
    NonSurfaceLink,
    Disconnected,
    NotADisc,
    NotASphere,
    NoArcs,
    MonochromeTetra,
    InteriorMonochrome,
    NonPseudomanifold,
    DuplicateTetra,
    EmptyBoundary,
    SideNotCylinder,
    MonochromePartNotDisc,
    MonochromePartNotSphere,
    InterfaceMismatch,
    MembershipFailed,
    BudgetExceeded,
    BadCell,
    ParseError,
};

inline const char* to_string(Errc e) {
    switch (e) {
        case Errc::EdgeColourConflict: return "EdgeColourConflict";
        case Errc::EdgeInTooManyCells: return "EdgeInTooManyCells";
        case Errc::CellsShareTwoEdges: return "CellsShareTwoEdges";
        case Errc::NonSurfaceLink: return "NonSurfaceLink";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotADisc: return "NotADisc";
        case Errc::NotASphere: return "NotASphere";
        case Errc::NoArcs: return "NoArcs";
        case Errc::MonochromeTetra: return "MonochromeTetra";
        case Errc::InteriorMonochrome: return "InteriorMonochrome";
        case Errc::NonPseudomanifold: return "NonPseudomanifold";
        case Errc::DuplicateTetra: return "DuplicateTetra";
        case Errc::EmptyBoundary: return "EmptyBoundary";
        case Errc::SideNotCylinder: return "SideNotCylinder";
        case Errc::MonochromePartNotDisc: return "MonochromePartNotDisc";
        case Errc::MonochromePartNotSphere: return "MonochromePartNotSphere";
        case Errc::InterfaceMismatch: return "InterfaceMismatch";
        case Errc::MembershipFailed: return "MembershipFailed";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::BadCell: return "BadCell";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace causal

#endif  // CAUSAL_BASE_HPP
