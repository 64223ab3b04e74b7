#pragma once

#include <stdexcept>
#include <string>

namespace qem {

enum class ErrorCode {
    Argument,          // bad parameter values, inconsistent initial data
    Domain,            // point outside chart / profile span, nonpositive profile value
    MetricDegenerate,  // nonpositive metric component
    Capability,        // missing derivative order, unsupported dimension
    InvalidSpace,      // potential nonpositive on grid
    SingularProfile,   // immediate blow-up at integration start
    NotAxisClosable,   // zero or multiple critical points where one is required
    ConeSingular,      // nonpositive second derivative at the axis
    WitnessFailure,    // ODE evidence contradicts the classified label
    FiberMismatch,     // fiber model unavailable for the requested sign of mu
    InconsistentBuild, // profile levels do not match the requested family
    InvalidProfile,    // profile pair fails its governing system
    FrameUndefined,    // |grad w| = 0 where a frame coefficient needs it
    Verification,      // cross-check assertion failed
    Io,                // file write/read failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

    const char* code_name() const {
        switch (code_) {
        case ErrorCode::Argument: return "argument";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::MetricDegenerate: return "metric-degenerate";
        case ErrorCode::Capability: return "capability";
        case ErrorCode::InvalidSpace: return "invalid-space";
        case ErrorCode::SingularProfile: return "singular-profile";
        case ErrorCode::NotAxisClosable: return "not-axis-closable";
        case ErrorCode::ConeSingular: return "cone-singular";
        case ErrorCode::WitnessFailure: return "witness-failure";
        case ErrorCode::FiberMismatch: return "fiber-mismatch";
        case ErrorCode::InconsistentBuild: return "inconsistent-build";
        case ErrorCode::InvalidProfile: return "invalid-profile";
        case ErrorCode::FrameUndefined: return "frame-undefined";
        case ErrorCode::Verification: return "verification";
        case ErrorCode::Io: return "io";
        }
        return "unknown";
    }

private:
    ErrorCode code_;
};

}  // namespace qem
