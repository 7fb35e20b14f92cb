#pragma once

#include <stdexcept>
#include <string>

namespace kf {

/// Machine-readable error category. Mirrored as the "error" field of CLI error JSON.
enum class Errc {
    Parse,
    Domain,          // violated precondition on input values
    NotOnCurve,
    Pole,            // parametrization evaluated at a pole
    DegenerateFiber,
    Singular,
    FactorLimit,     // factorization exceeded the configured bit bound
    SeedTorsion,
    CapExceeded,
    Internal,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace kf
