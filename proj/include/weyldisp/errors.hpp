#pragma once

#include <stdexcept>
#include <string>

namespace weyldisp {

// Error taxonomy. NotDivisible is not a bug signal: exact division failing is
// how non-integrality witnesses surface in count reports.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidType : Error {
    explicit InvalidType(const std::string& w) : Error("invalid type: " + w) {}
};

struct NotDivisible : Error {
    std::string witness;
    explicit NotDivisible(const std::string& w)
        : Error("not divisible: " + w), witness(w) {}
};

struct NotTwistedInvolution : Error {
    NotTwistedInvolution() : Error("element is not a twisted involution") {}
};

struct InternalContradiction : Error {
    explicit InternalContradiction(const std::string& w)
        : Error("internal contradiction: " + w) {}
};

struct ClassTooLarge : Error {
    explicit ClassTooLarge(std::size_t cap)
        : Error("class exceeds element cap " + std::to_string(cap)) {}
};

struct NonCrystallographic : Error {
    NonCrystallographic() : Error("operation requires a crystallographic type") {}
};

struct NotBicapped : Error {
    NotBicapped() : Error("class is not bi-capped") {}
};

struct NotInvolutionClass : Error {
    NotInvolutionClass() : Error("class does not consist of twisted involutions") {}
};

struct CapMissing : Error {
    CapMissing() : Error("class has no unique minimal element (lower cap missing)") {}
};

struct NotCoxeterSystem : Error {
    explicit NotCoxeterSystem(const std::string& w)
        : Error("generated elements do not form a Coxeter system: " + w) {}
};

struct ReduciblePolynomial : Error {
    explicit ReduciblePolynomial(const std::string& w)
        : Error("polynomial is reducible: " + w) {}
};

struct EvenDimension : Error {
    EvenDimension() : Error("construction needs odd projective rank (even vector dimension)") {}
};

struct NoSuchGenerator : Error {
    explicit NoSuchGenerator(const std::string& w) : Error("no such generator: " + w) {}
};

struct NotAFlag : Error {
    NotAFlag() : Error("matrix rows do not define a complete flag") {}
};

}  // namespace weyldisp
