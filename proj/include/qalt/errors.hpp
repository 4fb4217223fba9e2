#pragma once

#include <stdexcept>
#include <string>

namespace qalt {

// One exception type per failure mode named in the module contracts.
// All of them are runtime_errors so CLI code can catch the base class.

struct MalformedPD : std::runtime_error {
    explicit MalformedPD(const std::string& m) : std::runtime_error("MalformedPD: " + m) {}
};
struct EdgeMultiplicity : std::runtime_error {
    explicit EdgeMultiplicity(const std::string& m) : std::runtime_error("EdgeMultiplicity: " + m) {}
};
struct TraceFailure : std::runtime_error {
    explicit TraceFailure(const std::string& m) : std::runtime_error("TraceFailure: " + m) {}
};
struct MalformedBraid : std::runtime_error {
    explicit MalformedBraid(const std::string& m) : std::runtime_error("MalformedBraid: " + m) {}
};
struct DisconnectedDiagram : std::runtime_error {
    explicit DisconnectedDiagram(const std::string& m) : std::runtime_error("DisconnectedDiagram: " + m) {}
};
struct NotBraidClosure : std::runtime_error {
    explicit NotBraidClosure(const std::string& m) : std::runtime_error("NotBraidClosure: " + m) {}
};
struct NotNegativeDefinite : std::runtime_error {
    explicit NotNegativeDefinite(const std::string& m) : std::runtime_error("NotNegativeDefinite: " + m) {}
};
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& m) : std::runtime_error("ResourceLimit: " + m) {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& m) : std::runtime_error("BudgetExceeded: " + m) {}
};
struct ZeroDeterminant : std::runtime_error {
    explicit ZeroDeterminant(const std::string& m) : std::runtime_error("ZeroDeterminant: " + m) {}
};
struct NonRealRatio : std::runtime_error {
    explicit NonRealRatio(const std::string& m) : std::runtime_error("NonRealRatio: " + m) {}
};
struct NonIntegralDeterminant : std::runtime_error {
    explicit NonIntegralDeterminant(const std::string& m) : std::runtime_error("NonIntegralDeterminant: " + m) {}
};
struct BadParameters : std::runtime_error {
    explicit BadParameters(const std::string& m) : std::runtime_error("BadParameters: " + m) {}
};
struct OrientationMismatch : std::runtime_error {
    explicit OrientationMismatch(const std::string& m) : std::runtime_error("OrientationMismatch: " + m) {}
};
struct UnknownLink : std::runtime_error {
    explicit UnknownLink(const std::string& m) : std::runtime_error("UnknownLink: " + m) {}
};

} // namespace qalt
