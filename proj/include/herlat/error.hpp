#pragma once

#include <stdexcept>
#include <string>

namespace herlat {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// core_linalg
struct NotASublattice : Error {
    explicit NotASublattice(const std::string& m) : Error("NotASublattice: " + m) {}
};
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& m) : Error("RankMismatch: " + m) {}
};
struct EnumerationBudgetExceeded : Error {
    explicit EnumerationBudgetExceeded(const std::string& m)
        : Error("EnumerationBudgetExceeded: " + m) {}
};

// algebra
struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& m) : Error("ZeroDivisor: " + m) {}
};
struct SplitFailure : Error {
    explicit SplitFailure(const std::string& m) : Error("SplitFailure: " + m) {}
};
struct TypeMismatch : Error {
    explicit TypeMismatch(const std::string& m) : Error("TypeMismatch: " + m) {}
};

// orders
struct InternalBoundViolation : Error {
    explicit InternalBoundViolation(const std::string& m)
        : Error("InternalBoundViolation: " + m) {}
};

// hermitian
struct AdjointNotInAlgebra : Error {
    explicit AdjointNotInAlgebra(const std::string& m) : Error("AdjointNotInAlgebra: " + m) {}
};
struct NotPositive : Error {
    explicit NotPositive(const std::string& m) : Error("NotPositive: " + m) {}
};
struct GramSchmidtBreakdown : Error {
    explicit GramSchmidtBreakdown(const std::string& m) : Error("GramSchmidtBreakdown: " + m) {}
};
struct DegenerateBlock : Error {
    explicit DegenerateBlock(const std::string& m) : Error("DegenerateBlock: " + m) {}
};

// reduction
struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& m) : Error("DegenerateForm: " + m) {}
};
struct BoundViolation : Error {
    explicit BoundViolation(const std::string& m) : Error("BoundViolation: " + m) {}
};

// instancegen / cli
struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& m) : Error("InvalidParameters: " + m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError: " + m) {}
};

}  // namespace herlat
