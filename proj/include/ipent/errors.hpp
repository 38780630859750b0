#pragma once

#include <stdexcept>
#include <string>

namespace ipent {

// Error classes map onto CLI exit codes: parse -> 2, invariant -> 3, numerical -> 4.
enum class ErrorKind { Parse, Invariant, Numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorKind::Parse, w) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct NotAntisymmetric : Error {
    explicit NotAntisymmetric(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct NonFinite : Error {
    explicit NonFinite(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct WrongSymmetry : Error {
    explicit WrongSymmetry(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct WrongStatistics : Error {
    explicit WrongStatistics(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct NotNormalized : Error {
    explicit NotNormalized(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct LinearlyDependent : Error {
    explicit LinearlyDependent(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};
struct InvalidThreshold : Error {
    explicit InvalidThreshold(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct NumericalInconsistency : Error {
    explicit NumericalInconsistency(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};

}  // namespace ipent
