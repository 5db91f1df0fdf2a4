#ifndef PRODRANGE_ERRORS_HPP
#define PRODRANGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodrange {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};
struct NotPSD : Error {
    explicit NotPSD(const std::string& msg) : Error(msg) {}
};
struct NotPositiveContraction : Error {
    explicit NotPositiveContraction(const std::string& msg) : Error(msg) {}
};
struct NotProjection : Error {
    explicit NotProjection(const std::string& msg) : Error(msg) {}
};
struct ScalarInput : Error {
    explicit ScalarInput(const std::string& msg) : Error(msg) {}
};
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};
struct GridTooCoarse : Error {
    explicit GridTooCoarse(const std::string& msg) : Error(msg) {}
};
struct GridMismatch : Error {
    explicit GridMismatch(const std::string& msg) : Error(msg) {}
};
struct EmptyInput : Error {
    explicit EmptyInput(const std::string& msg) : Error(msg) {}
};
struct InvalidForm : Error {
    explicit InvalidForm(const std::string& msg) : Error(msg) {}
};
struct NotEssHerm : Error {
    explicit NotEssHerm(const std::string& msg) : Error(msg) {}
};
struct NotTwoPoint : Error {
    explicit NotTwoPoint(const std::string& msg) : Error(msg) {}
};
struct SpectrumOutOfRange : Error {
    explicit SpectrumOutOfRange(const std::string& msg) : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& msg) : Error(msg) {}
};

}  // namespace prodrange

#endif
