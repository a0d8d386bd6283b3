#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

// Exit codes shared by the CLI and the error hierarchy.
enum class ExitCode : int {
    ok = 0,
    config = 2,
    admissibility = 3,
    verification = 4,
    numeric = 5,
    parameter = 6,
};

class Error : public std::runtime_error {
public:
    Error(const std::string& what, ExitCode code) : std::runtime_error(what), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what, ExitCode::config) {}
};

// Expression and config parse failures; position is a 0-based column.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ConfigError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what, ExitCode::config) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what, ExitCode::config) {}
};

class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& what) : Error(what, ExitCode::admissibility) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what, ExitCode::parameter) {}
};

class UnsupportedReductionError : public ParameterError {
public:
    explicit UnsupportedReductionError(const std::string& what) : ParameterError(what) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what, double achieved = -1.0)
        : Error(what, ExitCode::numeric), achieved_(achieved) {}
    // Achieved tolerance when the failure is a convergence shortfall, else negative.
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

class SingularityError : public NumericError {
public:
    SingularityError(const std::string& what, double location)
        : NumericError(what + " (near mu=" + std::to_string(location) + ")"), location_(location) {}
    double location() const { return location_; }

private:
    double location_;
};

class NormalizabilityError : public NumericError {
public:
    explicit NormalizabilityError(const std::string& what) : NumericError(what) {}
};

class EigenSolverError : public NumericError {
public:
    EigenSolverError(const std::string& what, int index)
        : NumericError(what + " (eigenvalue index " + std::to_string(index) + ")"), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

} // namespace pdm
