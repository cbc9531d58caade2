#pragma once

#include <stdexcept>
#include <string>

namespace lerch {

enum class ErrorKind {
    domain,
    singular_stratum,
    pole,
    accuracy,
    branch,
    identity_violation,
    transport
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class SingularStratumError : public Error {
public:
    explicit SingularStratumError(const std::string& what)
        : Error(ErrorKind::singular_stratum, what) {}
};

// Gamma poles and rational functions evaluated at z = 1.
class PoleError : public Error {
public:
    PoleError(const std::string& what, long location, int order = 1)
        : Error(ErrorKind::pole, what), location_(location), order_(order) {}
    long location() const noexcept { return location_; }
    int order() const noexcept { return order_; }

private:
    long location_;
    int order_;
};

// Carries the best estimate so callers can still report something.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best_re, double best_im, double bound)
        : Error(ErrorKind::accuracy, what), re_(best_re), im_(best_im), bound_(bound) {}
    double best_real() const noexcept { return re_; }
    double best_imag() const noexcept { return im_; }
    double error_bound() const noexcept { return bound_; }

private:
    double re_, im_, bound_;
};

class BranchError : public Error {
public:
    explicit BranchError(const std::string& what) : Error(ErrorKind::branch, what) {}
};

class IdentityViolation : public Error {
public:
    explicit IdentityViolation(const std::string& what)
        : Error(ErrorKind::identity_violation, what) {}
};

class TransportError : public Error {
public:
    explicit TransportError(const std::string& what) : Error(ErrorKind::transport, what) {}
};

// Process exit status used by the command line tool.
inline int exit_code_for(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::domain:
    case ErrorKind::singular_stratum:
    case ErrorKind::pole:
        return 2;
    case ErrorKind::accuracy:
    case ErrorKind::identity_violation:
    case ErrorKind::transport:
        return 3;
    case ErrorKind::branch:
        return 4;
    }
    return 3;
}

}  // namespace lerch
