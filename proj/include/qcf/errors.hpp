/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every module.
 *
 * Several errors double as test signals: NotDivisibleError is the failure
 * mode of polynomiality claims, PoleAtOriginError guards the Laurent-vs-power
 * series distinction in continued fraction tails, BijectionViolation flags a
 * broken post-condition of one of the combinatorial maps.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand granularities are incompatible (neither divides the other).
class GranularityError : public Error {
public:
    explicit GranularityError(const std::string& what) : Error(what) {}
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

/// Series has no inverse in the truncated power-series ring.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& what) : Error(what) {}
};

/// Denominator series vanishes at z=0; the value is a genuine Laurent series.
class PoleAtOriginError : public Error {
public:
    explicit PoleAtOriginError(const std::string& what) : Error(what) {}
};

/// Enumeration would exceed the configured object limit.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

/// An involution was asked to move a fixed point.
class FixedPointError : public Error {
public:
    explicit FixedPointError(const std::string& what) : Error(what) {}
};

/// A bijection post-condition failed (test signal, never expected).
class BijectionViolation : public Error {
public:
    explicit BijectionViolation(const std::string& what) : Error(what) {}
};

} // namespace qcf
