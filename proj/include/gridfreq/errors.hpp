#pragma once

#include <stdexcept>
#include <string>

namespace gridfreq {

/// Base class for all gridfreq errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- lti-core ---

/// 1 + g*h is identically zero; closed loop is undefined.
class DegenerateLoop : public Error {
public:
    using Error::Error;
};

/// Numerator degree exceeds denominator degree where a proper system is required.
class ImproperSystem : public Error {
public:
    using Error::Error;
};

/// A trace with zero samples was passed where data is required.
class EmptyTrace : public Error {
public:
    using Error::Error;
};

// --- plant-models / system-assembly ---

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class UnknownArea : public Error {
public:
    using Error::Error;
};

class UnknownChannel : public Error {
public:
    using Error::Error;
};

// --- identification ---

class InfeasibleBounds : public Error {
public:
    using Error::Error;
};

/// No excited input channel drives the parameters being fitted.
class UnidentifiableInput : public Error {
public:
    using Error::Error;
};

class SolverDegenerate : public Error {
public:
    using Error::Error;
};

/// TSS of the reference signal is zero; R^2 is undefined.
class ConstantReference : public Error {
public:
    using Error::Error;
};

// --- data-io ---

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class NonuniformSampling : public Error {
public:
    using Error::Error;
};

class DuplicateChannel : public Error {
public:
    using Error::Error;
};

class EmptyFile : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gridfreq
