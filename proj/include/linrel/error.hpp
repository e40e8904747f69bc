#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family polynomial has a vanishing leading coefficient (A_n = 0).
class DegenerateBasis : public Error {
public:
    using Error::Error;
};

/// A closed-form coefficient hit a zero denominator (Pochhammer, factorial, linear factor).
class FormulaPole : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A hypergeometric series has no nonpositive-integer numerator parameter.
class NonTerminating : public Error {
public:
    using Error::Error;
};

/// A denominator Pochhammer vanished before the series terminated.
class DenominatorPole : public Error {
public:
    using Error::Error;
};

/// Parameters fall outside the range where the weight is a positive measure.
class InvalidOrthogonalityDomain : public Error {
public:
    using Error::Error;
};

/// Two independent representations of the same quantity disagree.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class TruncationBudgetExceeded : public Error {
public:
    using Error::Error;
};

class EigenFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace linrel
