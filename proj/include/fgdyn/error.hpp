#pragma once

#include <stdexcept>
#include <string>

namespace fgdyn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed word text or catalog syntax.
class ParseError : public Error {
public:
    using Error::Error;
};

// A parameter or letter index outside the admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotAvailable : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

class ConjugatorMismatch : public Error {
public:
    using Error::Error;
};

class NoFactorization : public Error {
public:
    using Error::Error;
};

class AmbiguousSegmentation : public Error {
public:
    using Error::Error;
};

class NonClosure : public Error {
public:
    using Error::Error;
};

class SpectralError : public Error {
public:
    using Error::Error;
};

}  // namespace fgdyn
