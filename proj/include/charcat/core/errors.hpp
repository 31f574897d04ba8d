#pragma once

#include <stdexcept>
#include <string>

namespace charcat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad parameters, parse failures, non-normal subgroups, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An exhaustive search ran past its configured budget. Never silently truncated.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The requested computation is outside the supported range (e.g. radical in small characteristic).
class Unsupported : public Error {
public:
    using Error::Error;
};

} // namespace charcat
