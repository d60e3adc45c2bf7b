#pragma once

#include <stdexcept>
#include <string>

namespace matmonoid {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The matrix is not a product of the generators L_u and R_v.
class NotInMonoid : public Error {
public:
    using Error::Error;
};

/// A brute-force enumeration was requested beyond the configured cap.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A constructed extremal word does not attain the exact maximum.
/// Always indicates an index-convention bug, never bad input.
class WitnessMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

} // namespace matmonoid
