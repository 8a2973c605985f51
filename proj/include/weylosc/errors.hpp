#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylosc {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two levels of a triangular problem share an eigenvalue.
class DegenerateSpectrum : public Error {
public:
    DegenerateSpectrum(std::vector<std::pair<std::size_t, std::size_t>> collisions, const std::string& what)
        : Error(what), collisions_(std::move(collisions)) {}

    /// Pairs (i, j), i < j, of colliding levels.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& collisions() const { return collisions_; }

private:
    std::vector<std::pair<std::size_t, std::size_t>> collisions_;
};

class NotTriangular : public Error {
public:
    using Error::Error;
};

class NotScalar : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

class NotProportional : public Error {
public:
    using Error::Error;
};

class NotEigenfunction : public Error {
public:
    using Error::Error;
};

class GaugeMismatch : public Error {
public:
    using Error::Error;
};

} // namespace weylosc
