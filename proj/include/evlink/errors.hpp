#pragma once

#include <stdexcept>
#include <string>

namespace evlink {

// Malformed input data: files, streams, manifests, indices. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric failure: non-finite losses, domain violations during training. CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad flags or config values. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace evlink
