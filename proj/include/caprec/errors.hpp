#pragma once

#include <stdexcept>
#include <string>

namespace caprec {

// Error taxonomy mirrors the CLI exit-code contract:
//   UsageError -> 2, DataError -> 3, EstimationError -> 4.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace caprec
