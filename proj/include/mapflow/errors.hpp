#pragma once

#include <stdexcept>
#include <string>

namespace mapflow {

/// The fixed-point system is singular: nothing dissipates (e = 0 and no
/// waste path), so states grow without bound.
class NoSteadyState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A trajectory ended before every agent reached its threshold state.
class HorizonTooShort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File-system failure while writing an output artifact.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mapflow
