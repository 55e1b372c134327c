#pragma once

#include <stdexcept>
#include <string>

namespace gwva {

// Input/config problems (bad files, malformed documents, missing layers).
// The CLI maps these to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical/computation failures (singular systems, non-finite results).
// The CLI maps these to exit code 2.
class compute_error : public std::runtime_error {
public:
    explicit compute_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gwva
