#pragma once

#include <stdexcept>
#include <string>

namespace subdiff {

/// Raised when an evaluation cannot certify its accuracy target.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subdiff
