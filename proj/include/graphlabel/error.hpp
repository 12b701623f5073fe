#pragma once

#include <stdexcept>
#include <string>

namespace graphlabel {

// Raised on invalid inputs: bad parameters, malformed files, violated
// preconditions. The CLI maps this to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string & message) : std::runtime_error(message) {}
};

} // namespace graphlabel
