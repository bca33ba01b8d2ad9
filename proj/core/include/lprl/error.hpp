// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lprl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text front ends; `offset` is a byte position in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Exploration exceeded its configured state cap; never a verdict.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace lprl
