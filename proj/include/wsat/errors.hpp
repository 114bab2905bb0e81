#pragma once

#include <stdexcept>
#include <string>

namespace wsat {

/// Malformed external input (graph6 text, adjacency JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a configured enumeration cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wsat
