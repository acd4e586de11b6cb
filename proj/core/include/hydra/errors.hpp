#pragma once

#include <stdexcept>
#include <string>

namespace hydra {

/// Thrown when an exact computation would exceed its configured instance cap
/// (edge caps, subset-enumeration caps, search-node caps in exact-required mode).
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files (graph text format, certificate JSON,
/// Horn formula text).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hydra
