#ifndef SEMIREL_TYPES_HPP
#define SEMIREL_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semirel {

// Graph nodes are dense ids allocated from a counter starting at 1; id 0 is
// never a live state.
using NodeId = std::uint32_t;

// Alphabet symbols are indexes into a sorted name table owned by the caller.
using Symbol = std::uint32_t;

// An internal invariant was violated. Callers translate this to a hard
// failure (CLI exit code 3), never to a recoverable condition.
struct engine_error : std::logic_error {
    explicit engine_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed external input (rewriting system file, certificate JSON).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace semirel

#endif
