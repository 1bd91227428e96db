#ifndef UFNA_ERRORS_HPP
#define UFNA_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ufna {

// Malformed input document. `position` is a byte offset into the source
// text when one is known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::size_t pos = 0)
        : std::runtime_error(msg), position(pos) {}

    std::size_t position;
};

// An enumeration was asked to materialize more elements than the
// configured cap allows. Never raised silently: callers either pass a
// larger cap or treat the condition as a hard stop.
class ResourceCapError : public std::runtime_error {
public:
    ResourceCapError(const std::string& what_grew, std::uint64_t cap)
        : std::runtime_error(what_grew + " exceeds resource cap " + std::to_string(cap)),
          cap(cap) {}

    std::uint64_t cap;
};

// Incompatible shapes in exact linear algebra calls.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural invariants that are theorems of the construction are
// enforced unconditionally; tripping one means an implementation bug,
// never bad input.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

#define UFNA_CHECK(cond, msg)                                  \
    do {                                                       \
        if (!(cond)) throw ::ufna::InternalCheckError(msg);    \
    } while (0)

} // namespace ufna

#endif
