#pragma once

#include <stdexcept>
#include <string>

namespace decomp {

// Error taxonomy shared by the library and the CLI.  The CLI maps these to
// process exit codes, so the distinction matters: input_error means the
// caller handed us something malformed (bad JSON, a relation with a cycle,
// an unknown element name), verify_error means a structural check that the
// library promises to enforce actually failed, and resource_error means a
// configured budget (chain cap, ground set size) was exceeded before the
// computation finished.

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct verify_error : std::runtime_error {
    explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violations: a bug in this library, not in user input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_input(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void require_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace decomp
