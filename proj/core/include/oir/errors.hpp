#pragma once

#include <stdexcept>
#include <string>

namespace oir {

/// Error raised for violated preconditions: width mismatches, malformed
/// inputs, out-of-range indices, exceeded width limits.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Width limit for enumerative operations (Hom-set enumeration, ideal
/// expansion, complex construction). Exceeding it is a hard error rather
/// than a silent truncation. Default 12.
int width_limit();
void set_width_limit(int limit);

/// Throws oir::Error if w exceeds the configured width limit.
void check_width_limit(int w, const char* context);

} // namespace oir
