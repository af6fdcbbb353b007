#include "oir/errors.hpp"

#include <atomic>

namespace oir {

namespace {
std::atomic<int> g_width_limit{12};
}

int width_limit() { return g_width_limit.load(); }

void set_width_limit(int limit) {
    if (limit < 0)
        throw Error("width limit must be nonnegative");
    g_width_limit.store(limit);
}

void check_width_limit(int w, const char* context) {
    if (w > width_limit())
        throw Error(std::string(context) + ": width " + std::to_string(w) +
                    " exceeds the configured limit " + std::to_string(width_limit()));
}

} // namespace oir
