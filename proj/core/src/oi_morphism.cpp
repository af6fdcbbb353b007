#include "oir/oi_morphism.hpp"

#include <algorithm>
#include <numeric>

namespace oir {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return result;
}

OIMorphism::OIMorphism(int source_width, int target_width, std::vector<int> values)
    : source_width_(source_width), target_width_(target_width), values_(std::move(values)) {
    if (source_width_ < 0 || target_width_ < 0)
        throw Error("OIMorphism: widths must be nonnegative");
    if (static_cast<int>(values_.size()) != source_width_)
        throw Error("OIMorphism: expected " + std::to_string(source_width_) +
                    " values, got " + std::to_string(values_.size()));
    int prev = 0;
    for (int v : values_) {
        if (v <= prev)
            throw Error("OIMorphism: values must be strictly increasing and >= 1");
        if (v > target_width_)
            throw Error("OIMorphism: value " + std::to_string(v) + " exceeds target width " +
                        std::to_string(target_width_));
        prev = v;
    }
}

OIMorphism OIMorphism::identity(int w) {
    std::vector<int> values(static_cast<std::size_t>(w));
    std::iota(values.begin(), values.end(), 1);
    return OIMorphism(w, w, std::move(values));
}

int OIMorphism::operator()(int i) const {
    if (i < 1 || i > source_width_)
        throw Error("OIMorphism: argument " + std::to_string(i) + " outside [1, " +
                    std::to_string(source_width_) + "]");
    return values_[static_cast<std::size_t>(i - 1)];
}

bool OIMorphism::is_identity() const {
    if (source_width_ != target_width_)
        return false;
    for (int i = 0; i < source_width_; ++i)
        if (values_[static_cast<std::size_t>(i)] != i + 1)
            return false;
    return true;
}

std::string OIMorphism::str() const {
    bool single_digits = std::all_of(values_.begin(), values_.end(), [](int v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0 && !single_digits)
            out += '.';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::vector<OIMorphism> enumerate_morphisms(int m, int n) {
    if (m < 0 || n < 0)
        throw Error("enumerate_morphisms: widths must be nonnegative");
    check_width_limit(n, "enumerate_morphisms");
    std::vector<OIMorphism> result;
    if (m > n)
        return result;
    result.reserve(static_cast<std::size_t>(binomial(n, m)));
    // Lexicographic enumeration of m-subsets of [n].
    std::vector<int> values(static_cast<std::size_t>(m));
    std::iota(values.begin(), values.end(), 1);
    while (true) {
        result.emplace_back(m, n, values);
        int i = m - 1;
        while (i >= 0 && values[static_cast<std::size_t>(i)] == n - (m - 1 - i))
            --i;
        if (i < 0)
            break;
        ++values[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            values[static_cast<std::size_t>(j)] = values[static_cast<std::size_t>(j - 1)] + 1;
    }
    return result;
}

OIMorphism compose(const OIMorphism& outer, const OIMorphism& inner) {
    if (inner.target_width() != outer.source_width())
        throw Error("compose: width mismatch, inner target " +
                    std::to_string(inner.target_width()) + " vs outer source " +
                    std::to_string(outer.source_width()));
    std::vector<int> values;
    values.reserve(inner.values().size());
    for (int v : inner.values())
        values.push_back(outer(v));
    return OIMorphism(inner.source_width(), outer.target_width(), std::move(values));
}

std::vector<int> apply_to_tuple(const OIMorphism& eps, const std::vector<int>& tuple) {
    std::vector<int> out;
    out.reserve(tuple.size());
    int prev = 0;
    for (int a : tuple) {
        if (a <= prev)
            throw Error("apply_to_tuple: tuple must be strictly increasing");
        if (a < 1 || a > eps.source_width())
            throw Error("apply_to_tuple: entry " + std::to_string(a) + " outside [1, " +
                        std::to_string(eps.source_width()) + "]");
        out.push_back(eps(a));
        prev = a;
    }
    return out;
}

} // namespace oir
