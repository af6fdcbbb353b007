#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "oir/errors.hpp"

namespace oir {

/// Binomial coefficient C(n, k); returns 0 for k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// A morphism of the skeletal OI category: a strictly increasing injection
/// from [source_width] into [target_width]. values[i] is the image of i+1
/// (entries are 1-based). The empty sequence is the unique morphism out of
/// the width-0 object.
class OIMorphism {
public:
    OIMorphism(int source_width, int target_width, std::vector<int> values);

    /// The identity morphism on [w].
    static OIMorphism identity(int w);

    int source_width() const { return source_width_; }
    int target_width() const { return target_width_; }
    const std::vector<int>& values() const { return values_; }

    /// Image of i under the morphism, 1 <= i <= source_width.
    int operator()(int i) const;

    bool is_identity() const;

    /// Digit-string rendering ("357" for 1->3, 2->5, 3->7); values above 9
    /// are separated by dots to stay unambiguous.
    std::string str() const;

    friend auto operator<=>(const OIMorphism&, const OIMorphism&) = default;

private:
    int source_width_;
    int target_width_;
    std::vector<int> values_;
};

/// All OI morphisms m -> n in lexicographic order of their value strings.
/// Empty for m > n; the list has C(n, m) elements.
std::vector<OIMorphism> enumerate_morphisms(int m, int n);

/// Composition outer . inner (inner applied first). The inner morphism's
/// target width must equal the outer morphism's source width.
OIMorphism compose(const OIMorphism& outer, const OIMorphism& inner);

/// Componentwise application of eps to a strictly increasing integer tuple
/// with entries in [1, eps.source_width()].
std::vector<int> apply_to_tuple(const OIMorphism& eps, const std::vector<int>& tuple);

} // namespace oir
