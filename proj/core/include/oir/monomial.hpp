#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "oir/oi_morphism.hpp"

namespace oir {

/// Signature of the polynomial OI-algebra Sym(F^{OI,1})^{(x) rows}: in width
/// w its component is k[x_{i,j} | 1 <= i <= rows, 1 <= j <= w], with OI
/// morphisms acting on the column index j. The prime is the coefficient
/// field used for homology rank computations.
struct AlgebraSignature {
    int rows = 1;
    std::uint32_t prime = 2;

    AlgebraSignature() = default;
    AlgebraSignature(int rows_, std::uint32_t prime_);

    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

/// A monomial in A(width): a sparse exponent table over the rows x width
/// variable grid. Entries are kept sorted by (row, col) with positive
/// exponents, so equality is structural.
class Monomial {
public:
    struct Entry {
        int row;
        int col;
        int exp;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    explicit Monomial(int width) : width_(width) {
        if (width < 0)
            throw Error("Monomial: width must be nonnegative");
    }
    Monomial(int width, std::vector<Entry> entries);

    /// The single variable x_{row,col}.
    static Monomial variable(int width, int row, int col);
    /// The unit monomial 1 in A(width).
    static Monomial one(int width) { return Monomial(width); }

    int width() const { return width_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int degree() const;
    int exponent(int row, int col) const;
    int max_row() const;

    std::string str() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    int width_;
    std::vector<Entry> entries_; // sorted by (row, col), exponents >= 1
};

/// The OI action on monomials: columns are reindexed through eps, rows and
/// exponents are unchanged. Requires m.width() == eps.source_width().
Monomial act(const OIMorphism& eps, const Monomial& m);

bool divides(const Monomial& divisor, const Monomial& dividend);
Monomial lcm(const Monomial& a, const Monomial& b);
/// Componentwise difference a / b; b must divide a.
Monomial divide(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);

/// An integer linear combination of monomials of one width (the coefficient
/// arithmetic needed by the differentials here; not a general polynomial
/// type). Terms are normalized: sorted by monomial, zero coefficients
/// dropped.
class MonomialSum {
public:
    struct Term {
        std::int64_t coeff;
        Monomial monomial;
    };

    MonomialSum() = default;
    MonomialSum(std::int64_t coeff, Monomial m);

    static MonomialSum zero() { return MonomialSum(); }
    static MonomialSum constant(int width, std::int64_t c) {
        return MonomialSum(c, Monomial::one(width));
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }

    /// Coefficient of the unit monomial.
    std::int64_t constant_term() const;
    /// True when every term has the same total degree d; sets d.
    bool homogeneous_degree(int& d) const;

    void add_term(std::int64_t coeff, const Monomial& m);
    MonomialSum& operator+=(const MonomialSum& other);
    MonomialSum operator-() const;
    MonomialSum scaled(std::int64_t c) const;

    std::string str() const;

    friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b);
    friend bool operator==(const MonomialSum&, const MonomialSum&) = default;

private:
    std::vector<Term> terms_;
};

inline bool operator==(const MonomialSum::Term& a, const MonomialSum::Term& b) {
    return a.coeff == b.coeff && a.monomial == b.monomial;
}

MonomialSum act(const OIMorphism& eps, const MonomialSum& s);

/// Numerator K(t) of the Hilbert series of A(w)/(gens), where the series is
/// K(t)/(1-t)^{nvars}; returns coefficients of 1, t, ..., t^max_degree by
/// inclusion-exclusion over lcms of generator subsets. At most 20
/// generators.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& quotient_gens, int w,
                                            int max_degree);

} // namespace oir
