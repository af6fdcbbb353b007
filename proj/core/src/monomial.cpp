#include "oir/monomial.hpp"

#include <algorithm>
#include <map>

#include "oir/fp_linalg.hpp"

namespace oir {

AlgebraSignature::AlgebraSignature(int rows_, std::uint32_t prime_) : rows(rows_), prime(prime_) {
    if (rows < 1)
        throw Error("AlgebraSignature: rows must be >= 1");
    if (prime > (1u << 31) || !is_prime(prime))
        throw Error("AlgebraSignature: base field characteristic must be a prime <= 2^31");
}

Monomial::Monomial(int width, std::vector<Entry> entries) : width_(width), entries_(std::move(entries)) {
    if (width_ < 0)
        throw Error("Monomial: width must be nonnegative");
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
    // Merge duplicate positions.
    std::vector<Entry> merged;
    for (const Entry& e : entries_) {
        if (e.row < 1 || e.col < 1 || e.col > width_)
            throw Error("Monomial: variable position out of range");
        if (e.exp < 1)
            throw Error("Monomial: exponents must be positive");
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
            merged.back().exp += e.exp;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

Monomial Monomial::variable(int width, int row, int col) {
    return Monomial(width, {Entry{row, col, 1}});
}

int Monomial::degree() const {
    int d = 0;
    for (const Entry& e : entries_)
        d += e.exp;
    return d;
}

int Monomial::exponent(int row, int col) const {
    for (const Entry& e : entries_)
        if (e.row == row && e.col == col)
            return e.exp;
    return 0;
}

int Monomial::max_row() const {
    int r = 0;
    for (const Entry& e : entries_)
        r = std::max(r, e.row);
    return r;
}

std::string Monomial::str() const {
    if (entries_.empty())
        return "1";
    std::string out;
    bool multirow = max_row() > 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0)
            out += "*";
        const Entry& e = entries_[i];
        out += "x";
        if (multirow)
            out += std::to_string(e.row) + "," + std::to_string(e.col);
        else
            out += std::to_string(e.col);
        if (e.exp > 1)
            out += "^" + std::to_string(e.exp);
    }
    return out;
}

Monomial act(const OIMorphism& eps, const Monomial& m) {
    if (m.width() != eps.source_width())
        throw Error("act: monomial width " + std::to_string(m.width()) +
                    " does not match morphism source " + std::to_string(eps.source_width()));
    std::vector<Monomial::Entry> entries;
    entries.reserve(m.entries().size());
    for (const auto& e : m.entries())
        entries.push_back({e.row, eps(e.col), e.exp});
    return Monomial(eps.target_width(), std::move(entries));
}

bool divides(const Monomial& divisor, const Monomial& dividend) {
    if (divisor.width() != dividend.width())
        throw Error("divides: width mismatch");
    for (const auto& e : divisor.entries())
        if (dividend.exponent(e.row, e.col) < e.exp)
            return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.width() != b.width())
        throw Error("lcm: width mismatch");
    std::map<std::pair<int, int>, int> exps;
    for (const auto& e : a.entries())
        exps[{e.row, e.col}] = e.exp;
    for (const auto& e : b.entries()) {
        int& v = exps[{e.row, e.col}];
        v = std::max(v, e.exp);
    }
    std::vector<Monomial::Entry> entries;
    entries.reserve(exps.size());
    for (const auto& [pos, exp] : exps)
        entries.push_back({pos.first, pos.second, exp});
    return Monomial(a.width(), std::move(entries));
}

Monomial divide(const Monomial& a, const Monomial& b) {
    if (!divides(b, a))
        throw Error("divide: " + b.str() + " does not divide " + a.str());
    std::vector<Monomial::Entry> entries;
    for (const auto& e : a.entries()) {
        int rem = e.exp - b.exponent(e.row, e.col);
        if (rem > 0)
            entries.push_back({e.row, e.col, rem});
    }
    return Monomial(a.width(), std::move(entries));
}

Monomial mul(const Monomial& a, const Monomial& b) {
    if (a.width() != b.width())
        throw Error("mul: width mismatch");
    std::vector<Monomial::Entry> entries = a.entries();
    for (const auto& e : b.entries())
        entries.push_back(e);
    return Monomial(a.width(), std::move(entries));
}

MonomialSum::MonomialSum(std::int64_t coeff, Monomial m) {
    add_term(coeff, m);
}

std::int64_t MonomialSum::constant_term() const {
    for (const Term& t : terms_)
        if (t.monomial.is_one())
            return t.coeff;
    return 0;
}

bool MonomialSum::homogeneous_degree(int& d) const {
    if (terms_.empty()) {
        d = 0;
        return true;
    }
    d = terms_.front().monomial.degree();
    for (const Term& t : terms_)
        if (t.monomial.degree() != d)
            return false;
    return true;
}

void MonomialSum::add_term(std::int64_t coeff, const Monomial& m) {
    if (coeff == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial < key; });
    if (it != terms_.end() && it->monomial == m) {
        it->coeff += coeff;
        if (it->coeff == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, Term{coeff, m});
    }
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& other) {
    for (const Term& t : other.terms_)
        add_term(t.coeff, t.monomial);
    return *this;
}

MonomialSum MonomialSum::operator-() const {
    return scaled(-1);
}

MonomialSum MonomialSum::scaled(std::int64_t c) const {
    MonomialSum out;
    if (c == 0)
        return out;
    out.terms_ = terms_;
    for (Term& t : out.terms_)
        t.coeff *= c;
    return out;
}

std::string MonomialSum::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (i == 0) {
            if (t.coeff < 0)
                out += "-";
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        std::int64_t a = t.coeff < 0 ? -t.coeff : t.coeff;
        if (a != 1 || t.monomial.is_one()) {
            out += std::to_string(a);
            if (!t.monomial.is_one())
                out += "*";
        }
        if (!t.monomial.is_one())
            out += t.monomial.str();
    }
    return out;
}

MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
    MonomialSum out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out.add_term(ta.coeff * tb.coeff, mul(ta.monomial, tb.monomial));
    return out;
}

MonomialSum act(const OIMorphism& eps, const MonomialSum& s) {
    MonomialSum out;
    for (const auto& t : s.terms())
        out.add_term(t.coeff, act(eps, t.monomial));
    return out;
}

namespace {

// DFS over generator subsets, carrying the running lcm as a dense exponent
// table and the inclusion-exclusion sign.
void hilbert_rec(const std::vector<std::vector<int>>& gens_dense, std::size_t i, std::vector<int>& lcm_exps,
                 int lcm_deg, std::int64_t sign, int max_degree, std::vector<std::int64_t>& out) {
    if (i == gens_dense.size()) {
        if (lcm_deg <= max_degree)
            out[static_cast<std::size_t>(lcm_deg)] += sign;
        return;
    }
    hilbert_rec(gens_dense, i + 1, lcm_exps, lcm_deg, sign, max_degree, out);
    const std::vector<int>& g = gens_dense[i];
    std::vector<std::pair<std::size_t, int>> saved;
    int deg = lcm_deg;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] > lcm_exps[j]) {
            saved.emplace_back(j, lcm_exps[j]);
            deg += g[j] - lcm_exps[j];
            lcm_exps[j] = g[j];
        }
    }
    hilbert_rec(gens_dense, i + 1, lcm_exps, deg, -sign, max_degree, out);
    for (auto& [j, old] : saved)
        lcm_exps[j] = old;
}

} // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& quotient_gens, int w,
                                            int max_degree) {
    if (quotient_gens.size() > 20)
        throw Error("hilbert_numerator: more than 20 generators");
    if (max_degree < 0)
        throw Error("hilbert_numerator: negative degree bound");
    int rows = 1;
    for (const Monomial& g : quotient_gens) {
        if (g.width() != w)
            throw Error("hilbert_numerator: generator width mismatch");
        rows = std::max(rows, g.max_row());
    }
    // Dense exponent tables indexed by (row-1)*w + (col-1).
    std::vector<std::vector<int>> dense;
    dense.reserve(quotient_gens.size());
    for (const Monomial& g : quotient_gens) {
        std::vector<int> v(static_cast<std::size_t>(rows * w), 0);
        for (const auto& e : g.entries())
            v[static_cast<std::size_t>((e.row - 1) * w + (e.col - 1))] = e.exp;
        dense.push_back(std::move(v));
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    std::vector<int> lcm_exps(static_cast<std::size_t>(rows * w), 0);
    hilbert_rec(dense, 0, lcm_exps, 0, 1, max_degree, out);
    return out;
}

} // namespace oir
