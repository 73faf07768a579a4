#pragma once

#include <cstdint>
#include <vector>

namespace skhodge {

// Exponent vector over a fixed variable list. The ambient ring decides the
// meaning of each slot; Monomial itself only knows its length.
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

    static Monomial one(size_t nvars) { return Monomial(nvars); }

    size_t nvars() const { return e.size(); }
    int64_t degree() const;
    int64_t weighted_degree(const std::vector<int64_t>& w) const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return e == other.e; }
    bool operator!=(const Monomial& other) const { return e != other.e; }
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Total order on monomials: a list of integer weight rows compared
// lexicographically, refined by a term-order tie break. Well-orderedness
// (needed for division to terminate) is checked by is_well_order().
struct MonomialOrder {
    enum class Tie { degrevlex, lex };

    std::vector<std::vector<int64_t>> weight_rows;
    Tie tie = Tie::degrevlex;
    // Optional block partition for the tie break: variables are compared
    // block by block (degrevlex inside each block). Empty = single block.
    std::vector<std::vector<int>> blocks;

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // Every variable must see a positive weight before any negative one
    // (or fall through to the term-order tie break).
    bool is_well_order(size_t nvars) const;

    static MonomialOrder degrevlex(size_t nvars);
    static MonomialOrder lex(size_t nvars);
    // First weight row = 1 on dropped variables, 0 elsewhere; degrevlex tie.
    static MonomialOrder elimination(size_t nvars, const std::vector<bool>& drop);
    // First row = w (graded comparison), degrevlex tie.
    static MonomialOrder weighted(std::vector<int64_t> w);
};

}  // namespace skhodge
