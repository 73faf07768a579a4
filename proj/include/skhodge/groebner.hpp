#pragma once

#include <stdexcept>
#include <vector>

#include "skhodge/poly.hpp"

namespace skhodge {

// Caps on Buchberger runs. Negative = unlimited.
struct Budget {
    int64_t max_degree = -1;  // degree of any processed S-pair lcm
    int64_t max_pairs = -1;   // number of S-pairs reduced
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Element of a free module R^rank; rank-1 vectors double as ring elements.
struct PolyVec {
    std::vector<Poly> c;

    size_t rank() const { return c.size(); }
    bool is_zero() const;
    PolyVec operator+(const PolyVec& o) const;
    PolyVec operator-(const PolyVec& o) const;
    PolyVec scaled(const Rational& r) const;
    PolyVec mul_term(const Monomial& m, const Rational& r) const;
    bool operator==(const PolyVec& o) const { return c == o.c; }
};

// Position-over-term order: components compared by priority first (higher
// priority = greater), ties broken by the monomial order. priority must be
// a permutation of 0..rank-1.
struct ModuleOrder {
    MonomialOrder mono;
    std::vector<int> priority;

    static ModuleOrder natural(MonomialOrder mo, size_t rank);
    // All components except `low` ranked above it (used for component
    // intersections).
    static ModuleOrder component_last(MonomialOrder mo, size_t rank, size_t low);
};

// --- Core engine ---------------------------------------------------------

// Reduced left-to-right Buchberger. Output is interreduced, each element
// primitive-integer normalized with positive leading coefficient, sorted by
// increasing leading term. Unique for (ideal, order).
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const Budget& budget = {});

std::vector<PolyVec> module_groebner(const std::vector<PolyVec>& gens, const ModuleOrder& order,
                                     const Budget& budget = {});

// Normal form against an arbitrary (not necessarily Gröbner) set.
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);
PolyVec reduce(const PolyVec& f, const std::vector<PolyVec>& basis, const ModuleOrder& order);

// --- Derived operations --------------------------------------------------

// Generators of ideal ∩ Q[kept vars], returned in the subring of kept
// variables (block elimination order).
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<bool>& drop,
                            const Budget& budget = {});

// Generating set of {v : sum v_e * input_e = 0} in R^N.
std::vector<PolyVec> syzygies(const std::vector<PolyVec>& vectors, const Budget& budget = {});

// {f : f * e_component in <gens>}.
std::vector<Poly> module_component_intersect(const std::vector<PolyVec>& gens, size_t component,
                                             const Budget& budget = {});

// Krull dimension of R/I via standard monomials of the degrevlex leading
// ideal; -1 for the unit ideal.
int ideal_dimension(const std::vector<Poly>& gens, const Budget& budget = {});

bool ideal_contains(const std::vector<Poly>& groebner, const MonomialOrder& order, const Poly& f);
bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                 const Budget& budget = {});

// Minimal homogeneous generators of a graded ideal (weights w). Returns the
// chosen generators, sorted by increasing weighted degree.
std::vector<Poly> minimal_generators(const std::vector<Poly>& gens,
                                     const std::vector<int64_t>& w, const Budget& budget = {});

// Generator list with a lazily cached reduced basis per order.
class PolyIdeal {
public:
    PolyIdeal() = default;
    explicit PolyIdeal(std::vector<Poly> gens) : gens_(std::move(gens)) {}

    const std::vector<Poly>& gens() const { return gens_; }
    const std::vector<Poly>& basis(const MonomialOrder& order, const Budget& budget = {}) const;
    bool contains(const Poly& f, const Budget& budget = {}) const;

private:
    std::vector<Poly> gens_;
    mutable std::vector<std::pair<MonomialOrder, std::vector<Poly>>> cache_;
};

bool operator==(const MonomialOrder& a, const MonomialOrder& b);

}  // namespace skhodge
