#pragma once

#include <utility>

#include "skhodge/groebner.hpp"
#include "skhodge/poly.hpp"

namespace skhodge {

// Weyl algebra Q[x]<Dx>, optionally extended by t/Dt and a central s.
// Elements are stored normally ordered (coefficient variables left of
// operator variables), so the underlying data is a commutative Poly over the
// slot ring [x_1..x_n, t?, Dx_1..Dx_n, Dt?, s?]; only multiplication is
// noncommutative.
struct WeylRing {
    std::vector<std::string> x_vars;
    bool has_t = false;
    bool has_s = false;
    RingPtr slots;  // derived: variable names for every slot

    size_t nx() const { return x_vars.size(); }
    size_t nslots() const { return slots->nvars(); }
    int xi(size_t i) const { return (int)i; }
    int ti() const { return (int)nx(); }
    int di(size_t i) const { return (int)(nx() + (has_t ? 1 : 0) + i); }
    int dti() const { return (int)(2 * nx() + 1); }
    int si() const { return (int)nslots() - 1; }

    bool is_coeff_slot(int slot) const { return slot < (int)(nx() + (has_t ? 1 : 0)); }
};

using WeylRingPtr = std::shared_ptr<const WeylRing>;

WeylRingPtr make_weyl_ring(std::vector<std::string> x_vars, bool has_t, bool has_s);

class WeylElement {
public:
    WeylElement() = default;
    WeylElement(WeylRingPtr ring, Poly p) : ring_(std::move(ring)), p_(std::move(p)) {}
    explicit WeylElement(WeylRingPtr ring) : WeylElement(ring, Poly::zero(ring->slots)) {}

    static WeylElement zero(const WeylRingPtr& r) { return WeylElement(r); }
    static WeylElement constant(const WeylRingPtr& r, const Rational& c) {
        return {r, Poly::constant(r->slots, c)};
    }
    static WeylElement slot_var(const WeylRingPtr& r, int slot, int exp = 1) {
        return {r, Poly::variable(r->slots, slot, exp)};
    }

    const WeylRingPtr& ring() const { return ring_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    WeylElement operator+(const WeylElement& o) const { return {ring_, p_ + o.p_}; }
    WeylElement operator-(const WeylElement& o) const { return {ring_, p_ - o.p_}; }
    WeylElement operator-() const { return {ring_, -p_}; }
    WeylElement scaled(const Rational& c) const { return {ring_, p_.scaled(c)}; }
    bool operator==(const WeylElement& o) const { return p_ == o.p_; }

    std::string str() const { return p_.str(); }

private:
    WeylRingPtr ring_;
    Poly p_;
};

// Normally ordered product (Leibniz expansion of D^k x^a per conjugate pair).
WeylElement weyl_mul(const WeylElement& p, const WeylElement& q);

// Admissible order on normally ordered monomials: a monomial order on the
// slot ring whose weight puts every conjugate pair at u + v >= 0 (so leading
// monomials multiply commutatively).
struct WeylOrder {
    MonomialOrder order;

    bool admissible(const WeylRing& ring) const;

    // T-filtration order: x (and t) weight 0, all D's and s weight 1,
    // degrevlex tie break.
    static WeylOrder total_order(const WeylRing& ring);
    // Dropped slots strictly above kept ones; used for subring elimination.
    static WeylOrder elimination(const WeylRing& ring, const std::vector<bool>& drop);
};

struct WeylIdeal {
    WeylRingPtr ring;
    std::vector<WeylElement> gens;

    WeylIdeal() = default;
    WeylIdeal(WeylRingPtr r, std::vector<WeylElement> g)
        : ring(std::move(r)), gens(std::move(g)) {}
    // Reduced left Groebner basis (cached per order).
    const std::vector<WeylElement>& basis(const WeylOrder& order, const Budget& budget = {}) const;

private:
    mutable std::vector<std::pair<MonomialOrder, std::vector<WeylElement>>> cache_;
};

std::vector<WeylElement> weyl_groebner(const WeylIdeal& ideal, const WeylOrder& order,
                                       const Budget& budget = {});

WeylElement weyl_reduce(const WeylElement& f, const std::vector<WeylElement>& basis,
                        const WeylOrder& order);

enum class KeepSubring { Qx, Qxs, Qs };

// Generators of ideal ∩ (commutative kept subring), returned in a plain
// polynomial ring over the kept variables.
std::vector<Poly> weyl_eliminate(const WeylIdeal& ideal, KeepSubring keep,
                                 const Budget& budget = {});

// Top T-homogeneous part of p as a commutative polynomial in the slot ring
// (the D slots playing the role of the xi symbols); second member is the
// T-degree. Requires a ring without t.
std::pair<Poly, int64_t> symbol_T(const WeylElement& p);

// Left GB under the T order, paired with each element's T-degree.
std::vector<std::pair<WeylElement, int64_t>> involutive_basis_T(const WeylIdeal& J,
                                                                const Budget& budget = {});

// { s^l D^alpha P_j : l + |alpha| + d_j <= k }, each in normal form.
std::vector<WeylElement> truncation_generators(
    const std::vector<std::pair<WeylElement, int64_t>>& basis, int k);

}  // namespace skhodge
