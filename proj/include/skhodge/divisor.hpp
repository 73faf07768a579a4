#pragma once

#include <optional>

#include "skhodge/groebner.hpp"
#include "skhodge/weyl.hpp"

namespace skhodge {

// A validation failure (non-free basis, bad b-function, ...): the input does
// not satisfy a required invariant. CLI exit code 2.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Logarithmic vector field sum_i coeffs[i] * d/dx_i over the divisor's ring.
struct VectorField {
    std::vector<Poly> coeffs;

    Poly apply(const Poly& f) const;  // directional derivative
    VectorField operator-(const VectorField& o) const;
    VectorField scaled(const Rational& c) const;
    // sum coeffs[i] * D_i as an element of a Weyl ring over the same x vars.
    WeylElement to_weyl(const WeylRingPtr& w) const;
    std::string str(const RingPtr& ring) const;
};

struct DivisorSpec {
    RingPtr ring;                           // Q[x_1..x_n]
    Poly h;                                 // reduced defining equation
    std::optional<std::vector<Rational>> weights;  // positive, h quasi-homogeneous
    std::vector<VectorField> basis;         // n fields (n-1 + Euler after normalization)
    size_t chi_index = 0;                   // which basis element is (or becomes) chi
    bool extended_scope = false;            // non-free input accepted on user assertion
    bool normalized = false;

    size_t n() const { return ring->nvars(); }
    const VectorField& chi() const { return basis[chi_index]; }
    // Integer-scaled weight vector (common denominator cleared), for grading.
    std::vector<int64_t> integer_weights() const;
};

// Bernstein-Sato data as exact roots with multiplicities, canonical order.
struct BFunction {
    std::vector<std::pair<Rational, int>> roots;

    static BFunction from_roots(std::vector<std::pair<Rational, int>> roots);
    int64_t degree() const;
    int multiplicity(const Rational& root) const;
    Poly to_poly(const RingPtr& s_ring) const;  // monic product of (s - root)^m
    std::string str() const;
};

struct SaitoCheckResult {
    bool ok = false;
    Rational c;  // det = c * h when ok
    Poly det;
    std::string message;
};

// Exact determinant of the Saito matrix; ok iff det = c*h, c in Q^*.
SaitoCheckResult check_saito_criterion(const DivisorSpec& spec);

// Rescale the Euler candidate to chi(h) = h and correct the others to
// delta(h) = 0. Throws InvariantError when no Euler candidate exists or a
// field is not logarithmic.
DivisorSpec normalize_basis(const DivisorSpec& spec);

// Regular-sequence test: <h, sigma(delta_i), sigma(chi) - s> in Q[x, xi, s]
// must have codimension n+1. Requires weights.
bool check_strong_koszul(const DivisorSpec& spec, const Budget& budget = {});

struct BValidation {
    bool roots_in_range = false;  // all roots in (-2, 0), -1 present
    bool symmetric = false;       // multiset invariant under a -> -2-a
};
BValidation bfunction_validate(const BFunction& b);

// beta_bar(s) = prod_{alpha in B'} (s - alpha)^{l_alpha}, with
// B' = { root+1 : root in (-1,0) }; second member is r = deg beta_bar.
std::pair<Poly, int> beta_bar(const BFunction& b, const RingPtr& s_ring);

// Monic generator of (<delta_1..delta_{n-1}, chi - s> + W[s] h) ∩ Q[s],
// factored over Q by rational-root extraction.
BFunction compute_bfunction(const DivisorSpec& spec, const Budget& budget = {});

}  // namespace skhodge
