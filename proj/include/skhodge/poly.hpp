#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skhodge/monomial.hpp"
#include "skhodge/rational.hpp"

namespace skhodge {

struct PolyRing {
    std::vector<std::string> vars;

    size_t nvars() const { return vars.size(); }
    int index_of(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Exact multivariate polynomial over Q. Terms are kept sorted descending
// under degrevlex in the ring's variable order; no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Rational& c);

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rational& c) { return Poly(std::move(ring), c); }
    static Poly variable(RingPtr ring, int var, int exp = 1);
    static Poly from_terms(RingPtr ring, std::vector<std::pair<Monomial, Rational>> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t size() const { return terms_.size(); }

    int64_t total_degree() const;  // -1 for zero
    int64_t weighted_degree(const std::vector<int64_t>& w) const;
    bool is_homogeneous(const std::vector<int64_t>& w) const;

    Rational coeff(const Monomial& m) const;
    // Leading term under an arbitrary order (linear scan).
    const std::pair<Monomial, Rational>& leading(const MonomialOrder& order) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rational& c) const;
    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly pow(int k) const;

    Poly derivative(int var) const;

    // Scale so coefficients are coprime integers and the degrevlex-leading
    // coefficient is positive. Canonical representative of the Q^*-orbit.
    Poly primitive_part() const;
    // Scale so the leading coefficient under `order` is 1.
    Poly monic(const MonomialOrder& order) const;

    // Exact quotient if divisor | *this, otherwise nullopt.
    std::optional<Poly> try_divide(const Poly& divisor) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<std::pair<Monomial, Rational>> terms_;
    void normalize();
};

// Re-read p inside a larger ring whose leading variables are exactly p's
// ring (slot-by-slot embedding).
Poly embed_poly(const Poly& p, const RingPtr& big);

// Recursive-descent parser: + - * ^ ( ), rational coefficients like -2/3,
// implicit multiplication not supported. Throws std::invalid_argument with a
// position-annotated message.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace skhodge
