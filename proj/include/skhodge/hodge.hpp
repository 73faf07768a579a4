#pragma once

#include <map>

#include "skhodge/divisor.hpp"

namespace skhodge {

// numerator / h^pole, canonical: pole = 0 or h does not divide numerator.
struct RationalSection {
    Poly num;
    int pole = 0;

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RationalSection& o) const { return num == o.num && pole == o.pole; }
};

RationalSection make_section(Poly num, int pole, const Poly& h);
RationalSection section_add(const RationalSection& a, const RationalSection& b, const Poly& h);
// d/dx_i by the quotient rule, eagerly h-cancelled.
RationalSection section_derivative(const RationalSection& sec, int var, const Poly& h);

// Element of O((k+1)D) ⊕ O(kD) Dt ⊕ ... ⊕ O(D) Dt^k.
struct PoleVector {
    int k = 0;
    std::vector<RationalSection> comp;  // index = Dt power, size k+1
};

struct HodgeResult {
    int k = 0;
    std::vector<Poly> gens;  // numerator ideal of F_k^H at denominator h^{k+1}
};

// J = D[s]<h, beta_bar(s), delta_1..delta_{n-1}, chi - s + 1> in W[s].
WeylIdeal build_J(const DivisorSpec& spec, const BFunction& b);

// I_0 via the direct elimination J ∩ Q[x].
HodgeResult hodge_ideal_0(const DivisorSpec& spec, const BFunction& b, const Budget& budget = {});

// s -> -Dt t, landing in W_{t,x} over the same x variables.
WeylElement substitute_s(const WeylElement& p, const WeylRingPtr& wtx);

// The automorphism phi: t -> t+h, D_i -> D_i - h'_i Dt, Dt -> Dt (and its
// inverse t -> t-h, D_i -> D_i + h'_i Dt).
WeylElement phi(const WeylElement& q, const Poly& h);
WeylElement phi_inv(const WeylElement& q, const Poly& h);

// q = A t + sum Q_i Dt^i with every Q_i free of t and Dt; Q_i returned in
// the plain Weyl ring over x.
struct SplitT {
    WeylElement A;
    std::vector<std::pair<WeylElement, int>> Q;  // (Q_i, Dt power i), Q_i in W_x
};
SplitT split_t(const WeylElement& q, const WeylRingPtr& wx);

// Q(h^{-1}) for Q free of t, Dt, s.
RationalSection apply_to_hinv(const WeylElement& q, const Poly& h);

// Psi-bar = apply_to_hinv ∘ split_t ∘ phi ∘ substitute_s, componentwise.
std::vector<std::pair<RationalSection, int>> psi_bar(const WeylElement& p,
                                                     const DivisorSpec& spec);

// Numerator ideal of F_k^ord: { h^{k+1} D^alpha(h^{-1}) : |alpha| <= k }.
std::vector<Poly> ord_filtration(const DivisorSpec& spec, int k);

struct InclusionReport {
    bool hodge_in_ord = true;       // I_k ⊆ Ord_k at every computed level
    bool shifted_ord_in_hodge = true;  // h^r * Ord_{k-r} ⊆ I_k
    bool monotone = true;           // h * I_{k-1} ⊆ I_k
    bool d_stable = true;           // h D_i g - (k+1) g h'_i ∈ I_{k+1}
    std::string witness;            // first failing element, if any
    bool ok() const { return hodge_in_ord && shifted_ord_in_hodge && monotone && d_stable; }
};

struct GenLevelResult {
    int level = 0;   // smallest l with F_1 D * F_k = F_{k+1} for l <= k < k_max
    int k_max = 0;   // verification horizon
    int r = 0;       // conjectured level from the b-function
    std::vector<bool> step_equal;  // step_equal[k]: F_1 D * F_k == F_{k+1}
};

// Caches the involutive basis and the ideals I_k / Ord_k across levels.
class HodgePipeline {
public:
    HodgePipeline(DivisorSpec normalized_spec, BFunction b);

    const DivisorSpec& spec() const { return spec_; }
    const BFunction& bfun() const { return b_; }
    int r() const { return r_; }
    const Poly& beta() const { return beta_; }

    WeylIdeal& J() { return J_; }
    const std::vector<std::pair<WeylElement, int64_t>>& involutive_basis(
        const Budget& budget = {});

    std::vector<PoleVector> module_generators(int k, const Budget& budget = {});
    const HodgeResult& hodge_ideal(int k, const Budget& budget = {});
    HodgeResult hodge_ideal_0_direct(const Budget& budget = {});
    const std::vector<Poly>& ord_ideal(int k);

    InclusionReport check_inclusions(int k, const Budget& budget = {});
    GenLevelResult generating_level(int k_max, const Budget& budget = {});

private:
    DivisorSpec spec_;
    BFunction b_;
    Poly beta_;  // in Q[s]
    int r_ = 0;
    WeylRingPtr ws_, wtx_, wx_;
    WeylIdeal J_;
    bool have_basis_ = false;
    std::vector<std::pair<WeylElement, int64_t>> basis_;
    std::map<int, HodgeResult> hodge_cache_;
    std::map<int, std::vector<Poly>> ord_cache_;
};

// Convenience wrappers matching the operation list.
std::vector<PoleVector> hodge_module_generators(const DivisorSpec& spec, const BFunction& b,
                                                int k, const Budget& budget = {});
HodgeResult hodge_ideal(const DivisorSpec& spec, const BFunction& b, int k,
                        const Budget& budget = {});
InclusionReport check_inclusions(const DivisorSpec& spec, const BFunction& b, int k,
                                 const Budget& budget = {});
GenLevelResult generating_level(const DivisorSpec& spec, const BFunction& b, int k_max,
                                const Budget& budget = {});

}  // namespace skhodge
