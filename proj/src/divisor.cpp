#include "skhodge/divisor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace skhodge {

// --- VectorField ---------------------------------------------------------

Poly VectorField::apply(const Poly& f) const {
    Poly r = Poly::zero(f.ring());
    for (size_t i = 0; i < coeffs.size(); ++i) r += coeffs[i] * f.derivative((int)i);
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    VectorField r(*this);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

VectorField VectorField::scaled(const Rational& c) const {
    VectorField r(*this);
    for (auto& p : r.coeffs) p = p.scaled(c);
    return r;
}

WeylElement VectorField::to_weyl(const WeylRingPtr& w) const {
    Poly acc = Poly::zero(w->slots);
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += embed_poly(coeffs[i], w->slots) * Poly::variable(w->slots, w->di(i));
    return {w, std::move(acc)};
}

std::string VectorField::str(const RingPtr& ring) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].str() << ")*D" << ring->vars[i];
    }
    return first ? "0" : os.str();
}

std::vector<int64_t> DivisorSpec::integer_weights() const {
    if (!weights) throw InvariantError("divisor has no weights");
    mpz_class den_lcm = 1;
    for (const auto& w : *weights)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), w.get_den().get_mpz_t());
    std::vector<int64_t> out;
    for (const auto& w : *weights) {
        Rational scaled = w * Rational(den_lcm);
        assert(scaled.get_den() == 1);
        if (scaled <= 0) throw InvariantError("weights must be positive");
        out.push_back((int64_t)scaled.get_num().get_si());
    }
    return out;
}

// --- BFunction -----------------------------------------------------------

BFunction BFunction::from_roots(std::vector<std::pair<Rational, int>> roots) {
    std::map<Rational, int> merged;
    for (auto& [r, m] : roots) {
        if (m <= 0) throw InvariantError("b-function multiplicity must be positive");
        merged[r] += m;
    }
    BFunction b;
    b.roots.assign(merged.begin(), merged.end());
    return b;
}

int64_t BFunction::degree() const {
    int64_t d = 0;
    for (const auto& [r, m] : roots) d += m;
    return d;
}

int BFunction::multiplicity(const Rational& root) const {
    for (const auto& [r, m] : roots)
        if (r == root) return m;
    return 0;
}

Poly BFunction::to_poly(const RingPtr& s_ring) const {
    Poly p = Poly::constant(s_ring, 1);
    Poly s = Poly::variable(s_ring, 0);
    for (const auto& [r, m] : roots) p = p * (s - Poly::constant(s_ring, r)).pow(m);
    return p;
}

std::string BFunction::str() const {
    if (roots.empty()) return "1";
    std::ostringstream os;
    for (const auto& [r, m] : roots) {
        os << "(s";
        if (r < 0)
            os << " + " << rat_str(-r);
        else if (r > 0)
            os << " - " << rat_str(r);
        os << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

// --- Saito criterion -----------------------------------------------------

namespace {

// Fraction-free Bareiss determinant of a square Poly matrix.
Poly poly_det(std::vector<std::vector<Poly>> M, const RingPtr& ring) {
    size_t n = M.size();
    if (n == 0) return Poly::constant(ring, 1);
    int sign = 1;
    Poly prev = Poly::constant(ring, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && M[piv][k].is_zero()) ++piv;
        if (piv == n) return Poly::zero(ring);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = num.try_divide(prev);
                assert(q);  // Bareiss division is always exact
                M[i][j] = std::move(*q);
            }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

}  // namespace

SaitoCheckResult check_saito_criterion(const DivisorSpec& spec) {
    SaitoCheckResult res;
    size_t n = spec.n();
    if (spec.basis.size() != n) {
        res.message = "basis has " + std::to_string(spec.basis.size()) + " fields, expected " +
                      std::to_string(n);
        res.det = Poly::zero(spec.ring);
        return res;
    }
    std::vector<std::vector<Poly>> M;
    for (const auto& f : spec.basis) M.push_back(f.coeffs);
    res.det = poly_det(std::move(M), spec.ring);
    if (res.det.is_zero()) {
        res.message = "determinant is zero";
        return res;
    }
    auto q = res.det.try_divide(spec.h);
    if (q && q->is_constant() && !q->is_zero()) {
        res.ok = true;
        res.c = q->coeff(Monomial::one(spec.ring->nvars()));
    } else {
        res.message = "determinant is not a scalar multiple of h: det = " + res.det.str();
    }
    return res;
}

// --- Normalization -------------------------------------------------------

DivisorSpec normalize_basis(const DivisorSpec& spec) {
    DivisorSpec out = spec;
    size_t n = out.basis.size();
    // Find the Euler candidate: eta(h) = c*h with c a nonzero rational.
    auto euler_factor = [&](size_t i) -> std::optional<Rational> {
        auto q = out.basis[i].apply(out.h).try_divide(out.h);
        if (q && q->is_constant() && !q->is_zero())
            return q->coeff(Monomial::one(out.ring->nvars()));
        return std::nullopt;
    };
    std::optional<Rational> c = euler_factor(out.chi_index);
    if (!c) {
        bool found = false;
        for (size_t i = 0; i < n && !found; ++i)
            if (auto ci = euler_factor(i)) {
                out.chi_index = i;
                c = ci;
                found = true;
            }
        if (!found) throw InvariantError("no Euler candidate: no basis field has eta(h) = c*h");
    }
    out.basis[out.chi_index] = out.basis[out.chi_index].scaled(Rational(1) / *c);
    for (size_t i = 0; i < n; ++i) {
        if (i == out.chi_index) continue;
        Poly dh = out.basis[i].apply(out.h);
        auto q = dh.try_divide(out.h);
        if (!q)
            throw InvariantError("field " + std::to_string(i + 1) +
                                 " is not logarithmic: delta(h) not a multiple of h");
        if (!q->is_zero()) {
            VectorField corr = out.chi();
            for (auto& p : corr.coeffs) p = p * *q;
            out.basis[i] = out.basis[i] - corr;
        }
    }
    out.normalized = true;
    return out;
}

// --- Strong Koszul check -------------------------------------------------

bool check_strong_koszul(const DivisorSpec& spec, const Budget& budget) {
    if (!spec.weights)
        throw InvariantError("strong-Koszul check requires weights (non-graded unsupported)");
    if (!spec.normalized) throw InvariantError("strong-Koszul check requires a normalized basis");
    size_t n = spec.n();
    // Commutative ring Q[x, xi, s], realized as the slot ring of W[s].
    auto W = make_weyl_ring(spec.ring->vars, false, true);
    const RingPtr& R = W->slots;
    std::vector<Poly> gens;
    gens.push_back(embed_poly(spec.h, R));
    for (size_t i = 0; i < spec.basis.size(); ++i) {
        Poly sigma = Poly::zero(R);
        for (size_t j = 0; j < n; ++j)
            sigma += embed_poly(spec.basis[i].coeffs[j], R) * Poly::variable(R, W->di(j));
        if (i == spec.chi_index) sigma -= Poly::variable(R, W->si());
        gens.push_back(std::move(sigma));
    }
    int dim = ideal_dimension(gens, budget);
    // codim n+1 in 2n+1 variables
    return dim == (int)n;
}

// --- b-function ----------------------------------------------------------

BValidation bfunction_validate(const BFunction& b) {
    BValidation v;
    v.roots_in_range = b.multiplicity(Rational(-1)) >= 1;
    for (const auto& [r, m] : b.roots)
        if (r <= -2 || r >= 0) v.roots_in_range = false;
    v.symmetric = true;
    for (const auto& [r, m] : b.roots)
        if (b.multiplicity(Rational(-2) - r) != m) v.symmetric = false;
    return v;
}

std::pair<Poly, int> beta_bar(const BFunction& b, const RingPtr& s_ring) {
    Poly p = Poly::constant(s_ring, 1);
    Poly s = Poly::variable(s_ring, 0);
    int r = 0;
    for (const auto& [root, m] : b.roots) {
        if (root > -1 && root < 0) {
            p = p * (s - Poly::constant(s_ring, root + 1)).pow(m);
            r += m;
        }
    }
    return {std::move(p), r};
}

namespace {

Rational eval_univariate(const Poly& p, const Rational& v) {
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational pw = 1;
        for (int32_t k = 0; k < t.first.e[0]; ++k) pw *= v;
        acc += t.second * pw;
    }
    return acc;
}

// Exact division of univariate p by (s - root).
Poly divide_linear(const Poly& p, const Rational& root) {
    const RingPtr& R = p.ring();
    Poly lin = Poly::variable(R, 0) - Poly::constant(R, root);
    auto q = p.try_divide(lin);
    assert(q);
    return *q;
}

std::vector<mpz_class> small_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            divs.push_back(a / d);
        }
        if (d > 1000000) break;  // give up on huge smooth parts
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

}  // namespace

BFunction compute_bfunction(const DivisorSpec& spec, const Budget& budget) {
    if (!spec.normalized) throw InvariantError("compute_bfunction requires a normalized basis");
    auto W = make_weyl_ring(spec.ring->vars, false, true);
    std::vector<WeylElement> gens;
    for (size_t i = 0; i < spec.basis.size(); ++i) {
        WeylElement d = spec.basis[i].to_weyl(W);
        if (i == spec.chi_index) d = d - WeylElement::slot_var(W, W->si());
        gens.push_back(std::move(d));
    }
    gens.emplace_back(W, embed_poly(spec.h, W->slots));
    WeylIdeal I{W, std::move(gens)};
    auto bs = weyl_eliminate(I, KeepSubring::Qs, budget);
    if (bs.empty() || bs[0].is_zero())
        throw InvariantError("b-function elimination returned the zero ideal");
    Poly b = bs[0];  // reduced GB of a univariate ideal: single generator
    // factor by rational-root extraction; roots p/q with q | lcm of the
    // coefficient denominators, and (theory) inside (-2, 0)
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : b.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
    }
    std::vector<std::pair<Rational, int>> roots;
    auto extract = [&](const Rational& cand) {
        while (b.total_degree() > 0 && eval_univariate(b, cand) == 0) {
            b = divide_linear(b, cand);
            bool merged = false;
            for (auto& [r, m] : roots)
                if (r == cand) {
                    ++m;
                    merged = true;
                }
            if (!merged) roots.emplace_back(cand, 1);
        }
    };
    for (const mpz_class& q : small_divisors(den_lcm)) {
        for (mpz_class p = -2 * q + 1; p < 0; ++p) {
            Rational cand(p, q);
            cand.canonicalize();
            extract(cand);
        }
    }
    if (b.total_degree() > 0) {
        // fallback: full rational root theorem on the integer-scaled poly
        Poly bi = b.scaled(Rational(den_lcm));
        mpz_class c0 = 0, cd = 0;
        for (const auto& t : bi.terms()) {
            if (t.first.is_one()) c0 = t.second.get_num();
            if (t.first.degree() == bi.total_degree()) cd = t.second.get_num();
        }
        for (const mpz_class& pn : small_divisors(c0))
            for (const mpz_class& q : small_divisors(cd))
                for (int sgn : {1, -1}) {
                    Rational cand(sgn * pn, q);
                    cand.canonicalize();
                    extract(cand);
                }
    }
    if (b.total_degree() > 0)
        throw InvariantError("b-function has an irrational factor: " + b.str());
    return BFunction::from_roots(std::move(roots));
}

}  // namespace skhodge
