#include "skhodge/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace skhodge {

WeylRingPtr make_weyl_ring(std::vector<std::string> x_vars, bool has_t, bool has_s) {
    auto r = std::make_shared<WeylRing>();
    r->x_vars = x_vars;
    r->has_t = has_t;
    r->has_s = has_s;
    std::vector<std::string> names = x_vars;
    if (has_t) names.push_back("t");
    for (const auto& v : x_vars) names.push_back("D" + v);
    if (has_t) names.push_back("Dt");
    if (has_s) names.push_back("s");
    r->slots = make_ring(std::move(names));
    return r;
}

namespace {

// Conjugate (coefficient, operator) slot index pairs of the ring.
std::vector<std::pair<int, int>> conjugate_pairs(const WeylRing& r) {
    std::vector<std::pair<int, int>> p;
    for (size_t i = 0; i < r.nx(); ++i) p.emplace_back(r.xi(i), r.di(i));
    if (r.has_t) p.emplace_back(r.ti(), r.dti());
    return p;
}

const Rational& binom(int32_t n, int32_t k) {
    thread_local std::vector<std::vector<Rational>> table;
    while ((int32_t)table.size() <= n) {
        size_t r = table.size();
        std::vector<Rational> row(r + 1);
        row[0] = 1;
        row[r] = 1;
        for (size_t j = 1; j < r; ++j) row[j] = table[r - 1][j - 1] + table[r - 1][j];
        table.push_back(std::move(row));
    }
    return table[n][k];
}

const Rational& factorial(int32_t n) {
    thread_local std::vector<Rational> table{Rational(1)};
    while ((int32_t)table.size() <= n)
        table.push_back(table.back() * Rational((long)table.size()));
    return table[n];
}

// D^k x^a = sum_j C(k,j) C(a,j) j! x^{a-j} D^{k-j}, independently per pair.
void mul_terms(const WeylRing& ring, const std::vector<std::pair<int, int>>& pairs,
               const Monomial& A, const Rational& ca, const Monomial& C, const Rational& cc,
               std::vector<std::pair<Monomial, Rational>>& out) {
    Monomial base = A * C;
    std::vector<std::pair<Monomial, Rational>> acc{{std::move(base), ca * cc}};
    for (auto [xs, ds] : pairs) {
        int32_t k = A.e[ds], a = C.e[xs];
        int32_t jmax = std::min(k, a);
        if (jmax == 0) continue;
        std::vector<std::pair<Monomial, Rational>> next;
        for (auto& [m, c] : acc) {
            for (int32_t j = 0; j <= jmax; ++j) {
                Rational f = binom(k, j) * binom(a, j) * factorial(j);
                Monomial m2 = m;
                m2.e[xs] -= j;
                m2.e[ds] -= j;
                next.emplace_back(std::move(m2), c * f);
            }
        }
        acc = std::move(next);
    }
    for (auto& t : acc) out.push_back(std::move(t));
}

// gcd of the numerators of two integer-valued rationals (non-negative).
Rational int_gcd(const Rational& a, const Rational& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    return Rational(std::move(g));
}

}  // namespace

WeylElement weyl_mul(const WeylElement& p, const WeylElement& q) {
    const WeylRing& ring = *p.ring();
    auto pairs = conjugate_pairs(ring);
    std::vector<std::pair<Monomial, Rational>> out;
    for (const auto& a : p.poly().terms())
        for (const auto& b : q.poly().terms())
            mul_terms(ring, pairs, a.first, a.second, b.first, b.second, out);
    return {p.ring(), Poly::from_terms(ring.slots, std::move(out))};
}

bool WeylOrder::admissible(const WeylRing& ring) const {
    if (!order.is_well_order(ring.nslots())) return false;
    for (auto [xs, ds] : conjugate_pairs(ring)) {
        Monomial xd(ring.nslots());
        xd.e[xs] = 1;
        xd.e[ds] = 1;
        if (order.compare(xd, Monomial::one(ring.nslots())) <= 0) return false;
    }
    return true;
}

WeylOrder WeylOrder::total_order(const WeylRing& ring) {
    std::vector<int64_t> w(ring.nslots(), 0);
    for (size_t i = 0; i < ring.nx(); ++i) w[ring.di(i)] = 1;
    if (ring.has_t) w[ring.dti()] = 1;
    if (ring.has_s) w[ring.si()] = 1;
    MonomialOrder o;
    o.weight_rows.push_back(std::move(w));
    o.weight_rows.push_back(std::vector<int64_t>(ring.nslots(), 1));
    return {std::move(o)};
}

WeylOrder WeylOrder::elimination(const WeylRing& ring, const std::vector<bool>& drop) {
    return {MonomialOrder::elimination(ring.nslots(), drop)};
}

// --- Left Buchberger -----------------------------------------------------

namespace {

struct WEngine {
    WeylRingPtr ring;
    const MonomialOrder& ord;
    Budget budget;
    int64_t pairs_done = 0;

    using Terms = std::vector<std::pair<Monomial, Rational>>;

    struct Elem {
        WeylElement f;
        Terms sorted;  // descending under the active order
        Monomial lm;
        Rational lc;
        int64_t lm_degree = 0;
        size_t weight = 0;  // reducer preference: smaller is better
    };

    // Reduction cost estimate: coefficient size dominates fill-in, so prefer
    // reducers with small integer coefficients, then fewer terms.
    static size_t elem_weight(const Terms& t) {
        size_t bits = 0;
        for (const auto& p : t)
            bits = std::max(bits, mpz_sizeinbase(p.second.get_num().get_mpz_t(), 2));
        return bits * 1024 + std::min<size_t>(t.size(), 1023);
    }
    std::vector<Elem> basis;

    Terms to_sorted(const Poly& p) const {
        Terms t(p.terms().begin(), p.terms().end());
        std::sort(t.begin(), t.end(),
                  [this](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
        return t;
    }

    Elem make_elem(WeylElement f) const {
        Terms t = to_sorted(f.poly());
        Monomial lm = t.front().first;
        Rational lc = t.front().second;
        int64_t d = lm.degree();
        size_t w = elem_weight(t);
        return {std::move(f), std::move(t), std::move(lm), std::move(lc), d, w};
    }

    // Canonical scaling: coprime integer coefficients, positive leading
    // coefficient under the active order.
    WeylElement normalize(const WeylElement& f) const {
        Poly p = f.poly().primitive_part();
        if (p.leading(ord).second < 0) p = -p;
        return {ring, std::move(p)};
    }

    // Cheapest dividing reducer: less fill-in per cancellation.
    int find_reducer(const Monomial& m, size_t skip = SIZE_MAX) const {
        int best = -1;
        int64_t md = m.degree();
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].f.is_zero()) continue;
            if (basis[k].lm_degree > md) continue;
            if (!basis[k].lm.divides(m)) continue;
            if (best < 0 || basis[k].weight < basis[best].weight) best = (int)k;
        }
        return best;
    }

    WeylElement mono_mul(const Monomial& m, const Rational& c, const WeylElement& g) const {
        WeylElement u(ring, Poly::from_terms(ring->slots, {{m, c}}));
        return weyl_mul(u, g);
    }

    // out = f[head..] - c * g, all descending under the active order.
    Terms merge_sub(const Terms& f, size_t head, const Terms& g, const Rational& c) const {
        Terms out;
        out.reserve(f.size() - head + g.size());
        size_t i = head, j = 0;
        while (i < f.size() && j < g.size()) {
            int cmp = ord.compare(f[i].first, g[j].first);
            if (cmp > 0) {
                out.push_back(f[i++]);
            } else if (cmp < 0) {
                out.emplace_back(g[j].first, -(c * g[j].second));
                ++j;
            } else {
                Rational v = f[i].second - c * g[j].second;
                if (v != 0) out.emplace_back(f[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        for (; i < f.size(); ++i) out.push_back(f[i]);
        for (; j < g.size(); ++j) out.emplace_back(g[j].first, -(c * g[j].second));
        return out;
    }

    WeylElement normal_form(const WeylElement& fin, size_t skip = SIZE_MAX) const {
        Terms work = to_sorted(fin.poly());
        Terms done;
        size_t head = 0;
        while (head < work.size()) {
            int k = find_reducer(work[head].first, skip);
            if (k < 0) {
                done.push_back(std::move(work[head++]));
                continue;
            }
            const Elem& g = basis[k];
            Monomial m = work[head].first / g.lm;
            Rational c = work[head].second / g.lc;
            // Normal-ordered m*g has lead m*lm(g) with coefficient lc(g)
            // (admissibility), so the head term cancels in the merge.
            Terms mg = to_sorted(mono_mul(m, Rational(1), g.f).poly());
            work = merge_sub(work, head, mg, c);
            head = 0;
        }
        return {ring, Poly::from_terms(ring->slots, std::move(done))};
    }

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    void check_pair_budget(const Pair& p) {
        if (budget.max_degree >= 0 && p.lcm.degree() > budget.max_degree)
            throw BudgetExceeded("degree bound " + std::to_string(budget.max_degree) +
                                 " exceeded (S-pair of degree " + std::to_string(p.lcm.degree()) +
                                 ")");
        if (budget.max_pairs >= 0 && pairs_done >= budget.max_pairs)
            throw BudgetExceeded("pair limit " + std::to_string(budget.max_pairs) + " exceeded");
    }

    // Gebauer-Moeller update without the product criterion (invalid in the
    // Weyl algebra: leading terms coprime does not make the S-pair reduce).
    void update_pairs(size_t t) {
        const Monomial& lt = basis[t].lm;
        std::erase_if(pairs, [&](const Pair& p) {
            if (!lt.divides(p.lcm)) return false;
            if (mono_lcm(basis[p.i].lm, lt) == p.lcm) return false;
            if (mono_lcm(basis[p.j].lm, lt) == p.lcm) return false;
            return true;
        });
        std::vector<Pair> cand;
        for (size_t i = 0; i < t; ++i) {
            if (basis[i].f.is_zero()) continue;
            Monomial L = mono_lcm(basis[i].lm, lt);
            cand.push_back({i, t, std::move(L)});
        }
        std::vector<bool> drop(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) drop[a] = true;
            }
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < a; ++b) {
                if (drop[a] || drop[b]) continue;
                if (cand[a].lcm == cand[b].lcm) drop[a] = true;
            }
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.push_back(std::move(cand[a]));
    }

    // Normal selection: smallest S-pair lcm under the active order. With
    // sugar selection instead, elimination orders suffer catastrophic
    // integer coefficient growth on the larger inputs.
    size_t pop_pair() const {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            int c = ord.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
        }
        return best;
    }

    void run(const std::vector<WeylElement>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            WeylElement f = normalize(g);
            basis.push_back(make_elem(std::move(f)));
            update_pairs(basis.size() - 1);
        }
        const bool trace = std::getenv("SKHODGE_GB_TRACE") != nullptr;
        if (trace) {
            std::cerr << "[gb] seed basis=" << basis.size() << " terms:";
            for (auto& e : basis) std::cerr << " " << e.sorted.size();
            std::cerr << "\n";
        }
        while (!pairs.empty()) {
            size_t k = pop_pair();
            Pair p = std::move(pairs[k]);
            pairs.erase(pairs.begin() + (ptrdiff_t)k);
            check_pair_budget(p);
            ++pairs_done;
            const Elem &fi = basis[p.i], &fj = basis[p.j];
            // Integer cross-scaling keeps the S-polynomial fraction-free.
            Rational d = int_gcd(fi.lc, fj.lc);
            WeylElement s = mono_mul(p.lcm / fi.lm, fj.lc / d, fi.f) -
                            mono_mul(p.lcm / fj.lm, fi.lc / d, fj.f);
            WeylElement h = normal_form(std::move(s));
            if (trace && pairs_done % 10 == 0) {
                size_t mx = 0, bits = 0;
                for (auto& e : basis) {
                    mx = std::max(mx, e.sorted.size());
                    for (auto& t : e.sorted)
                        bits = std::max(bits, mpz_sizeinbase(t.second.get_num().get_mpz_t(), 2));
                }
                std::cerr << "[gb] pairs=" << pairs_done << " queued=" << pairs.size()
                          << " basis=" << basis.size() << " maxterms=" << mx
                          << " maxbits=" << bits << "\n";
            }
            if (h.is_zero()) continue;
            h = normalize(h);
            basis.push_back(make_elem(std::move(h)));
            update_pairs(basis.size() - 1);
        }
        interreduce();
    }

    void interreduce() {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].f.is_zero()) continue;
            if (find_reducer(basis[k].lm, k) >= 0) basis[k].f = WeylElement(ring);
        }
        std::erase_if(basis, [](const Elem& e) { return e.f.is_zero(); });
        for (size_t k = 0; k < basis.size(); ++k)
            basis[k] = make_elem(normalize(normal_form(std::move(basis[k].f), k)));
        std::sort(basis.begin(), basis.end(),
                  [this](const Elem& a, const Elem& b) { return ord.compare(a.lm, b.lm) < 0; });
    }
};

}  // namespace

std::vector<WeylElement> weyl_groebner(const WeylIdeal& ideal, const WeylOrder& order,
                                       const Budget& budget) {
    if (!order.admissible(*ideal.ring))
        throw std::invalid_argument("inadmissible Weyl order");
    WEngine e{ideal.ring, order.order, budget};
    e.run(ideal.gens);
    std::vector<WeylElement> out;
    out.reserve(e.basis.size());
    for (auto& el : e.basis) out.push_back(std::move(el.f));
    return out;
}

WeylElement weyl_reduce(const WeylElement& f, const std::vector<WeylElement>& basis,
                        const WeylOrder& order) {
    if (!order.admissible(*f.ring()))
        throw std::invalid_argument("inadmissible Weyl order");
    WEngine e{f.ring(), order.order, Budget{}};
    for (const auto& g : basis)
        if (!g.is_zero()) e.basis.push_back(e.make_elem(e.normalize(g)));
    return e.normal_form(f);
}

const std::vector<WeylElement>& WeylIdeal::basis(const WeylOrder& order,
                                                 const Budget& budget) const {
    for (const auto& [ord, b] : cache_)
        if (ord == order.order) return b;
    cache_.emplace_back(order.order, weyl_groebner(*this, order, budget));
    return cache_.back().second;
}

std::vector<Poly> weyl_eliminate(const WeylIdeal& ideal, KeepSubring keep, const Budget& budget) {
    const WeylRing& r = *ideal.ring;
    std::vector<bool> drop(r.nslots(), false);
    for (size_t i = 0; i < r.nx(); ++i) drop[r.di(i)] = true;
    if (r.has_t) {
        drop[r.ti()] = true;
        drop[r.dti()] = true;
    }
    if (keep == KeepSubring::Qx && r.has_s) drop[r.si()] = true;
    if (keep == KeepSubring::Qs)
        for (size_t i = 0; i < r.nx(); ++i) drop[r.xi(i)] = true;
    if (keep != KeepSubring::Qx && !r.has_s)
        throw std::invalid_argument("ring has no s variable");

    const auto& gb = ideal.basis(WeylOrder::elimination(r, drop), budget);

    std::vector<std::string> kept_names;
    std::vector<int> kept_idx;
    for (size_t i = 0; i < r.nslots(); ++i)
        if (!drop[i]) {
            kept_names.push_back(r.slots->vars[i]);
            kept_idx.push_back((int)i);
        }
    RingPtr sub = make_ring(kept_names);
    std::vector<Poly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.poly().terms())
            for (size_t i = 0; i < r.nslots() && pure; ++i)
                if (drop[i] && t.first.e[i] > 0) pure = false;
        if (!pure) continue;
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const auto& t : g.poly().terms()) {
            Monomial m(sub->nvars());
            for (size_t k = 0; k < kept_idx.size(); ++k) m.e[k] = t.first.e[kept_idx[k]];
            terms.emplace_back(std::move(m), t.second);
        }
        out.push_back(Poly::from_terms(sub, std::move(terms)));
    }
    return out;
}

std::pair<Poly, int64_t> symbol_T(const WeylElement& p) {
    const WeylRing& r = *p.ring();
    if (r.has_t) throw std::invalid_argument("symbol_T requires a ring without t");
    if (p.is_zero()) throw std::invalid_argument("symbol_T of zero");
    std::vector<int64_t> w(r.nslots(), 0);
    for (size_t i = 0; i < r.nx(); ++i) w[r.di(i)] = 1;
    if (r.has_s) w[r.si()] = 1;
    int64_t d = p.poly().weighted_degree(w);
    std::vector<std::pair<Monomial, Rational>> top;
    for (const auto& t : p.poly().terms())
        if (t.first.weighted_degree(w) == d) top.push_back(t);
    return {Poly::from_terms(r.slots, std::move(top)), d};
}

std::vector<std::pair<WeylElement, int64_t>> involutive_basis_T(const WeylIdeal& J,
                                                                const Budget& budget) {
    const auto& gb = J.basis(WeylOrder::total_order(*J.ring), budget);
    std::vector<std::pair<WeylElement, int64_t>> out;
    out.reserve(gb.size());
    for (const auto& g : gb) out.emplace_back(g, symbol_T(g).second);
    return out;
}

namespace {

void enumerate_alpha(const WeylRingPtr& ring, const WeylElement& P, int budget_left, size_t var,
                     const Monomial& alpha, std::vector<WeylElement>& out) {
    const WeylRing& r = *ring;
    if (var == r.nx()) {
        // multiply s^l D^alpha onto P for every remaining l
        for (int l = 0; l <= budget_left; ++l) {
            Monomial m = alpha;
            if (r.has_s) m.e[r.si()] = l;
            WeylElement u(ring, Poly::from_terms(r.slots, {{m, Rational(1)}}));
            out.push_back(weyl_mul(u, P));
            if (!r.has_s) break;
        }
        return;
    }
    for (int a = 0; a <= budget_left; ++a) {
        Monomial next = alpha;
        next.e[r.di(var)] = a;
        enumerate_alpha(ring, P, budget_left - a, var + 1, next, out);
    }
}

}  // namespace

std::vector<WeylElement> truncation_generators(
    const std::vector<std::pair<WeylElement, int64_t>>& basis, int k) {
    assert(k >= 0);
    std::vector<WeylElement> out;
    for (const auto& [P, d] : basis) {
        if (d > k) continue;
        enumerate_alpha(P.ring(), P, (int)(k - d), 0, Monomial::one(P.ring()->nslots()), out);
    }
    return out;
}

}  // namespace skhodge
