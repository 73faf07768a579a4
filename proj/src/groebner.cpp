#include "skhodge/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace skhodge {

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.weight_rows == b.weight_rows && a.tie == b.tie && a.blocks == b.blocks;
}

// --- PolyVec -------------------------------------------------------------

bool PolyVec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
    PolyVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
    PolyVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

PolyVec PolyVec::scaled(const Rational& r) const {
    PolyVec v(*this);
    for (auto& p : v.c) p = p.scaled(r);
    return v;
}

PolyVec PolyVec::mul_term(const Monomial& m, const Rational& r) const {
    PolyVec v(*this);
    for (auto& p : v.c) p = p.mul_term(m, r);
    return v;
}

ModuleOrder ModuleOrder::natural(MonomialOrder mo, size_t rank) {
    ModuleOrder o{std::move(mo), std::vector<int>(rank)};
    for (size_t i = 0; i < rank; ++i) o.priority[i] = (int)(rank - 1 - i);
    return o;
}

ModuleOrder ModuleOrder::component_last(MonomialOrder mo, size_t rank, size_t low) {
    ModuleOrder o = natural(std::move(mo), rank);
    for (size_t i = 0; i < rank; ++i)
        o.priority[i] = i == low ? 0 : (int)(i < low ? rank - 1 - i : rank - i);
    return o;
}

// --- Flat module-element representation ----------------------------------

namespace {

struct Term {
    int comp;
    Monomial m;
    Rational c;
};

// Terms sorted strictly descending under the active module order.
struct Flat {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
};

struct Engine {
    const ModuleOrder& ord;
    RingPtr ring;
    Budget budget;
    int64_t pairs_done = 0;

    // >0 if (ca, ma) > (cb, mb)
    int cmp(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
        if (ca != cb) {
            int pa = ord.priority[ca], pb = ord.priority[cb];
            if (pa != pb) return pa < pb ? -1 : 1;
        }
        return ord.mono.compare(ma, mb);
    }

    Flat flatten(const PolyVec& v) const {
        Flat f;
        for (size_t i = 0; i < v.c.size(); ++i)
            for (const auto& t : v.c[i].terms()) f.t.push_back({(int)i, t.first, t.second});
        std::sort(f.t.begin(), f.t.end(), [this](const Term& a, const Term& b) {
            return cmp(a.comp, a.m, b.comp, b.m) > 0;
        });
        return f;
    }

    PolyVec unflatten(const Flat& f, size_t rank) const {
        std::vector<std::vector<std::pair<Monomial, Rational>>> buckets(rank);
        for (const auto& t : f.t) buckets[t.comp].emplace_back(t.m, t.c);
        PolyVec v;
        v.c.reserve(rank);
        for (size_t i = 0; i < rank; ++i)
            v.c.push_back(Poly::from_terms(ring, std::move(buckets[i])));
        return v;
    }

    // f += s * x^m * g, merging sorted term lists.
    void axpy(Flat& f, const Rational& s, const Monomial& m, const Flat& g) const {
        std::vector<Term> out;
        out.reserve(f.t.size() + g.t.size());
        size_t i = 0, j = 0;
        while (i < f.t.size() && j < g.t.size()) {
            Monomial gm = g.t[j].m * m;
            int c = cmp(f.t[i].comp, f.t[i].m, g.t[j].comp, gm);
            if (c > 0) {
                out.push_back(std::move(f.t[i++]));
            } else if (c < 0) {
                out.push_back({g.t[j].comp, std::move(gm), g.t[j].c * s});
                ++j;
            } else {
                Rational v = f.t[i].c + g.t[j].c * s;
                if (v != 0) out.push_back({f.t[i].comp, std::move(gm), std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < f.t.size(); ++i) out.push_back(std::move(f.t[i]));
        for (; j < g.t.size(); ++j) out.push_back({g.t[j].comp, g.t[j].m * m, g.t[j].c * s});
        f.t = std::move(out);
    }

    // Coprime integer coefficients, positive leading coefficient.
    void normalize(Flat& f) const {
        if (f.is_zero()) return;
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& t : f.t) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (f.lead().c < 0) scale = -scale;
        for (auto& t : f.t) t.c *= scale;
    }

    std::vector<Flat> basis;

    int find_reducer(const Term& lt, size_t skip = SIZE_MAX) const {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].is_zero()) continue;
            const Term& gl = basis[k].lead();
            if (gl.comp == lt.comp && gl.m.divides(lt.m)) return (int)k;
        }
        return -1;
    }

    Flat normal_form(Flat f, size_t skip = SIZE_MAX) const {
        std::vector<Term> done;
        while (!f.is_zero()) {
            int k = find_reducer(f.lead(), skip);
            if (k < 0) {
                done.push_back(std::move(f.t.front()));
                f.t.erase(f.t.begin());
                continue;
            }
            const Flat& g = basis[k];
            axpy(f, -f.lead().c / g.lead().c, f.lead().m / g.lead().m, g);
        }
        f.t = std::move(done);
        return f;
    }

    struct Pair {
        size_t i, j;
        Monomial lcm;
        int64_t sugar;
    };
    std::vector<Pair> pairs;
    std::vector<int64_t> sugar;  // per basis element

    void check_pair_budget(const Pair& p) {
        if (budget.max_degree >= 0 && p.lcm.degree() > budget.max_degree)
            throw BudgetExceeded("degree bound " + std::to_string(budget.max_degree) +
                                 " exceeded (S-pair of degree " + std::to_string(p.lcm.degree()) +
                                 ")");
        if (budget.max_pairs >= 0 && pairs_done >= budget.max_pairs)
            throw BudgetExceeded("pair limit " + std::to_string(budget.max_pairs) + " exceeded");
    }

    void update_pairs(size_t t, bool rank1) {
        const Term& lt = basis[t].lead();
        // chain criterion against existing pairs
        std::erase_if(pairs, [&](const Pair& p) {
            if (basis[p.i].lead().comp != lt.comp) return false;
            if (!lt.m.divides(p.lcm)) return false;
            if (mono_lcm(basis[p.i].lead().m, lt.m) == p.lcm) return false;
            if (mono_lcm(basis[p.j].lead().m, lt.m) == p.lcm) return false;
            return true;
        });
        // candidate new pairs
        std::vector<Pair> cand;
        for (size_t i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            const Term& li = basis[i].lead();
            if (li.comp != lt.comp) continue;
            // product criterion (valid for ideals only)
            if (rank1 && mono_coprime(li.m, lt.m)) continue;
            Monomial L = mono_lcm(li.m, lt.m);
            int64_t sg = std::max(sugar[i] + (L / li.m).degree(), sugar[t] + (L / lt.m).degree());
            cand.push_back({i, t, std::move(L), sg});
        }
        // M criterion: drop candidates whose lcm is a proper multiple of another's
        std::vector<bool> drop(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) drop[a] = true;
            }
        // F criterion: among equal lcms keep the first
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < a; ++b) {
                if (drop[a] || drop[b]) continue;
                if (cand[a].lcm == cand[b].lcm) drop[a] = true;
            }
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.push_back(std::move(cand[a]));
    }

    size_t pop_pair() {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            int c = ord.mono.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
        }
        return best;
    }

    void run(const std::vector<PolyVec>& gens, size_t rank) {
        bool rank1 = rank == 1;
        for (const auto& g : gens) {
            Flat f = flatten(g);
            if (f.is_zero()) continue;
            int64_t sg = 0;
            for (const auto& t : f.t) sg = std::max(sg, t.m.degree());
            normalize(f);
            basis.push_back(std::move(f));
            sugar.push_back(sg);
            update_pairs(basis.size() - 1, rank1);
        }
        while (!pairs.empty()) {
            size_t k = pop_pair();
            Pair p = std::move(pairs[k]);
            pairs.erase(pairs.begin() + (ptrdiff_t)k);
            check_pair_budget(p);
            ++pairs_done;
            const Flat &fi = basis[p.i], &fj = basis[p.j];
            Flat s = fi;
            Monomial mi = p.lcm / fi.lead().m, mj = p.lcm / fj.lead().m;
            for (auto& t : s.t) t.m = t.m * mi;
            Rational ci = fi.lead().c;
            for (auto& t : s.t) t.c /= ci;
            axpy(s, Rational(-1) / fj.lead().c, mj, fj);
            Flat h = normal_form(std::move(s));
            if (h.is_zero()) continue;
            normalize(h);
            basis.push_back(std::move(h));
            sugar.push_back(p.sugar);
            update_pairs(basis.size() - 1, rank1);
        }
        interreduce();
    }

    // Drop elements whose lead is divisible by another's; tail-reduce the
    // rest; sort ascending by leading term. Result is the reduced basis.
    void interreduce() {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (find_reducer(basis[k].lead(), k) >= 0) basis[k].t.clear();
        }
        std::erase_if(basis, [](const Flat& f) { return f.is_zero(); });
        for (size_t k = 0; k < basis.size(); ++k) {
            Flat f = normal_form(std::move(basis[k]), k);
            normalize(f);
            basis[k] = std::move(f);
        }
        std::sort(basis.begin(), basis.end(), [this](const Flat& a, const Flat& b) {
            return cmp(a.lead().comp, a.lead().m, b.lead().comp, b.lead().m) < 0;
        });
    }
};

RingPtr ring_of(const std::vector<PolyVec>& gens) {
    for (const auto& v : gens)
        for (const auto& p : v.c)
            if (p.ring()) return p.ring();
    return nullptr;
}

RingPtr ring_of(const std::vector<Poly>& gens) {
    for (const auto& p : gens)
        if (p.ring()) return p.ring();
    return nullptr;
}

std::vector<PolyVec> wrap(const std::vector<Poly>& gens) {
    std::vector<PolyVec> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(PolyVec{{g}});
    return v;
}

std::vector<Poly> unwrap(const std::vector<PolyVec>& vecs) {
    std::vector<Poly> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back(v.c[0]);
    return out;
}

void require_well_order(const MonomialOrder& order, size_t nvars) {
    if (!order.is_well_order(nvars))
        throw std::invalid_argument("monomial order is not a well-order");
}

}  // namespace

// --- Public entry points -------------------------------------------------

std::vector<PolyVec> module_groebner(const std::vector<PolyVec>& gens, const ModuleOrder& order,
                                     const Budget& budget) {
    RingPtr ring = ring_of(gens);
    if (!ring) return {};
    require_well_order(order.mono, ring->nvars());
    size_t rank = gens.front().rank();
    Engine e{order, ring, budget};
    e.run(gens, rank);
    std::vector<PolyVec> out;
    out.reserve(e.basis.size());
    for (const auto& f : e.basis) out.push_back(e.unflatten(f, rank));
    return out;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const Budget& budget) {
    return unwrap(module_groebner(wrap(gens), ModuleOrder::natural(order, 1), budget));
}

PolyVec reduce(const PolyVec& f, const std::vector<PolyVec>& basis, const ModuleOrder& order) {
    RingPtr ring = ring_of(basis);
    if (!ring) ring = ring_of({f});
    if (!ring) return f;
    require_well_order(order.mono, ring->nvars());
    Engine e{order, ring, Budget{}};
    for (const auto& g : basis) {
        Flat fg = e.flatten(g);
        if (!fg.is_zero()) e.basis.push_back(std::move(fg));
    }
    return e.unflatten(e.normal_form(e.flatten(f)), f.rank());
}

Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
    return reduce(PolyVec{{f}}, wrap(basis), ModuleOrder::natural(order, 1)).c[0];
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<bool>& drop,
                            const Budget& budget) {
    RingPtr ring = ring_of(gens);
    if (!ring) return {};
    size_t n = ring->nvars();
    auto gb = groebner_basis(gens, MonomialOrder::elimination(n, drop), budget);
    std::vector<std::string> kept_names;
    std::vector<int> kept_idx;
    for (size_t i = 0; i < n; ++i)
        if (!drop[i]) {
            kept_names.push_back(ring->vars[i]);
            kept_idx.push_back((int)i);
        }
    RingPtr sub = make_ring(kept_names);
    std::vector<Poly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (size_t i = 0; i < n && pure; ++i)
                if (drop[i] && t.first.e[i] > 0) pure = false;
        if (!pure) continue;
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const auto& t : g.terms()) {
            Monomial m(sub->nvars());
            for (size_t k = 0; k < kept_idx.size(); ++k) m.e[k] = t.first.e[kept_idx[k]];
            terms.emplace_back(std::move(m), t.second);
        }
        out.push_back(Poly::from_terms(sub, std::move(terms)));
    }
    return out;
}

std::vector<PolyVec> syzygies(const std::vector<PolyVec>& vectors, const Budget& budget) {
    RingPtr ring = ring_of(vectors);
    if (!ring) return {};
    size_t m = vectors.front().rank(), N = vectors.size();
    std::vector<PolyVec> ext;
    for (size_t i = 0; i < N; ++i) {
        PolyVec w = vectors[i];
        w.c.resize(m + N, Poly::zero(ring));
        w.c[m + i] = Poly::constant(ring, 1);
        ext.push_back(std::move(w));
    }
    auto gb = module_groebner(
        ext, ModuleOrder::natural(MonomialOrder::degrevlex(ring->nvars()), m + N), budget);
    std::vector<PolyVec> out;
    for (auto& g : gb) {
        bool in_tag = std::all_of(g.c.begin(), g.c.begin() + (ptrdiff_t)m,
                                  [](const Poly& p) { return p.is_zero(); });
        if (!in_tag) continue;
        PolyVec s;
        s.c.assign(g.c.begin() + (ptrdiff_t)m, g.c.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Poly> module_component_intersect(const std::vector<PolyVec>& gens, size_t component,
                                             const Budget& budget) {
    RingPtr ring = ring_of(gens);
    if (!ring) return {};
    size_t rank = gens.front().rank();
    auto gb = module_groebner(
        gens, ModuleOrder::component_last(MonomialOrder::degrevlex(ring->nvars()), rank, component),
        budget);
    std::vector<Poly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (size_t i = 0; i < rank; ++i)
            if (i != component && !g.c[i].is_zero()) pure = false;
        if (pure) out.push_back(g.c[component]);
    }
    return out;
}

namespace {

// Minimal vertex cover of the supports of the leading monomials.
struct CoverSearch {
    std::vector<std::vector<int>> supports;
    std::vector<bool> excluded;
    int best;

    bool hit(const std::vector<int>& sup) const {
        return std::any_of(sup.begin(), sup.end(), [&](int v) { return excluded[v]; });
    }

    void search(int count) {
        if (count >= best) return;
        const std::vector<int>* open = nullptr;
        for (const auto& s : supports)
            if (!hit(s)) {
                open = &s;
                break;
            }
        if (!open) {
            best = count;
            return;
        }
        for (int v : *open) {
            excluded[v] = true;
            search(count + 1);
            excluded[v] = false;
        }
    }
};

}  // namespace

int ideal_dimension(const std::vector<Poly>& gens, const Budget& budget) {
    RingPtr ring = ring_of(gens);
    if (!ring) return (int)0;  // zero ideal in an unknown ring: caller error, treat as empty
    size_t n = ring->nvars();
    MonomialOrder ord = MonomialOrder::degrevlex(n);
    auto gb = groebner_basis(gens, ord, budget);
    if (gb.empty()) return (int)n;
    std::vector<std::vector<int>> supports;
    for (const auto& g : gb) {
        const Monomial& m = g.leading(ord).first;
        if (m.is_one()) return -1;  // unit ideal
        std::vector<int> sup;
        for (size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) sup.push_back((int)i);
        supports.push_back(std::move(sup));
    }
    // discard supports containing another support (they impose no new constraint)
    std::vector<std::vector<int>> minimal;
    for (const auto& a : supports) {
        bool redundant = false;
        for (const auto& b : supports) {
            if (&a == &b) continue;
            bool sub = std::includes(a.begin(), a.end(), b.begin(), b.end());
            if (sub && (a.size() > b.size() || &b < &a)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(a);
    }
    CoverSearch cs{std::move(minimal), std::vector<bool>(n, false), (int)n};
    cs.search(0);
    return (int)n - cs.best;
}

bool ideal_contains(const std::vector<Poly>& groebner, const MonomialOrder& order, const Poly& f) {
    return reduce(f, groebner, order).is_zero();
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const Budget& budget) {
    RingPtr ring = ring_of(a);
    if (!ring) ring = ring_of(b);
    if (!ring) return true;  // both zero
    MonomialOrder ord = MonomialOrder::degrevlex(ring->nvars());
    return groebner_basis(a, ord, budget) == groebner_basis(b, ord, budget);
}

std::vector<Poly> minimal_generators(const std::vector<Poly>& gens, const std::vector<int64_t>& w,
                                     const Budget& budget) {
    RingPtr ring = ring_of(gens);
    if (!ring) return {};
    for (int64_t wi : w)
        if (wi <= 0) throw std::invalid_argument("minimal_generators requires positive weights");
    MonomialOrder ord = MonomialOrder::weighted(w);
    auto gb = groebner_basis(gens, ord, budget);
    for (const auto& g : gb)
        if (!g.is_homogeneous(w))
            throw std::invalid_argument("minimal_generators requires a graded ideal");
    std::stable_sort(gb.begin(), gb.end(), [&](const Poly& x, const Poly& y) {
        return x.weighted_degree(w) < y.weighted_degree(w);
    });
    std::vector<Poly> chosen;
    std::vector<Poly> chosen_gb;
    for (const auto& g : gb) {
        if (!chosen.empty() && reduce(g, chosen_gb, ord).is_zero()) continue;
        chosen.push_back(g);
        chosen_gb = groebner_basis(chosen, ord, budget);
    }
    return chosen;
}

const std::vector<Poly>& PolyIdeal::basis(const MonomialOrder& order, const Budget& budget) const {
    for (const auto& [ord, b] : cache_)
        if (ord == order) return b;
    cache_.emplace_back(order, groebner_basis(gens_, order, budget));
    return cache_.back().second;
}

bool PolyIdeal::contains(const Poly& f, const Budget& budget) const {
    if (f.is_zero()) return true;
    MonomialOrder ord = MonomialOrder::degrevlex(f.ring()->nvars());
    return ideal_contains(basis(ord, budget), ord, f);
}

}  // namespace skhodge
