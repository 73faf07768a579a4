#include "skhodge/hodge.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace skhodge {

// --- Rational sections ---------------------------------------------------

RationalSection make_section(Poly num, int pole, const Poly& h) {
    if (num.is_zero()) return {std::move(num), 0};
    while (pole > 0) {
        auto q = num.try_divide(h);
        if (!q) break;
        num = std::move(*q);
        --pole;
    }
    return {std::move(num), pole};
}

RationalSection section_add(const RationalSection& a, const RationalSection& b, const Poly& h) {
    int pole = std::max(a.pole, b.pole);
    Poly num = a.num * h.pow(pole - a.pole) + b.num * h.pow(pole - b.pole);
    return make_section(std::move(num), pole, h);
}

RationalSection section_derivative(const RationalSection& sec, int var, const Poly& h) {
    if (sec.pole == 0) return make_section(sec.num.derivative(var), 0, h);
    Poly num = sec.num.derivative(var) * h - sec.num.scaled(sec.pole) * h.derivative(var);
    return make_section(std::move(num), sec.pole + 1, h);
}

// --- Algebra endomorphisms of the Weyl ring ------------------------------

namespace {

struct AlgebraMap {
    WeylRingPtr W;
    std::vector<WeylElement> images;  // one per slot
    mutable std::vector<std::vector<WeylElement>> pow_cache;

    explicit AlgebraMap(WeylRingPtr w) : W(std::move(w)) {
        for (size_t i = 0; i < W->nslots(); ++i)
            images.push_back(WeylElement::slot_var(W, (int)i));
        pow_cache.resize(W->nslots());
    }

    const WeylElement& power(size_t slot, int32_t e) const {
        auto& pc = pow_cache[slot];
        if (pc.empty()) pc.push_back(WeylElement::constant(W, 1));
        while ((int32_t)pc.size() <= e) pc.push_back(weyl_mul(pc.back(), images[slot]));
        return pc[e];
    }

    WeylElement apply(const WeylElement& q) const {
        WeylElement acc(W);
        for (const auto& [m, c] : q.poly().terms()) {
            WeylElement cur = WeylElement::constant(W, c);
            // slots in increasing index reproduce the normal ordering
            for (size_t s = 0; s < W->nslots(); ++s)
                if (m.e[s] > 0) cur = weyl_mul(cur, power(s, m.e[s]));
            acc = acc + cur;
        }
        return acc;
    }
};

AlgebraMap make_phi(const WeylRingPtr& wtx, const Poly& h, int direction) {
    AlgebraMap f(wtx);
    const WeylRing& r = *wtx;
    Poly ht = embed_poly(h, r.slots);
    WeylElement dt = WeylElement::slot_var(wtx, r.dti());
    Rational sgn(direction);
    f.images[r.ti()] = f.images[r.ti()] + WeylElement(wtx, ht.scaled(sgn));
    for (size_t i = 0; i < r.nx(); ++i) {
        Poly hp = embed_poly(h.derivative((int)i), r.slots);
        f.images[r.di(i)] =
            f.images[r.di(i)] - WeylElement(wtx, hp * dt.poly()).scaled(sgn);
    }
    return f;
}

}  // namespace

WeylElement phi(const WeylElement& q, const Poly& h) {
    return make_phi(q.ring(), h, +1).apply(q);
}

WeylElement phi_inv(const WeylElement& q, const Poly& h) {
    return make_phi(q.ring(), h, -1).apply(q);
}

WeylElement substitute_s(const WeylElement& p, const WeylRingPtr& wtx) {
    const WeylRing& src = *p.ring();
    const WeylRing& dst = *wtx;
    assert(src.has_s && !src.has_t && dst.has_t && !dst.has_s);
    // u = -Dt t = -(t Dt + 1), central among the x/Dx slots
    Poly u = -(Poly::variable(dst.slots, dst.ti()) * Poly::variable(dst.slots, dst.dti())) -
             Poly::constant(dst.slots, 1);
    std::vector<WeylElement> upow{WeylElement::constant(wtx, 1), WeylElement(wtx, u)};
    WeylElement acc(wtx);
    for (const auto& [m, c] : p.poly().terms()) {
        int32_t l = m.e[src.si()];
        while ((int32_t)upow.size() <= l) upow.push_back(weyl_mul(upow.back(), upow[1]));
        Monomial base(dst.nslots());
        for (size_t i = 0; i < src.nx(); ++i) {
            base.e[dst.xi(i)] = m.e[src.xi(i)];
            base.e[dst.di(i)] = m.e[src.di(i)];
        }
        WeylElement term(wtx, Poly::from_terms(dst.slots, {{std::move(base), c}}));
        acc = acc + weyl_mul(term, upow[l]);
    }
    return acc;
}

SplitT split_t(const WeylElement& q, const WeylRingPtr& wx) {
    const WeylRing& src = *q.ring();
    const WeylRing& dst = *wx;
    assert(src.has_t && !dst.has_t && !dst.has_s);
    SplitT out{WeylElement(q.ring()), {}};
    Poly A = Poly::zero(src.slots);
    std::map<int, std::vector<std::pair<Monomial, Rational>>> qparts;
    std::vector<std::pair<Monomial, Rational>> work(q.poly().terms().begin(),
                                                    q.poly().terms().end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        int32_t b = m.e[src.ti()], e = m.e[src.dti()];
        if (b == 0) {
            Monomial red(dst.nslots());
            for (size_t i = 0; i < src.nx(); ++i) {
                red.e[dst.xi(i)] = m.e[src.xi(i)];
                red.e[dst.di(i)] = m.e[src.di(i)];
            }
            qparts[e].emplace_back(std::move(red), c);
            continue;
        }
        // x^a t^b D^al Dt^e = (x^a t^{b-1} D^al Dt^e) t - e x^a t^{b-1} D^al Dt^{e-1}
        Monomial m1 = m;
        m1.e[src.ti()] = b - 1;
        A += Poly::from_terms(src.slots, {{m1, c}});
        if (e > 0) {
            Monomial m2 = std::move(m1);
            m2.e[src.dti()] = e - 1;
            work.emplace_back(std::move(m2), -c * e);
        }
    }
    out.A = WeylElement(q.ring(), std::move(A));
    for (auto& [e, terms] : qparts) {
        Poly p = Poly::from_terms(dst.slots, std::move(terms));
        if (!p.is_zero()) out.Q.emplace_back(WeylElement(wx, std::move(p)), e);
    }
    return out;
}

RationalSection apply_to_hinv(const WeylElement& q, const Poly& h) {
    const WeylRing& r = *q.ring();
    const RingPtr& R = h.ring();
    assert(!r.has_t && !r.has_s && r.nx() == R->nvars());
    // memoized D^alpha(h^{-1}), keyed by the derivative multi-index
    std::map<std::vector<int32_t>, RationalSection> memo;
    memo[std::vector<int32_t>(r.nx(), 0)] = make_section(Poly::constant(R, 1), 1, h);
    std::function<const RationalSection&(std::vector<int32_t>&)> deriv =
        [&](std::vector<int32_t>& alpha) -> const RationalSection& {
        auto it = memo.find(alpha);
        if (it != memo.end()) return it->second;
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            --alpha[i];
            RationalSection lower = deriv(alpha);
            ++alpha[i];
            RationalSection sec = section_derivative(lower, (int)i, h);
            return memo.emplace(alpha, std::move(sec)).first->second;
        }
        return memo.at(alpha);  // unreachable
    };
    RationalSection acc{Poly::zero(R), 0};
    for (const auto& [m, c] : q.poly().terms()) {
        std::vector<int32_t> alpha(r.nx());
        Monomial xa(R->nvars());
        for (size_t i = 0; i < r.nx(); ++i) {
            alpha[i] = m.e[r.di(i)];
            xa.e[i] = m.e[r.xi(i)];
        }
        const RationalSection& base = deriv(alpha);
        RationalSection term =
            make_section(base.num.mul_term(xa, c), base.pole, h);
        acc = section_add(acc, term, h);
    }
    return acc;
}

// --- J and the pipeline --------------------------------------------------

WeylIdeal build_J(const DivisorSpec& spec, const BFunction& b) {
    if (!spec.normalized) throw InvariantError("build_J requires a normalized basis");
    auto ws = make_weyl_ring(spec.ring->vars, false, true);
    auto s_ring = make_ring({"s"});
    auto [beta, r] = beta_bar(b, s_ring);
    std::vector<WeylElement> gens;
    gens.emplace_back(ws, embed_poly(spec.h, ws->slots));
    // beta_bar(s), re-read on the s slot
    {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const auto& t : beta.terms()) {
            Monomial m(ws->nslots());
            m.e[ws->si()] = t.first.e[0];
            terms.emplace_back(std::move(m), t.second);
        }
        gens.emplace_back(ws, Poly::from_terms(ws->slots, std::move(terms)));
    }
    for (size_t i = 0; i < spec.basis.size(); ++i) {
        if (i == spec.chi_index) continue;
        gens.push_back(spec.basis[i].to_weyl(ws));
    }
    gens.push_back(spec.chi().to_weyl(ws) - WeylElement::slot_var(ws, ws->si()) +
                   WeylElement::constant(ws, 1));
    return {ws, std::move(gens)};
}

HodgeResult hodge_ideal_0(const DivisorSpec& spec, const BFunction& b, const Budget& budget) {
    if (!spec.normalized) throw InvariantError("hodge_ideal_0 requires a normalized basis");
    // J contains chi - s + 1, so modulo J the central s acts as chi + 1 and
    // J ∩ Q[x] equals <h, beta_bar(chi+1), delta_1..delta_{n-1}> ∩ Q[x] in the
    // plain Weyl algebra -- one variable fewer than eliminating through W[s].
    auto w = make_weyl_ring(spec.ring->vars, false, false);
    std::vector<WeylElement> gens;
    gens.emplace_back(w, embed_poly(spec.h, w->slots));
    WeylElement chi_w = spec.chi().to_weyl(w);
    WeylElement bsub = WeylElement::constant(w, 1);
    for (const auto& [root, mult] : b.roots) {
        if (!(root > -1 && root < 0)) continue;
        // factor (s - alpha) at s = chi + 1, alpha = root + 1
        WeylElement factor = chi_w + WeylElement::constant(w, -root);
        for (int i = 0; i < mult; ++i) bsub = weyl_mul(bsub, factor);
    }
    gens.push_back(std::move(bsub));
    for (size_t i = 0; i < spec.basis.size(); ++i) {
        if (i == spec.chi_index) continue;
        gens.push_back(spec.basis[i].to_weyl(w));
    }
    WeylIdeal Jx(w, std::move(gens));
    auto elim = weyl_eliminate(Jx, KeepSubring::Qx, budget);
    std::vector<Poly> out;
    for (auto& g : elim) out.push_back(embed_poly(g, spec.ring));
    return {0, std::move(out)};
}

std::vector<std::pair<RationalSection, int>> psi_bar(const WeylElement& p,
                                                     const DivisorSpec& spec) {
    auto wtx = make_weyl_ring(spec.ring->vars, true, false);
    auto wx = make_weyl_ring(spec.ring->vars, false, false);
    WeylElement q = phi(substitute_s(p, wtx), spec.h);
    SplitT sp = split_t(q, wx);
    std::vector<std::pair<RationalSection, int>> out;
    for (const auto& [Qi, i] : sp.Q) {
        RationalSection sec = apply_to_hinv(Qi, spec.h);
        if (!sec.is_zero()) out.emplace_back(std::move(sec), i);
    }
    return out;
}

std::vector<Poly> ord_filtration(const DivisorSpec& spec, int k) {
    assert(k >= 0);
    const RingPtr& R = spec.ring;
    size_t n = R->nvars();
    std::vector<Poly> out;
    // enumerate |alpha| <= k; D^alpha(h^{-1}) cleared to denominator h^{k+1}
    std::vector<int32_t> alpha(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t var, int left) {
        if (var == n) {
            RationalSection sec = make_section(Poly::constant(R, 1), 1, spec.h);
            for (size_t i = 0; i < n; ++i)
                for (int32_t j = 0; j < alpha[i]; ++j)
                    sec = section_derivative(sec, (int)i, spec.h);
            Poly num = sec.num * spec.h.pow(k + 1 - sec.pole);
            if (!num.is_zero()) out.push_back(num.primitive_part());
            return;
        }
        for (int a = 0; a <= left; ++a) {
            alpha[var] = a;
            rec(var + 1, left - a);
        }
        alpha[var] = 0;
    };
    rec(0, k);
    return out;
}

HodgePipeline::HodgePipeline(DivisorSpec spec, BFunction b)
    : spec_(std::move(spec)), b_(std::move(b)) {
    if (!spec_.normalized) spec_ = normalize_basis(spec_);
    auto s_ring = make_ring({"s"});
    auto br = beta_bar(b_, s_ring);
    beta_ = std::move(br.first);
    r_ = br.second;
    ws_ = make_weyl_ring(spec_.ring->vars, false, true);
    wtx_ = make_weyl_ring(spec_.ring->vars, true, false);
    wx_ = make_weyl_ring(spec_.ring->vars, false, false);
    J_ = build_J(spec_, b_);
}

const std::vector<std::pair<WeylElement, int64_t>>& HodgePipeline::involutive_basis(
    const Budget& budget) {
    if (!have_basis_) {
        basis_ = involutive_basis_T(J_, budget);
        have_basis_ = true;
    }
    return basis_;
}

std::vector<PoleVector> HodgePipeline::module_generators(int k, const Budget& budget) {
    assert(k >= 0);
    const auto& basis = involutive_basis(budget);
    const Poly& h = spec_.h;
    std::vector<PoleVector> out;
    size_t n = spec_.n();

    auto emit = [&](const WeylElement& g, int used) {
        auto sections = psi_bar(g, spec_);
        if (sections.empty()) return;
        for (int shift = 0; shift + used <= k; ++shift) {
            PoleVector pv;
            pv.k = k;
            pv.comp.assign((size_t)k + 1, RationalSection{Poly::zero(spec_.ring), 0});
            bool nonzero = false;
            for (const auto& [sec, e] : sections) {
                int idx = e + shift;
                if (idx > k) throw std::logic_error("Dt power exceeds level");
                pv.comp[idx] = section_add(pv.comp[idx], sec, h);
            }
            for (int i = 0; i <= k; ++i) {
                if (pv.comp[i].pole > k - i + 1)
                    throw std::logic_error("pole bound violated at component " +
                                           std::to_string(i));
                if (!pv.comp[i].is_zero()) nonzero = true;
            }
            if (nonzero) out.push_back(std::move(pv));
        }
    };

    for (const auto& [P, d] : basis) {
        if (d > k) continue;
        int room = (int)(k - d);
        // enumerate s^l D^alpha with l + |alpha| <= room
        std::vector<int32_t> alpha(n, 0);
        std::function<void(size_t, int)> rec = [&](size_t var, int left) {
            if (var == n) {
                for (int l = 0; l <= left; ++l) {
                    Monomial m(ws_->nslots());
                    for (size_t i = 0; i < n; ++i) m.e[ws_->di(i)] = alpha[i];
                    m.e[ws_->si()] = l;
                    int used = (int)d + l;
                    for (size_t i = 0; i < n; ++i) used += alpha[i];
                    WeylElement u(ws_, Poly::from_terms(ws_->slots, {{m, Rational(1)}}));
                    emit(weyl_mul(u, P), used);
                }
                return;
            }
            for (int a = 0; a <= left; ++a) {
                alpha[var] = a;
                rec(var + 1, left - a);
            }
            alpha[var] = 0;
        };
        rec(0, room);
    }
    return out;
}

const HodgeResult& HodgePipeline::hodge_ideal(int k, const Budget& budget) {
    auto it = hodge_cache_.find(k);
    if (it != hodge_cache_.end()) return it->second;
    auto pvs = module_generators(k, budget);
    std::vector<PolyVec> vectors;
    for (const auto& pv : pvs) {
        PolyVec v;
        for (int i = 0; i <= k; ++i) {
            int exp = (k - i + 1) - pv.comp[i].pole;
            assert(exp >= 0);
            v.c.push_back(pv.comp[i].num * spec_.h.pow(exp));
        }
        vectors.push_back(std::move(v));
    }
    HodgeResult res;
    res.k = k;
    if (!vectors.empty()) res.gens = module_component_intersect(vectors, 0, budget);
    return hodge_cache_.emplace(k, std::move(res)).first->second;
}

HodgeResult HodgePipeline::hodge_ideal_0_direct(const Budget& budget) {
    return hodge_ideal_0(spec_, b_, budget);
}

const std::vector<Poly>& HodgePipeline::ord_ideal(int k) {
    auto it = ord_cache_.find(k);
    if (it != ord_cache_.end()) return it->second;
    return ord_cache_.emplace(k, ord_filtration(spec_, k)).first->second;
}

InclusionReport HodgePipeline::check_inclusions(int k, const Budget& budget) {
    InclusionReport rep;
    MonomialOrder ord = MonomialOrder::degrevlex(spec_.n());
    std::map<int, std::vector<Poly>> hodge_gb, ord_gb;
    for (int j = 0; j <= k; ++j) {
        hodge_gb[j] = groebner_basis(hodge_ideal(j, budget).gens, ord, budget);
        ord_gb[j] = groebner_basis(ord_ideal(j), ord, budget);
    }
    auto fail = [&](bool InclusionReport::* flag, const std::string& what) {
        rep.*flag = false;
        if (rep.witness.empty()) rep.witness = what;
    };
    for (int j = 0; j <= k; ++j) {
        for (const auto& g : hodge_ideal(j, budget).gens)
            if (!ideal_contains(ord_gb[j], ord, g))
                fail(&InclusionReport::hodge_in_ord,
                     "I_" + std::to_string(j) + " not inside Ord_" + std::to_string(j) + ": " +
                         g.str());
        if (j >= r_) {
            Poly hr = spec_.h.pow(r_);
            for (const auto& g : ord_ideal(j - r_))
                if (!ideal_contains(hodge_gb[j], ord, hr * g))
                    fail(&InclusionReport::shifted_ord_in_hodge,
                         "h^r * Ord_" + std::to_string(j - r_) + " not inside I_" +
                             std::to_string(j) + ": " + g.str());
        }
        if (j >= 1)
            for (const auto& g : hodge_ideal(j - 1, budget).gens)
                if (!ideal_contains(hodge_gb[j], ord, spec_.h * g))
                    fail(&InclusionReport::monotone,
                         "h * I_" + std::to_string(j - 1) + " not inside I_" + std::to_string(j) +
                             ": " + g.str());
        if (j < k)
            for (const auto& g : hodge_ideal(j, budget).gens)
                for (size_t i = 0; i < spec_.n(); ++i) {
                    Poly cand = spec_.h * g.derivative((int)i) -
                                g.scaled(Rational(j + 1)) * spec_.h.derivative((int)i);
                    if (!ideal_contains(hodge_gb[j + 1], ord, cand))
                        fail(&InclusionReport::d_stable,
                             "D-stability fails from I_" + std::to_string(j) + ": " + g.str());
                }
    }
    return rep;
}

GenLevelResult HodgePipeline::generating_level(int k_max, const Budget& budget) {
    GenLevelResult res;
    res.k_max = k_max;
    res.r = r_;
    MonomialOrder ord = MonomialOrder::degrevlex(spec_.n());
    for (int k = 0; k < k_max; ++k) {
        const auto& Ik = hodge_ideal(k, budget).gens;
        std::vector<Poly> step;
        for (const auto& g : Ik) {
            step.push_back(spec_.h * g);
            for (size_t i = 0; i < spec_.n(); ++i)
                step.push_back(spec_.h * g.derivative((int)i) -
                               g.scaled(Rational(k + 1)) * spec_.h.derivative((int)i));
        }
        bool eq = ideal_equal(step, hodge_ideal(k + 1, budget).gens, budget);
        res.step_equal.push_back(eq);
    }
    res.level = 0;
    for (int k = k_max - 1; k >= 0; --k)
        if (!res.step_equal[(size_t)k]) {
            res.level = k + 1;
            break;
        }
    return res;
}

std::vector<PoleVector> hodge_module_generators(const DivisorSpec& spec, const BFunction& b,
                                                int k, const Budget& budget) {
    HodgePipeline p(spec, b);
    return p.module_generators(k, budget);
}

HodgeResult hodge_ideal(const DivisorSpec& spec, const BFunction& b, int k,
                        const Budget& budget) {
    HodgePipeline p(spec, b);
    return p.hodge_ideal(k, budget);
}

InclusionReport check_inclusions(const DivisorSpec& spec, const BFunction& b, int k,
                                 const Budget& budget) {
    HodgePipeline p(spec, b);
    return p.check_inclusions(k, budget);
}

GenLevelResult generating_level(const DivisorSpec& spec, const BFunction& b, int k_max,
                                const Budget& budget) {
    HodgePipeline p(spec, b);
    return p.generating_level(k_max, budget);
}

}  // namespace skhodge
