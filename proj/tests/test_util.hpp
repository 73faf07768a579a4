#pragma once

// Shared helpers for the test suite: data-file loading, polynomial literals,
// and a dense degree-bounded linear-algebra toolkit used as an independent
// oracle for elimination/intersection results.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "skhodge/divfile.hpp"
#include "skhodge/hodge.hpp"

namespace testutil {

using namespace skhodge;

inline std::string data_path(const std::string& name) {
    return std::string(SKHODGE_DATA_DIR) + "/" + name;
}

inline DivisorFile load(const std::string& name) { return parse_divisor_file(data_path(name)); }

// Parsed + normalized spec with its b-function (must be present in the file).
struct Case {
    DivisorSpec spec;
    BFunction b;
};

inline Case load_case(const std::string& name) {
    DivisorFile f = load(name);
    return {normalize_basis(f.spec), *f.bfun};
}

inline std::vector<Poly> parse_ideal(const RingPtr& ring,
                                     const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(ring, t));
    return out;
}

// ---- degree-bounded linear algebra oracle -------------------------------

// All monomials of total degree <= d in nvars variables.
inline std::vector<Monomial> monomials_up_to(size_t nvars, int d) {
    std::vector<Monomial> out{Monomial::one(nvars)};
    for (int deg = 1; deg <= d; ++deg) {
        std::vector<Monomial> layer;
        // Generate degree-deg monomials recursively.
        std::vector<int32_t> e(nvars, 0);
        auto rec = [&](auto&& self, size_t var, int rem) -> void {
            if (var + 1 == nvars) {
                e[var] = rem;
                layer.push_back(Monomial(e));
                e[var] = 0;
                return;
            }
            for (int k = rem; k >= 0; --k) {
                e[var] = k;
                self(self, var + 1, rem - k);
            }
            e[var] = 0;
        };
        rec(rec, 0, deg);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// Row space over Q of polynomials. Rows are sparse maps keyed by a total
// order on monomials (columns allocated on demand), kept in row echelon form
// by Gaussian elimination; this is the brute-force comparator the Groebner
// routines are checked against.
class LinearSpan {
public:
    using Row = std::map<std::vector<int32_t>, Rational>;

    static Row to_row(const Poly& p) {
        Row row;
        for (const auto& [m, c] : p.terms()) row[m.e] = c;
        return row;
    }

    // Gaussian elimination insert; returns true if p enlarged the span.
    bool insert(const Poly& p) {
        Row row = to_row(p);
        reduce_row(row);
        if (row.empty()) return false;
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const Poly& p) const {
        Row row = to_row(p);
        reduce_row(row);
        return row.empty();
    }

    size_t dim() const { return rows_.size(); }

    bool same_span(const LinearSpan& other) const {
        if (dim() != other.dim()) return false;
        for (const auto& r : other.rows_) {
            Row row = r;
            reduce_row(row);
            if (!row.empty()) return false;
        }
        return true;
    }

private:
    // Pivot of each stored row is its first (smallest-key) entry.
    void reduce_row(Row& row) const {
        bool changed = true;
        while (changed && !row.empty()) {
            changed = false;
            for (const auto& r : rows_) {
                const auto& pivot = r.begin()->first;
                auto hit = row.find(pivot);
                if (hit == row.end()) continue;
                const Rational f = hit->second / r.begin()->second;
                for (const auto& [k, v] : r) {
                    auto it = row.find(k);
                    if (it == row.end()) {
                        row.emplace(k, -f * v);
                    } else {
                        it->second -= f * v;
                        if (it->second == 0) row.erase(it);
                    }
                }
                changed = true;
            }
        }
    }

    std::vector<Row> rows_;
};

// Span of { m * g : g in gens, deg(m * g) <= d } -- the degree-d slice of the
// ideal visible to multipliers that keep the product inside degree d. (A
// subset of the true degree-d slice in general, exact for d large enough.)
inline LinearSpan ideal_slice(const std::vector<Poly>& gens, int d) {
    const size_t n = gens.empty() ? 0 : gens[0].ring()->nvars();
    LinearSpan span;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int gd = (int)g.total_degree();
        for (const auto& m : monomials_up_to(n, d - gd))
            span.insert(g.mul_term(m, Rational(1)));
    }
    return span;
}

// Deterministic random polynomial of total degree <= d with small integer
// coefficients (possibly zero terms skipped).
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int d, int nterms) {
    auto mons = monomials_up_to(ring->nvars(), d);
    std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    Poly p = Poly::zero(ring);
    for (int i = 0; i < nterms; ++i) {
        int c = coef(rng);
        if (c == 0) continue;
        p += Poly::from_terms(ring, {{mons[pick(rng)], Rational(c)}});
    }
    return p;
}

}  // namespace testutil
