#include "skhodge/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace skhodge {

int64_t Monomial::degree() const {
    int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

int64_t Monomial::weighted_degree(const std::vector<int64_t>& w) const {
    int64_t d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= other.e[i];
        assert(r.e[i] >= 0);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

namespace {

int cmp_degrevlex(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    int64_t da = 0, db = 0;
    for (int v : vars) { da += a.e[v]; db += b.e[v]; }
    if (da != db) return da < db ? -1 : 1;
    // revlex: the last variable where they differ decides; smaller exponent wins.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        int32_t xa = a.e[*it], xb = b.e[*it];
        if (xa != xb) return xa > xb ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    for (int v : vars) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& w : weight_rows) {
        int64_t da = a.weighted_degree(w), db = b.weighted_degree(w);
        if (da != db) return da < db ? -1 : 1;
    }
    std::vector<std::vector<int>> groups;
    if (blocks.empty()) {
        std::vector<int> all(a.nvars());
        for (size_t i = 0; i < a.nvars(); ++i) all[i] = (int)i;
        groups.push_back(std::move(all));
    } else {
        groups = blocks;
    }
    for (const auto& g : groups) {
        int c = tie == Tie::degrevlex ? cmp_degrevlex(a, b, g) : cmp_lex(a, b, g);
        if (c != 0) return c;
    }
    return 0;
}

bool MonomialOrder::is_well_order(size_t nvars) const {
    // x_i > 1 must hold for every i: the first nonzero weight seen by the
    // variable must be positive, or all weights zero (tie break is a term
    // order, so it handles that variable).
    for (size_t i = 0; i < nvars; ++i) {
        for (const auto& w : weight_rows) {
            if (w[i] > 0) break;
            if (w[i] < 0) return false;
        }
    }
    return true;
}

MonomialOrder MonomialOrder::degrevlex(size_t nvars) {
    MonomialOrder o;
    o.weight_rows.push_back(std::vector<int64_t>(nvars, 1));
    return o;
}

MonomialOrder MonomialOrder::lex(size_t nvars) {
    MonomialOrder o;
    (void)nvars;
    o.tie = Tie::lex;
    return o;
}

MonomialOrder MonomialOrder::elimination(size_t nvars, const std::vector<bool>& drop) {
    MonomialOrder o;
    std::vector<int64_t> row(nvars, 0);
    for (size_t i = 0; i < nvars; ++i)
        if (drop[i]) row[i] = 1;
    o.weight_rows.push_back(std::move(row));
    o.weight_rows.push_back(std::vector<int64_t>(nvars, 1));
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> w) {
    MonomialOrder o;
    size_t n = w.size();
    o.weight_rows.push_back(std::move(w));
    o.weight_rows.push_back(std::vector<int64_t>(n, 1));
    return o;
}

}  // namespace skhodge
