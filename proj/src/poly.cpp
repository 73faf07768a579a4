#include "skhodge/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace skhodge {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

std::string rat_str(const Rational& r) {
    return r.get_str();
}

int PolyRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return (int)i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars);
}

namespace {
// Canonical internal term order: degrevlex, descending.
int canon_cmp(const Monomial& a, const Monomial& b) {
    int64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}
bool canon_desc(const std::pair<Monomial, Rational>& x, const std::pair<Monomial, Rational>& y) {
    return canon_cmp(x.first, y.first) > 0;
}
}  // namespace

Poly::Poly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace_back(Monomial::one(ring_->nvars()), c);
}

Poly Poly::variable(RingPtr ring, int var, int exp) {
    Poly p(ring);
    Monomial m(ring->nvars());
    m.e[var] = exp;
    p.terms_.emplace_back(std::move(m), Rational(1));
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Rational>> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), canon_desc);
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int64_t Poly::total_degree() const {
    int64_t d = -1;
    for (auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

int64_t Poly::weighted_degree(const std::vector<int64_t>& w) const {
    int64_t d = INT64_MIN;
    for (auto& t : terms_) d = std::max(d, t.first.weighted_degree(w));
    return d;
}

bool Poly::is_homogeneous(const std::vector<int64_t>& w) const {
    if (terms_.empty()) return true;
    int64_t d = terms_[0].first.weighted_degree(w);
    for (auto& t : terms_)
        if (t.first.weighted_degree(w) != d) return false;
    return true;
}

Rational Poly::coeff(const Monomial& m) const {
    for (auto& t : terms_)
        if (t.first == m) return t.second;
    return Rational(0);
}

const std::pair<Monomial, Rational>& Poly::leading(const MonomialOrder& order) const {
    assert(!terms_.empty());
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.less(terms_[best].first, terms_[i].first)) best = i;
    return terms_[best];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    // merge of two canonically sorted term lists
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = canon_cmp(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].second + o.terms_[j].second;
            if (s != 0) out.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    *this += -o;
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<std::pair<Monomial, Rational>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) acc.emplace_back(a.first * b.first, a.second * b.second);
    return Poly::from_terms(ring_, std::move(acc));
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.first = t.first * m;
        t.second *= c;
    }
    // multiplying by a monomial preserves the degrevlex order of terms
    return r;
}

Poly Poly::pow(int k) const {
    assert(k >= 0);
    Poly r = Poly::constant(ring_, Rational(1));
    Poly base(*this);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(ring_);
    std::vector<std::pair<Monomial, Rational>> acc;
    for (auto& t : terms_) {
        int32_t k = t.first.e[var];
        if (k == 0) continue;
        Monomial m = t.first;
        m.e[var] -= 1;
        acc.emplace_back(std::move(m), t.second * k);
    }
    return Poly::from_terms(ring_, std::move(acc));
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_[0].second < 0) scale = -scale;  // terms_[0] is the degrevlex lead
    return scaled(scale);
}

Poly Poly::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    const auto& lt = leading(order);
    return scaled(Rational(1) / lt.second);
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
    assert(!divisor.is_zero());
    MonomialOrder ord = MonomialOrder::degrevlex(ring_->nvars());
    Poly rem(*this), quot(ring_);
    const auto& dl = divisor.terms()[0];  // canonical lead
    while (!rem.is_zero()) {
        const auto& rl = rem.terms()[0];
        if (!dl.first.divides(rl.first)) return std::nullopt;
        Monomial m = rl.first / dl.first;
        Rational c = rl.second / dl.second;
        quot += Poly::from_terms(ring_, {{m, c}});
        rem -= divisor.mul_term(m, c);
    }
    (void)ord;
    return quot;
}

Poly embed_poly(const Poly& p, const RingPtr& big) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& t : p.terms()) {
        Monomial m(big->nvars());
        std::copy(t.first.e.begin(), t.first.e.end(), m.e.begin());
        terms.emplace_back(std::move(m), t.second);
    }
    return Poly::from_terms(big, std::move(terms));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational ac = abs(c);
        bool printed_coeff = false;
        if (ac != 1 || t.first.is_one()) {
            os << rat_str(ac);
            printed_coeff = true;
        }
        bool any_var = false;
        for (size_t i = 0; i < t.first.e.size(); ++i) {
            int32_t k = t.first.e[i];
            if (k == 0) continue;
            if (printed_coeff || any_var) os << "*";
            any_var = true;
            os << ring_->vars[i];
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace skhodge
