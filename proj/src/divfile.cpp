#include "skhodge/divfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace skhodge {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

// Column of a parse_poly failure, extracted from its message if present.
int poly_error_column(const std::string& what, int value_offset) {
    const std::string tag = "position ";
    size_t p = what.find(tag);
    if (p == std::string::npos) return value_offset;
    int col = 0;
    for (size_t i = p + tag.size(); i < what.size() && std::isdigit((unsigned char)what[i]); ++i)
        col = col * 10 + (what[i] - '0');
    return value_offset + col - 1;
}

struct Line {
    int number = 0;
    int value_column = 1;  // 1-based column where the value text starts
    std::string key, value;
};

}  // namespace

DivFileError::DivFileError(std::string origin, int line, int column, const std::string& msg)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

DivisorFile parse_divisor_text(const std::string& text, const std::string& origin) {
    // Pass 1: split into sections of key/value lines.
    std::map<std::string, std::vector<Line>> sections;
    std::vector<std::string> section_order;
    std::string current;
    int section_line = 0;
    {
        std::stringstream ss(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(ss, raw)) {
            ++lineno;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string line = trim(raw);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw DivFileError(origin, lineno, (int)raw.find('[') + 1,
                                       "unterminated section header");
                current = trim(line.substr(1, line.size() - 2));
                if (sections.count(current))
                    throw DivFileError(origin, lineno, 1, "duplicate section [" + current + "]");
                sections[current];
                section_order.push_back(current);
                section_line = lineno;
                continue;
            }
            size_t eq = raw.find('=');
            if (eq == std::string::npos || current.empty())
                throw DivFileError(origin, lineno, 1,
                                   current.empty() ? "content before any [section]"
                                                   : "expected 'key = value'");
            Line l;
            l.number = lineno;
            l.key = trim(raw.substr(0, eq));
            l.value = trim(raw.substr(eq + 1));
            size_t vstart = raw.find_first_not_of(" \t", eq + 1);
            l.value_column = vstart == std::string::npos ? (int)eq + 2 : (int)vstart + 1;
            if (l.key.empty()) throw DivFileError(origin, lineno, 1, "empty key");
            sections[current].push_back(std::move(l));
        }
    }
    (void)section_line;

    auto section = [&](const std::string& name) -> const std::vector<Line>* {
        auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    };
    auto find_key = [](const std::vector<Line>& lines, const std::string& key) -> const Line* {
        for (auto& l : lines)
            if (l.key == key) return &l;
        return nullptr;
    };

    DivisorFile out;
    const auto* div = section("divisor");
    if (!div) throw DivFileError(origin, 1, 1, "missing [divisor] section");

    const Line* vline = find_key(*div, "variables");
    if (!vline) throw DivFileError(origin, 1, 1, "[divisor] missing 'variables'");
    std::vector<std::string> vars = split(vline->value, ',');
    for (auto& v : vars) {
        if (v.empty() || !(std::isalpha((unsigned char)v[0]) || v[0] == '_'))
            throw DivFileError(origin, vline->number, vline->value_column,
                               "bad variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum((unsigned char)c) || c == '_'))
                throw DivFileError(origin, vline->number, vline->value_column,
                                   "bad variable name '" + v + "'");
    }
    size_t n = vars.size();
    out.spec.ring = make_ring(vars);

    const Line* hline = find_key(*div, "h");
    if (!hline) throw DivFileError(origin, 1, 1, "[divisor] missing 'h'");
    try {
        out.spec.h = parse_poly(out.spec.ring, hline->value);
    } catch (const std::invalid_argument& e) {
        throw DivFileError(origin, hline->number,
                           poly_error_column(e.what(), hline->value_column), e.what());
    }
    if (out.spec.h.is_zero())
        throw DivFileError(origin, hline->number, hline->value_column, "h must be nonzero");

    if (const Line* wline = find_key(*div, "weights")) {
        // "w1, w2, ..." or "d; w1, w2, ..." (d = expected weighted degree).
        std::string wtext = wline->value;
        std::optional<Rational> declared_degree;
        if (size_t semi = wtext.find(';'); semi != std::string::npos) {
            try {
                declared_degree = rat_parse(trim(wtext.substr(0, semi)));
            } catch (const std::invalid_argument& e) {
                throw DivFileError(origin, wline->number, wline->value_column, e.what());
            }
            wtext = wtext.substr(semi + 1);
        }
        std::vector<Rational> w;
        for (auto& tok : split(wtext, ',')) {
            try {
                w.push_back(rat_parse(tok));
            } catch (const std::invalid_argument& e) {
                throw DivFileError(origin, wline->number, wline->value_column, e.what());
            }
            if (w.back() <= 0)
                throw DivFileError(origin, wline->number, wline->value_column,
                                   "weights must be positive");
        }
        if (w.size() != n)
            throw DivFileError(origin, wline->number, wline->value_column,
                               "expected " + std::to_string(n) + " weights, got " +
                                   std::to_string(w.size()));
        out.spec.weights = std::move(w);
        auto iw = out.spec.integer_weights();
        if (!out.spec.h.is_homogeneous(iw))
            throw DivFileError(origin, wline->number, wline->value_column,
                               "h is not homogeneous for the given weights");
        if (declared_degree) {
            // Weighted degree of h under the *rational* weights must match.
            Rational wd(0);
            auto& t0 = out.spec.h.terms()[0];
            for (size_t i = 0; i < n; ++i)
                wd += Rational((long)t0.first.e[i]) * (*out.spec.weights)[i];
            if (wd != *declared_degree)
                throw DivFileError(origin, wline->number, wline->value_column,
                                   "declared weighted degree " + rat_str(*declared_degree) +
                                       " but h has weighted degree " + rat_str(wd));
        }
    }

    if (const auto* flags = section("flags")) {
        for (auto& l : *flags) {
            if (l.key == "extended_scope") {
                if (l.value == "true")
                    out.spec.extended_scope = true;
                else if (l.value == "false")
                    out.spec.extended_scope = false;
                else
                    throw DivFileError(origin, l.number, l.value_column,
                                       "expected true or false");
            } else {
                throw DivFileError(origin, l.number, 1, "unknown flag '" + l.key + "'");
            }
        }
    }

    const auto* basis = section("saito_basis");
    if (!basis) throw DivFileError(origin, 1, 1, "missing [saito_basis] section");

    // Vector fields are parsed in a ring extended by the D-tokens Dx_i / D(i+1);
    // every term must be linear in exactly one token.
    std::vector<std::string> ext_vars = vars;
    for (size_t i = 0; i < n; ++i) ext_vars.push_back("D" + vars[i]);
    RingPtr ext = make_ring(ext_vars);
    auto parse_field = [&](const Line& l) {
        std::string v = l.value;
        // Allow positional aliases D1..Dn when they do not collide.
        for (size_t i = 0; i < n; ++i) {
            std::string alias = "D" + std::to_string(i + 1);
            if (ext->index_of(alias) >= 0) continue;
            size_t p = 0;
            while ((p = v.find(alias, p)) != std::string::npos) {
                bool left_ok = p == 0 || !(std::isalnum((unsigned char)v[p - 1]) || v[p - 1] == '_');
                size_t e = p + alias.size();
                bool right_ok =
                    e >= v.size() || !(std::isalnum((unsigned char)v[e]) || v[e] == '_');
                if (left_ok && right_ok) {
                    v = v.substr(0, p) + "D" + vars[i] + v.substr(e);
                    p += vars[i].size() + 1;
                } else {
                    p = e;
                }
            }
        }
        Poly p(ext);
        try {
            p = parse_poly(ext, v);
        } catch (const std::invalid_argument& e) {
            throw DivFileError(origin, l.number, poly_error_column(e.what(), l.value_column),
                               e.what());
        }
        VectorField f;
        f.coeffs.assign(n, Poly(out.spec.ring));
        for (auto& t : p.terms()) {
            int dtok = -1;
            for (size_t i = 0; i < n; ++i) {
                int32_t e = t.first.e[n + i];
                if (e == 0) continue;
                if (e > 1 || dtok != -1)
                    throw DivFileError(origin, l.number, l.value_column,
                                       "term not linear in the D-tokens");
                dtok = (int)i;
            }
            if (dtok == -1)
                throw DivFileError(origin, l.number, l.value_column,
                                   "term without a D-token (not a vector field)");
            Monomial m((int)n);
            for (size_t i = 0; i < n; ++i) m.e[i] = t.first.e[i];
            f.coeffs[dtok] += Poly::from_terms(out.spec.ring, {{m, t.second}});
        }
        return f;
    };

    int chi_seen = -1;
    std::vector<int> delta_ids;
    for (auto& l : *basis) {
        if (l.key == "chi") {
            if (chi_seen != -1) throw DivFileError(origin, l.number, 1, "duplicate chi");
            chi_seen = (int)out.spec.basis.size();
            out.spec.chi_index = out.spec.basis.size();
            out.spec.basis.push_back(parse_field(l));
        } else if (l.key.rfind("delta", 0) == 0) {
            int id = 0;
            for (size_t i = 5; i < l.key.size(); ++i) {
                if (!std::isdigit((unsigned char)l.key[i]))
                    throw DivFileError(origin, l.number, 1, "bad key '" + l.key + "'");
                id = id * 10 + (l.key[i] - '0');
            }
            delta_ids.push_back(id);
            out.spec.basis.push_back(parse_field(l));
        } else {
            throw DivFileError(origin, l.number, 1,
                               "unknown key '" + l.key + "' (expected deltaN or chi)");
        }
    }
    if (chi_seen == -1) throw DivFileError(origin, 1, 1, "[saito_basis] missing 'chi'");
    if (!out.spec.extended_scope && out.spec.basis.size() != n)
        throw DivFileError(origin, 1, 1,
                           "basis arity: " + std::to_string(out.spec.basis.size()) +
                               " fields for " + std::to_string(n) +
                               " variables (set extended_scope for non-free inputs)");
    if (out.spec.extended_scope)
        out.warnings.push_back(
            "extended scope: freeness not checked; cyclic presentation assumed as given");

    if (const auto* bsec = section("bfunction")) {
        const Line* rline = find_key(*bsec, "roots");
        if (!rline) throw DivFileError(origin, 1, 1, "[bfunction] missing 'roots'");
        std::vector<std::pair<Rational, int>> roots;
        for (auto& tok : split(rline->value, ',')) {
            size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw DivFileError(origin, rline->number, rline->value_column,
                                   "expected root:multiplicity, got '" + tok + "'");
            Rational root;
            try {
                root = rat_parse(trim(tok.substr(0, colon)));
            } catch (const std::invalid_argument& e) {
                throw DivFileError(origin, rline->number, rline->value_column, e.what());
            }
            std::string mtxt = trim(tok.substr(colon + 1));
            int mult = 0;
            for (char c : mtxt) {
                if (!std::isdigit((unsigned char)c))
                    throw DivFileError(origin, rline->number, rline->value_column,
                                       "bad multiplicity '" + mtxt + "'");
                mult = mult * 10 + (c - '0');
            }
            if (mult <= 0)
                throw DivFileError(origin, rline->number, rline->value_column,
                                   "multiplicity must be positive");
            roots.emplace_back(root, mult);
        }
        out.bfun = BFunction::from_roots(std::move(roots));
    }

    return out;
}

DivisorFile parse_divisor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DivFileError(path, 0, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_divisor_text(ss.str(), path);
}

}  // namespace skhodge
