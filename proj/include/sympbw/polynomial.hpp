#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sympbw/pluecker.hpp"

namespace sympbw {

enum class Ring { classical, degenerate };

inline const char* to_string(Ring r) { return r == Ring::classical ? "classical" : "degenerate"; }

/// Product of Pluecker variables (sorted, repeats allowed) times s^s_degree.
struct Monomial {
    std::vector<PlueckerIndex> vars;
    int s_degree = 0;

    auto operator<=>(const Monomial&) const = default;

    int pbw_degree() const {
        int d = 0;
        for (const auto& x : vars) d += pbw_degree_index(x);
        return d;
    }
};

inline Monomial make_monomial(std::vector<PlueckerIndex> vars, int s_degree = 0) {
    std::sort(vars.begin(), vars.end());
    return Monomial{std::move(vars), s_degree};
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<PlueckerIndex> v = a.vars;
    v.insert(v.end(), b.vars.begin(), b.vars.end());
    return make_monomial(std::move(v), a.s_degree + b.s_degree);
}

/// Sparse polynomial with exact integer coefficients in Pluecker variables of one
/// ring, optionally with the deformation parameter s. Zero coefficients are never stored.
class Polynomial {
public:
    Ring ring = Ring::classical;
    bool has_s = false;

    Polynomial() = default;
    explicit Polynomial(Ring r, bool s = false) : ring(r), has_s(s) {}

    static Polynomial constant(const Int& c, Ring r = Ring::classical) {
        Polynomial p(r);
        p.add_term(Monomial{}, c);
        return p;
    }

    static Polynomial variable(const PlueckerIndex& x, Ring r = Ring::classical) {
        Polynomial p(r);
        p.add_term(Monomial{{x}, 0}, 1);
        return p;
    }

    /// X of an arbitrary row sequence: sign-normalized, zero for repeated rows.
    static Polynomial from_sequence(const std::vector<int>& seq, Ring r = Ring::classical) {
        Polynomial p(r);
        const NormalizedIndex ni = normalize_index(seq);
        if (!ni.zero) p.add_term(Monomial{{ni.index}, 0}, ni.sign);
        return p;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        has_s = has_s || o.has_s;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        has_s = has_s || o.has_s;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial p(a.ring, a.has_s || b.has_s);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }

    friend Polynomial operator*(const Int& s, const Polynomial& a) {
        Polynomial p(a.ring, a.has_s);
        for (const auto& [m, c] : a.terms_) p.add_term(m, s * c);
        return p;
    }

    bool operator==(const Polynomial& o) const {
        return ring == o.ring && has_s == o.has_s && terms_ == o.terms_;
    }
    bool operator<(const Polynomial& o) const {
        return std::tie(ring, has_s, terms_) < std::tie(o.ring, o.has_s, o.terms_);
    }

    /// Copy with the ring tag replaced (variables keep their labels).
    Polynomial retagged(Ring r) const {
        Polynomial p = *this;
        p.ring = r;
        return p;
    }

    /// Global sign fixed so that the largest monomial has a positive coefficient.
    Polynomial sign_normalized() const {
        if (is_zero() || terms_.rbegin()->second > 0) return *this;
        return Int(-1) * *this;
    }

    int min_pbw_degree() const {
        if (is_zero()) throw DomainError("empty polynomial has no degree");
        int d = terms_.begin()->first.pbw_degree();
        for (const auto& [m, c] : terms_) d = std::min(d, m.pbw_degree());
        return d;
    }

    bool is_pbw_homogeneous() const {
        if (is_zero()) return true;
        const int d = terms_.begin()->first.pbw_degree();
        for (const auto& [m, c] : terms_)
            if (m.pbw_degree() != d) return false;
        return true;
    }

    /// Exact value; `value` must supply every variable that occurs. s must be
    /// absent or supplied through `s_value`.
    Rat evaluate(const std::function<Rat(const PlueckerIndex&)>& value, const Rat* s_value = nullptr) const {
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat v = c;
            for (const auto& x : m.vars) v *= value(x);
            if (m.s_degree) {
                if (!s_value) throw DomainError("polynomial depends on s but no value was given");
                for (int e = 0; e < m.s_degree; ++e) v *= *s_value;
            }
            total += v;
        }
        return total;
    }

    Rat evaluate(const std::map<PlueckerIndex, Rat>& point) const {
        return evaluate([&](const PlueckerIndex& x) {
            auto it = point.find(x);
            if (it == point.end()) {
                std::string label;
                for (int v : x.J) label += (label.empty() ? "" : ",") + std::to_string(v);
                throw DomainError("no value for variable [" + label + "]");
            }
            return it->second;
        });
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (ring != o.ring && !is_zero() && !o.is_zero())
            throw DomainError("cannot combine classical and degenerate polynomials");
    }

    std::map<Monomial, Int> terms_;
};

// ---- text form -----------------------------------------------------------

inline std::string format_index(int n, const PlueckerIndex& x, Ring r, bool ascii) {
    return std::string(r == Ring::degenerate ? "X^a_{" : "X_{") + letters(n, x.J, ascii) + "}";
}

/// Terms from the largest monomial down, e.g. "X_{1,2}X_{2'} + X_{2,2'}X_{1}".
inline std::string to_string(int n, const Polynomial& p, bool ascii = true) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const Int a = abs(c);
        std::string body;
        if (m.s_degree) body += m.s_degree == 1 ? "s" : "s^" + std::to_string(m.s_degree);
        // Longer columns first, as in a tableau.
        const std::vector<PlueckerIndex> vars(m.vars.rbegin(), m.vars.rend());
        for (size_t v = 0; v < vars.size();) {
            size_t w = v;
            while (w < vars.size() && vars[w] == vars[v]) ++w;
            body += format_index(n, vars[v], p.ring, ascii);
            if (w - v > 1) body += "^" + std::to_string(w - v);
            v = w;
        }
        if (a != 1 || body.empty()) out += a.get_str() + (body.empty() ? "" : "*");
        out += body;
    }
    return out;
}

/// Inverse of to_string (ascii form). Accepts optional '*' separators and blanks.
inline Polynomial parse_polynomial(int n, const std::string& text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw DomainError("cannot parse polynomial at offset " + std::to_string(pos) + ": " + why);
    };
    auto number = [&] {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(text.substr(start, pos - start));
    };
    auto exponent = [&] {
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            return number();
        }
        return 1;
    };

    bool ring_known = false;
    Ring ring = Ring::classical;
    bool has_s = false;
    Polynomial out;
    std::vector<std::pair<Monomial, Int>> parsed;
    skip();
    if (text.compare(pos, std::string::npos, "0") == 0) return out;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!parsed.empty()) {
            fail("expected '+' or '-'");
        }
        Int coeff = sign;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) coeff *= number();
        Polynomial term = Polynomial::constant(coeff);
        int s_degree = 0;
        skip();
        while (pos < text.size() && (text[pos] == 'X' || text[pos] == 's')) {
            if (text[pos] == 's') {
                ++pos;
                s_degree += exponent();
                has_s = true;
                skip();
                continue;
            }
            ++pos;
            Ring r = Ring::classical;
            if (text.compare(pos, 2, "^a") == 0) {
                r = Ring::degenerate;
                pos += 2;
            }
            if (ring_known && r != ring) fail("mixed rings");
            ring = r;
            ring_known = true;
            if (text.compare(pos, 2, "_{") != 0) fail("expected '_{'");
            pos += 2;
            std::vector<int> seq;
            while (true) {
                int v = number();
                if (pos < text.size() && text[pos] == '\'') {
                    v = bar(n, v);
                    ++pos;
                }
                seq.push_back(v);
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == '}') {
                    ++pos;
                    break;
                }
                fail("expected ',' or '}'");
            }
            const int power = exponent();
            for (int e = 0; e < power; ++e) term = term * Polynomial::from_sequence(seq);
            skip();
        }
        for (const auto& [m, c] : term.terms()) parsed.push_back({Monomial{m.vars, s_degree}, c});
        skip();
    }
    out = Polynomial(ring, has_s);
    for (const auto& [m, c] : parsed) out.add_term(m, c);
    return out;
}

}  // namespace sympbw
