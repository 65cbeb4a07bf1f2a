#include "flagchern/sympoly.hpp"

#include <algorithm>

#include "flagchern/errors.hpp"

namespace flagchern {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(Generator g, unsigned exponent) {
    if (g.index < 1) throw ZeroGeneratorIndex(0, "generator index must be >= 1");
    if (exponent > 0) factors_.emplace_back(g, exponent);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [g, e] : factors_) d += g.index * e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymPolyExpr
// ---------------------------------------------------------------------------

void SymPolyExpr::add_term(const Monomial& m, const Rational& coeff) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

SymPolyExpr SymPolyExpr::constant(Rational value) {
    SymPolyExpr out;
    out.add_term(Monomial{}, value);
    return out;
}

SymPolyExpr SymPolyExpr::generator(GenKind kind, unsigned index) {
    SymPolyExpr out;
    out.add_term(Monomial(Generator{kind, index}), Rational(1));
    return out;
}

SymPolyExpr SymPolyExpr::c_lambda(const Partition& lambda) {
    SymPolyExpr out = constant(Rational(1));
    for (unsigned part : lambda.parts()) out = out * generator(GenKind::Elementary, part);
    return out;
}

unsigned SymPolyExpr::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<unsigned> SymPolyExpr::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return std::nullopt;
    }
    return d;
}

SymPolyExpr SymPolyExpr::operator+(const SymPolyExpr& other) const {
    SymPolyExpr out = *this;
    out += other;
    return out;
}

SymPolyExpr SymPolyExpr::operator-(const SymPolyExpr& other) const {
    SymPolyExpr out = *this;
    out -= other;
    return out;
}

SymPolyExpr& SymPolyExpr::operator+=(const SymPolyExpr& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SymPolyExpr& SymPolyExpr::operator-=(const SymPolyExpr& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SymPolyExpr SymPolyExpr::operator*(const SymPolyExpr& other) const {
    SymPolyExpr out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

SymPolyExpr SymPolyExpr::pow(unsigned exponent) const {
    SymPolyExpr out = constant(Rational(1));
    SymPolyExpr base = *this;
    for (unsigned e = exponent; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

Rational SymPolyExpr::evaluate(std::span<const Rational> values) const {
    unsigned max_e = 0;
    for (const auto& [m, c] : terms_) {
        for (const auto& [g, e] : m.factors()) {
            if (g.kind == GenKind::Elementary) max_e = std::max(max_e, g.index);
        }
    }
    const std::vector<Rational> etab = elementary_symmetric_table(max_e, values);
    std::map<unsigned, Rational> ptab;

    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [g, e] : m.factors()) {
            Rational base;
            if (g.kind == GenKind::Elementary) {
                base = etab[g.index];
            } else {
                auto it = ptab.find(g.index);
                if (it == ptab.end()) it = ptab.emplace(g.index, power_sum(g.index, values)).first;
                base = it->second;
            }
            term *= rational_pow(base, e);
        }
        total += term;
    }
    return total;
}

std::string SymPolyExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = abs(c);
        std::string mono;
        for (const auto& [g, e] : m.factors()) {
            if (!mono.empty()) mono += '*';
            mono += (g.kind == GenKind::Elementary) ? 'e' : 'p';
            mono += std::to_string(g.index);
            if (e > 1) {
                mono += '^';
                mono += std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += flagchern::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += flagchern::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation on explicit value lists
// ---------------------------------------------------------------------------

std::vector<Rational> elementary_symmetric_table(unsigned max, std::span<const Rational> values) {
    std::vector<Rational> e(max + 1, Rational(0));
    e[0] = 1;
    // One pass of the product recurrence: after processing v, e[k] holds
    // e_k of the values seen so far.
    unsigned seen = 0;
    for (const Rational& v : values) {
        ++seen;
        for (unsigned k = std::min(max, seen); k >= 1; --k) {
            e[k] += v * e[k - 1];
        }
    }
    return e;
}

Rational elementary_symmetric(unsigned k, std::span<const Rational> values) {
    if (k > values.size()) return Rational(0);
    return elementary_symmetric_table(k, values)[k];
}

Rational power_sum(unsigned k, std::span<const Rational> values) {
    Rational total(0);
    for (const Rational& v : values) total += rational_pow(v, k);
    return total;
}

Rational c_lambda(const Partition& lambda, std::span<const Rational> values) {
    unsigned max = lambda.length() ? lambda.parts().front() : 0;
    const std::vector<Rational> etab = elementary_symmetric_table(max, values);
    Rational total(1);
    for (unsigned part : lambda.parts()) {
        total *= (part <= values.size()) ? etab[part] : Rational(0);
    }
    return total;
}

}  // namespace flagchern
