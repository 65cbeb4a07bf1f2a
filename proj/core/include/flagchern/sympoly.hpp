#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagchern/partition.hpp"
#include "flagchern/rational.hpp"

namespace flagchern {

// ---------------------------------------------------------------------------
// Generators and monomials
// ---------------------------------------------------------------------------

enum class GenKind : std::uint8_t {
    Elementary,  // e_k: coefficient of t^k in prod (1 + t*v_i)
    PowerSum,    // p_k: sum of v_i^k
};

/// One generator e_k or p_k, k >= 1. deg(e_k) = deg(p_k) = k.
struct Generator {
    GenKind kind;
    unsigned index;

    auto operator<=>(const Generator&) const = default;
};

/// A product of generator powers, e.g. e1^2 * p3. Factors are kept sorted
/// by generator with positive exponents, so equal monomials compare equal.
class Monomial {
public:
    Monomial() = default;  // the empty product (constant 1)
    explicit Monomial(Generator g, unsigned exponent = 1);

    const std::vector<std::pair<Generator, unsigned>>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }

    /// Sum of index * exponent over all factors.
    unsigned degree() const;

    Monomial operator*(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<std::pair<Generator, unsigned>> factors_;
};

// ---------------------------------------------------------------------------
// Symmetric polynomial expressions
// ---------------------------------------------------------------------------

/// A symmetric polynomial written over the e/p generators, held in canonical
/// expanded form: a map from monomials to nonzero rational coefficients.
class SymPolyExpr {
public:
    SymPolyExpr() = default;  // the zero polynomial

    static SymPolyExpr constant(Rational value);
    static SymPolyExpr generator(GenKind kind, unsigned index);

    /// c_lambda = e_{lambda_1} * ... * e_{lambda_l} as an expression.
    static SymPolyExpr c_lambda(const Partition& lambda);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest monomial degree; 0 for the zero polynomial.
    unsigned degree() const;

    /// The common degree when every monomial agrees (0 for constants and for
    /// the zero polynomial), std::nullopt otherwise.
    std::optional<unsigned> homogeneous_degree() const;

    SymPolyExpr operator+(const SymPolyExpr& other) const;
    SymPolyExpr operator-(const SymPolyExpr& other) const;
    SymPolyExpr operator*(const SymPolyExpr& other) const;
    SymPolyExpr& operator+=(const SymPolyExpr& other);
    SymPolyExpr& operator-=(const SymPolyExpr& other);

    SymPolyExpr pow(unsigned exponent) const;

    /// Exact value with generators bound to the given values:
    /// e_k via the product recurrence (0 for k > |values|), p_k = sum v_i^k.
    Rational evaluate(std::span<const Rational> values) const;

    /// Round-trippable rendering; parse_expr(to_string()) recovers the
    /// identical canonical form.
    std::string to_string() const;

    bool operator==(const SymPolyExpr&) const = default;

private:
    void add_term(const Monomial& m, const Rational& coeff);

    std::map<Monomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Generator evaluation on explicit value lists
// ---------------------------------------------------------------------------

/// e_k of the values: e_0 = 1, e_k = 0 for k > |values|, otherwise the exact
/// coefficient of t^k in prod (1 + t*v_i) via the one-pass product recurrence.
Rational elementary_symmetric(unsigned k, std::span<const Rational> values);

/// All of e_0..e_max in one recurrence pass.
std::vector<Rational> elementary_symmetric_table(unsigned max, std::span<const Rational> values);

/// p_k = sum v_i^k, k >= 1.
Rational power_sum(unsigned k, std::span<const Rational> values);

/// c_lambda evaluated on the values: the product of e_{lambda_i}.
Rational c_lambda(const Partition& lambda, std::span<const Rational> values);

}  // namespace flagchern
