#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wfomc/numeric.hpp"

namespace wfomc {

/// Exponent vector of a monomial; trailing zeros are always trimmed so that
/// equal monomials compare equal regardless of how many indeterminates exist.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients. Indeterminates
/// are identified by position in the exponent vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

    static Polynomial variable(std::size_t index);
    static Polynomial monomial(Monomial exponents, const Rational& coefficient);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] Rational coefficient(const Monomial& exponents) const;

    /// Total degree in indeterminate `index`.
    [[nodiscard]] std::uint32_t degree(std::size_t index) const;

    /// Evaluates the polynomial at the given point; missing coordinates count as 0.
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    [[nodiscard]] std::string to_string() const;

private:
    void add_term(Monomial exponents, const Rational& coefficient);

    std::map<Monomial, Rational> terms_;
};

Polynomial pow(const Polynomial& base, std::uint64_t exponent);

}  // namespace wfomc
