#include "wfomc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace wfomc {

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    return monomial(std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(Monomial exponents, const Rational& coefficient) {
    Polynomial p;
    p.add_term(std::move(exponents), coefficient);
    return p;
}

void Polynomial::add_term(Monomial exponents, const Rational& coefficient) {
    if (coefficient == 0) return;
    trim(exponents);
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Monomial& exponents) const {
    Monomial key = exponents;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree(std::size_t index) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        if (index < m.size()) d = std::max(d, m[index]);
    }
    return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
            if (m[i] == 0) continue;
            term *= i < point.size() ? pow(point[i], m[i]) : Rational(0);
        }
        total += term;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(multiply(ma, mb), ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << wfomc::to_string(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out << "*X" << i;
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
    if (base.term_count() == 1) {
        // single term: raise coefficient and scale exponents directly
        const auto& [m, c] = *base.terms().begin();
        Monomial scaled = m;
        for (auto& e : scaled) e = static_cast<std::uint32_t>(e * exponent);
        return Polynomial::monomial(std::move(scaled), pow(c, exponent));
    }
    Polynomial result(1);
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent > 0) square = square * square;
    }
    return result;
}

}  // namespace wfomc
