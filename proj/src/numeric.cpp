#include "wfomc/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace wfomc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer pow(const Integer& base, std::uint64_t exponent) {
    Integer out;
    if (exponent > std::numeric_limits<unsigned long>::max()) {
        throw std::overflow_error("exponent too large");
    }
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
    Rational out(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
    // num/den stay coprime under powers; sign lives in the numerator.
    return out;
}

Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer multinomial(std::span<const std::uint32_t> parts) {
    // product of binomials C(k_1 + ... + k_i, k_i)
    Integer out = 1;
    std::uint64_t running = 0;
    for (std::uint32_t k : parts) {
        running += k;
        out *= binomial(running, k);
    }
    return out;
}

}  // namespace wfomc
