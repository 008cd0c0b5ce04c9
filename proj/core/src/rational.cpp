#include "mtg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mtg {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

mpq_class& scratch() {
    thread_local mpq_class tmp;
    return tmp;
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    if (s.empty()) bad_literal(text);

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad_literal(text);

    mpq_class value;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) bad_literal(text);
        const mpz_class d{std::string(den), 10};
        if (d == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) bad_literal(text);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const std::string digits = std::string(whole) + std::string(frac);
        value = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), scale);
    } else {
        if (!all_digits(body)) bad_literal(text);
        value = mpq_class(mpz_class(std::string(body), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_str();
}

std::string Rational::to_decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // Round half away from zero at the last digit.
    mpq_class scaled = abs(value_) * scale;
    mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(value_) < 0 && q != 0) s.insert(0, "-");
    return s;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    auto& tmp = scratch();
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
    auto& tmp = scratch();
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

} // namespace mtg
