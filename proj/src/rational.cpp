#include "nicety/rational.hpp"

#include <cctype>
#include <ostream>

namespace nicety {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!is_integer_literal(num_part, true))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    mpz_class num(std::string(num_part), 10);
    if (slash == std::string_view::npos) return Rational(num);

    std::string_view den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part, false))
        throw DomainError("malformed rational literal '" + std::string(text) +
                          "' (denominator must be a positive integer)");
    mpz_class den(std::string(den_part), 10);
    if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace nicety
