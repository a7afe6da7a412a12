#include "wpc/rational.hpp"

#include <cctype>
#include <ostream>

namespace wpc {

Rational Rational::parse(const std::string& text) {
    // Grammar: [+-] digits [ "/" [+-] digits ]. No whitespace inside numbers;
    // surrounding whitespace tolerated.
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) a++;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) b--;
    std::string body = text.substr(a, b - a);
    if (body.empty())
        throw syntax_error("empty rational literal", 0);

    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); i++)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    std::size_t slash = body.find('/');
    if (slash == std::string::npos) {
        if (!is_int(body))
            throw syntax_error("malformed integer literal '" + body + "'", a);
        return Rational(mpz_class(body));
    }
    std::string ns = body.substr(0, slash);
    std::string ds = body.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds))
        throw syntax_error("malformed rational literal '" + body + "'", a);
    mpz_class den(ds);
    if (den == 0)
        throw division_by_zero("rational literal with zero denominator");
    return Rational(mpz_class(ns), den);
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace wpc
