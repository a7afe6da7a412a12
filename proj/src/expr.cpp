#include "wpc/expr.hpp"

#include <cctype>
#include <sstream>

namespace wpc {

namespace {

constexpr long long kCoeffCap = 1000000000000LL;   // 10^12

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            i++;
    }
    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    long long read_int() {
        std::size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > kCoeffCap)
                throw syntax_error("coefficient exceeds 10^12", start);
            i++;
        }
        if (i == start)
            throw syntax_error("expected an integer", start);
        return v;
    }
};

} // namespace

LElement parse_element(const WeightType& p, const std::string& text) {
    Cursor c{text};
    std::vector<long long> coeffs(p.weights.size(), 0);
    long long cc = 0;

    c.ws();
    if (c.eof())
        throw syntax_error("empty expression", 0);

    bool first = true;
    while (true) {
        c.ws();
        if (c.eof()) {
            if (first)
                throw syntax_error("empty expression", c.i);
            break;
        }
        long long sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            c.i++;
        } else if (!first) {
            throw syntax_error("expected '+' or '-' between terms", c.i);
        }
        c.ws();
        if (c.eof())
            throw syntax_error("expected a term", c.i);

        bool have_coef = false;
        long long coef = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = c.read_int();
            have_coef = true;
            c.ws();
            if (!c.eof() && c.peek() == '*') {
                c.i++;
                c.ws();
                if (c.eof() || (c.peek() != 'x' && c.peek() != 'c'))
                    throw syntax_error("expected x<i> or c after '*'", c.i);
            }
        }

        if (!c.eof() && c.peek() == 'x') {
            std::size_t at = c.i;
            c.i++;
            if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
                throw syntax_error("expected an index after 'x'", c.i);
            long long idx = c.read_int();
            if (idx < 1 || idx > p.count())
                throw index_out_of_range("x" + std::to_string(idx) +
                                         " is out of range for L" + p.str() +
                                         " (at position " + std::to_string(at) + ")");
            coeffs[static_cast<std::size_t>(idx - 1)] += sign * coef;
        } else if (!c.eof() && c.peek() == 'c') {
            c.i++;
            cc += sign * coef;
        } else if (have_coef) {
            // A bare integer is only the zero element.
            if (coef != 0)
                throw syntax_error("bare integer term must be 0", c.i);
        } else {
            throw syntax_error("expected x<i>, c, or an integer", c.i);
        }
        first = false;
    }
    return normal_form(p, coeffs, cc);
}

std::string format_element(const WeightType& p, const LElement& x) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < x.coeffs.size(); i++) {
        if (x.coeffs[i] == 0)
            continue;
        if (any)
            os << "+";
        if (x.coeffs[i] != 1)
            os << x.coeffs[i] << "*";
        os << "x" << (i + 1);
        any = true;
    }
    if (x.c_coeff != 0) {
        long long a = x.c_coeff;
        if (a < 0) {
            os << "-";
            a = -a;
        } else if (any) {
            os << "+";
        }
        if (a != 1)
            os << a << "*";
        os << "c";
        any = true;
    }
    if (!any)
        return "0";
    return os.str();
}

WeightType parse_weights(const std::string& text) {
    WeightType p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            i++;
    };
    skip_ws();
    if (i == text.size())
        return p;   // empty weight sequence
    while (true) {
        skip_ws();
        std::size_t start = i;
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000000LL)
                throw syntax_error("weight too large", start);
            i++;
        }
        if (i == start)
            throw syntax_error("expected a weight", i);
        p.weights.push_back(static_cast<int>(v));
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != ',')
            throw syntax_error("expected ',' between weights", i);
        i++;
    }
    validate_weights(p);
    return p;
}

} // namespace wpc
