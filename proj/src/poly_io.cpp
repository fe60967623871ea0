#include <cctype>
#include <sstream>
#include <stdexcept>

#include "scrollun/polynomial.hpp"

namespace scrollun {

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        mpq_class a = abs(c);
        bool printed_coeff = false;
        if (a != 1 || t.mono.is_one()) {
            os << a.get_str();
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << ring_->name(i);
            if (t.mono[i] > 1) os << "^" << t.mono[i];
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return pos < s.size() ? s[pos++] : '\0';
    }
    bool ident_char(char c) const { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }

    mpz_class read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer at position " +
                                                      std::to_string(start) + " in '" + s + "'");
        return mpz_class(s.substr(start, pos - start));
    }
};

class Parser {
public:
    Parser(const RingPtr& ring, const std::string& text) : ring_(ring), lx_{text} {}

    Polynomial run() {
        Polynomial p = expr();
        if (lx_.peek() != '\0')
            throw std::invalid_argument("trailing input in polynomial: '" + lx_.s + "'");
        return p;
    }

private:
    RingPtr ring_;
    Lexer lx_;

    Polynomial expr() {
        bool neg = false;
        if (lx_.peek() == '+' || lx_.peek() == '-') neg = lx_.get() == '-';
        Polynomial p = product();
        if (neg) p = -p;
        while (lx_.peek() == '+' || lx_.peek() == '-') {
            char op = lx_.get();
            Polynomial q = product();
            p = op == '+' ? p + q : p - q;
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = power();
        while (lx_.peek() == '*') {
            lx_.get();
            p = p * power();
        }
        return p;
    }

    Polynomial power() {
        Polynomial p = primary();
        if (lx_.peek() == '^') {
            lx_.get();
            mpz_class e = lx_.read_integer();
            if (e < 0 || e > 64) throw std::invalid_argument("unsupported exponent");
            p = p.pow(static_cast<unsigned>(e.get_ui()));
        }
        return p;
    }

    Polynomial primary() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.get();
            Polynomial p = expr();
            if (lx_.get() != ')') throw std::invalid_argument("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = lx_.read_integer();
            if (lx_.peek() == '/') {
                lx_.get();
                mpz_class den = lx_.read_integer();
                if (den == 0) throw std::invalid_argument("zero denominator");
                return Polynomial::constant(ring_, mpq_class(num, den));
            }
            return Polynomial::constant(ring_, mpq_class(num));
        }
        std::string name = lx_.read_ident();
        if (name.empty())
            throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                        "' in polynomial '" + lx_.s + "'");
        return Polynomial::variable(ring_, name);
    }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

}  // namespace scrollun
