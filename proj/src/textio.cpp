#include "oneplace/textio.hpp"

#include <cctype>
#include <vector>

namespace oneplace {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(errc::input_parse, what + " at position " + std::to_string(i));
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected an integer");
        return BigInt::from_string(s.substr(start, i - start));
    }

    long long exponent() {
        bool paren = eat('(');
        bool neg = eat('-');
        if (!neg && paren) neg = eat('-'); // tolerate "( -3 )"
        long long v = integer().to_int64();
        if (paren && !eat(')')) fail("expected ')'");
        return neg ? -v : v;
    }
};

} // namespace

BiLaurent parse_bilaurent(std::string_view text, VarNames vars) {
    Cursor c{text};
    BiLaurent out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('+')) {
            sign = 1;
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        first = false;
        if (c.done()) c.fail("dangling sign");

        Rational coeff(sign);
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            BigInt num = c.integer();
            BigInt den(1);
            if (c.eat('/')) den = c.integer();
            coeff = coeff * Rational(num, den);
            saw_anything = true;
        }
        long long xe = 0, ye = 0;
        for (;;) {
            c.eat('*');
            char v = c.peek();
            if (v == vars.x || v == vars.y) {
                ++c.i;
                long long e = 1;
                if (c.eat('^')) e = c.exponent();
                if (v == vars.x)
                    xe += e;
                else
                    ye += e;
                saw_anything = true;
            } else {
                break;
            }
        }
        if (!saw_anything) c.fail("expected a term");
        if (ye < 0) c.fail("negative exponent on the y-variable");
        out.add_term(Mono{xe, ye}, coeff);
    }
    return out;
}

std::string to_string(const BiLaurent& f, VarNames vars) {
    if (f.is_zero()) return "0";
    std::string out;
    // canonical display: descending graded-lex order
    std::vector<std::pair<Mono, Rational>> terms(f.terms().begin(), f.terms().end());
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, coeff] = *it;
        Rational a = coeff.sign() < 0 ? -coeff : coeff;
        if (out.empty())
            out += coeff.sign() < 0 ? "-" : "";
        else
            out += coeff.sign() < 0 ? " - " : " + ";
        bool unit = a == Rational(1);
        bool has_var = m.xe != 0 || m.ye != 0;
        if (!unit || !has_var) out += a.to_string();
        auto emit = [&out](char v, long long e) {
            if (e == 0) return;
            out += v;
            if (e != 1) out += "^" + std::to_string(e);
        };
        emit(vars.y, m.ye);
        emit(vars.x, m.xe);
    }
    return out;
}

} // namespace oneplace
