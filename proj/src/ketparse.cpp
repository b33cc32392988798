#include "qent/ketparse.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace qent::ketparse {

namespace {

// Recursive-descent parser over the grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := coef ['*'] primary | primary | coef
//   primary := ket | '(' expr ')'
//   ket     := '|' ('0'|'1')+ '>'
//   coef    := factor (('*'|'/') factor)*
//   factor  := uint | 'sqrt(' uint ')' | 'i' | 'w' uint '^' uint | '(' coefsum ')'
//   coefsum := ['+'|'-'] coef (('+'|'-') coef)*
class Parser {
  public:
    explicit Parser(const std::string& text) : src_(text) {}

    KetExpr parse() {
        KetExpr e;
        std::map<std::string, Complex> acc;
        parse_expr(acc, Complex{1.0, 0.0});
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        for (auto& [bits, c] : acc) {
            if (e.n == 0)
                e.n = static_cast<int>(bits.size());
            else if (static_cast<int>(bits.size()) != e.n)
                throw LengthMismatch("kets of different lengths in one expression");
            e.terms.push_back({c, bits});
        }
        if (e.terms.empty()) fail("expression contains no ket");
        return e;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void parse_expr(std::map<std::string, Complex>& acc, Complex outer) {
        double sign = 1.0;
        if (eat('+')) {
        } else if (eat('-')) {
            sign = -1.0;
        }
        parse_term(acc, outer * sign);
        while (true) {
            if (eat('+'))
                parse_term(acc, outer);
            else if (eat('-'))
                parse_term(acc, -outer);
            else
                break;
        }
    }

    void parse_term(std::map<std::string, Complex>& acc, Complex outer) {
        const char c = peek();
        if (c == '|') {
            acc[parse_ket_literal()] += outer;
            return;
        }
        if (c == '(') {
            // Either a parenthesized ket expression or a parenthesized
            // coefficient followed by more factors / a ket.
            if (paren_contains_ket()) {
                expect('(');
                parse_expr(acc, outer);
                expect(')');
                return;
            }
        }
        const Complex coef = parse_coef();
        eat('*');
        const char after = peek();
        if (after == '|') {
            acc[parse_ket_literal()] += outer * coef;
        } else if (after == '(') {
            expect('(');
            parse_expr(acc, outer * coef);
            expect(')');
        } else {
            fail("expected a ket after coefficient");
        }
    }

    // Lookahead: does the parenthesized group starting at the current
    // position contain a '|' before its matching ')'?
    bool paren_contains_ket() {
        skip_ws();
        std::size_t p = pos_;
        int depth = 0;
        for (; p < src_.size(); ++p) {
            if (src_[p] == '(') ++depth;
            if (src_[p] == ')') {
                --depth;
                if (depth == 0) return false;
            }
            if (src_[p] == '|' && depth >= 1) return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string parse_ket_literal() {
        expect('|');
        std::string bits;
        while (pos_ < src_.size() && (src_[pos_] == '0' || src_[pos_] == '1')) bits.push_back(src_[pos_++]);
        if (bits.empty()) fail("empty ket");
        expect('>');
        return bits;
    }

    Complex parse_coef() {
        Complex v = parse_factor();
        while (true) {
            if (eat('*')) {
                // '*' may precede a ket or a parenthesized ket expression;
                // back off and let the term parser consume it
                if (peek() == '|' || peek() == '\0' || (peek() == '(' && paren_contains_ket())) {
                    --pos_;
                    break;
                }
                v *= parse_factor();
            } else if (eat('/')) {
                const Complex d = parse_factor();
                if (std::abs(d) == 0.0) fail("division by zero");
                v /= d;
            } else {
                break;
            }
        }
        return v;
    }

    Complex parse_factor() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Complex v = parse_coefsum();
            expect(')');
            return v;
        }
        if (c == 'i') {
            ++pos_;
            return Complex{0.0, 1.0};
        }
        if (c == 'w') {
            ++pos_;
            const long n = parse_uint();
            expect('^');
            const long k = parse_uint();
            if (n <= 0) fail("root order must be positive");
            return std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Complex{parse_number(), 0.0};
        if (src_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            const long v = parse_uint();
            expect(')');
            return Complex{std::sqrt(static_cast<double>(v)), 0.0};
        }
        fail("expected a coefficient factor");
    }

    Complex parse_coefsum() {
        double sign = eat('-') ? -1.0 : (eat('+'), 1.0);
        Complex v = sign * parse_coef();
        while (true) {
            if (eat('+'))
                v += parse_coef();
            else if (eat('-'))
                v -= parse_coef();
            else
                break;
        }
        return v;
    }

    long parse_uint() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected an integer");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    // Integer or decimal literal ("3", "0.25"). Decimals are accepted as a
    // superset of the grammar so that formatted states re-parse.
    double parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        return std::stod(src_.substr(start, pos_ - start));
    }
};

}  // namespace

KetExpr parse_ket(const std::string& text) { return Parser(text).parse(); }

ket::StateVec eval_ket(const KetExpr& e, bool normalize) {
    if (e.n < 1 || e.n > ket::kMaxQubits)
        throw LengthMismatch("ket length " + std::to_string(e.n) + " outside [1," + std::to_string(ket::kMaxQubits) + "]");
    std::vector<Complex> amps(std::size_t{1} << e.n, Complex{0.0, 0.0});
    for (const KetTerm& t : e.terms) {
        std::uint64_t idx = 0;
        for (char b : t.bits) idx = (idx << 1) | static_cast<std::uint64_t>(b - '0');
        amps[idx] += t.coeff;
    }
    ket::StateVec s{e.n, std::move(amps)};
    const double nrm = ket::norm(s);
    if (nrm < 1e-14) throw ZeroState("expression evaluates to the zero vector");
    if (normalize)
        for (Complex& a : s.amps) a /= nrm;
    return s;
}

ket::StateVec parse_state(const std::string& text, bool normalize) { return eval_ket(parse_ket(text), normalize); }

std::string format_state(const ket::StateVec& s) {
    std::ostringstream os;
    os << std::fixed;
    os.precision(17);
    auto emit = [&os](double v) {
        if (v >= 0.0)
            os << "+" << v;
        else
            os << "-" << -v;
    };
    bool first = true;
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        const Complex a = s.amps[idx];
        if (std::abs(a) < 1e-15) continue;
        if (!first) os << " + ";
        first = false;
        const double re = a.real() == 0.0 ? 0.0 : a.real();
        const double im = a.imag() == 0.0 ? 0.0 : a.imag();
        os << "(";
        emit(re);
        emit(im);
        os << "*i)*|";
        for (int q = 1; q <= s.n; ++q) os << (((idx >> (s.n - q)) & 1) ? '1' : '0');
        os << ">";
    }
    if (first) os << "0*|" << std::string(static_cast<std::size_t>(s.n), '0') << ">";
    return os.str();
}

}  // namespace qent::ketparse
