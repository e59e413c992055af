#include "tilingforge/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "tilingforge/error.hpp"

namespace tilingforge {

LaurentPoly2::LaurentPoly2(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(LatticePoint{0, 0}, constant);
}

LaurentPoly2 LaurentPoly2::monomial(const mpz_class& coeff, std::int64_t a, std::int64_t b) {
    LaurentPoly2 p;
    p.add_term({a, b}, coeff);
    return p;
}

mpz_class LaurentPoly2::coefficient(const LatticePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly2::add_term(const LatticePoint& p, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
    LaurentPoly2 out;
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_) out.add_term(p + q, c * d);
    *this = std::move(out);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

LaurentPoly2 LaurentPoly2::shifted(const LatticePoint& shift) const {
    LaurentPoly2 out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p + shift, c);
    return out;
}

LaurentPoly2 LaurentPoly2::swapped() const {
    LaurentPoly2 out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(LatticePoint{p.b, p.a}, c);
    return out;
}

std::complex<double> LaurentPoly2::evaluate(std::complex<double> z, std::complex<double> w) const {
    std::complex<double> sum = 0;
    for (const auto& [p, c] : terms_)
        sum += c.get_d() * std::pow(z, static_cast<double>(p.a)) * std::pow(w, static_cast<double>(p.b));
    return sum;
}

std::string LaurentPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*z^" << p.a << "*w^" << p.b;
    }
    return os.str();
}

namespace {

void append_power(std::ostringstream& os, char var, std::int64_t e) {
    if (e == 0) return;
    os << var;
    if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly2::pretty() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<LatticePoint, mpz_class>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        const auto dx = x.first.a + x.first.b, dy = y.first.a + y.first.b;
        if (dx != dy) return dx < dy;
        return x.first.a > y.first.a;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : sorted) {
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool constant = p.a == 0 && p.b == 0;
        if (mag != 1 || constant) os << mag.get_str();
        append_power(os, 'z', p.a);
        append_power(os, 'w', p.b);
    }
    return os.str();
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(const std::string& text) : s_(text) {}

    LaurentPoly2 parse() {
        LaurentPoly2 out;
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (!first) {
                if (s_[pos_] == '+') {
                    ++pos_;
                } else if (s_[pos_] == '-') {
                    sign = -1;
                    ++pos_;
                } else {
                    fail("expected '+' or '-'");
                }
                skip();
            }
            while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                if (s_[pos_] == '-') sign = -sign;
                ++pos_;
                skip();
            }
            first = false;
            parse_term(out, sign);
            skip();
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
    }

    std::int64_t integer() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stoll(s_.substr(start, pos_ - start));
    }

    void parse_term(LaurentPoly2& out, int sign) {
        mpz_class coeff = sign;
        LatticePoint exp;
        bool any = false;
        for (;;) {
            skip();
            if (pos_ >= s_.size()) break;
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                coeff *= mpz_class(s_.substr(start, pos_ - start));
            } else if (c == 'z' || c == 'w') {
                ++pos_;
                std::int64_t e = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    bool paren = pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == '{');
                    if (paren) ++pos_;
                    e = integer();
                    if (paren) {
                        if (pos_ >= s_.size() || (s_[pos_] != ')' && s_[pos_] != '}')) fail("unbalanced exponent");
                        ++pos_;
                    }
                }
                (c == 'z' ? exp.a : exp.b) += e;
            } else {
                break;
            }
            any = true;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
        }
        if (!any) fail("expected a term");
        out.add_term(exp, coeff);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_laurent(const std::string& text) { return LaurentParser(text).parse(); }

bool equal_up_to_unit(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.size() != b.size()) return false;
    if (a.is_zero()) return true;
    const auto& [pa, ca] = *a.terms().begin();
    const auto& [pb, cb] = *b.terms().begin();
    const LatticePoint shift = pa - pb;
    LaurentPoly2 moved = b.shifted(shift);
    if (ca == cb) return moved == a;
    if (ca == -cb) return -moved == a;
    return false;
}

}  // namespace tilingforge
