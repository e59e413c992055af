#include "tilingforge/plethystics.hpp"

#include <sstream>

#include "tilingforge/error.hpp"

namespace tilingforge {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) { return TruncatedSeries({c}, order); }

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const std::size_t n = std::min(order(), o.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = coeffs_[k] + o.coeffs_[k];
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    const std::size_t n = std::min(order(), o.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = coeffs_[k] - o.coeffs_[k];
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const std::size_t n = std::min(order(), o.order());
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return TruncatedSeries(std::move(c), n);
}

long TruncatedSeries::degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        if (coeffs_[k] != 0) return static_cast<long>(k);
    return -1;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const bool integral = mag.get_den() == 1;
        if (k == 0)
            os << mag.get_str();
        else if (mag != 1)
            os << (integral ? mag.get_str() : "(" + mag.get_str() + ")");
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
    }
    return first ? "0" : os.str();
}

std::string TruncatedSeries::to_list() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k].get_str();
    return os.str();
}

std::vector<Rational> parse_coefficients(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
        std::string token = item.substr(b, e - b + 1);
        if (!token.empty() && token.front() == '+') token.erase(0, 1);
        Rational r;
        if (r.set_str(token, 10) != 0 || token.empty()) throw ParseError("bad coefficient '" + token + "'");
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + token + "'");
        r.canonicalize();
        out.push_back(r);
    }
    if (out.empty()) throw ParseError("no coefficients given");
    return out;
}

TruncatedSeries series_from_rational(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                                     std::size_t order) {
    if (denom.empty() || denom.front() == 0)
        throw DivisionByZeroConstantError("denominator has zero constant term");
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = k < numer.size() ? numer[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < denom.size(); ++j) acc -= denom[j] * out[k - j];
        out[k] = acc / denom.front();
    }
    return TruncatedSeries(std::move(out), order);
}

int mobius(std::size_t k) {
    if (k == 0) throw PreconditionError("mobius is defined for k >= 1");
    int sign = 1;
    for (std::size_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) sign = -sign;
    return sign;
}

TruncatedSeries pe(const TruncatedSeries& f) {
    const std::size_t n = f.order();
    // L_k = sum_{d | k} a_{k/d} / d
    std::vector<Rational> log_coeffs(n + 1, Rational(0));
    for (std::size_t d = 1; d <= n; ++d)
        for (std::size_t j = 1; j * d <= n; ++j) log_coeffs[j * d] += f[j] / Rational(static_cast<long>(d));
    std::vector<Rational> g(n + 1, Rational(0));
    g[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += Rational(static_cast<long>(k)) * log_coeffs[k] * g[m - k];
        g[m] = acc / Rational(static_cast<long>(m));
    }
    return TruncatedSeries(std::move(g), n);
}

TruncatedSeries pe_euler_product(const TruncatedSeries& f) {
    const std::size_t n = f.order();
    TruncatedSeries acc = TruncatedSeries::constant(1, n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational a = f[k];
        if (a == 0) continue;
        // (1 - t^k)^(-a) = sum_j binom(a + j - 1, j) t^{jk}
        std::vector<Rational> factor(n + 1, Rational(0));
        Rational binom = 1;
        for (std::size_t j = 0; j * k <= n; ++j) {
            factor[j * k] = binom;
            binom *= (a + Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
        }
        acc = acc * TruncatedSeries(std::move(factor), n);
    }
    return acc;
}

TruncatedSeries pl(const TruncatedSeries& g) {
    if (g[0] != 1) throw UnitConstantError("plethystic logarithm needs constant term 1, got " + g[0].get_str());
    const std::size_t n = g.order();
    std::vector<Rational> log_coeffs(n + 1, Rational(0));
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(static_cast<long>(m)) * g[m];
        for (std::size_t k = 1; k < m; ++k) acc -= Rational(static_cast<long>(k)) * log_coeffs[k] * g[m - k];
        log_coeffs[m] = acc / Rational(static_cast<long>(m));
    }
    std::vector<Rational> f(n + 1, Rational(0));
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= m; ++k) {
            if (m % k != 0) continue;
            const int mu = mobius(k);
            if (mu != 0) f[m] += Rational(mu) / Rational(static_cast<long>(k)) * log_coeffs[m / k];
        }
    return TruncatedSeries(std::move(f), n);
}

}  // namespace tilingforge
