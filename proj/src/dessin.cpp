#include "tilingforge/dessin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tilingforge/error.hpp"

namespace tilingforge {

namespace {

std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<std::size_t> out;
    for (const auto& c : cycles_of(p)) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

bool transitive(const PermutationTriple& t) {
    const std::size_t d = t.degree();
    if (d == 0) return true;
    std::vector<bool> seen(d, false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (const Permutation* p : {&t.sigma_black, &t.sigma_white, &t.sigma_infinity}) {
            const std::size_t y = (*p)[x];
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == d;
}

}  // namespace

std::string Passport::to_string() const { return "[" + join(black) + "|" + join(white) + "|" + join(infinity) + "]"; }

PermutationTriple permutation_triple(const CombinatorialMap& m) {
    if (!m.connected()) throw DisconnectedError("permutation triple of a disconnected map");
    PermutationTriple t;
    t.sigma_black = m.sigma_black();
    t.sigma_white = m.sigma_white();
    t.sigma_infinity = inverse(compose(t.sigma_black, t.sigma_white));
    return t;
}

void check_triple(const PermutationTriple& t) {
    const std::size_t d = t.degree();
    if (t.sigma_white.size() != d || t.sigma_infinity.size() != d)
        throw PreconditionError("permutations of different degrees");
    const Permutation product = compose(t.sigma_black, compose(t.sigma_white, t.sigma_infinity));
    for (std::size_t x = 0; x < d; ++x)
        if (product[x] != x) throw PreconditionError("sigma_black sigma_white sigma_infinity is not the identity");
    if (!transitive(t)) throw PreconditionError("the triple acts intransitively");
}

Passport passport(const PermutationTriple& t) {
    return {cycle_type(t.sigma_black), cycle_type(t.sigma_white), cycle_type(t.sigma_infinity)};
}

int rh_genus(const PermutationTriple& t) {
    const auto d = static_cast<long>(t.degree());
    const auto cycles = static_cast<long>(cycles_of(t.sigma_black).size() + cycles_of(t.sigma_white).size() +
                                          cycles_of(t.sigma_infinity).size());
    const long twice = d - cycles + 2;
    if (twice % 2 != 0 || twice < 0)
        throw NonIntegerGenusError("d - (B + W + I) + 2 = " + std::to_string(twice) + " is not a nonnegative even number");
    return static_cast<int>(twice / 2);
}

std::string cycle_notation(const Permutation& p) {
    std::ostringstream os;
    for (const auto& c : cycles_of(p)) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
        os << ')';
    }
    return os.str();
}

}  // namespace tilingforge
