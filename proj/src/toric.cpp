#include "tilingforge/toric.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tilingforge/error.hpp"

namespace tilingforge {

ToricDiagram::ToricDiagram(Points points) : points_(std::move(points)) {
    for (auto it = points_.begin(); it != points_.end();) {
        if (it->second == 0)
            it = points_.erase(it);
        else
            ++it;
    }
}

std::uint64_t ToricDiagram::multiplicity(const LatticePoint& p) const {
    auto it = points_.find(p);
    return it == points_.end() ? 0 : it->second;
}

ToricDiagram ToricDiagram::translated(const LatticePoint& shift) const {
    Points out;
    for (const auto& [p, m] : points_) out.emplace(p + shift, m);
    return ToricDiagram(std::move(out));
}

ToricDiagram ToricDiagram::normalized() const {
    if (points_.empty()) return *this;
    std::int64_t min_a = std::numeric_limits<std::int64_t>::max(), min_b = min_a;
    for (const auto& [p, m] : points_) {
        min_a = std::min(min_a, p.a);
        min_b = std::min(min_b, p.b);
    }
    return translated({-min_a, -min_b});
}

std::string ToricDiagram::to_text() const {
    std::ostringstream os;
    for (const auto& [p, m] : points_) os << p.a << ' ' << p.b << ' ' << m << '\n';
    return os.str();
}

ToricDiagram ToricDiagram::from_text(const std::string& text) {
    std::istringstream in(text);
    Points pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        std::uint64_t m = 0;
        if (!(ls >> a >> b >> m) || m == 0)
            throw ParseError("toric diagram line " + std::to_string(lineno) + ": expected 'a b multiplicity'");
        pts[{a, b}] += m;
    }
    return ToricDiagram(std::move(pts));
}

ToricDiagram toric_diagram(const LaurentPoly2& p) {
    if (p.is_zero()) throw ZeroPolynomialError("toric diagram of the zero polynomial");
    ToricDiagram::Points pts;
    for (const auto& [pt, c] : p.terms()) {
        const mpz_class mag = abs(c);
        if (!mag.fits_ulong_p()) throw DimensionError("coefficient too large for a multiplicity");
        pts.emplace(pt, mag.get_ui());
    }
    return ToricDiagram(std::move(pts)).normalized();
}

ToricDiagram transformed(const ToricDiagram& d, std::int64_t m00, std::int64_t m01, std::int64_t m10,
                         std::int64_t m11) {
    ToricDiagram::Points out;
    for (const auto& [p, m] : d.points()) out[{m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b}] += m;
    return ToricDiagram(std::move(out));
}

ToricDiagram canonical_polygon(const ToricDiagram& d) {
    if (d.empty()) return d;
    std::int64_t lo_a = std::numeric_limits<std::int64_t>::max(), hi_a = std::numeric_limits<std::int64_t>::min();
    std::int64_t lo_b = lo_a, hi_b = hi_a;
    for (const auto& [p, m] : d.points()) {
        lo_a = std::min(lo_a, p.a);
        hi_a = std::max(hi_a, p.a);
        lo_b = std::min(lo_b, p.b);
        hi_b = std::max(hi_b, p.b);
    }
    const std::int64_t bound = 2 * std::max(hi_a - lo_a, hi_b - lo_b) + 1;
    const ToricDiagram base = d.normalized();

    std::vector<std::pair<LatticePoint, std::uint64_t>> best;
    ToricDiagram best_diagram;
    for (std::int64_t m00 = -bound; m00 <= bound; ++m00)
        for (std::int64_t m01 = -bound; m01 <= bound; ++m01)
            for (std::int64_t m10 = -bound; m10 <= bound; ++m10)
                for (std::int64_t m11 = -bound; m11 <= bound; ++m11) {
                    const std::int64_t det = m00 * m11 - m01 * m10;
                    if (det != 1 && det != -1) continue;
                    ToricDiagram img = transformed(base, m00, m01, m10, m11).normalized();
                    std::vector<std::pair<LatticePoint, std::uint64_t>> key(img.points().begin(),
                                                                            img.points().end());
                    if (best.empty() || key < best) {
                        best = std::move(key);
                        best_diagram = std::move(img);
                    }
                }
    return best_diagram;
}

LaurentPoly2 newton_polynomial(const ToricDiagram& d, const std::optional<std::vector<mpz_class>>& coeffs) {
    if (d.empty()) throw ZeroPolynomialError("Newton polynomial of an empty diagram");
    if (coeffs && coeffs->size() != d.size())
        throw ArityError("expected " + std::to_string(d.size()) + " coefficients, got " +
                         std::to_string(coeffs->size()));
    LaurentPoly2 p;
    std::size_t i = 0;
    for (const auto& [pt, m] : d.points()) {
        p.add_term(pt, coeffs ? (*coeffs)[i] : mpz_class(static_cast<unsigned long>(m)));
        ++i;
    }
    return p;
}

std::string mirror_equation(const ToricDiagram& d, const std::optional<std::vector<mpz_class>>& coeffs) {
    return "uv = " + newton_polynomial(d, coeffs).pretty();
}

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.a - o.a) * (b.b - o.b) - (a.b - o.b) * (b.a - o.a);
}

}  // namespace

std::vector<LatticePoint> convex_hull(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::int64_t twice_area(const std::vector<LatticePoint>& points) {
    const auto hull = convex_hull(points);
    if (hull.size() < 3) return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        s += p.a * q.b - p.b * q.a;
    }
    return s < 0 ? -s : s;
}

bool on_hull_boundary(const ToricDiagram& d, const LatticePoint& p) {
    std::vector<LatticePoint> pts;
    for (const auto& [q, m] : d.points()) pts.push_back(q);
    const auto hull = convex_hull(pts);
    if (hull.size() < 3) return true;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& u = hull[i];
        const auto& v = hull[(i + 1) % hull.size()];
        if (cross(u, v, p) == 0 && std::min(u.a, v.a) <= p.a && p.a <= std::max(u.a, v.a) &&
            std::min(u.b, v.b) <= p.b && p.b <= std::max(u.b, v.b))
            return true;
    }
    return false;
}

ToricDiagram boundary_profile(const ToricDiagram& d) {
    ToricDiagram::Points out;
    for (const auto& [p, m] : d.points()) out.emplace(p, on_hull_boundary(d, p) ? m : 1);
    return ToricDiagram(std::move(out));
}

}  // namespace tilingforge
