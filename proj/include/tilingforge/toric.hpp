#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilingforge/lattice.hpp"
#include "tilingforge/laurent.hpp"

namespace tilingforge {

// Lattice points with positive multiplicities.
class ToricDiagram {
public:
    using Points = std::map<LatticePoint, std::uint64_t>;

    ToricDiagram() = default;
    explicit ToricDiagram(Points points);

    const Points& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    std::uint64_t multiplicity(const LatticePoint& p) const;

    ToricDiagram translated(const LatticePoint& shift) const;
    // Shift so that the minimal a and minimal b are both 0.
    ToricDiagram normalized() const;

    // Lines "a b multiplicity" in ascending point order.
    std::string to_text() const;
    static ToricDiagram from_text(const std::string& text);

    friend bool operator==(const ToricDiagram&, const ToricDiagram&) = default;

private:
    Points points_;
};

// Support of P, translated so the minimal exponents are 0, with multiplicity
// |coefficient|. Throws ZeroPolynomialError.
ToricDiagram toric_diagram(const LaurentPoly2& p);

// Representative of the GL(2,Z) x translation orbit: the lexicographically
// smallest sorted (point, multiplicity) list over all unimodular matrices
// with entries bounded by 2 * span + 1, each image shifted to touch both axes.
ToricDiagram canonical_polygon(const ToricDiagram& d);

// Sum alpha_i z^a_i w^b_i; alpha_i defaults to the multiplicity. Coefficients
// are matched to points in ascending point order. Throws ArityError and
// ZeroPolynomialError.
LaurentPoly2 newton_polynomial(const ToricDiagram& d, const std::optional<std::vector<mpz_class>>& coeffs = {});

// "uv = <P_D(z,w)>"
std::string mirror_equation(const ToricDiagram& d, const std::optional<std::vector<mpz_class>>& coeffs = {});

// Convex hull vertices in counter-clockwise order starting from the smallest
// point; collinear boundary points are excluded.
std::vector<LatticePoint> convex_hull(const std::vector<LatticePoint>& points);

// Twice the area of the convex hull.
std::int64_t twice_area(const std::vector<LatticePoint>& points);

// Whether p lies on the boundary of the convex hull of the diagram.
bool on_hull_boundary(const ToricDiagram& d, const LatticePoint& p);

// Support kept; interior multiplicities reset to 1 so that only the polygon
// and its boundary multiplicities remain significant.
ToricDiagram boundary_profile(const ToricDiagram& d);

// Apply (a, b) -> (m00 a + m01 b, m10 a + m11 b).
ToricDiagram transformed(const ToricDiagram& d, std::int64_t m00, std::int64_t m01, std::int64_t m10,
                         std::int64_t m11);

}  // namespace tilingforge
