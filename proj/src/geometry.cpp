#include "tilingforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

#include <Eigen/Dense>

#include "tilingforge/error.hpp"

namespace tilingforge {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

struct Echelon {
    RatMatrix rows;  // reduced row echelon form of [A | c]
    std::vector<std::size_t> pivots;
};

Echelon rref(RatMatrix aug, std::size_t ncols) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < aug.size(); ++c) {
        std::size_t p = r;
        while (p < aug.size() && aug[p][c] == 0) ++p;
        if (p == aug.size()) continue;
        std::swap(aug[r], aug[p]);
        const Rational lead = aug[r][c];
        for (auto& x : aug[r]) x /= lead;
        for (std::size_t i = 0; i < aug.size(); ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rational f = aug[i][c];
            for (std::size_t j = c; j < aug[i].size(); ++j) aug[i][j] -= f * aug[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(aug);
    return out;
}

// Solves the square nonsingular system g y = b exactly.
std::vector<Rational> solve_square(RatMatrix g, std::vector<Rational> b) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) g[i].push_back(b[i]);
    Echelon e = rref(std::move(g), n);
    if (e.pivots.size() != n) throw InfeasibleError("singular Gram matrix in R-charge elimination");
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = e.rows[i][n];
    return y;
}

}  // namespace

RChargeSystem rcharge_constraints(const CombinatorialMap& m) {
    const int g = genus(m);
    if (g != 1) throw GenusError("R-charges need a genus-1 map, got genus " + std::to_string(g));
    const std::size_t n = m.num_edges();
    RChargeSystem s;
    auto add_row = [&](const std::vector<std::size_t>& incidences, const Rational& rhs) {
        std::vector<Rational> row(n, Rational(0));
        for (auto e : incidences) row[e] += 1;
        s.matrix.push_back(std::move(row));
        s.rhs.push_back(rhs);
    };
    for (const auto& node : m.black_nodes()) add_row(node, 2);
    for (const auto& node : m.white_nodes()) add_row(node, 2);
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
        const auto sides = m.face_boundary(f);
        add_row(sides, Rational(static_cast<long>(sides.size()) - 2));
    }

    RatMatrix aug = s.matrix;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(s.rhs[i]);
    const Echelon e = rref(std::move(aug), n);
    s.rank = e.pivots.size();
    for (std::size_t i = s.rank; i < e.rows.size(); ++i)
        if (e.rows[i][n] != 0) throw InfeasibleError("R-charge constraints are inconsistent");

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Rational> p0(n, Rational(0));
    for (std::size_t i = 0; i < s.rank; ++i) p0[e.pivots[i]] = e.rows[i][n];
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < s.rank; ++i) v[e.pivots[i]] = -e.rows[i][f];
        s.nullspace.push_back(std::move(v));
    }

    // Remove the nullspace component of p0 to get the minimum-norm solution.
    const std::size_t k = s.nullspace.size();
    s.particular = p0;
    if (k > 0) {
        RatMatrix gram(k, std::vector<Rational>(k, Rational(0)));
        std::vector<Rational> proj(k, Rational(0));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t j = 0; j < n; ++j) proj[a] += s.nullspace[a][j] * p0[j];
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t j = 0; j < n; ++j) gram[a][b] += s.nullspace[a][j] * s.nullspace[b][j];
        }
        const auto y = solve_square(std::move(gram), std::move(proj));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t j = 0; j < n; ++j) s.particular[j] -= y[a] * s.nullspace[a][j];
    }
    return s;
}

double constraint_residual(const RChargeSystem& s, const std::vector<double>& r) {
    double worst = 0;
    for (std::size_t i = 0; i < s.matrix.size(); ++i) {
        double acc = -s.rhs[i].get_d();
        for (std::size_t j = 0; j < r.size(); ++j) acc += s.matrix[i][j].get_d() * r[j];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double a_objective(const std::vector<double>& r) {
    double a = 0;
    for (double x : r) a += (x - 1) * (x - 1) * (x - 1);
    return a;
}

RChargeAssignment assignment_from(const std::vector<double>& r) {
    RChargeAssignment out;
    out.r = r;
    for (double x : r) out.theta.push_back(std::numbers::pi * x / 2);
    out.objective = a_objective(r);
    return out;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class AffineBox {
public:
    AffineBox(const RChargeSystem& s, double margin) : lo_(margin), hi_(2 - margin) {
        const auto n = static_cast<Eigen::Index>(s.num_edges());
        const auto k = static_cast<Eigen::Index>(s.dimension());
        p_ = VectorXd(n);
        for (Eigen::Index j = 0; j < n; ++j) p_(j) = s.particular[static_cast<std::size_t>(j)].get_d();
        MatrixXd basis(n, k);
        for (Eigen::Index a = 0; a < k; ++a)
            for (Eigen::Index j = 0; j < n; ++j)
                basis(j, a) = s.nullspace[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)].get_d();
        q_ = k > 0 ? MatrixXd(basis.householderQr().householderQ() * MatrixXd::Identity(n, k)) : MatrixXd(n, 0);
    }

    const MatrixXd& basis() const { return q_; }
    const VectorXd& origin() const { return p_; }

    VectorXd affine(const VectorXd& x) const { return p_ + q_ * (q_.transpose() * (x - p_)); }
    VectorXd clamp(const VectorXd& x) const { return x.cwiseMax(lo_).cwiseMin(hi_); }
    bool inside(const VectorXd& x, double slack) const {
        return x.minCoeff() >= lo_ - slack && x.maxCoeff() <= hi_ + slack;
    }

    // Dykstra alternating projection onto the intersection.
    VectorXd project(const VectorXd& start) const {
        VectorXd x = start, pa = VectorXd::Zero(x.size()), pb = VectorXd::Zero(x.size());
        VectorXd y = affine(x);
        for (int it = 0; it < 20000; ++it) {
            y = affine(x + pa);
            pa = x + pa - y;
            VectorXd next = clamp(y + pb);
            pb = y + pb - next;
            const double change = (next - x).norm();
            x = std::move(next);
            if (change < 1e-15 && (affine(x) - x).norm() < 1e-14) break;
        }
        return affine(x);
    }

private:
    double lo_, hi_;
    VectorXd p_;
    MatrixXd q_;
};

double objective(const VectorXd& r) { return (r.array() - 1).cube().sum(); }
VectorXd gradient(const VectorXd& r) { return 3 * (r.array() - 1).square().matrix(); }

double stationarity(const AffineBox& set, const VectorXd& x) {
    if (set.inside(x, 0) && x.minCoeff() > 1e-7 && x.maxCoeff() < 2 - 1e-7) {
        const VectorXd g = gradient(x);
        return (set.basis() * (set.basis().transpose() * g)).norm();
    }
    return (x - set.project(x + gradient(x))).norm();
}

// Newton iterations in the solution directions; kept only while the point
// stays in the open box and the objective does not drop.
VectorXd newton_polish(const AffineBox& set, VectorXd x) {
    const MatrixXd& q = set.basis();
    if (q.cols() == 0) return x;
    for (int it = 0; it < 60; ++it) {
        const VectorXd g = q.transpose() * gradient(x);
        if (g.norm() < 1e-15) break;
        const VectorXd curvature = 6 * (x.array() - 1).matrix();
        const MatrixXd h = q.transpose() * curvature.asDiagonal() * q;
        const VectorXd step = h.completeOrthogonalDecomposition().solve(g);
        VectorXd next = set.affine(x - q * step);
        if (!set.inside(next, 0) || objective(next) < objective(x) - 1e-14) break;
        x = std::move(next);
    }
    return x;
}

struct Run {
    VectorXd r;
    double value = 0;
    double stationarity = 0;
};

// Gradient ascent until the stationarity measure drops below `target`.
VectorXd gradient_phase(const AffineBox& set, VectorXd x, double target, int& budget) {
    double t = 0.1;
    double measure = stationarity(set, x);
    for (; budget > 0 && measure > target; --budget) {
        const VectorXd g = gradient(x);
        const double fx = objective(x);
        VectorXd next = set.project(x + t * g);
        if (objective(next) >= fx + 1e-4 * g.dot(next - x)) {
            const double moved = (next - x).norm();
            x = std::move(next);
            t = std::min(t * 1.5, 10.0);
            if (moved < 1e-13 || budget % 8 == 0) measure = stationarity(set, x);
        } else {
            t *= 0.5;
            if (t < 1e-18) break;
        }
    }
    return x;
}

Run ascend(const AffineBox& set, VectorXd x, const AMaxOptions& opt) {
    x = set.project(x);
    int budget = opt.max_iterations;
    // Coarse ascent hands over to Newton early; a finer pass only runs if
    // the polished point is still not stationary (e.g. at the box boundary).
    for (double target : {1e-6, 1e-9, 1e-12}) {
        x = newton_polish(set, gradient_phase(set, x, target, budget));
        if (stationarity(set, x) < opt.gradient_tolerance || budget <= 0) break;
    }
    return {x, objective(x), stationarity(set, x)};
}

}  // namespace

RChargeAssignment maximize_a(const CombinatorialMap& m, const AMaxOptions& opt) {
    const RChargeSystem sys = rcharge_constraints(m);
    const AffineBox set(sys, opt.box_margin);
    const auto n = static_cast<Eigen::Index>(sys.num_edges());

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> start(opt.box_margin, 2 - opt.box_margin);
    std::vector<Run> converged;
    for (int s = 0; s < opt.starts; ++s) {
        VectorXd x(n);
        for (Eigen::Index j = 0; j < n; ++j) x(j) = start(rng);
        Run run = ascend(set, x, opt);
        if (run.stationarity < opt.gradient_tolerance) converged.push_back(std::move(run));
    }
    if (converged.empty())
        throw ConvergenceError("no a-maximization run reached gradient norm below " +
                               std::to_string(opt.gradient_tolerance));

    auto better = [](const Run& a, const Run& b) {
        if (std::abs(a.value - b.value) > 1e-12) return a.value > b.value;
        return std::lexicographical_compare(a.r.begin(), a.r.end(), b.r.begin(), b.r.end());
    };
    const Run* best = &converged.front();
    for (const auto& run : converged)
        if (better(run, *best)) best = &run;

    RChargeAssignment out;
    out.r.assign(best->r.begin(), best->r.end());
    for (double x : out.r) out.theta.push_back(std::numbers::pi * x / 2);
    out.objective = best->value;
    out.gradient_norm = best->stationarity;
    out.residual = constraint_residual(sys, out.r);
    out.converged_runs = static_cast<int>(converged.size());
    for (const auto& run : converged)
        if ((run.r - best->r).cwiseAbs().maxCoeff() > opt.uniqueness_tolerance) out.unique = false;
    return out;
}

namespace {

double wrap_angle(double x) {
    const double two_pi = 2 * std::numbers::pi;
    x = std::fmod(x, two_pi);
    if (x > std::numbers::pi) x -= two_pi;
    if (x < -std::numbers::pi) x += two_pi;
    return x;
}

}  // namespace

Periods isoradial_periods(const CombinatorialMap& m, const RChargeAssignment& r) {
    return isoradial_periods(m, r, homology_weights(m));
}

Periods isoradial_periods(const CombinatorialMap& m, const RChargeAssignment& r, const HomologyWeights& h) {
    const std::size_t ne = m.num_edges();
    if (r.r.size() != ne) throw PreconditionError("need one R-charge per edge");
    const RChargeSystem sys = rcharge_constraints(m);
    const double residual = constraint_residual(sys, r.r);
    if (residual > 1e-9) throw PreconditionError("R-charges violate the constraints by " + std::to_string(residual));
    for (double x : r.r)
        if (!(x > 0 && x < 2)) throw PreconditionError("R-charges must lie in (0, 2)");

    const double pi = std::numbers::pi;
    std::vector<double> theta(ne);
    for (std::size_t e = 0; e < ne; ++e) theta[e] = pi * r.r[e] / 2;
    const Permutation& sb = m.sigma_black();
    const Permutation sb_inv = inverse(sb);
    const Permutation& sw = m.sigma_white();

    Periods out;
    // Rhombus angle sums around every vertex of the quad-graph.
    for (const auto& node : m.black_nodes()) {
        double s = 0;
        for (auto e : node) s += 2 * theta[e];
        out.closure_error = std::max(out.closure_error, std::abs(s - 2 * pi));
    }
    for (const auto& node : m.white_nodes()) {
        double s = 0;
        for (auto e : node) s += 2 * theta[e];
        out.closure_error = std::max(out.closure_error, std::abs(s - 2 * pi));
    }
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
        double s = 0;
        for (auto e : m.face_boundary(f)) s += pi - 2 * theta[e];
        out.closure_error = std::max(out.closure_error, std::abs(s - 2 * pi));
    }

    // alpha[e]: direction from black_of(e) to the centre of the face at the
    // black corner (e, sigma_black(e)).
    std::vector<double> alpha(ne, 0);
    std::vector<bool> placed(m.num_black(), false);
    auto place_node = [&](std::size_t anchor, double value) {
        alpha[anchor] = value;
        for (std::size_t x = sb[anchor]; x != anchor; x = sb[x]) alpha[x] = alpha[sb_inv[x]] - 2 * theta[x];
        placed[m.black_of(anchor)] = true;
    };
    std::queue<std::size_t> todo;
    for (std::size_t b0 = 0; b0 < m.num_black(); ++b0) {
        if (placed[b0]) continue;
        place_node(m.black_nodes()[b0].front(), 0.0);
        todo.push(b0);
        while (!todo.empty()) {
            const std::size_t b = todo.front();
            todo.pop();
            for (auto x : m.black_nodes()[b]) {
                // The white corner (x, sigma_white(x)) is shared by the rhombi
                // of x and sigma_white(x); both must give the same direction.
                const std::size_t target = sb_inv[sw[x]];
                const std::size_t nb = m.black_of(target);
                if (!placed[nb]) {
                    place_node(target, alpha[x]);
                    todo.push(nb);
                } else {
                    out.closure_error = std::max(out.closure_error, std::abs(wrap_angle(alpha[target] - alpha[x])));
                }
            }
        }
    }
    if (out.closure_error > 1e-6)
        throw ConsistencyError("rhombus angles fail to close (error " + std::to_string(out.closure_error) + ")");

    // d(e) = p(w) - p(b) + h_z omega1 + h_w omega2 on the universal cover.
    const std::size_t nb = m.num_black(), nw = m.num_white();
    const auto unknowns = static_cast<Eigen::Index>(2 + (nb - 1) + nw);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ne), unknowns);
    Eigen::VectorXcd d(static_cast<Eigen::Index>(ne));
    for (std::size_t e = 0; e < ne; ++e) {
        const auto row = static_cast<Eigen::Index>(e);
        d(row) = std::polar(1.0, alpha[sb_inv[e]]) + std::polar(1.0, alpha[e]);
        a(row, 0) = static_cast<double>(h[e].a);
        a(row, 1) = static_cast<double>(h[e].b);
        if (m.black_of(e) > 0) a(row, static_cast<Eigen::Index>(2 + m.black_of(e) - 1)) = -1.0;
        a(row, static_cast<Eigen::Index>(2 + (nb - 1) + m.white_of(e))) = 1.0;
    }
    const Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(d);
    out.fit_residual = (a * sol - d).cwiseAbs().maxCoeff();
    if (out.fit_residual > 1e-6)
        throw ConsistencyError("rhombic embedding does not close up on the torus (residual " +
                               std::to_string(out.fit_residual) + ")");
    out.omega1 = sol(0);
    out.omega2 = sol(1);
    const std::complex<double> tau = out.omega2 / out.omega1;
    if (std::abs(tau.imag()) < 1e-12) throw ConsistencyError("degenerate period lattice");
    if (tau.imag() < 0) std::swap(out.omega1, out.omega2);
    return out;
}

}  // namespace tilingforge
