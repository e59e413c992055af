#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/quiver.hpp"

namespace tilingforge {

// Linear system A R = c for the per-edge R-charges: one row per black node,
// one per white node (sum of R over incident edges = 2), then one per face
// (sum of R over side incidences = E_f - 2).
struct RChargeSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    std::size_t rank = 0;
    // Minimum-norm solution and a basis of the solution directions.
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;

    std::size_t dimension() const { return nullspace.size(); }
    std::size_t num_edges() const { return particular.size(); }
};

// Exact rational elimination. Throws GenusError and InfeasibleError.
RChargeSystem rcharge_constraints(const CombinatorialMap& m);

// Largest |A R - c| entry.
double constraint_residual(const RChargeSystem& s, const std::vector<double>& r);

struct AMaxOptions {
    std::uint64_t seed = 0x5EED;
    int starts = 32;
    int max_iterations = 100000;
    double box_margin = 1e-9;
    double gradient_tolerance = 1e-10;
    double uniqueness_tolerance = 1e-6;
};

struct RChargeAssignment {
    std::vector<double> r;      // per edge, in (0, 2)
    std::vector<double> theta;  // pi R / 2
    double objective = 0;       // sum (R - 1)^3
    double gradient_norm = 0;   // stationarity measure at the returned point
    double residual = 0;        // constraint residual
    int converged_runs = 0;
    // False when two converged runs ended more than uniqueness_tolerance apart.
    bool unique = true;
};

double a_objective(const std::vector<double>& r);

// Multi-start projected gradient ascent of sum (R - 1)^3 over the solution
// set intersected with the box [margin, 2 - margin], followed by a Newton
// polish in the solution directions. Throws ConvergenceError.
RChargeAssignment maximize_a(const CombinatorialMap& m, const AMaxOptions& options = {});

// Assignment for fixed R values (e.g. read from a file), with derived angles.
RChargeAssignment assignment_from(const std::vector<double>& r);

struct Periods {
    std::complex<double> omega1;
    std::complex<double> omega2;
    double closure_error = 0;  // worst angle mismatch around any vertex
    double fit_residual = 0;   // least-squares residual of the lifted embedding
};

// Rhombic embedding with unit rhombi of half-angle theta_e at the nodes;
// periods are the translations along the cycles dual to the two homology
// weights. Periods are ordered so that Im(omega2 / omega1) > 0. Throws
// ConsistencyError and PreconditionError.
Periods isoradial_periods(const CombinatorialMap& m, const RChargeAssignment& r);
Periods isoradial_periods(const CombinatorialMap& m, const RChargeAssignment& r, const HomologyWeights& h);

}  // namespace tilingforge
