#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dop4/jet.hpp"
#include "dop4/quartic.hpp"

namespace dop4 {

/// Christoffel components of a linear connection, direction-first:
/// g[i][j][k] is the ∂_i component of ∇_{∂_j} ∂_k (j is the
/// differentiation direction). Indices run over {0,1} for {x,y}.
struct Christoffel {
    Point base;
    int order = 0;
    std::array<std::array<std::array<Jet, 2>, 2>, 2> g;

    Christoffel() = default;
    Christoffel(Point p, int ord);

    double value(int i, int j, int k) const { return g[i][j][k].value(); }
    double max_value() const;
};

/// T^i_{jk} = Γ^i_{jk} - Γ^i_{kj} and the torsion covector θ_k = T^i_{ik}.
struct Torsion {
    std::array<std::array<std::array<Jet, 2>, 2>, 2> t;
    std::array<Jet, 2> theta;

    double norm() const;
    std::array<double, 2> theta_values() const { return {theta[0].value(), theta[1].value()}; }
};

/// R^i_{jkl} = ∂_k Γ^i_{lj} - ∂_l Γ^i_{kj} + Γ^i_{km} Γ^m_{lj} - Γ^i_{lm} Γ^m_{kj}
/// evaluated at the base point.
struct Curvature {
    double r[2][2][2][2] = {};

    double norm() const;
};

struct WagnerSolution {
    Christoffel gamma;
    // values of the two excluded covariant-derivative components, per
    // direction, after substituting the solution
    std::array<double, 2> excluded_residuals;
    // constant-part determinant of the assembled 8x8 system
    double system_det = 0.0;
};

struct WagnerOptions {
    int excluded_component = 2;   // a-index of the excluded symbol component
    double pivot_tol = 1e-10;
    double regularity_rel_tol = 1e-10; // |D| > tol * norm^6
};

/// Solve the annihilation equations ∇_l σ = 0 for the 8 Christoffel
/// components, dropping the two equations of one fixed symbol component.
/// Symbol jets must have order >= 1; the connection comes back with jets
/// one order lower.
WagnerSolution solve_connection(const QuarticT<Jet>& sigma, const WagnerOptions& opt = {});

/// All 10 components ∇_l a^{i1..i4}, as jets: index [l][c] with l the
/// direction (0,1) and c the symbol component (0..4). Vanishing of all of
/// them is the convention-independent defining property.
std::array<std::array<Jet, 5>, 2> covariant_derivative_symbol(const QuarticT<Jet>& sigma,
                                                              const Christoffel& gamma);

Torsion torsion(const Christoffel& gamma);

Curvature curvature(const Christoffel& gamma);

/// Components (∇_l T)^i_{jk} for l,i in {0,1} and (j,k) in {(0,1),(1,0)},
/// evaluated at the base point. All vanish iff the torsion is parallel.
std::array<double, 8> torsion_parallel_residual(const Christoffel& gamma, const Torsion& t);

enum class GroupType { abelian, solvable, non_parallel_torsion, not_constant_type };

const char* group_type_name(GroupType t);

using SymbolField = std::function<QuarticT<Jet>(Point, int)>;

struct GroupTypeOptions {
    double i2_tol = 1e-10;
    double dI0_tol = 1e-7;        // |∇I0| <= tol*(1+|I0|) counts as constant
    double torsion_tol = 1e-8;
    double parallel_tol = 1e-8;
    WagnerOptions wagner;
};

struct GroupTypeReport {
    GroupType type;
    double max_dI0 = 0.0;
    double max_torsion = 0.0;
    double max_parallel_residual = 0.0;
};

/// Classify the symbol over a sample of points: constant type is probed
/// through the gradient of the absolute invariant, then the torsion and
/// its parallelism decide between the group types.
GroupTypeReport group_type_classify(const SymbolField& sigma, const std::vector<Point>& samples,
                                    const GroupTypeOptions& opt = {});

} // namespace dop4
