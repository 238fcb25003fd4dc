#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dop4/operator4.hpp"
#include "dop4/quantize.hpp"
#include "dop4/wagner.hpp"

namespace dop4 {

/// Multi-index order of the J_α family: all |α| <= 4, degree-major.
extern const std::array<std::array<int, 2>, 15> kAlphaOrder;

/// Jet of the scalar field I0 = I3²/I2³ of the principal symbol. The
/// symbol jets carry the whole pipeline, so derivatives of I0 to the
/// symbol's jet order come for free.
Jet I0_jet(const QuarticT<Jet>& sigma, double i2_tol = 1e-10);

/// I1 = σ's fiber polynomial evaluated on the covector dI0, as a jet
/// (one order below the symbol jets).
Jet I1_jet(const QuarticT<Jet>& sigma, double i2_tol = 1e-10);

double I1(const PointOperator& a, double i2_tol = 1e-10);

/// J_α = A(I0^{α1} · I1^{α2}) at the base point. Needs coefficient jets
/// of order >= 5.
double J_alpha(const PointOperator& a, std::array<int, 2> alpha, double i2_tol = 1e-10);

/// Jet of J_α near the point (coefficient jets of order >= 6 give a jet
/// of order >= 1, enough for Tresse derivatives).
Jet J_alpha_jet(const PointOperator& a, std::array<int, 2> alpha, double i2_tol = 1e-10);

struct TresseDerivatives {
    double d_dI0 = 0.0;
    double d_dI1 = 0.0;
};

/// Coefficients of d(target) in the basis (dI0, dI1): the unique (c0, c1)
/// with ∇target = c0 ∇I0 + c1 ∇I1. Throws SingularTresseFrame where the
/// two gradients are dependent (the singular set).
TresseDerivatives tresse(const QuarticT<Jet>& sigma, const Jet& target, double det_tol = 1e-12,
                         double i2_tol = 1e-10);

struct Coframe {
    std::array<double, 2> theta1;
    std::array<double, 2> theta2;
    double B[2][2];      // B_jk = ∂_j θ_k - Γ^m_{jk} θ_m
    double g[2][2];      // symmetric part
    double a[2][2];      // antisymmetric part
    double A[2][2];      // A^i_j = g^{ik} a_{kj}
    double frame[2][2];  // frame[j][i]: ∂_j component of e_i (dual basis)
    double det_g = 0.0;
    double wedge = 0.0;  // θ1 ∧ θ2
};

struct CoframeOptions {
    double torsion_tol = 1e-10;
    double metric_tol = 1e-12;
    double coframe_tol = 1e-12;
};

/// Invariant coframe from the torsion form: θ1 = θ, B = ∇*θ, g/a its
/// parts, A the g-raised a, θ2 = θ1∘A, frame the dual basis. Throws
/// ZeroTorsion / DegenerateMetric / DegenerateCoframe.
Coframe coframe(const Christoffel& gamma, const Torsion& t, const CoframeOptions& opt = {});

/// The 15 invariants J^ϖ_α: coefficients of each total-symbol part in the
/// symmetric powers of the coframe's dual frame, degree-major
/// (5 from σ4, 4 from σ3, 3, 2, 1).
std::array<double, 15> frame_invariants(const TotalSymbol& ts, const Coframe& cf);

struct ConstantTypeReport {
    bool constant = true;
    double max_dI0 = 0.0;
};

ConstantTypeReport constant_type_test(const SymbolField& sigma, const std::vector<Point>& samples,
                                      double tol = 1e-7, double i2_tol = 1e-10);

/// c(n, k) = binom(n+k-1, k) - n²: codimension of the regular symbol
/// orbit.
std::int64_t codim_regular_orbit(int n, int k);

/// Everything the reporting front end shows for one point.
struct InvariantRecord {
    Point point;
    bool regular = false;
    double i2 = 0.0, i3 = 0.0, disc = 0.0;
    std::optional<double> i0;          // absent on the I2 = 0 locus
    std::optional<double> i1;
    std::optional<std::array<double, 15>> j_alpha;
    std::optional<std::array<TresseDerivatives, 15>> tresse_j; // per J_α
    bool tresse_singular = false;
    std::string error;                 // first pipeline failure, if any
};

struct InvariantOptions {
    int order = 6;
    bool with_tresse = false;
    double i2_tol = 1e-10;
    double tresse_det_tol = 1e-12;
    double regularity_rel_tol = 1e-10;
};

InvariantRecord invariant_record(const PointOperator& a, const InvariantOptions& opt = {});

} // namespace dop4
