#pragma once

#include <vector>

#include "dop4/operator4.hpp"
#include "dop4/wagner.hpp"

namespace dop4 {

/// Symmetric k-form as a fiber polynomial Σ ω_β w1^{β1} w2^{β2}, |β| = k,
/// with jet-valued coefficients. w[j] is the coefficient of w1^{k-j} w2^j.
struct SymForm {
    int degree = 0;
    Point base;
    std::vector<Jet> w;

    SymForm() = default;
    SymForm(int deg, Point p, int order);
};

/// Symmetric k-vector with raw fiber-polynomial coefficients s_β in the
/// same layout (for k = 4, s = (a0, 4a1, 6a2, 4a3, a4)).
struct SymVector {
    int degree = 0;
    Point base;
    std::vector<Jet> s;

    SymVector() = default;
    SymVector(int deg, Point p, int order);

    static SymVector from_quartic(const QuarticT<Jet>& q);
    QuarticT<Jet> to_quartic() const;

    double norm() const;
};

/// The symmetric covariant differential d^s_∇ on fiber polynomials:
///   d^s = Σ w_i ∂_{x_i} - Σ Γ^k_{(ij)} w_i w_j ∂_{w_k},
/// with the Christoffels symmetrized over their two non-direction slots.
/// Degree goes up by one, jet order drops by one.
SymForm dsym(const SymForm& omega, const Christoffel& gamma);

/// Natural convolution ⟨σ, ω⟩ = Σ_β β! s_β ω_β (jet-valued).
Jet pair(const SymVector& sigma, const SymForm& omega);

/// Q(σ_k)(h) = (1/k!) ⟨σ_k, (d^s_∇)^k h⟩ as a jet near the base point.
Jet quantize_jet(const SymVector& sigma, const Christoffel& gamma, const Jet& h);
double quantize(const SymVector& sigma, const Christoffel& gamma, const Jet& h);

/// The full coefficient jets of Q(σ_k), extracted triangularly by feeding
/// monomial test jets of degree <= k.
LocalOperator quantize_coeffs(const SymVector& sigma, const Christoffel& gamma);

struct TotalSymbol {
    SymVector s4, s3, s2, s1, s0;

    const SymVector& operator[](int k) const {
        switch (k) {
            case 4: return s4;
            case 3: return s3;
            case 2: return s2;
            case 1: return s1;
            default: return s0;
        }
    }
};

struct TotalSymbolOptions {
    bool force = false;           // run the peel even when dI0 does not vanish
    double i2_tol = 1e-10;
    double dI0_tol = 1e-7;
    WagnerOptions wagner;
};

struct TotalSymbolResult {
    TotalSymbol symbols;
    Christoffel gamma;
    double dI0_norm = 0.0;        // |∇I0| at the point
    double nabla_residual = 0.0;  // max |∇σ| component after the solve
};

/// Quantization-peeling of an operator at a point with respect to the
/// Wagner connection of its principal symbol. Coefficient jets of order
/// m peel down to σ_k jets of order m - (4 - k) - 1 for the subsymbols.
/// Throws NotConstantType when dI0 exceeds tolerance, unless forced.
TotalSymbolResult total_symbol(const PointOperator& a, const TotalSymbolOptions& opt = {});

} // namespace dop4
