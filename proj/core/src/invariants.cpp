#include "dop4/invariants.hpp"

#include <cmath>

namespace dop4 {

const std::array<std::array<int, 2>, 15> kAlphaOrder = {{{0, 0},
                                                         {1, 0},
                                                         {0, 1},
                                                         {2, 0},
                                                         {1, 1},
                                                         {0, 2},
                                                         {3, 0},
                                                         {2, 1},
                                                         {1, 2},
                                                         {0, 3},
                                                         {4, 0},
                                                         {3, 1},
                                                         {2, 2},
                                                         {1, 3},
                                                         {0, 4}}};

Jet I0_jet(const QuarticT<Jet>& sigma, double i2_tol) {
    return absolute_invariant(sigma, i2_tol);
}

Jet I1_jet(const QuarticT<Jet>& sigma, double i2_tol) {
    Jet i0 = I0_jet(sigma, i2_tol);
    Jet u = partial(i0, 1);
    Jet v = partial(i0, 2);
    Jet u2 = u * u, v2 = v * v;
    // fiber polynomial of the symbol at the covector (u, v)
    return sigma.a0 * (u2 * u2) + 4.0 * (sigma.a1 * (u2 * u) * v) + 6.0 * (sigma.a2 * u2 * v2) +
           4.0 * (sigma.a3 * u * (v2 * v)) + sigma.a4 * (v2 * v2);
}

double I1(const PointOperator& a, double i2_tol) { return I1_jet(a.symbol(), i2_tol).value(); }

namespace {

Jet invariant_product_jet(const PointOperator& a, std::array<int, 2> alpha, double i2_tol) {
    QuarticT<Jet> sig = a.symbol();
    Jet i0 = I0_jet(sig, i2_tol);
    Jet f = Jet::constant(1.0, i0.order(), a.base);
    for (int k = 0; k < alpha[0]; ++k) f = f * i0;
    if (alpha[1] > 0) {
        Jet i1 = I1_jet(sig, i2_tol);
        for (int k = 0; k < alpha[1]; ++k) f = f * i1;
    }
    return f;
}

} // namespace

double J_alpha(const PointOperator& a, std::array<int, 2> alpha, double i2_tol) {
    return a.apply(invariant_product_jet(a, alpha, i2_tol));
}

Jet J_alpha_jet(const PointOperator& a, std::array<int, 2> alpha, double i2_tol) {
    return a.apply_jet(invariant_product_jet(a, alpha, i2_tol));
}

TresseDerivatives tresse(const QuarticT<Jet>& sigma, const Jet& target, double det_tol,
                         double i2_tol) {
    if (target.order() < 1)
        throw math_error(errc::order_too_low, "Tresse target jet must have order >= 1");
    Jet i0 = I0_jet(sigma, i2_tol);
    Jet i1 = I1_jet(sigma, i2_tol);
    double m00 = partial(i0, 1).value(), m10 = partial(i0, 2).value();
    double m01 = partial(i1, 1).value(), m11 = partial(i1, 2).value();
    double det = m00 * m11 - m01 * m10;
    double scale = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11), 1e-300});
    if (std::abs(det) <= det_tol * scale * scale)
        throw math_error(errc::singular_tresse_frame, "dI0 and dI1 are dependent at this point");
    double tx = partial(target, 1).value(), ty = partial(target, 2).value();
    TresseDerivatives out;
    out.d_dI0 = (tx * m11 - m01 * ty) / det;
    out.d_dI1 = (m00 * ty - tx * m10) / det;
    return out;
}

Coframe coframe(const Christoffel& gamma, const Torsion& t, const CoframeOptions& opt) {
    if (gamma.order < 1)
        throw math_error(errc::order_too_low, "coframe needs Christoffel jets of order >= 1");
    double tnorm = std::max(std::abs(t.theta[0].value()), std::abs(t.theta[1].value()));
    if (tnorm <= opt.torsion_tol)
        throw math_error(errc::zero_torsion, "torsion form vanishes; no invariant coframe");

    Coframe cf{};
    cf.theta1 = {t.theta[0].value(), t.theta[1].value()};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            double v = partial(t.theta[k], j + 1).value();
            for (int m = 0; m < 2; ++m) v -= gamma.value(m, j, k) * t.theta[m].value();
            cf.B[j][k] = v;
        }
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            cf.g[j][k] = 0.5 * (cf.B[j][k] + cf.B[k][j]);
            cf.a[j][k] = 0.5 * (cf.B[j][k] - cf.B[k][j]);
        }
    cf.det_g = cf.g[0][0] * cf.g[1][1] - cf.g[0][1] * cf.g[1][0];
    double gscale = std::max({std::abs(cf.g[0][0]), std::abs(cf.g[0][1]), std::abs(cf.g[1][1]), 1e-300});
    if (std::abs(cf.det_g) <= opt.metric_tol * gscale * gscale)
        throw math_error(errc::degenerate_metric, "symmetric part of the coframe tensor is degenerate");

    double ginv[2][2] = {{cf.g[1][1] / cf.det_g, -cf.g[0][1] / cf.det_g},
                         {-cf.g[1][0] / cf.det_g, cf.g[0][0] / cf.det_g}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cf.A[i][j] = 0.0;
            for (int k = 0; k < 2; ++k) cf.A[i][j] += ginv[i][k] * cf.a[k][j];
        }
    // θ2_j = A^i_j θ1_i
    for (int j = 0; j < 2; ++j)
        cf.theta2[static_cast<std::size_t>(j)] =
            cf.A[0][j] * cf.theta1[0] + cf.A[1][j] * cf.theta1[1];

    cf.wedge = cf.theta1[0] * cf.theta2[1] - cf.theta1[1] * cf.theta2[0];
    double tscale = std::max({std::abs(cf.theta1[0]), std::abs(cf.theta1[1]),
                              std::abs(cf.theta2[0]), std::abs(cf.theta2[1]), 1e-300});
    if (std::abs(cf.wedge) <= opt.coframe_tol * tscale * tscale)
        throw math_error(errc::degenerate_coframe, "θ1 ∧ θ2 vanishes; coframe is degenerate");

    // dual frame: rows of Θ are θ1, θ2; E = Θ^{-1} has e_i in column i
    double th[2][2] = {{cf.theta1[0], cf.theta1[1]}, {cf.theta2[0], cf.theta2[1]}};
    double det = th[0][0] * th[1][1] - th[0][1] * th[1][0];
    cf.frame[0][0] = th[1][1] / det;
    cf.frame[1][0] = -th[0][1] / det;
    cf.frame[0][1] = -th[1][0] / det;
    cf.frame[1][1] = th[0][0] / det;
    return cf;
}

std::array<double, 15> frame_invariants(const TotalSymbol& ts, const Coframe& cf) {
    // ∂_j = Σ_i (E^{-1})^i_j e_i; E^{-1} = Θ (rows θ1, θ2): (E^{-1})^i_j = θ_i[j]
    Mat2T<double> n{cf.theta1[0], cf.theta1[1], cf.theta2[0], cf.theta2[1]};
    std::array<double, 15> out{};
    int pos = 0;
    for (int k = 4; k >= 0; --k) {
        const SymVector& sv = ts[k];
        std::vector<double> s(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) s[static_cast<std::size_t>(j)] = sv.s[static_cast<std::size_t>(j)].value();
        std::vector<double> dec = sym_transform(k, s, n);
        for (int j = 0; j <= k; ++j) out[static_cast<std::size_t>(pos++)] = dec[static_cast<std::size_t>(j)];
    }
    return out;
}

ConstantTypeReport constant_type_test(const SymbolField& sigma, const std::vector<Point>& samples,
                                      double tol, double i2_tol) {
    ConstantTypeReport rep;
    for (Point p : samples) {
        Jet i0 = absolute_invariant(sigma(p, 1), i2_tol);
        double grad = std::max(std::abs(i0.coeff(1, 0)), std::abs(i0.coeff(0, 1)));
        rep.max_dI0 = std::max(rep.max_dI0, grad);
        if (grad > tol * (1.0 + std::abs(i0.value()))) rep.constant = false;
    }
    return rep;
}

std::int64_t codim_regular_orbit(int n, int k) {
    if (n < 1 || k < 0)
        throw math_error(errc::domain_error, "codim_regular_orbit needs n >= 1, k >= 0");
    // binom(n+k-1, k)
    std::int64_t b = 1;
    for (int t = 1; t <= k; ++t) b = b * (n - 1 + t) / t;
    return b - static_cast<std::int64_t>(n) * n;
}

InvariantRecord invariant_record(const PointOperator& a, const InvariantOptions& opt) {
    InvariantRecord rec;
    rec.point = a.base;
    QuarticT<Jet> sig = a.symbol();
    rec.i2 = constant_part(hilbert_i2(sig));
    rec.i3 = constant_part(hilbert_i3(sig));
    rec.disc = constant_part(discriminant(sig));
    double scale = std::pow(std::max(sig.norm(), 1e-30), 6);
    rec.regular = std::abs(rec.disc) > opt.regularity_rel_tol * scale;
    try {
        rec.i0 = I0_jet(sig, opt.i2_tol).value();
        rec.i1 = I1_jet(sig, opt.i2_tol).value();
        std::array<double, 15> js{};
        for (std::size_t t = 0; t < kAlphaOrder.size(); ++t)
            js[t] = J_alpha(a, kAlphaOrder[t], opt.i2_tol);
        rec.j_alpha = js;
        if (opt.with_tresse) {
            std::array<TresseDerivatives, 15> td{};
            try {
                for (std::size_t t = 0; t < kAlphaOrder.size(); ++t)
                    td[t] = tresse(sig, J_alpha_jet(a, kAlphaOrder[t], opt.i2_tol),
                                   opt.tresse_det_tol, opt.i2_tol);
                rec.tresse_j = td;
            } catch (const math_error& e) {
                if (e.code() != errc::singular_tresse_frame) throw;
                rec.tresse_singular = true;
            }
        }
    } catch (const math_error& e) {
        rec.error = e.what();
    }
    return rec;
}

} // namespace dop4
