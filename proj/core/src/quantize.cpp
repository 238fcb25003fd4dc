#include "dop4/quantize.hpp"

#include <cmath>

namespace dop4 {

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// jet of (x-x0)^i (y-y0)^j at (x0,y0)
Jet monomial_jet(int i, int j, int order, Point base) {
    Jet m(order, base);
    if (i + j <= order) m.set_coeff(i, j, 1.0);
    return m;
}

} // namespace

SymForm::SymForm(int deg, Point p, int order)
    : degree(deg), base(p), w(static_cast<std::size_t>(deg) + 1, Jet(order, p)) {}

SymVector::SymVector(int deg, Point p, int order)
    : degree(deg), base(p), s(static_cast<std::size_t>(deg) + 1, Jet(order, p)) {}

SymVector SymVector::from_quartic(const QuarticT<Jet>& q) {
    SymVector v(4, q.a0.base(), q.a0.order());
    for (int i = 0; i < 5; ++i) v.s[static_cast<std::size_t>(i)] = q[i] * detail::kBinom4[i];
    return v;
}

QuarticT<Jet> SymVector::to_quartic() const {
    if (degree != 4)
        throw math_error(errc::degree_mismatch, "only degree-4 symbols convert to quartics");
    return {s[0], s[1] / 4.0, s[2] / 6.0, s[3] / 4.0, s[4]};
}

double SymVector::norm() const {
    double m = 0.0;
    for (const Jet& j : s) m = std::max(m, std::abs(j.value()));
    return m;
}

SymForm dsym(const SymForm& omega, const Christoffel& gamma) {
    for (const Jet& j : omega.w)
        if (j.order() < 1)
            throw math_error(errc::order_too_low, "d^s needs coefficient jets of order >= 1");
    int k = omega.degree;
    SymForm out(k + 1, omega.base, omega.w[0].order() - 1);

    // transport part: ω'_{β+e_i} += ∂_i ω_β
    for (int j = 0; j <= k; ++j) {
        const Jet& wb = omega.w[static_cast<std::size_t>(j)];
        out.w[static_cast<std::size_t>(j)] += partial(wb, 1);     // +e_1 keeps y-count j
        out.w[static_cast<std::size_t>(j + 1)] += partial(wb, 2); // +e_2
    }

    // connection part: ω'_{β - e_m + e_i + e_j} -= Γ̂^m_{ij} β_m ω_β
    for (int j = 0; j <= k; ++j) {
        const Jet& wb = omega.w[static_cast<std::size_t>(j)];
        int beta[2] = {k - j, j};
        for (int m = 0; m < 2; ++m) {
            if (beta[m] == 0) continue;
            for (int i = 0; i < 2; ++i) {
                for (int jj = 0; jj < 2; ++jj) {
                    Jet ghat = (gamma.g[m][i][jj] + gamma.g[m][jj][i]) * 0.5;
                    // resulting beta': y-count = j - (m==1) + (i==1) + (jj==1)
                    int ycount = j - (m == 1 ? 1 : 0) + (i == 1 ? 1 : 0) + (jj == 1 ? 1 : 0);
                    out.w[static_cast<std::size_t>(ycount)] -= ghat * wb * static_cast<double>(beta[m]);
                }
            }
        }
    }
    return out;
}

Jet pair(const SymVector& sigma, const SymForm& omega) {
    if (sigma.degree != omega.degree)
        throw math_error(errc::degree_mismatch, "pairing forms of different degree");
    int k = sigma.degree;
    Jet acc = sigma.s[0] * omega.w[0] * (factorial(k) * factorial(0));
    for (int j = 1; j <= k; ++j)
        acc += sigma.s[static_cast<std::size_t>(j)] * omega.w[static_cast<std::size_t>(j)] *
               (factorial(k - j) * factorial(j));
    return acc;
}

Jet quantize_jet(const SymVector& sigma, const Christoffel& gamma, const Jet& h) {
    int k = sigma.degree;
    if (h.order() < k)
        throw math_error(errc::order_too_low, "quantization argument jet is too shallow");
    SymForm omega(0, sigma.base, h.order());
    omega.w[0] = h;
    for (int step = 0; step < k; ++step) omega = dsym(omega, gamma);
    return pair(sigma, omega) / factorial(k);
}

double quantize(const SymVector& sigma, const Christoffel& gamma, const Jet& h) {
    return quantize_jet(sigma, gamma, h).value();
}

LocalOperator quantize_coeffs(const SymVector& sigma, const Christoffel& gamma) {
    int k = sigma.degree;
    Point base = sigma.base;
    int probe_order = sigma.s[0].order() + k + 1;
    LocalOperator out(k, base, 0);
    // feed monomials by increasing degree; peel lower contributions
    for (int d = 0; d <= k; ++d) {
        for (int j = 0; j <= d; ++j) {
            int g1 = d - j, g2 = j;
            Jet h = monomial_jet(g1, g2, probe_order, base);
            Jet value = quantize_jet(sigma, gamma, h);
            for (int dd = 0; dd < d; ++dd) {
                for (int jj = 0; jj <= dd; ++jj) {
                    int e1 = dd - jj, e2 = jj;
                    if (e1 > g1 || e2 > g2) continue;
                    // ∂^δ h = γ!/(γ-δ)! monomial(γ-δ)
                    double f = factorial(g1) / factorial(g1 - e1) * factorial(g2) /
                               factorial(g2 - e2);
                    Jet mono = monomial_jet(g1 - e1, g2 - e2, value.order(), base);
                    value -= out.coeff(e1, e2) * mono * f;
                }
            }
            out.coeff(g1, g2) = value / (factorial(g1) * factorial(g2));
        }
    }
    return out;
}

TotalSymbolResult total_symbol(const PointOperator& a, const TotalSymbolOptions& opt) {
    QuarticT<Jet> sig = a.symbol();
    Jet i0 = absolute_invariant(sig, opt.i2_tol);
    TotalSymbolResult res;
    res.dI0_norm = std::max(std::abs(i0.coeff(1, 0)), std::abs(i0.coeff(0, 1)));
    if (res.dI0_norm > opt.dI0_tol * (1.0 + std::abs(i0.value())) && !opt.force)
        throw math_error(errc::not_constant_type,
                         "total symbol needs a constant-type principal symbol (use force to override)");

    WagnerSolution w = solve_connection(sig, opt.wagner);
    res.gamma = w.gamma;
    auto nabla = covariant_derivative_symbol(sig, w.gamma);
    for (const auto& dir : nabla)
        for (const Jet& component : dir)
            res.nabla_residual = std::max(res.nabla_residual, std::abs(component.value()));

    LocalOperator rest = a.local();
    for (int k = 4; k >= 1; --k) {
        SymVector sk(k, a.base, rest.coeff(k, 0).order());
        for (int j = 0; j <= k; ++j) sk.s[static_cast<std::size_t>(j)] = rest.coeff(k - j, j);
        switch (k) {
            case 4: res.symbols.s4 = sk; break;
            case 3: res.symbols.s3 = sk; break;
            case 2: res.symbols.s2 = sk; break;
            case 1: res.symbols.s1 = sk; break;
        }
        rest -= quantize_coeffs(sk, res.gamma);
    }
    SymVector s0(0, a.base, rest.coeff(0, 0).order());
    s0.s[0] = rest.coeff(0, 0);
    res.symbols.s0 = s0;
    return res;
}

} // namespace dop4
