#include "dop4/wagner.hpp"

#include <cmath>

#include "dop4/linsolve.hpp"

namespace dop4 {

Christoffel::Christoffel(Point p, int ord) : base(p), order(ord) {
    for (auto& a : g)
        for (auto& b : a) b.fill(Jet(ord, p));
}

double Christoffel::max_value() const {
    double m = 0.0;
    for (const auto& a : g)
        for (const auto& b : a)
            for (const auto& j : b) m = std::max(m, std::abs(j.value()));
    return m;
}

double Torsion::norm() const {
    double m = 0.0;
    for (const auto& a : t)
        for (const auto& b : a)
            for (const auto& j : b) m = std::max(m, std::abs(j.value()));
    return m;
}

double Curvature::norm() const {
    double m = 0.0;
    for (const auto& a : r)
        for (const auto& b : a)
            for (const auto& c : b)
                for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Coefficient structure of ∇_l a_c = ∂_l a_c
//   + (4-c) [ a_c Γ^1_{l1} + a_{c+1} Γ^1_{l2} ] + c [ a_{c-1} Γ^2_{l1} + a_c Γ^2_{l2} ].
// Unknown column layout per direction: (Γ^1_{l1}, Γ^1_{l2}, Γ^2_{l1}, Γ^2_{l2}).
void equation_row(const QuarticT<Jet>& s, int c, std::array<Jet, 4>& row) {
    Jet zero = s.a0 * 0.0;
    row = {zero, zero, zero, zero};
    if (c < 4) {
        row[0] = s[c] * static_cast<double>(4 - c);
        row[1] = s[c + 1] * static_cast<double>(4 - c);
    }
    if (c > 0) {
        row[2] = s[c - 1] * static_cast<double>(c);
        row[3] = s[c] * static_cast<double>(c);
    }
}

} // namespace

WagnerSolution solve_connection(const QuarticT<Jet>& sigma, const WagnerOptions& opt) {
    const Jet& probe = sigma.a0;
    Point base = probe.base();
    int in_order = probe.order();
    if (in_order < 1)
        throw math_error(errc::order_too_low, "connection solve needs symbol jets of order >= 1");
    int exc = opt.excluded_component;
    if (exc < 0 || exc > 4)
        throw math_error(errc::domain_error, "excluded component index out of range");

    double disc = constant_part(discriminant(sigma));
    double scale = sigma.norm();
    if (std::abs(disc) <= opt.regularity_rel_tol * std::pow(std::max(scale, 1e-30), 6))
        throw math_error(errc::singular_system, "symbol is not regular (discriminant vanishes)");

    // The two directions share the same 4x4 block; assemble the full 8x8
    // anyway to keep the contract literal.
    LinearSystem<Jet> sys(8, Jet(in_order, base));
    std::vector<Jet> rhs(8, Jet(in_order, base));
    int r = 0;
    for (int l = 1; l <= 2; ++l) {
        for (int c = 0; c <= 4; ++c) {
            if (c == exc) continue;
            std::array<Jet, 4> row;
            equation_row(sigma, c, row);
            for (int u = 0; u < 4; ++u) sys.at(r, 4 * (l - 1) + u) = row[static_cast<std::size_t>(u)];
            rhs[static_cast<std::size_t>(r)] = -partial(sigma[c], l);
            ++r;
        }
    }

    double det = sys.det_value();
    std::vector<Jet> x;
    try {
        x = sys.solve(rhs, opt.pivot_tol);
    } catch (const math_error& e) {
        if (e.code() == errc::singular_system && std::abs(disc) > 0.0)
            throw math_error(errc::non_unit_pivot,
                             "excluded system is singular although the symbol is regular");
        throw;
    }

    WagnerSolution out;
    out.gamma = Christoffel(base, in_order - 1);
    out.system_det = det;
    for (int l = 0; l < 2; ++l) {
        // columns: Γ^1_{l,1}, Γ^1_{l,2}, Γ^2_{l,1}, Γ^2_{l,2}
        out.gamma.g[0][l][0] = x[static_cast<std::size_t>(4 * l + 0)].truncated(in_order - 1);
        out.gamma.g[0][l][1] = x[static_cast<std::size_t>(4 * l + 1)].truncated(in_order - 1);
        out.gamma.g[1][l][0] = x[static_cast<std::size_t>(4 * l + 2)].truncated(in_order - 1);
        out.gamma.g[1][l][1] = x[static_cast<std::size_t>(4 * l + 3)].truncated(in_order - 1);
    }

    auto nabla = covariant_derivative_symbol(sigma, out.gamma);
    out.excluded_residuals = {nabla[0][static_cast<std::size_t>(exc)].value(),
                              nabla[1][static_cast<std::size_t>(exc)].value()};
    return out;
}

std::array<std::array<Jet, 5>, 2> covariant_derivative_symbol(const QuarticT<Jet>& sigma,
                                                              const Christoffel& gamma) {
    std::array<std::array<Jet, 5>, 2> out;
    for (int l = 0; l < 2; ++l) {
        for (int c = 0; c <= 4; ++c) {
            Jet acc = partial(sigma[c], l + 1);
            if (c < 4)
                acc += (sigma[c] * gamma.g[0][l][0] + sigma[c + 1] * gamma.g[0][l][1]) *
                       static_cast<double>(4 - c);
            if (c > 0)
                acc += (sigma[c - 1] * gamma.g[1][l][0] + sigma[c] * gamma.g[1][l][1]) *
                       static_cast<double>(c);
            out[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] = acc;
        }
    }
    return out;
}

Torsion torsion(const Christoffel& gamma) {
    Torsion t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                t.t[i][j][k] = gamma.g[i][j][k] - gamma.g[i][k][j];
    for (int k = 0; k < 2; ++k)
        t.theta[k] = t.t[0][0][k] + t.t[1][1][k];
    return t;
}

Curvature curvature(const Christoffel& gamma) {
    if (gamma.order < 1)
        throw math_error(errc::order_too_low, "curvature needs Christoffel jets of order >= 1");
    Curvature out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    double v = partial(gamma.g[i][l][j], k + 1).value() -
                               partial(gamma.g[i][k][j], l + 1).value();
                    for (int m = 0; m < 2; ++m)
                        v += gamma.value(i, k, m) * gamma.value(m, l, j) -
                             gamma.value(i, l, m) * gamma.value(m, k, j);
                    out.r[i][j][k][l] = v;
                }
    return out;
}

std::array<double, 8> torsion_parallel_residual(const Christoffel& gamma, const Torsion& t) {
    if (gamma.order < 1)
        throw math_error(errc::order_too_low, "parallel-torsion residual needs jets of order >= 1");
    std::array<double, 8> out{};
    int n = 0;
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (auto [j, k] : {std::pair{0, 1}, std::pair{1, 0}}) {
                double v = partial(t.t[i][j][k], l + 1).value();
                for (int m = 0; m < 2; ++m)
                    v += gamma.value(i, l, m) * t.t[m][j][k].value() -
                         gamma.value(m, l, j) * t.t[i][m][k].value() -
                         gamma.value(m, l, k) * t.t[i][j][m].value();
                out[static_cast<std::size_t>(n++)] = v;
            }
    return out;
}

const char* group_type_name(GroupType t) {
    switch (t) {
        case GroupType::abelian: return "Abelian";
        case GroupType::solvable: return "Solvable";
        case GroupType::non_parallel_torsion: return "NonParallelTorsion";
        case GroupType::not_constant_type: return "NotConstantType";
    }
    return "?";
}

GroupTypeReport group_type_classify(const SymbolField& sigma, const std::vector<Point>& samples,
                                    const GroupTypeOptions& opt) {
    GroupTypeReport rep{GroupType::abelian, 0.0, 0.0, 0.0};
    for (Point p : samples) {
        QuarticT<Jet> s = sigma(p, 2);
        Jet i0 = absolute_invariant(s, opt.i2_tol);
        double grad = std::max(std::abs(i0.coeff(1, 0)), std::abs(i0.coeff(0, 1)));
        rep.max_dI0 = std::max(rep.max_dI0, grad);
        if (grad > opt.dI0_tol * (1.0 + std::abs(i0.value()))) {
            rep.type = GroupType::not_constant_type;
        }
    }
    if (rep.type == GroupType::not_constant_type) return rep;

    for (Point p : samples) {
        QuarticT<Jet> s = sigma(p, 2);
        WagnerSolution w = solve_connection(s, opt.wagner);
        Torsion t = torsion(w.gamma);
        rep.max_torsion = std::max(rep.max_torsion, t.norm());
        auto res = torsion_parallel_residual(w.gamma, t);
        for (double v : res) rep.max_parallel_residual = std::max(rep.max_parallel_residual, std::abs(v));
    }
    if (rep.max_torsion <= opt.torsion_tol)
        rep.type = GroupType::abelian;
    else if (rep.max_parallel_residual <= opt.parallel_tol)
        rep.type = GroupType::solvable;
    else
        rep.type = GroupType::non_parallel_torsion;
    return rep;
}

} // namespace dop4
