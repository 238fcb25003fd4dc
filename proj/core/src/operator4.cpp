#include "dop4/operator4.hpp"

#include <cmath>

namespace dop4 {

const char* const kSlotNames[slot_count] = {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2",
                                            "b3", "c0", "c1", "c2", "d0", "d1", "e0"};
const double kSlotWeights[slot_count] = {1, 4, 6, 4, 1, 1, 3, 3, 1, 1, 2, 1, 1, 1, 1};
const int kSlotDegree[slot_count] = {4, 4, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 0};
const int kSlotYIndex[slot_count] = {0, 1, 2, 3, 4, 0, 1, 2, 3, 0, 1, 2, 0, 1, 0};

namespace {

int tri_index(int i, int j) {
    int d = i + j;
    return d * (d + 1) / 2 + j;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

Jet iterated_partial(Jet f, int nx, int ny) {
    for (int k = 0; k < nx; ++k) f = partial(f, 1);
    for (int k = 0; k < ny; ++k) f = partial(f, 2);
    return f;
}

} // namespace

LocalOperator::LocalOperator(int max_degree, Point base, int order)
    : max_deg_(max_degree), base_(base),
      q_(static_cast<std::size_t>(Jet::coeff_count(max_degree)), Jet(order, base)) {}

const Jet& LocalOperator::coeff(int i, int j) const {
    return q_[static_cast<std::size_t>(tri_index(i, j))];
}

Jet& LocalOperator::coeff(int i, int j) { return q_[static_cast<std::size_t>(tri_index(i, j))]; }

LocalOperator& LocalOperator::operator+=(const LocalOperator& rhs) {
    if (!(base_ == rhs.base_))
        throw math_error(errc::base_mismatch, "adding local operators at different points");
    if (rhs.max_deg_ > max_deg_) {
        LocalOperator grown(rhs.max_deg_, base_, min_coeff_order());
        for (int d = 0; d <= max_deg_; ++d)
            for (int j = 0; j <= d; ++j) grown.coeff(d - j, j) = coeff(d - j, j);
        *this = grown;
    }
    for (int d = 0; d <= rhs.max_deg_; ++d)
        for (int j = 0; j <= d; ++j) coeff(d - j, j) += rhs.coeff(d - j, j);
    return *this;
}

LocalOperator& LocalOperator::operator-=(const LocalOperator& rhs) {
    if (!(base_ == rhs.base_))
        throw math_error(errc::base_mismatch, "subtracting local operators at different points");
    if (rhs.max_deg_ > max_deg_) {
        LocalOperator grown(rhs.max_deg_, base_, min_coeff_order());
        for (int d = 0; d <= max_deg_; ++d)
            for (int j = 0; j <= d; ++j) grown.coeff(d - j, j) = coeff(d - j, j);
        *this = grown;
    }
    for (int d = 0; d <= rhs.max_deg_; ++d)
        for (int j = 0; j <= d; ++j) coeff(d - j, j) -= rhs.coeff(d - j, j);
    return *this;
}

LocalOperator LocalOperator::compose(const LocalOperator& inner) const {
    if (!(base_ == inner.base_))
        throw math_error(errc::base_mismatch, "composing local operators at different points");
    int out_deg = max_deg_ + inner.max_deg_;
    LocalOperator out(out_deg, base_, std::max(0, inner.min_coeff_order() - max_deg_));
    // (Σ p_γ ∂^γ)(Σ q_δ ∂^δ f) = Σ p_γ binom(γ,β) (∂^β q_δ) ∂^{γ-β+δ} f
    for (int dg = 0; dg <= max_deg_; ++dg) {
        for (int jg = 0; jg <= dg; ++jg) {
            int g1 = dg - jg, g2 = jg;
            const Jet& p = coeff(g1, g2);
            if (p.norm() == 0.0) continue;
            for (int dd = 0; dd <= inner.max_deg_; ++dd) {
                for (int jd = 0; jd <= dd; ++jd) {
                    int d1 = dd - jd, d2 = jd;
                    const Jet& q = inner.coeff(d1, d2);
                    if (q.norm() == 0.0) continue;
                    for (int b1 = 0; b1 <= g1; ++b1) {
                        for (int b2 = 0; b2 <= g2; ++b2) {
                            Jet dq = iterated_partial(q, b1, b2);
                            double w = binom(g1, b1) * binom(g2, b2);
                            out.coeff(g1 - b1 + d1, g2 - b2 + d2) += p * dq * w;
                        }
                    }
                }
            }
        }
    }
    return out;
}

Jet LocalOperator::apply_jet(const Jet& f) const {
    Jet acc = coeff(0, 0) * f;
    for (int d = 1; d <= max_deg_; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Jet& q = coeff(d - j, j);
            if (q.norm() == 0.0) continue;
            acc += q * iterated_partial(f, d - j, j);
        }
    }
    return acc;
}

int LocalOperator::min_coeff_order() const {
    int m = q_[0].order();
    for (const Jet& j : q_) m = std::min(m, j.order());
    return m;
}

PointOperator::PointOperator(Point p, int ord) : base(p), order(ord) {
    c.fill(Jet(ord, p));
}

double PointOperator::apply(const Jet& f) const {
    if (f.order() < 4)
        throw math_error(errc::order_too_low, "applying a 4th-order operator to a jet of order < 4");
    if (!(f.base() == base))
        throw math_error(errc::base_mismatch, "operator and argument live at different points");
    double acc = 0.0;
    for (int s = 0; s < slot_count; ++s) {
        int deg = kSlotDegree[s], j = kSlotYIndex[s], i = deg - j;
        acc += kSlotWeights[s] * c[static_cast<std::size_t>(s)].value() * f.deriv(i, j);
    }
    return acc;
}

Jet PointOperator::apply_jet(const Jet& f) const {
    if (f.order() < 4)
        throw math_error(errc::order_too_low, "applying a 4th-order operator to a jet of order < 4");
    Jet acc = c[slot_e0] * f;
    for (int s = 0; s < slot_count - 1; ++s) {
        int deg = kSlotDegree[s], j = kSlotYIndex[s], i = deg - j;
        acc += c[static_cast<std::size_t>(s)] * iterated_partial(f, i, j) * kSlotWeights[s];
    }
    return acc;
}

LocalOperator PointOperator::local() const {
    LocalOperator op(4, base, order);
    for (int s = 0; s < slot_count; ++s) {
        int deg = kSlotDegree[s], j = kSlotYIndex[s], i = deg - j;
        op.coeff(i, j) = c[static_cast<std::size_t>(s)] * kSlotWeights[s];
    }
    return op;
}

PointOperator PointOperator::from_local(const LocalOperator& op, int target_order) {
    if (op.max_degree() > 4)
        throw math_error(errc::degree_mismatch, "local operator exceeds degree 4");
    PointOperator r(op.base(), target_order);
    for (int s = 0; s < slot_count; ++s) {
        int deg = kSlotDegree[s], j = kSlotYIndex[s], i = deg - j;
        if (deg <= op.max_degree())
            r.c[static_cast<std::size_t>(s)] =
                (op.coeff(i, j) / kSlotWeights[s]).truncated(target_order);
    }
    return r;
}

Operator::Operator() {
    c.fill(Expression::literal(0.0));
}

PointOperator Operator::at(Point p, int order) const {
    PointOperator r(p, order);
    for (int s = 0; s < slot_count; ++s)
        r.c[static_cast<std::size_t>(s)] = c[static_cast<std::size_t>(s)].eval(p, order);
    return r;
}

QuarticT<Jet> Operator::principal_symbol(Point p, int order) const {
    return {c[slot_a0].eval(p, order), c[slot_a1].eval(p, order), c[slot_a2].eval(p, order),
            c[slot_a3].eval(p, order), c[slot_a4].eval(p, order)};
}

double Operator::apply(const Expression& f, Point p) const { return apply(f.eval(p, 4), p); }

double Operator::apply(const Jet& f, Point p) const { return at(p, 0).apply(f); }

MapJet Diffeo::jet(Point p, int order) const {
    return MapJet(x.eval(p, order), y.eval(p, order));
}

Point Diffeo::map(Point p) const { return {x.value(p), y.value(p)}; }

OperatorField field_of(const Operator& op) {
    return [op](Point p, int order) { return op.at(p, order); };
}

PointOperator pushforward(const PointOperator& a, const MapJet& phi) {
    if (a.order < 4)
        throw math_error(errc::order_too_low, "pushforward needs coefficient jets of order >= 4");
    if (!(phi.base() == a.base))
        throw math_error(errc::base_mismatch, "operator and map have different base points");
    if (!phi.invertible())
        throw math_error(errc::singular_jacobian, "map has a singular Jacobian at the point");
    int out_order = a.order - 4;
    Point q0 = phi.value();

    MapJet psi = invert(phi);

    // pushforward coordinate fields: V_i = (dφ^j/dx_i)∘ψ ∂'_j
    LocalOperator vx(1, q0, a.order - 1), vy(1, q0, a.order - 1);
    vx.coeff(1, 0) = compose(partial(phi.x(), 1), psi);
    vx.coeff(0, 1) = compose(partial(phi.y(), 1), psi);
    vy.coeff(1, 0) = compose(partial(phi.x(), 2), psi);
    vy.coeff(0, 1) = compose(partial(phi.y(), 2), psi);

    // W[g1][g2] = Vx^{∘g1} ∘ Vy^{∘g2}
    std::vector<std::vector<LocalOperator>> w(5);
    LocalOperator unit(0, q0, a.order);
    unit.coeff(0, 0) = Jet::constant(1.0, a.order, q0);
    for (int g1 = 0; g1 <= 4; ++g1) {
        for (int g2 = 0; g1 + g2 <= 4; ++g2) {
            if (g1 == 0 && g2 == 0) w[0].push_back(unit);
            else if (g1 == 0) w[0].push_back(vy.compose(w[0][static_cast<std::size_t>(g2 - 1)]));
            else w[static_cast<std::size_t>(g1)].push_back(
                     vx.compose(w[static_cast<std::size_t>(g1 - 1)][static_cast<std::size_t>(g2)]));
        }
    }

    LocalOperator local = a.local();
    LocalOperator acc(4, q0, out_order);
    for (int d = 0; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            int g1 = d - j, g2 = j;
            const Jet& coeff = local.coeff(g1, g2);
            if (coeff.norm() == 0.0) continue;
            LocalOperator mult(0, q0, coeff.order());
            mult.coeff(0, 0) = compose(coeff, psi);
            acc += mult.compose(w[static_cast<std::size_t>(g1)][static_cast<std::size_t>(g2)]);
        }
    }
    return PointOperator::from_local(acc, out_order);
}

PointOperator pushforward(const Operator& a, const Diffeo& phi, Point p, int order) {
    return pushforward(a.at(p, order + 4), phi.jet(p, order + 4));
}

OperatorField pushforward_field(const Operator& a, const Diffeo& phi) {
    return [a, phi](Point p, int order) { return pushforward(a, phi, p, order); };
}

OperatorField pushforward_field(const OperatorField& a, const Diffeo& phi) {
    return [a, phi](Point p, int order) {
        return pushforward(a(p, order + 4), phi.jet(p, order + 4));
    };
}

} // namespace dop4
