#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dop4/expr.hpp"
#include "dop4/jet.hpp"
#include "dop4/quartic.hpp"

namespace dop4 {

/// Coefficient slots of a 4th-order operator in the binomial convention:
///   A = a0 dx^4 + 4 a1 dx^3 dy + 6 a2 dx^2 dy^2 + 4 a3 dx dy^3 + a4 dy^4
///     + b0 dx^3 + 3 b1 dx^2 dy + 3 b2 dx dy^2 + b3 dy^3
///     + c0 dx^2 + 2 c1 dx dy + c2 dy^2 + d0 dx + d1 dy + e0.
enum CoefficientSlot : int {
    slot_a0 = 0, slot_a1, slot_a2, slot_a3, slot_a4,
    slot_b0, slot_b1, slot_b2, slot_b3,
    slot_c0, slot_c1, slot_c2,
    slot_d0, slot_d1,
    slot_e0,
    slot_count
};

extern const char* const kSlotNames[slot_count];
extern const double kSlotWeights[slot_count]; // binomial weight per slot
extern const int kSlotDegree[slot_count];
extern const int kSlotYIndex[slot_count];     // y-derivative count of the slot's monomial

/// Raw differential operator at a point: jets q_γ for every multi-index
/// |γ| <= max_degree, representing Σ q_γ ∂^γ with plain (unweighted)
/// coefficients. The workhorse behind pushforward and quantization.
class LocalOperator {
public:
    LocalOperator(int max_degree, Point base, int order);

    int max_degree() const { return max_deg_; }
    const Point& base() const { return base_; }

    const Jet& coeff(int i, int j) const;
    Jet& coeff(int i, int j);

    LocalOperator& operator+=(const LocalOperator& rhs);
    LocalOperator& operator-=(const LocalOperator& rhs);

    /// Composition this ∘ inner via the Leibniz rule; the result degree is
    /// the sum of degrees and coefficient jet orders drop accordingly.
    LocalOperator compose(const LocalOperator& inner) const;

    /// Jet of (this)(f) near the base point.
    Jet apply_jet(const Jet& f) const;
    double apply(const Jet& f) const { return apply_jet(f).value(); }

    /// Lowest jet order among stored coefficients.
    int min_coeff_order() const;

private:
    int max_deg_;
    Point base_;
    std::vector<Jet> q_;
};

/// The 15 coefficient jets of a 4th-order operator at one point, all
/// sharing base and order, binomial convention.
struct PointOperator {
    Point base;
    int order = 0;
    std::array<Jet, slot_count> c;

    PointOperator() = default;
    PointOperator(Point p, int ord);

    QuarticT<Jet> symbol() const { return {c[0], c[1], c[2], c[3], c[4]}; }

    /// A(f) at the base point; f must carry a jet of order >= 4.
    double apply(const Jet& f) const;
    /// Jet of A(f) near the base point (orders permitting).
    Jet apply_jet(const Jet& f) const;

    LocalOperator local() const;
    static PointOperator from_local(const LocalOperator& op, int target_order);
};

/// A 4th-order operator with expression coefficients over the chart.
struct Operator {
    std::array<Expression, slot_count> c;

    Operator();

    PointOperator at(Point p, int order) const;
    QuarticT<Jet> principal_symbol(Point p, int order) const;
    double apply(const Expression& f, Point p) const;
    double apply(const Jet& f, Point p) const;
};

/// Chart diffeomorphism given by component expressions; the inverse pair
/// is optional (jets of the inverse are computed when absent).
struct Diffeo {
    Expression x, y;
    std::optional<std::pair<Expression, Expression>> inverse;

    MapJet jet(Point p, int order) const;
    Point map(Point p) const;
};

using OperatorField = std::function<PointOperator(Point, int)>;

OperatorField field_of(const Operator& op);

/// Pushforward of an operator across a chart map, at the jet level: the
/// coefficients of φ_*A at φ(p) to order (A.order - 4), characterized by
/// (φ_*A)(g)(φ(p)) = A(g∘φ)(p). phi must be invertible at p and carry at
/// least A's jet order.
PointOperator pushforward(const PointOperator& a, const MapJet& phi);
PointOperator pushforward(const Operator& a, const Diffeo& phi, Point p, int order);

/// Field evaluator of φ_*A over the image chart, sampled at source points:
/// returns the pushforward at φ(p) for each requested source point p.
OperatorField pushforward_field(const Operator& a, const Diffeo& phi);
OperatorField pushforward_field(const OperatorField& a, const Diffeo& phi);

} // namespace dop4
