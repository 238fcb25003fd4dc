#pragma once

#include <string>
#include <vector>

#include "dop4/invariants.hpp"
#include "dop4/operator4.hpp"
#include "dop4/wagner.hpp"

namespace dop4 {

enum class SignatureType { non_constant, constant_type };

/// Per-point invariant tuples plus the type tag. Non-constant operators
/// carry (I0, I1, J_(1,0), J_(0,1), J_(2,0), J_(1,1), J_(0,2)) by default
/// (the full 15 J_α behind a flag); generic constant-type operators carry
/// the 15 frame invariants; group-type operators (whose coframe is
/// necessarily degenerate) carry (I0, J_(0,0)).
struct Signature {
    SignatureType type = SignatureType::non_constant;
    GroupType group_type = GroupType::not_constant_type;
    std::vector<std::vector<double>> tuples;
    int skipped = 0;
};

struct SignatureOptions {
    int order = 6;
    bool full_alpha = false;
    double i2_tol = 1e-10;
    double dI0_tol = 1e-7;
    double regularity_rel_tol = 1e-10;
    int min_regular_points = 3;
};

Signature signature(const OperatorField& field, const std::vector<Point>& points,
                    const SignatureOptions& opt = {});

struct Verdict {
    enum class Kind { indistinguishable, distinct, incomparable };
    Kind kind = Kind::incomparable;
    double distance = 0.0;
    int witness = -1;      // index into the first signature's tuples
    std::string reason;
};

/// Symmetric Hausdorff distance between the tuple sets in the
/// max-relative metric; below tol the signatures are indistinguishable at
/// the sampled points.
Verdict compare(const Signature& s1, const Signature& s2, double tol = 1e-6);

struct DiffeoCheck {
    bool equivalent = false;
    double max_residual = 0.0;
};

/// Direct check that φ carries A to B: pushes A forward at every sample
/// point and compares all 15 coefficients against B at the image point
/// (relative tolerance).
DiffeoCheck verify_diffeo(const OperatorField& a, const OperatorField& b, const Diffeo& phi,
                          const std::vector<Point>& points, double tol = 1e-8);

/// Uniform grid over [x0,x1]×[y0,y1].
std::vector<Point> grid_points(double x0, double x1, int nx, double y0, double y1, int ny);

} // namespace dop4
