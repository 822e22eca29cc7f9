#pragma once

#include <stdexcept>
#include <string>

namespace bskel {

/// Raised for any violated precondition of the library (bad beta,
/// coincident points, malformed input files, infeasible configurations).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double squared_distance(Point a, Point b) { return dot(a - b, a - b); }

/// Both coordinates finite.
bool is_finite(Point p);

/// Intersection of two closed discs of equal radius. For a pair (p, q) and
/// a given beta the centers are the affine combinations
/// (1 - beta/2) p + (beta/2) q and (beta/2) p + (1 - beta/2) q.
struct Lune {
    Point c1;
    Point c2;
    double radius = 0.0;
};

/// Absolute slack on squared-distance comparisons. eps = 0 is the exact
/// closed-lune test; eps > 0 shrinks the lune.
struct Tolerance {
    double eps = 0.0;
};

Lune lune_of(Point p, Point q, double beta);

/// True iff x lies in both closed discs of the beta-lune of (p, q), i.e.
/// |x - c|^2 <= radius^2 - eps for both centers. Boundary points count, so
/// they block an edge; the endpoints p and q themselves never do.
///
/// The comparison is evaluated in the expanded form
///   |x - p|^2 - beta * (x - p).(q - p) <= -eps
/// which equals |x - c1|^2 - radius^2 algebraically but avoids cancellation
/// between two huge terms when beta is large. It is also monotone in beta
/// under IEEE rounding, so nested lunes stay nested in floating point.
bool lune_contains(Point p, Point q, double beta, Point x, Tolerance tol = {});

/// Membership in the open strip between the two lines through a and b that
/// are perpendicular to ab: 0 < (x - a).(b - a) < |b - a|^2, evaluated as
/// (x - a).(b - a) > 0 and (x - b).(a - b) > 0. This is the beta -> infinity
/// limit of the lune and contains every finite-beta lune of (a, b). Unlike
/// the lune it is open: points on the two lines are outside.
bool limit_strip_contains(Point a, Point b, Point x);

namespace detail {

// Unchecked predicates for inner loops; callers validate the pair once.
inline bool lune_contains_unchecked(Point p, Point q, double beta, Point x, double eps)
{
    const Point px = x - p;
    const Point qx = x - q;
    const Point pq = q - p;
    return dot(px, px) - beta * dot(px, pq) <= -eps && dot(qx, qx) + beta * dot(qx, pq) <= -eps &&
           !(x == p) && !(x == q);
}

inline bool strip_contains_unchecked(Point a, Point b, Point x)
{
    return dot(x - a, b - a) > 0.0 && dot(x - b, a - b) > 0.0;
}

} // namespace detail

} // namespace bskel
