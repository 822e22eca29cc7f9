#include "bskel/geometry.hpp"

#include <cmath>

namespace bskel {

namespace {

void check_pair(Point p, Point q, double beta)
{
    if (!is_finite(p) || !is_finite(q))
        throw Error("non-finite coordinate");
    if (p == q)
        throw Error("coincident points");
    if (!(beta >= 1.0) || std::isinf(beta))
        throw Error("unsupported beta " + std::to_string(beta) + " (need finite beta >= 1)");
}

} // namespace

bool is_finite(Point p)
{
    return std::isfinite(p.x) && std::isfinite(p.y);
}

Lune lune_of(Point p, Point q, double beta)
{
    check_pair(p, q, beta);
    const double h = beta / 2.0;
    Lune l;
    l.c1 = p + h * (q - p);
    l.c2 = q + h * (p - q);
    l.radius = h * std::sqrt(squared_distance(p, q));
    return l;
}

bool lune_contains(Point p, Point q, double beta, Point x, Tolerance tol)
{
    check_pair(p, q, beta);
    if (!(tol.eps >= 0.0))
        throw Error("tolerance must be >= 0");
    return detail::lune_contains_unchecked(p, q, beta, x, tol.eps);
}

bool limit_strip_contains(Point a, Point b, Point x)
{
    if (!is_finite(a) || !is_finite(b))
        throw Error("non-finite coordinate");
    if (a == b)
        throw Error("coincident points");
    return detail::strip_contains_unchecked(a, b, x);
}

} // namespace bskel
