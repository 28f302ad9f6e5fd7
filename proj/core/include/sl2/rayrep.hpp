#pragma once

#include "sl2/frontier.hpp"
#include "sl2/linrec.hpp"

namespace sl2 {

/// Linear representation of a ray, valid from `offset` steps onwards:
/// rep.term(m) = t(origin + (offset + m) * dir).
struct RayRep {
    LinearRep rep;
    long long offset = 0;
    long long period = 0; // merge period q
};

// Constructive rationality of rays for all-ones ultimately periodic
// frontiers and componentwise nonnegative directions: once the projections
// sit in the periodic parts, the word of the n-th ray point grows as
// w_{i+nq} = (u'_i)^n v_i (u_i)^n, so each residue class is
// lambda mu(u'_i)^n mu(v_i) mu(u_i)^n gamma, realized through a Kronecker
// product and merged over the q classes.
RayRep ray_representation(const Frontier& f, const Point& origin, const Point& dir);

} // namespace sl2
