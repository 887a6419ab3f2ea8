#ifndef ACRI_CONSTRUCTIONS_HPP
#define ACRI_CONSTRUCTIONS_HPP

#include <vector>

#include "acri/connectives.hpp"
#include "acri/generator.hpp"
#include "acri/grid.hpp"
#include "acri/implications.hpp"
#include "acri/report.hpp"

namespace acri {

/// The greatest aggregation function making (A, I) A-conditional:
/// A_I(a,b) = inf{c in [0,1] : I(a,c) >= b}, evaluated by bisection over c
/// (valid because I(a,.) is nondecreasing). The comparison carries a 1e-12
/// slack to absorb floating-point noise at plateau edges. Requires
/// I(1,b) < 1 for b < 1, otherwise the result would not be an aggregation
/// function; violations are rejected at construction.
Aggregator aggregator_from_implication(const Implication& i,
                                       double tol = 1e-6);

/// Closed form for f-implications: A(x,y) = f^-1(f(y)/x) for x != 0,
/// A(0,y) = 0. Matches aggregator_from_implication(f_implication(f)).
Aggregator aggregator_for_f_implication(const Generator& f);

/// Closed form for g-implications: A(x,y) = g^-1(x g(y)) for x != 0.
Aggregator aggregator_for_g_implication(const Generator& g);

/// Closed form for power-based implications of Archimedean t-norms:
/// A(x,y) = t^-1(t(x)/y) for y != 0, else 0.
Aggregator aggregator_for_tpower(const Generator& t);

/// Closed form for (A,N)-implications of ordinal-sum continuous t-conorms.
/// The generator difference in the Archimedean branch is oriented as
/// f(y~) - f(N(x)~), which is the orientation consistent with the
/// inf-construction (the transposed difference would be negative whenever
/// the branch is reachable). A point with N(x) inside a summand but y above
/// it falls through to the plain y branch for the same reason.
Aggregator aggregator_for_ordinal_sum_sn(
    std::vector<Aggregator::OrdinalSummand> summands, const Negation& n);

/// Closed forms for probabilistic implications of Archimedean copulas with
/// additive generator c:
///   plain:     A(x,y) = c^-1(c(xy) - c(x))      for x,y > 0, else 0
///   s-variant: A(x,y) = c^-1(c(x+y-1) - c(x))   for x+y > 1, else 0
Aggregator aggregator_for_probabilistic(const Generator& c, bool s_variant);

/// Left-continuous lower extension: interior points take the supremum of A
/// over the open lower rectangle, approximated by a one-step inward offset
/// on a refinement lattice (refine steps across [0,1]); border points keep
/// A. Requires A continuous at the border, validated on the grid edges
/// within 10/refine.
Aggregator star_extension(const Aggregator& a, int refine = 1000);

/// For a continuous conjunctor with left neutral element 1, a strictly
/// increasing top section x -> A(x,1) staying below 1, and the exchange
/// property, DAC(I, A, N) is equivalent to the bound
///   I(a,b) <= phi^-1(min(phi(N(a)) + 1 - phi(s(N(b))), 1)),  s(x) = A(x,1)
/// for some automorphism phi (supplied by the caller, not searched for).
/// Verifies the bound on the grid; throws when A fails a precondition.
CheckReport check_dac_residual_bound(const Implication& i, const Aggregator& a,
                                     const Negation& n, const Automorphism& phi,
                                     const Grid& grid, double tol = 0.0);

}  // namespace acri

#endif
