#pragma once

#include "ncx/cohomology.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// Recovers the non-projective part of the Krull-Schmidt multiset from an
/// amplitude cohomology table by peeling: repeatedly take the
/// lexicographically smallest nonzero entry (i0, a_min), read off the
/// summand (start i0, length a_min - 1) with the entry's multiplicity, and
/// subtract that summand's closed-form table. Throws Error if a subtraction
/// drives an entry negative (the input was not a genuine table).
SummandMultiset peel_nonprojectives(const AHTable& table, int order);

/// Full Krull-Schmidt multiset, projective (length N-1) summands included.
/// Non-projectives come from peeling the table; projective multiplicities
/// are recovered from the residual dimension vector by the interval-cover
/// recurrence, and the residual must be consumed exactly.
SummandMultiset decompose(const NComplex& m);

/// Isomorphism test by comparing full multisets. Requires equal N and field.
bool iso(const NComplex& a, const NComplex& b);

/// Equality up to projective direct summands: compares the multisets
/// restricted to lengths <= N-2.
bool stably_equal(const NComplex& a, const NComplex& b);

}  // namespace ncx
