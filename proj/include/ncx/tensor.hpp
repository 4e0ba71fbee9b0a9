#pragma once

#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// A root of unity of exact multiplicative order N. The checked factories
/// reject values of any other order; `unchecked` exists as a diagnostic
/// escape hatch so that validate() on a tensor product can exhibit where the
/// nilpotency law breaks for a root of the wrong order.
struct RootOfUnity {
    Scalar q;
    int order;

    static RootOfUnity primitive(PrimeField field, int order);
    static RootOfUnity from_value(PrimeField field, std::uint32_t value, int order);
    static RootOfUnity unchecked(PrimeField field, std::uint32_t value, int order);
};

/// The q-deformed tensor product: degree i is the direct sum over j+r=i of
/// the blocks (degree-j of a) x (degree-r of b), blocks ordered by ascending
/// j and row-major within each block. The differential is
///   d(x (x) y) = x (x) d(y) + q^r d(x) (x) y
/// with r the degree of the right factor. The N-fold composite vanishes
/// exactly because q has order N.
NComplex tensor(const NComplex& a, const NComplex& b, const RootOfUnity& root);

/// Closed-form fusion rules for a pair of indecomposables with lengths u, v:
/// the summands M_{i+j+l}^{u+v-2l} for l up to min(u,v), with every length
/// that would exceed N-1 clamped to a projective of length N-1. All
/// multiplicities are 1.
SummandMultiset clebsch_gordan(int order, int i, int u, int j, int v);

struct FusionMismatch {
    int i, u, j, v;
    SummandMultiset expected;
    SummandMultiset got;
};

struct FusionReport {
    int cases = 0;
    std::vector<FusionMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Exhaustively compares tensor-then-decompose against the closed form for
/// all starts in [window_lo, window_hi] and all lengths. Requires that F_p
/// contain a root of unity of order N.
FusionReport fusion_check(int order, std::uint32_t p, int window_lo, int window_hi);

}  // namespace ncx
