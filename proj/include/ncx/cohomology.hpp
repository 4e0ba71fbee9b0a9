#pragma once

#include <map>
#include <utility>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// Bi-graded table of amplitude cohomology dimensions. Keys are (degree,
/// amplitude); zeros are omitted. The key order (degree first, then
/// amplitude) is the lexicographic order the peeling algorithm consumes.
struct AHTable {
    int order = 0;  // N; stored amplitudes lie in [1, N-1]
    std::map<std::pair<int, int>, int> entries;

    int at(int degree, int amplitude) const {
        auto it = entries.find({degree, amplitude});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int degree, int amplitude, int value) {
        if (value == 0) return;
        auto it = entries.find({degree, amplitude});
        if (it == entries.end()) {
            entries.emplace(std::make_pair(degree, amplitude), value);
        } else {
            it->second += value;
            if (it->second == 0) entries.erase(it);
        }
    }

    bool operator==(const AHTable&) const = default;
};

/// dim Ker(d^a at `degree`) - dim Im(d^{N-a} into `degree`). The image lies
/// inside the kernel for every valid complex, so the dimensions subtract.
/// Requires 1 <= amplitude <= N-1.
int ah_dim(const NComplex& m, int amplitude, int degree);

/// Full table over the support window, all amplitudes; zeros omitted.
AHTable ah_table(const NComplex& m);

/// Closed-form amplitude cohomology of the indecomposable starting at
/// `start` with the given `length`: 1 exactly when `degree` lies in the
/// segment and length+1-(degree-start) <= amplitude <= N-1-(degree-start),
/// else 0.
int ah_indec(int order, int start, int length, int amplitude, int degree);

/// True iff the whole amplitude-`amplitude` row of the table vanishes.
bool is_acyclic(const NComplex& m, int amplitude);

/// Acyclicity at a single amplitude already characterizes projectivity
/// (equivalently injectivity), so amplitude 1 is tested.
bool is_projective(const NComplex& m);

/// The ordinary 2-complex with component M_{e+iN} in degree 2i and
/// M_{e+iN+a} in degree 2i+1, differentials the a-fold and b-fold composites
/// (b = N-a). Any integer initial condition is accepted and renormalized to
/// the canonical range 0 <= e < b, first mod N, then via (e, a) -> (e-b, b).
NComplex contract(const NComplex& m, int initial, int amplitude);

/// Ordinary cohomology of a 2-complex at `degree` (= ah_dim(c, 1, degree)).
int h2_dim(const NComplex& c, int degree);

}  // namespace ncx
