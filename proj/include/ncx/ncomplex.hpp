#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncx/matrix.hpp"

namespace ncx {

/// A finite-support N-complex: a window of F_p vector spaces with
/// degree-raising maps whose N-fold composites all vanish. Degree lo()+k has
/// dimension dims()[k]; maps()[k] sends degree lo()+k to lo()+k+1 and has
/// shape dims[k+1] x dims[k]. Boundary zero dimensions are trimmed on
/// construction, so equal complexes compare equal; interior zeros are kept.
class NComplex {
public:
    /// The zero complex.
    NComplex(int order, PrimeField field);

    NComplex(int order, PrimeField field, int lo, std::vector<int> dims, std::vector<Matrix> maps);

    /// Skips shape checks and trimming so that validate() can report shape
    /// violations on deliberately broken instances.
    static NComplex unchecked(int order, PrimeField field, int lo, std::vector<int> dims,
                              std::vector<Matrix> maps);

    int order() const { return order_; }
    const PrimeField& field() const { return field_; }

    bool is_zero() const { return dims_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + int(dims_.size()) - 1; }

    int dim(int degree) const;
    /// The differential out of `degree`; a zero map of the right shape when
    /// the degree or its successor lies outside the stored window.
    Matrix map_at(int degree) const;

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Matrix>& maps() const { return maps_; }

    bool operator==(const NComplex&) const = default;

private:
    NComplex(int order, PrimeField field, int lo, std::vector<int> dims, std::vector<Matrix> maps,
             bool checked);

    int order_;
    PrimeField field_;
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

struct Validation {
    bool ok = true;
    std::string message;
    std::optional<int> degree;  // first violating start degree

    explicit operator bool() const { return ok; }
};

/// Checks shape coherence first, then that every window of `order`
/// consecutive differentials composes to zero.
Validation validate(const NComplex& m);

/// Composite of `count` consecutive differentials starting at `from`
/// (count = 0 gives the identity on that degree). Composites through
/// out-of-support degrees are zero maps of the right shapes.
Matrix composite(const NComplex& m, int from, int count);

/// An indecomposable: one-dimensional exactly on [start, start+length] with
/// identity differentials inside the segment. Requires 0 <= length <= N-1.
struct Indec {
    int start = 0;
    int length = 0;

    auto operator<=>(const Indec&) const = default;
};

/// Finite multiset of indecomposables with positive multiplicities; the
/// Krull-Schmidt certificate of a complex. Key order (start, then length) is
/// the lexicographic order used by the peeling algorithm.
using SummandMultiset = std::map<Indec, int>;

NComplex indecomposable(PrimeField field, int order, int start, int length);

NComplex direct_sum(const NComplex& a, const NComplex& b);

/// Direct sum of the listed indecomposables, blocks ordered by (start,
/// length) with copies adjacent. With a seed, the result is conjugated
/// degreewise by random invertible matrices: an isomorphic but non-obvious
/// presentation.
NComplex assemble(const SummandMultiset& ms, PrimeField field, int order,
                  std::optional<std::uint64_t> seed = std::nullopt);

std::map<int, int> dimension_vector(const NComplex& m);
std::map<int, int> dimension_vector(const SummandMultiset& ms);
int total_dimension(const SummandMultiset& ms);

NComplex shift(const NComplex& m, int offset);

struct BasisSlot {
    Indec summand;
    int copy = 0;
};

/// The basis bookkeeping behind assemble(): at each degree the direct sum
/// contributes one vector per (summand, copy) whose segment covers the
/// degree, listed in multiset order with copies adjacent.
std::vector<BasisSlot> assemble_basis_slots(const SummandMultiset& ms, int degree);

struct RandomComplex {
    NComplex complex;
    SummandMultiset summands;  // ground truth for decomposition oracles
};

/// Seed-deterministic random complex: a random multiset with starts in
/// [window_lo, window_hi] and at most max_total_multiplicity summands,
/// assembled with a random basis change. Always valid.
RandomComplex random_ncomplex(PrimeField field, int order, int window_lo, int window_hi,
                              int max_total_multiplicity, std::uint64_t seed);

}  // namespace ncx
