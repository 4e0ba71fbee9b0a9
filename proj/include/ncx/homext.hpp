#pragma once

#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// Degreewise family of matrices representing a map of complexes. Components
/// are stored over [lo, lo + mats.size()); outside that window the component
/// is the zero map of the right shape.
struct ChainMap {
    int lo = 0;
    std::vector<Matrix> mats;

    Matrix at(int degree, const NComplex& source, const NComplex& target) const;
};

/// Checks the commutation law f_{i+1} d^src_i = d^tgt_i f_i at every degree.
bool is_chain_map(const ChainMap& f, const NComplex& source, const NComplex& target);

/// Dimension of the space of chain maps a -> b (degreewise maps commuting
/// with the differentials), computed as the nullity of the assembled linear
/// system. Works over the full degree range, no positivity required.
int hom_dim(const NComplex& a, const NComplex& b);

/// Vanishes in negative degrees.
bool is_positive(const NComplex& m);

/// Membership in the list of injective indecomposables of the positive
/// category: everything starting at 0, plus the length-(N-1) ones starting
/// at 1 or later.
bool is_injective_positive(const Indec& part, int order);

struct Cover {
    NComplex module;  // direct sum of projectives M_s^{N-1}
    ChainMap epi;     // degreewise surjection onto the covered complex
};

/// Projective cover in the positive category. The top multiplicity at each
/// degree is dim M_d - rank(d_{d-1}); each chosen top representative
/// generates one length-(N-1) summand mapped by the composites of the
/// differentials. Surjectivity is certified by a rank check in every degree.
Cover projective_cover(const NComplex& m);

/// maps[0] is the augmentation P_0 -> target; maps[n] is P_n -> P_{n-1}.
struct Resolution {
    NComplex target;
    std::vector<NComplex> modules;
    std::vector<ChainMap> maps;
};

/// Iterated projective covers of successive kernels, producing modules
/// P_0 .. P_length. Exactness is certified by rank arithmetic on
/// construction.
Resolution projective_resolution(const NComplex& m, int length);

/// Degreewise: the augmentation is surjective, consecutive maps compose to
/// zero, and rank(incoming) + rank(outgoing) accounts for the full dimension
/// at every checkable stage.
bool resolution_is_exact(const Resolution& res);

/// dim Ext^n(a, b) in the positive category, via a projective resolution of
/// the first argument; ext_dim(a, b, 0) == hom_dim(a, b).
int ext_dim(const NComplex& a, const NComplex& b, int n);

}  // namespace ncx
