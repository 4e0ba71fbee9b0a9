#include "ncx/homext.hpp"

#include <algorithm>
#include <map>

namespace ncx {

Matrix ChainMap::at(int degree, const NComplex& source, const NComplex& target) const {
    if (degree >= lo && degree < lo + int(mats.size())) return mats[std::size_t(degree - lo)];
    return Matrix(source.field(), std::size_t(target.dim(degree)), std::size_t(source.dim(degree)));
}

bool is_chain_map(const ChainMap& f, const NComplex& source, const NComplex& target) {
    if (source.field() != target.field() || source.order() != target.order()) return false;
    int lo = std::min(source.lo(), target.lo()) - 1;
    int hi = std::max(source.hi(), target.hi());
    for (int d = lo; d <= hi; ++d) {
        Matrix lhs = multiply(f.at(d + 1, source, target), source.map_at(d));
        Matrix rhs = multiply(target.map_at(d), f.at(d, source, target));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// Stacked coordinates for degreewise maps source_d -> target_d: one
// row-major block per degree where both spaces are nonzero.
struct MapLayout {
    std::map<int, std::size_t> offset;  // degree -> offset of its block
    std::size_t total = 0;
};

MapLayout layout(const NComplex& source, const NComplex& target) {
    MapLayout l;
    for (int d = std::min(source.lo(), target.lo()); d <= std::max(source.hi(), target.hi()); ++d) {
        std::size_t size = std::size_t(source.dim(d)) * std::size_t(target.dim(d));
        if (size == 0) continue;
        l.offset[d] = l.total;
        l.total += size;
    }
    return l;
}

// Rows encode f_{d+1} d^src_d - d^tgt_d f_d = 0 for every degree with
// content; the kernel of this matrix is the space of chain maps.
Matrix chain_constraints(const NComplex& src, const NComplex& tgt, const MapLayout& l) {
    const PrimeField& f = src.field();
    int lo = std::min(src.lo(), tgt.lo()) - 1;
    int hi = std::max(src.hi(), tgt.hi());

    std::size_t row_count = 0;
    std::map<int, std::size_t> row_offset;
    for (int d = lo; d <= hi; ++d) {
        std::size_t block = std::size_t(src.dim(d)) * std::size_t(tgt.dim(d + 1));
        bool unknown_next = l.offset.count(d + 1) > 0;
        bool unknown_here = l.offset.count(d) > 0;
        if (block == 0 || (!unknown_next && !unknown_here)) continue;
        row_offset[d] = row_count;
        row_count += block;
    }

    Matrix out(f, row_count, l.total);
    for (const auto& [d, base] : row_offset) {
        const int sd = src.dim(d), td1 = tgt.dim(d + 1);
        Matrix dsrc = src.map_at(d);  // src.dim(d+1) x sd
        Matrix dtgt = tgt.map_at(d);  // td1 x tgt.dim(d)
        auto row = [&](int rr, int cc) { return base + std::size_t(rr) * std::size_t(sd) + std::size_t(cc); };
        if (auto it = l.offset.find(d + 1); it != l.offset.end()) {
            const int sd1 = src.dim(d + 1);
            for (int rr = 0; rr < td1; ++rr)
                for (int cc = 0; cc < sd; ++cc)
                    for (int k = 0; k < sd1; ++k) {
                        std::uint32_t coeff = dsrc(std::size_t(k), std::size_t(cc));
                        if (coeff == 0) continue;
                        std::size_t col = it->second + std::size_t(rr) * std::size_t(sd1) + std::size_t(k);
                        out(row(rr, cc), col) = f.add(out(row(rr, cc), col), coeff);
                    }
        }
        if (auto it = l.offset.find(d); it != l.offset.end()) {
            const int tdd = tgt.dim(d);
            for (int rr = 0; rr < td1; ++rr)
                for (int cc = 0; cc < sd; ++cc)
                    for (int k = 0; k < tdd; ++k) {
                        std::uint32_t coeff = dtgt(std::size_t(rr), std::size_t(k));
                        if (coeff == 0) continue;
                        std::size_t col = it->second + std::size_t(k) * std::size_t(sd) + std::size_t(cc);
                        out(row(rr, cc), col) = f.sub(out(row(rr, cc), col), coeff);
                    }
        }
    }
    return out;
}

// The linear map Hom(pn, b) -> Hom(pn1, b), f -> f . phi, on stacked
// coordinates, where phi : pn1 -> pn.
Matrix precompose(const NComplex& pn, const MapLayout& ln, const NComplex& pn1,
                  const MapLayout& ln1, const ChainMap& phi, const NComplex& b) {
    Matrix t(b.field(), ln1.total, ln.total);
    for (const auto& [d, dst_base] : ln1.offset) {
        auto src_it = ln.offset.find(d);
        if (src_it == ln.offset.end()) continue;
        Matrix ph = phi.at(d, pn1, pn);  // pn.dim(d) x pn1.dim(d)
        const int bd = b.dim(d), nd = pn.dim(d), nd1 = pn1.dim(d);
        for (int r = 0; r < bd; ++r)
            for (int c = 0; c < nd1; ++c)
                for (int k = 0; k < nd; ++k)
                    t(dst_base + std::size_t(r) * std::size_t(nd1) + std::size_t(c),
                      src_it->second + std::size_t(r) * std::size_t(nd) + std::size_t(k)) =
                        ph(std::size_t(k), std::size_t(c));
    }
    return t;
}

void check_pair(const NComplex& a, const NComplex& b) {
    if (a.order() != b.order()) throw Error("hom/ext: nilpotency orders differ");
    if (a.field() != b.field()) throw Error("hom/ext: fields differ");
}

struct CoverStep {
    NComplex module;
    ChainMap epi;
    NComplex kernel;
    ChainMap inclusion;
};

CoverStep cover_step(const NComplex& m) {
    const PrimeField& f = m.field();
    const int n = m.order();
    if (m.is_zero()) return {NComplex(n, f), {}, NComplex(n, f), {}};

    // Standard basis vectors completing the image of the incoming
    // differential at each degree: the tops generating the cover.
    std::map<int, std::vector<std::size_t>> tops;
    SummandMultiset cover_ms;
    for (int d = m.lo(); d <= m.hi(); ++d) {
        if (m.dim(d) == 0) continue;
        Matrix img = m.map_at(d - 1);
        Matrix aug(f, std::size_t(m.dim(d)), img.cols() + std::size_t(m.dim(d)));
        aug.set_block(0, 0, img);
        aug.set_block(0, img.cols(), Matrix::identity(f, std::size_t(m.dim(d))));
        for (std::size_t p : pivot_columns(aug))
            if (p >= img.cols()) tops[d].push_back(p - img.cols());
        if (!tops[d].empty()) cover_ms[{d, n - 1}] = int(tops[d].size());
    }

    NComplex cover = assemble(cover_ms, f, n);
    std::vector<Matrix> epi_mats;
    std::vector<Matrix> kernel_bases;
    std::vector<int> kernel_dims;
    for (int g = cover.lo(); g <= cover.hi(); ++g) {
        Matrix e(f, std::size_t(m.dim(g)), std::size_t(cover.dim(g)));
        std::size_t col = 0;
        for (const BasisSlot& slot : assemble_basis_slots(cover_ms, g)) {
            std::size_t top = tops[slot.summand.start][std::size_t(slot.copy)];
            Matrix comp = composite(m, slot.summand.start, g - slot.summand.start);
            for (std::size_t r = 0; r < comp.rows(); ++r) e(r, col) = comp(r, top);
            ++col;
        }
        if (rank(e) != std::size_t(m.dim(g)))
            throw Error("projective cover failed the surjectivity rank check at degree " +
                        std::to_string(g));
        kernel_bases.push_back(kernel_basis(e));
        kernel_dims.push_back(int(kernel_bases.back().cols()));
        epi_mats.push_back(std::move(e));
    }

    std::vector<Matrix> kernel_maps;
    for (int g = cover.lo(); g < cover.hi(); ++g) {
        std::size_t k = std::size_t(g - cover.lo());
        auto induced = solve_right(kernel_bases[k + 1], multiply(cover.map_at(g), kernel_bases[k]));
        if (!induced) throw Error("projective cover kernel is not differential-stable");
        kernel_maps.push_back(std::move(*induced));
    }
    NComplex kernel(n, f, cover.lo(), std::move(kernel_dims), std::move(kernel_maps));
    return {std::move(cover), ChainMap{cover_ms.empty() ? 0 : cover.lo(), std::move(epi_mats)},
            std::move(kernel), ChainMap{cover_ms.empty() ? 0 : cover.lo(), std::move(kernel_bases)}};
}

ChainMap compose_chain(const ChainMap& outer, const ChainMap& inner, const NComplex& source,
                       const NComplex& middle, const NComplex& target) {
    if (source.is_zero()) return {};
    std::vector<Matrix> mats;
    for (int d = source.lo(); d <= source.hi(); ++d)
        mats.push_back(multiply(outer.at(d, middle, target), inner.at(d, source, middle)));
    return {source.lo(), std::move(mats)};
}

}  // namespace

int hom_dim(const NComplex& a, const NComplex& b) {
    check_pair(a, b);
    MapLayout l = layout(a, b);
    if (l.total == 0) return 0;
    return int(l.total - rank(chain_constraints(a, b, l)));
}

bool is_positive(const NComplex& m) { return m.is_zero() || m.lo() >= 0; }

bool is_injective_positive(const Indec& part, int order) {
    if (part.length < 0 || part.length > order - 1)
        throw Error("indecomposable length must lie in [0, N-1]");
    if (part.start < 0) return false;
    return part.start == 0 || part.length == order - 1;
}

Cover projective_cover(const NComplex& m) {
    if (!is_positive(m)) throw Error("projective_cover requires a positive complex");
    CoverStep step = cover_step(m);
    return {std::move(step.module), std::move(step.epi)};
}

Resolution projective_resolution(const NComplex& m, int length) {
    if (!is_positive(m)) throw Error("projective_resolution requires a positive complex");
    if (length < 0) throw Error("resolution length must be >= 0");
    Resolution res{m, {}, {}};
    NComplex current = m;
    NComplex previous_module = m;
    ChainMap previous_inclusion;
    for (int step = 0; step <= length; ++step) {
        CoverStep c = cover_step(current);
        if (step == 0) {
            res.maps.push_back(c.epi);
        } else {
            res.maps.push_back(
                compose_chain(previous_inclusion, c.epi, c.module, current, previous_module));
        }
        res.modules.push_back(c.module);
        previous_module = c.module;
        previous_inclusion = c.inclusion;
        current = c.kernel;
    }
    if (!resolution_is_exact(res)) throw Error("projective resolution failed exactness checks");
    return res;
}

bool resolution_is_exact(const Resolution& res) {
    if (res.modules.empty() || res.maps.size() != res.modules.size()) return false;
    // Augmentation surjective in every degree.
    for (int d = res.target.lo(); d <= res.target.hi(); ++d)
        if (rank(res.maps[0].at(d, res.modules[0], res.target)) != std::size_t(res.target.dim(d)))
            return false;
    for (std::size_t n = 0; n + 1 < res.modules.size(); ++n) {
        const NComplex& below = n == 0 ? res.target : res.modules[n - 1];
        const NComplex& here = res.modules[n];
        const NComplex& above = res.modules[n + 1];
        int lo = std::min(here.lo(), above.lo());
        int hi = std::max(here.hi(), above.hi());
        for (int d = lo; d <= hi; ++d) {
            Matrix outgoing = res.maps[n].at(d, here, below);
            Matrix incoming = res.maps[n + 1].at(d, above, here);
            if (!multiply(outgoing, incoming).is_zero()) return false;
            if (rank(incoming) + rank(outgoing) != std::size_t(here.dim(d))) return false;
        }
    }
    return true;
}

int ext_dim(const NComplex& a, const NComplex& b, int n) {
    check_pair(a, b);
    if (!is_positive(a) || !is_positive(b)) throw Error("ext_dim requires positive complexes");
    if (n < 0) throw Error("ext degree must be >= 0");
    Resolution res = projective_resolution(a, n + 1);

    // Rank of Hom(P_m, b) -> Hom(P_{m+1}, b) restricted to chain maps.
    auto level = [&](int m_idx, std::size_t& dim_out, std::size_t& rank_out) {
        const NComplex& pm = res.modules[std::size_t(m_idx)];
        const NComplex& pm1 = res.modules[std::size_t(m_idx) + 1];
        MapLayout lm = layout(pm, b);
        MapLayout lm1 = layout(pm1, b);
        Matrix basis = kernel_basis(chain_constraints(pm, b, lm));
        dim_out = basis.cols();
        Matrix t = precompose(pm, lm, pm1, lm1, res.maps[std::size_t(m_idx) + 1], b);
        rank_out = rank(multiply(t, basis));
    };

    std::size_t dim_n = 0, rank_n = 0;
    level(n, dim_n, rank_n);
    std::size_t rank_prev = 0;
    if (n >= 1) {
        std::size_t dim_prev = 0;
        level(n - 1, dim_prev, rank_prev);
    }
    return int(dim_n) - int(rank_n) - int(rank_prev);
}

}  // namespace ncx
