#include "ncx/tensor.hpp"

#include "ncx/decompose.hpp"

namespace ncx {

RootOfUnity RootOfUnity::primitive(PrimeField field, int order) {
    return {primitive_root_of_unity(field, order), order};
}

RootOfUnity RootOfUnity::from_value(PrimeField field, std::uint32_t value, int order) {
    if (!has_multiplicative_order(field, value, order))
        throw Error(std::to_string(value) + " does not have multiplicative order " +
                    std::to_string(order) + " in F_" + std::to_string(field.modulus()));
    return {Scalar(value % field.modulus(), field), order};
}

RootOfUnity RootOfUnity::unchecked(PrimeField field, std::uint32_t value, int order) {
    return {Scalar(value % field.modulus(), field), order};
}

NComplex tensor(const NComplex& a, const NComplex& b, const RootOfUnity& root) {
    if (a.order() != b.order()) throw Error("tensor: nilpotency orders differ");
    if (a.field() != b.field()) throw Error("tensor: fields differ");
    if (root.order != a.order() || root.q.field != a.field())
        throw Error("tensor: root of unity does not match the complexes");
    const PrimeField& f = a.field();
    const int n = a.order();
    if (a.is_zero() || b.is_zero()) return NComplex(n, f);

    const int lo = a.lo() + b.lo();
    const int hi = a.hi() + b.hi();

    auto degree_dim = [&](int i) {
        int total = 0;
        for (int j = a.lo(); j <= a.hi(); ++j) total += a.dim(j) * b.dim(i - j);
        return total;
    };
    // Offset of the (j, i-j) block inside degree i.
    auto block_offset = [&](int i, int j) {
        std::size_t off = 0;
        for (int j2 = a.lo(); j2 < j; ++j2) off += std::size_t(a.dim(j2)) * std::size_t(b.dim(i - j2));
        return off;
    };
    auto q_power = [&](int r) { return f.pow(root.q.value, std::uint64_t(((r % n) + n) % n)); };

    std::vector<int> dims;
    for (int i = lo; i <= hi; ++i) dims.push_back(degree_dim(i));

    std::vector<Matrix> maps;
    for (int i = lo; i < hi; ++i) {
        Matrix d(f, std::size_t(dims[i + 1 - lo]), std::size_t(dims[i - lo]));
        for (int j = a.lo(); j <= a.hi(); ++j) {
            const int r = i - j;
            const int na_j = a.dim(j), nb_r = b.dim(r);
            if (na_j == 0 || nb_r == 0) continue;
            const std::size_t src = block_offset(i, j);
            // x (x) d(y): block (j, r) -> (j, r+1)
            Matrix db = b.map_at(r);
            if (db.rows() > 0) {
                const std::size_t dst = block_offset(i + 1, j);
                for (int s = 0; s < na_j; ++s)
                    for (std::size_t tr = 0; tr < db.rows(); ++tr)
                        for (std::size_t tc = 0; tc < db.cols(); ++tc) {
                            std::uint32_t& cell =
                                d(dst + std::size_t(s) * db.rows() + tr,
                                  src + std::size_t(s) * std::size_t(nb_r) + tc);
                            cell = f.add(cell, db(tr, tc));
                        }
            }
            // q^r d(x) (x) y: block (j, r) -> (j+1, r)
            Matrix da = a.map_at(j);
            if (da.rows() > 0) {
                const std::uint32_t qr = q_power(r);
                const std::size_t dst = block_offset(i + 1, j + 1);
                for (std::size_t sr = 0; sr < da.rows(); ++sr)
                    for (std::size_t sc = 0; sc < da.cols(); ++sc) {
                        std::uint32_t coeff = f.mul(qr, da(sr, sc));
                        if (coeff == 0) continue;
                        for (int t = 0; t < nb_r; ++t) {
                            std::uint32_t& cell = d(dst + sr * std::size_t(nb_r) + std::size_t(t),
                                                    src + sc * std::size_t(nb_r) + std::size_t(t));
                            cell = f.add(cell, coeff);
                        }
                    }
            }
        }
        maps.push_back(std::move(d));
    }
    return NComplex(n, f, lo, std::move(dims), std::move(maps));
}

SummandMultiset clebsch_gordan(int order, int i, int u, int j, int v) {
    if (order < 2) throw Error("nilpotency order must be >= 2");
    if (u < 0 || u > order - 1 || v < 0 || v > order - 1)
        throw Error("clebsch_gordan lengths must lie in [0, N-1]");
    SummandMultiset out;
    int excess = u + v - (order - 1);  // summands with l <= excess become projective
    for (int l = 0; l <= std::min(u, v); ++l) {
        if (l <= excess)
            out[{i + j + l, order - 1}] = 1;
        else
            out[{i + j + l, u + v - 2 * l}] = 1;
    }
    return out;
}

FusionReport fusion_check(int order, std::uint32_t p, int window_lo, int window_hi) {
    PrimeField field(p);
    RootOfUnity root = RootOfUnity::primitive(field, order);
    FusionReport report;
    for (int i = window_lo; i <= window_hi; ++i)
        for (int j = window_lo; j <= window_hi; ++j)
            for (int u = 0; u <= order - 1; ++u)
                for (int v = 0; v <= order - 1; ++v) {
                    ++report.cases;
                    SummandMultiset expected = clebsch_gordan(order, i, u, j, v);
                    SummandMultiset got = decompose(
                        tensor(indecomposable(field, order, i, u),
                               indecomposable(field, order, j, v), root));
                    if (expected != got)
                        report.mismatches.push_back({i, u, j, v, std::move(expected), std::move(got)});
                }
    return report;
}

}  // namespace ncx
