#include "ncx/cohomology.hpp"

namespace ncx {

namespace {

void check_amplitude(int order, int amplitude) {
    if (amplitude < 1 || amplitude > order - 1)
        throw Error("amplitude must lie in [1, N-1], got " + std::to_string(amplitude));
}

int floor_div(int a, int b) {
    int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

}  // namespace

int ah_dim(const NComplex& m, int amplitude, int degree) {
    check_amplitude(m.order(), amplitude);
    int coamplitude = m.order() - amplitude;
    std::size_t out_rank = rank(composite(m, degree, amplitude));
    std::size_t in_rank = rank(composite(m, degree - coamplitude, coamplitude));
    return m.dim(degree) - int(out_rank) - int(in_rank);
}

AHTable ah_table(const NComplex& m) {
    AHTable table{m.order(), {}};
    for (int degree = m.lo(); degree <= m.hi(); ++degree) {
        if (m.dim(degree) == 0) continue;
        for (int a = 1; a <= m.order() - 1; ++a) table.add(degree, a, ah_dim(m, a, degree));
    }
    return table;
}

int ah_indec(int order, int start, int length, int amplitude, int degree) {
    if (length < 0 || length > order - 1)
        throw Error("indecomposable length must lie in [0, N-1]");
    check_amplitude(order, amplitude);
    int offset = degree - start;
    if (offset < 0 || offset > length) return 0;
    return (length + 1 - offset <= amplitude && amplitude <= order - 1 - offset) ? 1 : 0;
}

bool is_acyclic(const NComplex& m, int amplitude) {
    check_amplitude(m.order(), amplitude);
    for (int degree = m.lo(); degree <= m.hi(); ++degree)
        if (ah_dim(m, amplitude, degree) != 0) return false;
    return true;
}

bool is_projective(const NComplex& m) { return is_acyclic(m, 1); }

NComplex contract(const NComplex& m, int initial, int amplitude) {
    const int n = m.order();
    check_amplitude(n, amplitude);
    int e = ((initial % n) + n) % n;
    int a = amplitude;
    int b = n - a;
    if (e >= b) {
        e -= b;
        std::swap(a, b);
    }
    if (m.is_zero()) return NComplex(2, m.field());

    // Original degree carried by contraction degree `k`.
    auto source_degree = [&](int k) {
        return e + floor_div(k, 2) * n + (k - 2 * floor_div(k, 2)) * a;
    };

    int k_lo = 2 * floor_div(m.lo() - e, n) - 2;
    while (source_degree(k_lo) < m.lo()) ++k_lo;
    int k_hi = 2 * floor_div(m.hi() - e, n) + 4;
    while (k_hi >= k_lo && source_degree(k_hi) > m.hi()) --k_hi;
    if (k_hi < k_lo) return NComplex(2, m.field());

    std::vector<int> dims;
    std::vector<Matrix> maps;
    for (int k = k_lo; k <= k_hi; ++k) dims.push_back(m.dim(source_degree(k)));
    for (int k = k_lo; k < k_hi; ++k)
        maps.push_back(composite(m, source_degree(k), source_degree(k + 1) - source_degree(k)));
    return NComplex(2, m.field(), k_lo, std::move(dims), std::move(maps));
}

int h2_dim(const NComplex& c, int degree) {
    if (c.order() != 2) throw Error("h2_dim expects a 2-complex");
    return ah_dim(c, 1, degree);
}

}  // namespace ncx
