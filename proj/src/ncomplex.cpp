#include "ncx/ncomplex.hpp"

#include <random>
#include <utility>

namespace ncx {

NComplex::NComplex(int order, PrimeField field) : order_(order), field_(field) {
    if (order < 2) throw Error("nilpotency order must be >= 2");
}

NComplex::NComplex(int order, PrimeField field, int lo, std::vector<int> dims,
                   std::vector<Matrix> maps)
    : NComplex(order, field, lo, std::move(dims), std::move(maps), true) {}

NComplex NComplex::unchecked(int order, PrimeField field, int lo, std::vector<int> dims,
                             std::vector<Matrix> maps) {
    return NComplex(order, field, lo, std::move(dims), std::move(maps), false);
}

NComplex::NComplex(int order, PrimeField field, int lo, std::vector<int> dims,
                   std::vector<Matrix> maps, bool checked)
    : order_(order), field_(field), lo_(lo), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (order < 2) throw Error("nilpotency order must be >= 2");
    std::size_t expected = dims_.size() <= 1 ? 0 : dims_.size() - 1;
    if (maps_.size() != expected)
        throw Error("expected " + std::to_string(expected) + " differentials, got " +
                    std::to_string(maps_.size()));
    for (int d : dims_)
        if (d < 0) throw Error("negative dimension");
    if (checked) {
        for (std::size_t k = 0; k < maps_.size(); ++k) {
            if (maps_[k].field() != field_) throw Error("differential over the wrong field");
            if (maps_[k].rows() != std::size_t(dims_[k + 1]) ||
                maps_[k].cols() != std::size_t(dims_[k]))
                throw Error("differential at degree " + std::to_string(lo_ + int(k)) +
                            " has shape " + std::to_string(maps_[k].rows()) + "x" +
                            std::to_string(maps_[k].cols()) + ", expected " +
                            std::to_string(dims_[k + 1]) + "x" + std::to_string(dims_[k]));
        }
        while (!dims_.empty() && dims_.front() == 0) {
            dims_.erase(dims_.begin());
            if (!maps_.empty()) maps_.erase(maps_.begin());
            ++lo_;
        }
        while (!dims_.empty() && dims_.back() == 0) {
            dims_.pop_back();
            if (!maps_.empty()) maps_.pop_back();
        }
        if (dims_.empty()) lo_ = 0;
    }
}

int NComplex::dim(int degree) const {
    if (degree < lo_ || degree > hi()) return 0;
    return dims_[std::size_t(degree - lo_)];
}

Matrix NComplex::map_at(int degree) const {
    if (degree >= lo_ && degree < hi()) return maps_[std::size_t(degree - lo_)];
    return Matrix(field_, std::size_t(dim(degree + 1)), std::size_t(dim(degree)));
}

Validation validate(const NComplex& m) {
    const auto& dims = m.dims();
    const auto& maps = m.maps();
    for (std::size_t k = 0; k < maps.size(); ++k) {
        int degree = m.lo() + int(k);
        if (maps[k].field() != m.field())
            return {false, "differential at degree " + std::to_string(degree) +
                        " is over the wrong field", degree};
        if (maps[k].rows() != std::size_t(dims[k + 1]) || maps[k].cols() != std::size_t(dims[k]))
            return {false, "shape mismatch: differential at degree " + std::to_string(degree) +
                        " has shape " + std::to_string(maps[k].rows()) + "x" +
                        std::to_string(maps[k].cols()) + ", expected " +
                        std::to_string(dims[k + 1]) + "x" + std::to_string(dims[k]), degree};
    }
    for (int s = m.lo(); s + m.order() <= m.hi(); ++s) {
        if (m.dim(s) == 0) continue;
        if (!composite(m, s, m.order()).is_zero())
            return {false, "nilpotency violated: " + std::to_string(m.order()) +
                        "-fold composite starting at degree " + std::to_string(s) +
                        " is nonzero", s};
    }
    return {};
}

Matrix composite(const NComplex& m, int from, int count) {
    if (count < 0) throw Error("composite length must be >= 0");
    if (count == 0) return Matrix::identity(m.field(), std::size_t(m.dim(from)));
    Matrix acc = m.map_at(from);
    for (int k = 1; k < count; ++k) acc = multiply(m.map_at(from + k), acc);
    return acc;
}

NComplex indecomposable(PrimeField field, int order, int start, int length) {
    if (length < 0 || length > order - 1)
        throw Error("indecomposable length must lie in [0, N-1], got " + std::to_string(length));
    std::vector<int> dims(std::size_t(length) + 1, 1);
    std::vector<Matrix> maps(std::size_t(length), Matrix::identity(field, 1));
    return NComplex(order, field, start, std::move(dims), std::move(maps));
}

NComplex direct_sum(const NComplex& a, const NComplex& b) {
    if (a.order() != b.order()) throw Error("direct_sum: nilpotency orders differ");
    if (a.field() != b.field()) throw Error("direct_sum: fields differ");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<int> dims;
    for (int d = lo; d <= hi; ++d) dims.push_back(a.dim(d) + b.dim(d));
    std::vector<Matrix> maps;
    for (int d = lo; d < hi; ++d) {
        Matrix blockdiag(a.field(), std::size_t(dims[d + 1 - lo]), std::size_t(dims[d - lo]));
        blockdiag.set_block(0, 0, a.map_at(d));
        blockdiag.set_block(std::size_t(a.dim(d + 1)), std::size_t(a.dim(d)), b.map_at(d));
        maps.push_back(std::move(blockdiag));
    }
    return NComplex(a.order(), a.field(), lo, std::move(dims), std::move(maps));
}

NComplex assemble(const SummandMultiset& ms, PrimeField field, int order,
                  std::optional<std::uint64_t> seed) {
    NComplex sum(order, field);
    for (const auto& [part, count] : ms) {
        if (count < 1) throw Error("summand multiplicities must be positive");
        for (int c = 0; c < count; ++c)
            sum = direct_sum(sum, indecomposable(field, order, part.start, part.length));
    }
    if (!seed || sum.is_zero()) return sum;

    std::mt19937_64 rng(*seed);
    std::vector<Matrix> change, change_inv;
    for (int d = sum.lo(); d <= sum.hi(); ++d) {
        Matrix u = random_invertible(field, std::size_t(sum.dim(d)), rng());
        change_inv.push_back(*inverse(u));
        change.push_back(std::move(u));
    }
    std::vector<Matrix> maps;
    for (int d = sum.lo(); d < sum.hi(); ++d) {
        std::size_t k = std::size_t(d - sum.lo());
        maps.push_back(multiply(change[k + 1], multiply(sum.map_at(d), change_inv[k])));
    }
    return NComplex(order, field, sum.lo(), sum.dims(), std::move(maps));
}

std::map<int, int> dimension_vector(const NComplex& m) {
    std::map<int, int> out;
    for (int d = m.lo(); d <= m.hi(); ++d)
        if (m.dim(d) > 0) out[d] = m.dim(d);
    return out;
}

std::map<int, int> dimension_vector(const SummandMultiset& ms) {
    std::map<int, int> out;
    for (const auto& [part, count] : ms)
        for (int d = part.start; d <= part.start + part.length; ++d) out[d] += count;
    return out;
}

int total_dimension(const SummandMultiset& ms) {
    int total = 0;
    for (const auto& [part, count] : ms) total += (part.length + 1) * count;
    return total;
}

NComplex shift(const NComplex& m, int offset) {
    if (m.is_zero()) return m;
    return NComplex(m.order(), m.field(), m.lo() + offset, m.dims(), m.maps());
}

std::vector<BasisSlot> assemble_basis_slots(const SummandMultiset& ms, int degree) {
    std::vector<BasisSlot> slots;
    for (const auto& [part, count] : ms) {
        if (degree < part.start || degree > part.start + part.length) continue;
        for (int c = 0; c < count; ++c) slots.push_back({part, c});
    }
    return slots;
}

RandomComplex random_ncomplex(PrimeField field, int order, int window_lo, int window_hi,
                              int max_total_multiplicity, std::uint64_t seed) {
    if (window_lo > window_hi) throw Error("random_ncomplex: empty degree window");
    if (max_total_multiplicity < 0) throw Error("random_ncomplex: negative multiplicity bound");
    std::mt19937_64 rng(seed);
    SummandMultiset ms;
    int total = max_total_multiplicity == 0
                    ? 0
                    : int(rng() % std::uint64_t(max_total_multiplicity + 1));
    for (int t = 0; t < total; ++t) {
        int start = window_lo + int(rng() % std::uint64_t(window_hi - window_lo + 1));
        int length = int(rng() % std::uint64_t(order));
        ms[{start, length}] += 1;
    }
    std::uint64_t basis_seed = rng();
    return {assemble(ms, field, order, basis_seed), std::move(ms)};
}

}  // namespace ncx
