#include "ncx/decompose.hpp"

namespace ncx {

SummandMultiset peel_nonprojectives(const AHTable& table, int order) {
    if (order < 2) throw Error("nilpotency order must be >= 2");
    for (const auto& [key, value] : table.entries) {
        if (key.second < 1 || key.second > order - 1)
            throw Error("amplitude table stores amplitude " + std::to_string(key.second) +
                        " outside [1, N-1]");
        if (value <= 0) throw Error("amplitude table stores a non-positive dimension");
    }
    auto entries = table.entries;
    SummandMultiset ms;
    while (!entries.empty()) {
        auto [key, count] = *entries.begin();
        auto [start, amp] = key;
        int length = amp - 1;
        // Subtract count copies of the closed-form table of the summand.
        for (int degree = start; degree <= start + length; ++degree) {
            int offset = degree - start;
            for (int a = length + 1 - offset; a <= order - 1 - offset; ++a) {
                auto it = entries.find({degree, a});
                if (it == entries.end() || it->second < count)
                    throw Error("inconsistent amplitude table: entry (" +
                                std::to_string(degree) + ", " + std::to_string(a) +
                                ") cannot absorb multiplicity " + std::to_string(count));
                it->second -= count;
                if (it->second == 0) entries.erase(it);
            }
        }
        ms[{start, length}] += count;
    }
    return ms;
}

SummandMultiset decompose(const NComplex& m) {
    SummandMultiset ms = peel_nonprojectives(ah_table(m), m.order());

    std::map<int, int> residual = dimension_vector(m);
    for (const auto& [part, count] : ms) {
        for (int d = part.start; d <= part.start + part.length; ++d) {
            residual[d] -= count;
            if (residual[d] < 0)
                throw Error("decompose: non-projective summands exceed the dimension vector at "
                            "degree " + std::to_string(d));
        }
    }

    // Each projective starting at t covers degrees [t, t+N-1], so scanning
    // upward the residual at s determines the multiplicity at s once the
    // starts in (s-N, s) are known.
    std::map<int, int> projective;
    for (int s = m.lo(); s <= m.hi(); ++s) {
        int covered = 0;
        for (int t = s - m.order() + 1; t < s; ++t) {
            auto it = projective.find(t);
            if (it != projective.end()) covered += it->second;
        }
        auto rit = residual.find(s);
        int r = rit == residual.end() ? 0 : rit->second;
        int count = r - covered;
        if (count < 0)
            throw Error("decompose: projective recovery went negative at degree " +
                        std::to_string(s));
        if (count > 0) {
            projective[s] = count;
            ms[{s, m.order() - 1}] += count;
        }
    }

    if (dimension_vector(ms) != dimension_vector(m))
        throw Error("decompose: summands do not account for the dimension vector");
    return ms;
}

namespace {

void check_comparable(const NComplex& a, const NComplex& b) {
    if (a.order() != b.order()) throw Error("comparison requires equal nilpotency orders");
    if (a.field() != b.field()) throw Error("comparison requires equal fields");
}

}  // namespace

bool iso(const NComplex& a, const NComplex& b) {
    check_comparable(a, b);
    return decompose(a) == decompose(b);
}

bool stably_equal(const NComplex& a, const NComplex& b) {
    check_comparable(a, b);
    SummandMultiset da = decompose(a), db = decompose(b);
    std::erase_if(da, [&](const auto& e) { return e.first.length == a.order() - 1; });
    std::erase_if(db, [&](const auto& e) { return e.first.length == b.order() - 1; });
    return da == db;
}

}  // namespace ncx
