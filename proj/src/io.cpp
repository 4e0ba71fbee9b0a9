#include "ncx/io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ncx {

using nlohmann::json;

std::string serialize(const NComplex& m) {
    json doc;
    doc["N"] = m.order();
    doc["p"] = m.field().modulus();
    doc["lo"] = m.is_zero() ? 0 : m.lo();
    doc["dims"] = m.dims();
    json maps = json::array();
    for (const Matrix& mat : m.maps()) {
        json rows = json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
            rows.push_back(std::move(row));
        }
        maps.push_back(std::move(rows));
    }
    doc["maps"] = std::move(maps);
    return doc.dump() + "\n";
}

namespace {

long long require_int(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw ParseError("document field " + what + " must be an integer");
    return v.get<long long>();
}

}  // namespace

NComplex deserialize(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "N" && key != "p" && key != "lo" && key != "dims" && key != "maps")
            throw ParseError("unknown document field \"" + key + "\"");
    }
    for (const char* key : {"N", "p", "lo", "dims", "maps"})
        if (!doc.contains(key)) throw ParseError(std::string("missing document field \"") + key + "\"");

    long long order = require_int(doc["N"], "\"N\"");
    long long p = require_int(doc["p"], "\"p\"");
    long long lo = require_int(doc["lo"], "\"lo\"");
    if (order < 0 || order > 1000000) throw ParseError("\"N\" out of range");
    if (p < 2 || p >= (1ll << 31)) throw ParseError("\"p\" must lie in [2, 2^31)");

    if (!doc["dims"].is_array()) throw ParseError("\"dims\" must be an array");
    std::vector<int> dims;
    for (const json& d : doc["dims"]) {
        long long v = require_int(d, "\"dims\" entry");
        if (v < 0 || v > 1000000) throw ParseError("\"dims\" entry out of range");
        dims.push_back(int(v));
    }

    if (!doc["maps"].is_array()) throw ParseError("\"maps\" must be an array");
    std::size_t expected = dims.size() <= 1 ? 0 : dims.size() - 1;
    if (doc["maps"].size() != expected)
        throw ParseError("\"maps\" must hold " + std::to_string(expected) +
                         " matrices, got " + std::to_string(doc["maps"].size()));

    PrimeField field{std::uint32_t(p)};  // throws Error if p is not prime
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < expected; ++k) {
        const json& rows = doc["maps"][k];
        if (!rows.is_array() || rows.size() != std::size_t(dims[k + 1]))
            throw ParseError("maps[" + std::to_string(k) + "] must hold " +
                             std::to_string(dims[k + 1]) + " rows");
        Matrix mat(field, std::size_t(dims[k + 1]), std::size_t(dims[k]));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const json& row = rows[r];
            if (!row.is_array() || row.size() != std::size_t(dims[k]))
                throw ParseError("maps[" + std::to_string(k) + "] row " + std::to_string(r) +
                                 " must hold " + std::to_string(dims[k]) + " entries");
            for (std::size_t c = 0; c < row.size(); ++c) {
                long long v = require_int(row[c], "matrix entry");
                if (v < 0 || v >= p)
                    throw ParseError("matrix entry " + std::to_string(v) +
                                     " outside [0, p) in maps[" + std::to_string(k) + "]");
                mat(r, c) = std::uint32_t(v);
            }
        }
        maps.push_back(std::move(mat));
    }
    return NComplex(int(order), field, int(lo), std::move(dims), std::move(maps));
}

namespace {

std::string summand_text(const Indec& part, int count) {
    return "M[" + std::to_string(part.start) + "]^" + std::to_string(part.length) + " x " +
           std::to_string(count);
}

}  // namespace

std::string render_multiset(const SummandMultiset& ms) {
    if (ms.empty()) return "0\n";
    std::string out;
    for (const auto& [part, count] : ms) out += summand_text(part, count) + "\n";
    return out;
}

std::string render_multiset_inline(const SummandMultiset& ms) {
    if (ms.empty()) return "0\n";
    std::string out;
    for (const auto& [part, count] : ms) {
        if (!out.empty()) out += ", ";
        out += summand_text(part, count);
    }
    return out + "\n";
}

std::string render_ah_table(const AHTable& table, const NComplex& m) {
    if (table.entries.empty())
        return m.is_zero() ? "(empty)\n" : "acyclic (projective/injective)\n";
    int dmin = table.entries.begin()->first.first;
    int dmax = table.entries.rbegin()->first.first;
    std::ostringstream out;
    out << " a\\i |";
    for (int d = dmin; d <= dmax; ++d) out << std::setw(4) << d;
    out << "\n";
    for (int a = 1; a <= table.order - 1; ++a) {
        out << std::setw(4) << a << " |";
        for (int d = dmin; d <= dmax; ++d) {
            int v = table.at(d, a);
            if (v == 0)
                out << std::setw(4) << ".";
            else
                out << std::setw(4) << v;
        }
        out << "\n";
    }
    return out.str();
}

std::string summary_line(const NComplex& m) {
    std::string out = "N=" + std::to_string(m.order()) + " p=" + std::to_string(m.field().modulus());
    if (m.is_zero()) return out + " window=empty dims=[]\n";
    out += " window=[" + std::to_string(m.lo()) + "," + std::to_string(m.hi()) + "] dims=[";
    for (std::size_t k = 0; k < m.dims().size(); ++k) {
        if (k) out += ",";
        out += std::to_string(m.dims()[k]);
    }
    return out + "]\n";
}

std::string digest_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

}  // namespace ncx
