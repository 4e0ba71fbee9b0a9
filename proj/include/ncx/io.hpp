#pragma once

#include <string>
#include <string_view>

#include "ncx/cohomology.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// Canonical interchange form: one-line JSON object with fields exactly
/// {"N","p","lo","dims","maps"} in sorted key order, integer entries only,
/// newline-terminated. maps[k] is row-major with dims[k+1] rows of dims[k]
/// entries in [0, p). serialize(deserialize(s)) == s for canonical
/// documents.
std::string serialize(const NComplex& m);

/// Throws ParseError for malformed JSON or schema violations (wrong keys or
/// types, shape disagreements with dims, out-of-range entries) and Error for
/// mathematically invalid values (composite p, N < 2).
NComplex deserialize(const std::string& text);

/// "M[i]^l x n" lines, sorted; "0" for the empty multiset.
std::string render_multiset(const SummandMultiset& ms);

/// Same entries on one comma-separated line.
std::string render_multiset_inline(const SummandMultiset& ms);

/// Degrees as columns, amplitudes 1..N-1 as rows, "." for zero entries.
std::string render_ah_table(const AHTable& table, const NComplex& m);

/// One-line human summary of a complex.
std::string summary_line(const NComplex& m);

/// FNV-1a 64-bit digest as 16 hex characters; used to echo inputs in
/// machine-readable reports.
std::string digest_hex(std::string_view bytes);

}  // namespace ncx
