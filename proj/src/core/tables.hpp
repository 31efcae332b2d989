#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/trace_poly.hpp"

namespace symtrace {

/// The non-trivial polarized Cayley-Hamilton maps of degree k: every
/// partition with at least two parts, in reverse-lexicographic order.
std::vector<std::pair<Partition, TracePolynomial>> ch_table_rows(int k);

/// Table rendering: one "partition  integer-normalized map" line per row.
std::string ch_table_text(int k);

/// JSON rendering: {"k":., "rows":[{"partition":[..], "text":"..", "terms":[..]}]}
std::string ch_table_json(int k);

}  // namespace symtrace
