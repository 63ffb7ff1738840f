#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "matreg/matroid.hpp"
#include "matreg/simplicial.hpp"

namespace matreg {

// Text formats, one record per file, '#' starts a comment:
//
//   matroid v1        graph v1              complex v1
//   n = 4             vertices = 4          vertices = 3
//   bases = {1 2} ..  edges = 1-2 2-3 ..    facets = {1 2} {2 3} ..
//
// Line and column numbers in ParseError are 1-based and refer to the raw text.

Matroid parse_matroid(std::string_view text);
Graph parse_graph(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);

using Record = std::variant<Matroid, Graph, SimplicialComplex>;
/// Dispatches on the header line.
Record parse_record(std::string_view text);

std::string format_matroid(const Matroid& m);
std::string format_graph(const Graph& g);
std::string format_complex(const SimplicialComplex& c);

/// 64-bit FNV-1a of the canonical matroid text, as 16 hex digits.
std::string canonical_hash(const Matroid& m);

/// Whole file contents; throws Error(InvalidArgument) when unreadable.
std::string read_file(const std::string& path);

}  // namespace matreg
