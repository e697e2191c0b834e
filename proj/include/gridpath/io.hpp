#pragma once

#include "gridpath/chain.hpp"

#include <string>

namespace gridpath {

/// Chain document: UTF-8 JSON with fixed field order
/// (version, dims, kind, label, vertices, steiner_flags) and coordinates
/// printed with 17 significant decimal digits, so write(read(write(c)))
/// is byte-identical to write(c).
std::string write_chain(const Chain& c);

/// Parses a chain document and validates the chain invariants.
/// Throws std::runtime_error on malformed input, std::invalid_argument on
/// invariant violations.
Chain read_chain(const std::string& text);

enum class Projection { xy, xz, yz, isometric };

Projection projection_from_string(const std::string& s);
std::string to_string(Projection p);

/// Scalable vector drawing of the chain: grid points as dots, Steiner
/// points distinguished, directed edges numbered in traversal order, the
/// tight bounding box outlined. xy/xz/yz are coordinate-plane projections
/// (chain dimension >= 2 resp. >= 3); isometric requires dimension 3.
std::string export_figure(const Chain& c, Projection proj);

} // namespace gridpath
