#pragma once

#include <string>

#include "fintop/finite_function.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Space file, JSON:
///   {"n": 2, "min_nbrs": [[0], [0, 1]]}       minimal-neighborhood table
///   {"n": 2, "opens": [[], [0], [0, 1]]}      explicit open family
/// Exactly one of "min_nbrs"/"opens" must be present. Points are integers in
/// [0, n). Validation failures throw ParseError naming the broken axiom.
Topology parse_space(const std::string& text);

/// Canonical form: always the minimal-neighborhood table, points ascending.
std::string emit_space(const Topology& t);

/// Function file, JSON: {"values": ["1/2", 0, "3"]}. Entries are integers or
/// "p/q" strings; floating-point literals are rejected so values stay exact.
FiniteFunction parse_function(const std::string& text);

std::string emit_function(const FiniteFunction& f);

} // namespace fintop
