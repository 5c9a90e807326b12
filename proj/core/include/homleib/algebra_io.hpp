#ifndef HOMLEIB_ALGEBRA_IO_HPP
#define HOMLEIB_ALGEBRA_IO_HPP

#include "homleib/algebra.hpp"

#include <string>

namespace homleib {

/// Parses the algebra file format:
///   {"name":..., "field":"Q", "dim":n, "basis":[...],
///    "bracket":[[i,j,k,"p/q"],...],   // coefficient of e_k in [e_i,e_j]
///    "alpha":[[i,j,"p/q"],...]}       // coefficient of e_j in alpha(e_i)
/// Rationals are strings with the sign on the numerator; non-reduced
/// fractions are normalized, zero denominators rejected. Duplicate index
/// triples/pairs and out-of-range indices are parse errors.
HomLeibnizAlgebra parse_algebra(const std::string& text);

HomLeibnizAlgebra load_algebra_file(const std::string& path);

/// Canonical serialization: entries sorted by index, zeros omitted,
/// fractions reduced. parse . serialize is the identity on canonical files.
std::string serialize_algebra(const HomLeibnizAlgebra& g);

} // namespace homleib

#endif
