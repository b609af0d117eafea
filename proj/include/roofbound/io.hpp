#pragma once

#include "roofbound/measures.hpp"

#include <iosfwd>
#include <string>

namespace roofbound {

/// Density matrix text format: first line "dim n", then n^2 lines
/// "row col re im" (17 significant digits on write, exact round trip).
DensityMatrix read_density_matrix(std::istream& in);
void write_density_matrix(std::ostream& out, const DensityMatrix& rho);

/// Fixed CSV number format: 9 significant digits.
std::string csv_number(double v);

} // namespace roofbound
