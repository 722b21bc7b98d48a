#pragma once

#include <filesystem>
#include <iosfwd>

#include "hkt/lattice_field.hpp"

namespace hkt {

/// Field snapshot: one JSON header line, then the payload as little-endian float64 pairs
/// (real, imag) ordered by component, site (row-major grid), matrix row, matrix column.
///
/// Header keys: format = "hkt-field-v1", N, n, degree, algebra ("su" | "u"), endianness =
/// "little", scalar = "complex128", components (basis names such as "dx0^dx1").
void write_field(std::ostream& out, const LatticeField& f);
/// Throws std::runtime_error on malformed headers or truncated payloads.
LatticeField read_field(std::istream& in);

void save_field(const std::filesystem::path& path, const LatticeField& f);
LatticeField load_field(const std::filesystem::path& path);

}  // namespace hkt
