#pragma once

#include <complex>
#include <string_view>

namespace polyanalytic {

enum class Domain { unit_disk, upper_half_plane };

template <typename Scalar>
bool is_interior(Domain domain, const std::complex<Scalar>& z) {
  if (domain == Domain::unit_disk) return std::norm(z) < Scalar(1);
  return z.imag() > Scalar(0);
}

inline std::string_view to_string(Domain domain) {
  return domain == Domain::unit_disk ? "disk" : "halfplane";
}

}  // namespace polyanalytic
