#include "qg/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qg/errors.hpp"

namespace qg {

Grid2D::Grid2D(int n, double box_length) : n_(n), box_length_(box_length) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw StructuralError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw StructuralError("box length must be positive and finite");
  }
}

bool Grid2D::retained(int k1, int k2) const {
  const int cut = dealias_cutoff();
  return std::abs(k1) <= cut && std::abs(k2) <= cut;
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where) {
  if (!(a == b)) {
    throw StructuralError(std::string(where) + ": grid mismatch (n=" + std::to_string(a.n()) +
                          " vs n=" + std::to_string(b.n()) + ")");
  }
}

}  // namespace qg
