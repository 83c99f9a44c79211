#include "seidel/errors.hpp"

#include <sstream>

namespace seidel {

DimensionError::DimensionError(std::size_t requested, std::size_t limit)
    : Error("matrix dimension " + std::to_string(requested) + " exceeds the limit of " +
            std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

namespace {
std::string convergence_message(int sweeps, double off_norm, double threshold) {
  std::ostringstream os;
  os << "Jacobi eigensolver did not converge after " << sweeps << " sweeps (off-diagonal norm "
     << off_norm << ", threshold " << threshold << ")";
  return os.str();
}
}  // namespace

ConvergenceError::ConvergenceError(int sweeps, double off_norm, double threshold)
    : Error(convergence_message(sweeps, off_norm, threshold)), sweeps_(sweeps), off_norm_(off_norm) {}

}  // namespace seidel
