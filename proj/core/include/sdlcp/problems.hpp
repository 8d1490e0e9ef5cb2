#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdlcp/transform.hpp"

namespace sdlcp {

// A monotone SDLCP instance: find X, Y PSD with Y = L(X) + Q and Tr(XY) = 0.
struct SdlcpProblem {
  std::string name;
  int n = 0;
  LinearTransformation l = LinearTransformation::lyapunov(SymmetricMatrix::identity(1));
  SymmetricMatrix q;
  std::optional<SymmetricMatrix> x_start;  // strictly feasible interior start
  std::optional<SymmetricMatrix> x_ref;    // reference solution, when known
};

/// Benchmark instance with a two-sided multiplicative transformation
/// L(X) = A X A^T on S^5, a diagonal interior start, and a known solution.
SdlcpProblem example1();

/// Semidefinite least-squares instance: L = Lyapunov(A^T A) on S^5 with
/// Q = -(A^T B + B^T A)/2 computed from the stored 6x5 factors.
SdlcpProblem example2();

/// Least-squares-derived instance on S^3 with L = Lyapunov(G^-1), G = A^T A
/// from a stored 12x3 factor. The stored interior start is 30 * G^{1/2},
/// chosen so that X0 Y0 = c^2 I + c G^{1/2} Q is close to a multiple of the
/// identity (the plain identity start is not strictly feasible for this
/// data). No reference solution is stored.
SdlcpProblem example3();

/// Seeded random strictly-feasible monotone instance: L = TwoSided(A) with A
/// drawn nonsingular, random interior X0, and Q = Y0 - L(X0) for a random
/// positive definite Y0. Deterministic for a fixed seed.
SdlcpProblem random_monotone(int n, std::uint64_t seed);

struct ResidualReport {
  double feasibility;      // ||y - L(x) - q||_F
  double complementarity;  // Tr(x y)
  double min_eig_x;
  double min_eig_y;
};

ResidualReport residuals(const SdlcpProblem& p, const SymmetricMatrix& x,
                         const SymmetricMatrix& y);

/// Problem file I/O. The format is a JSON document
///   {"name": ..., "n": ..., "transform": {"kind": ..., "matrix": [[...]]},
///    "q": [[...]], "x_start": [[...]], "x_ref": [[...]]}
/// with matrices stored as row-major arrays of rows and kind one of
/// "two_sided" | "lyapunov" | "custom".
SdlcpProblem load_problem(std::istream& in);
SdlcpProblem load_problem_file(const std::string& path);
void save_problem(const SdlcpProblem& p, std::ostream& out);

/// Resolves "example1" | "example2" | "example3" | "random:<n>:<seed>";
/// anything else is treated as a problem file path.
SdlcpProblem problem_by_name(const std::string& name);

std::vector<std::string> builtin_problem_names();

}  // namespace sdlcp
