#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "landau/phasespace.hpp"
#include "landau/quad.hpp"
#include "landau/wigner.hpp"

namespace landau {

enum class DiscreteKind { space_inversion, time_reversal, parity, swap };

std::string discrete_name(DiscreteKind kind);
DiscreteKind parse_discrete(const std::string& name);
const std::vector<DiscreteKind>& all_discrete();

/// space_inversion q -> -q, time_reversal p -> -p, parity both,
/// swap (q1, q2, p1, p2) -> (q2, q1, p2, p1)
PhasePoint apply_discrete(DiscreteKind kind, const PhasePoint& pt);

/// Residuals of the discrete identities for W_nl over the points:
/// W_nl(-q,p) = W_ln, W_nl(q,-p) = W_ln, W_nl(-q,-p) = W_nl, W_nl(swap) = W_ln.
struct DiscreteResiduals {
  double space_inversion = 0.0, time_reversal = 0.0, parity = 0.0, swap = 0.0;
  double max() const;
};
DiscreteResiduals check_discrete(int n, int l, const std::vector<PhasePoint>& pts, const Params& params);

struct InvarianceResidual {
  double ladder = 0.0;            // max |W(A x) - W(x)| in ladder coordinates
  std::optional<double> matrix;   // max |W(C y) - W(y)|, only when C is real
  double max() const { return matrix ? std::max(ladder, *matrix) : ladder; }
};
/// True when C has no imaginary part above tol.
bool symplectic_C_is_real(const SymplecticParams& sp, const Params& params, double tol = 1e-13);
InvarianceResidual check_symplectic_invariance(const WignerIndex& idx, const SymplecticParams& sp,
                                               const std::vector<PhasePoint>& pts, const Params& params);

/// max |H_L/hbar omega| and |J/hbar| changes under the ladder action, with the
/// complex ladder values fed straight into abar a and bbar b - abar a.
double check_hamiltonian_invariance(const SymplecticParams& sp, const std::vector<PhasePoint>& pts,
                                    const Params& params);

/// (q, p) -> (q + c, p - kappa c*), c* = (c2, -c1). Leaves H_L fixed but not W_nl.
PhasePoint translate(const PhasePoint& pt, double c1, double c2, const Params& params);

/// Points with each coordinate uniform in [-r, r] times its axis unit.
std::vector<PhasePoint> random_points(std::mt19937& rng, int count, const Params& params, double r = 2.0);

}  // namespace landau
