#pragma once

#include "johnson/eigensolvers.hpp"
#include "johnson/terwilliger.hpp"

namespace johnson {

/// θ*_{m1,m2}, the eigenvalue of A* on the row m1 of a module. Requires m1 + m2 = n/2 - k.
double dual_eigenvalue(HalfInt m1, HalfInt m2, const GraphSpec& spec);
/// Same value at distance i, i.e. m1 = (n-k)/2 - i.
double dual_eigenvalue_at(double i, const GraphSpec& spec);

/// Which neighbour a_{m1} couples. Lowering: a_{m1} links m1 and m1-1.
/// Raising: the same closed form placed between m1 and m1+1.
enum class AIndexConvention { Lowering, Raising };

struct TridiagonalCoefficients {
  double off = 0.0;       // a
  double diagonal = 0.0;  // b
};

/// a_{m1}, b_{m1} of the action of A on row m1 of the module.
TridiagonalCoefficients tridiagonal_A_coefficients(const ModuleLabel& label, HalfInt m1,
                                                   const GraphSpec& spec);

/// a*_j (coupling j and j-1, zero at the lowest level) and b*_j.
TridiagonalCoefficients tridiagonal_Astar_coefficients(HalfInt j, const ModuleLabel& label,
                                                       const GraphSpec& spec);

/// A on the module in the m1 basis under a given placement of a_{m1}.
Tridiagonal<double> module_A_action(const ModuleLabel& label, const GraphSpec& spec,
                                    AIndexConvention convention);
/// The placement that reproduces θ_j on every module of a test graph; throws
/// NumericalError if neither does.
AIndexConvention resolve_a_convention();
Tridiagonal<double> module_A_action(const ModuleLabel& label, const GraphSpec& spec);

/// A* on the module in the j basis, levels ascending.
Tridiagonal<double> module_Astar_action(const ModuleLabel& label, const GraphSpec& spec);

/// Parameters of T = {A, A*} + μA* + νA for SD cut after distance `cutoff`
/// and SE cut after level j0. The flags select which side of each cut the
/// subsystem and the filling occupy; T is the same operator either way.
struct HeunSpec {
  double mu = 0.0;
  double nu = 0.0;
  int cutoff = 0;
  HalfInt j0;
  bool subsystem_inner = true;  // SD = {0..cutoff}, else {cutoff+1..k}
  bool filling_lower = true;    // SE = {n/2-k..j0}, else {j0+1..n/2}
};

/// Validates 0 <= cutoff <= k and n/2-k <= j0 <= n/2, then fixes μ and ν.
HeunSpec make_heun_spec(const GraphSpec& spec, int cutoff, HalfInt j0, bool subsystem_inner = true,
                        bool filling_lower = true);

FillingSpec heun_filling(const HeunSpec& hs, const GraphSpec& spec);
SubsystemSpec heun_subsystem(const HeunSpec& hs, const GraphSpec& spec);

/// T on the whole module in the m1 basis.
Tridiagonal<double> build_T(const ModuleLabel& label, const HeunSpec& hs, const GraphSpec& spec);
/// T on the whole module in the j basis.
Tridiagonal<double> build_T_jbasis(const ModuleLabel& label, const HeunSpec& hs,
                                   const GraphSpec& spec);

/// ‖[C, T]‖_max on the subsystem rows of one module; `mu_shift` perturbs μ.
double commutant_residual(const ModuleBasis& basis, const HeunSpec& hs, const GraphSpec& spec,
                          double mu_shift = 0.0);

/// Spectrum of C read out through the eigenvectors of T, module by module.
CorrelationSpectrum spectrum_via_heun(const std::vector<ModuleBasis>& bases, const GraphSpec& spec,
                                      const HeunSpec& hs);
CorrelationSpectrum spectrum_via_heun(const GraphSpec& spec, const HeunSpec& hs);

}  // namespace johnson
