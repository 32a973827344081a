#ifndef PARID_SMOOTHING_HPP
#define PARID_SMOOTHING_HPP

#include <parid/fields.hpp>

namespace parid {

/// Clement-type quasi-interpolant: each output nodal value is the value at
/// that node of the local least-squares affine fit over the node's element
/// patch (patch vertices plus element barycenters). Output is a continuous
/// P1 field; reproduces constants and globally affine fields exactly.
ScalarField clement_smooth(const MeshPtr& mesh, const ScalarField& raw);

/// Level-wise smoothing; the time grid is unchanged.
SpaceTimeField smooth_spacetime(const SpaceTimeField& raw);

/// W^{1,inf} norm of a P1 field: max(max nodal |v|, max element |grad v|).
double w1inf_norm(const ScalarField& f);

struct SmoothingReport {
  double h = 0.0;
  double delta = 0.0;
  double delta_h = 0.0;          // max{h, delta/h^2}
  double combined_bound = 0.0;   // 2 Ctilde delta_h
  double ctilde = 1.0;
};

/// delta_h = max{h, delta/h^2} and the combined bound shape used to re-enter
/// the regularization pipeline with smoothed data.
SmoothingReport modified_noise_level(double delta, double h, double ctilde = 1.0);

/// Mesh size minimizing max{h, delta/h^2}: h = delta^(1/3).
double suggest_mesh_size(double delta);

/// Measured constants of the smoothing estimates over a seeded battery of
/// random fields on the mesh: c1 from ||v - Pi v|| <= C1 ||v|| and c5 from
/// ||Pi v||_{W1inf} <= C5/h^2 ||v||_{L2}.
struct MeasuredConstants {
  double c1 = 0.0;
  double c5 = 0.0;
};
MeasuredConstants measure_smoothing_constants(const MeshPtr& mesh, int samples,
                                              std::uint64_t seed = 7321);

} // namespace parid

#endif
