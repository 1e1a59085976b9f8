#pragma once

#include "iqmis/qaoa.hpp"

namespace iqmis {

// Closed-form single-qubit correlator of a depth-1 layer walk on a vertex of
// degree d in a unit-weight instance with penalty lambda:
//   sin(2 beta) cos^d(2 gamma lambda) sin(2 gamma (1 - d lambda))
double j1(int d, double beta, double gamma, double lambda);

// Weighted variant, reward r on the vertex:
//   sin(2 beta) cos^d(2 gamma lambda) sin(2 gamma (r - d lambda))
double j1_weighted(int d, double r, double beta, double gamma, double lambda);

// Leading-order depth-2 correlator. Exact at gamma2 = 0; the dropped terms
// carry additional sin(gamma2 .) factors. c = lambda d - 1.
double j2_leading(int d, double beta1, double beta2, double gamma1, double gamma2, double lambda);

// EXPERIMENTAL: two-qubit closed form for a depth-1 layer walk, transcribed
// as published. It does not reduce to zero at gamma = 0 where the exact
// correlator does, and no constant rescaling repairs that (see the appc
// verification suite for the full comparison); quadratic selection therefore
// always uses the statevector backend. d_i, d_j are the endpoint degrees,
// t the number of triangles through the edge.
double jij_p1(int d_i, int d_j, int t, double beta, double gamma, double lambda);

// Pure-MIS view recovered from an encoded cost; rejects costs whose coupling
// structure cannot come from encode_mis.
struct MisView {
  double lambda = 1.0;
  std::vector<int> degree;
  std::vector<double> reward;
};
MisView mis_view(const IsingCost& cost);

// Classical drop-in for the depth-1 simulator backend: z entries from the
// closed form, zz entries from the experimental pair form (clamped to the
// report range), expectation assembled by linearity.
CorrelatorReport mimic_correlators(const IsingCost& cost, const Angles& angles);

// Angle search for the mimic backend. The pair closed form is unusable, so
// the surrogate objective keeps the constant and field terms only.
OptimizeResult mimic_optimize(const IsingCost& cost, const OptimizerConfig& cfg);

}  // namespace iqmis
