#include "fint/annulus.hpp"

#include <sstream>

#include "fint/chebyshev.hpp"

namespace fint {

AnnularGrid build_annulus(const BoundaryCurve& curve, double R, int M, Side side, double rmax) {
  if (M < 4) throw ParameterError("annulus needs at least 4 Chebyshev modes");
  if (!(R > 0.0) || R >= rmax) {
    std::ostringstream os;
    os << "annulus width R=" << R << " must satisfy 0 < R < R_max=" << rmax;
    throw ParameterError(os.str());
  }
  AnnularGrid a;
  a.parent = curve;
  a.R = R;
  a.M = M;
  a.side = side;
  a.t = cheb::nodes(M);
  a.r.resize(M);
  for (int k = 0; k < M; ++k) a.r[k] = a.r_of_t(a.t[k]);
  const int N = curve.N();
  a.x.resize(static_cast<size_t>(N) * M);
  a.psi.resize(a.x.size());
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < M; ++k) {
      size_t idx = static_cast<size_t>(j) * M + k;
      a.x[idx] = curve.nodes()[j] + a.r[k] * curve.normals()[j];
      a.psi[idx] = curve.speed()[j] * (1.0 + a.r[k] * curve.curvature()[j]);
      if (!(a.psi[idx] > 0.0)) throw ParameterError("annular coordinates collapse (psi <= 0)");
    }
  a.interface = curve.offset(a.rI());
  return a;
}

}  // namespace fint
