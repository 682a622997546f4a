#pragma once

#include <string>

namespace fint {

// Poisson solves Lap u = f; the modified Helmholtz problem solves (alpha^2 - Lap) u = f.
struct PdeKind {
  enum class Type { Poisson, ModifiedHelmholtz };
  Type type = Type::Poisson;
  double alpha = 0.0;

  static PdeKind poisson() { return {}; }
  static PdeKind modified_helmholtz(double alpha) { return {Type::ModifiedHelmholtz, alpha}; }

  bool is_poisson() const { return type == Type::Poisson; }
  bool has_nullspace() const { return is_poisson(); }
  // Fourier symbol of the positive operator (|k|^2 or alpha^2 + |k|^2).
  double symbol(double k2) const { return is_poisson() ? k2 : alpha * alpha + k2; }
  std::string name() const { return is_poisson() ? "poisson" : "modified_helmholtz"; }
};

}  // namespace fint
