#pragma once

// Chebyshev utilities on [-1, 1]: first-kind nodes, value/coefficient maps,
// Clenshaw evaluation, differentiation, integration and Fejer weights.

#include <functional>
#include <vector>

namespace fint::cheb {

// First-kind nodes t_k = cos(pi(2k+1)/(2M)), k = 0..M-1 (descending).
std::vector<double> nodes(int M);

// Dense M-by-M map from node values to coefficients (row-major, coeff x node).
std::vector<double> values_to_coeffs_matrix(int M);

std::vector<double> values_to_coeffs(const std::vector<double>& values);

double eval(const std::vector<double>& a, double t);
// Value and first derivative at t.
void eval_d(const std::vector<double>& a, double t, double& f, double& df);

std::vector<double> derivative(const std::vector<double>& a);
// Antiderivative vanishing at t = -1.
std::vector<double> antiderivative(const std::vector<double>& a);

// Coefficients of the degree-n interpolant of f at Chebyshev extreme points.
std::vector<double> fit(const std::function<double(double)>& f, int n);

// Drop trailing coefficients below tol * max|a|.
void truncate(std::vector<double>& a, double tol);

// Fejer first-rule weights on the first-kind nodes (integrate over [-1, 1]).
std::vector<double> fejer_weights(int M);

// Row of T_m(t), m = 0..K-1.
std::vector<double> basis_row(int K, double t);

}  // namespace fint::cheb
