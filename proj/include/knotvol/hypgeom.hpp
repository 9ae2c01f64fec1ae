#pragma once

#include <complex>

#include "knotvol/errors.hpp"

namespace knotvol::hypgeom {

using complex = std::complex<double>;

// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin x| dx.
// Odd, pi-periodic; absolute accuracy better than 1e-12.
double lobachevsky(double theta);

// Principal-branch dilogarithm Li2(z) = -int_0^z log(1-y)/y dy.
// Li2(1) = pi^2/6; throws MathError for z on the cut (1, inf).
complex dilog(complex z);

// Complex shape parameter of an ideal hyperbolic tetrahedron Delta(z).
struct ShapeParameter {
    complex z;
    bool positively_oriented() const { return z.imag() > 0.0; }
};

// Dihedral angle triple of an ideal tetrahedron; must sum to pi.
struct DihedralAngles {
    double alpha;
    double beta;
    double gamma;
};

// Vol(Delta(alpha,beta,gamma)) = Lambda(alpha)+Lambda(beta)+Lambda(gamma).
// Throws if the angle sum deviates from pi by more than 1e-12.
double tetra_volume_angles(const DihedralAngles& a);

// Vol(Delta(z)) = Im Li2(z) + log|z| arg(1-z)  (the Bloch-Wigner value).
// For Im z < 0 the result is the negated volume of the mirror tetrahedron,
// signalling reversed orientation; throws for z in {0, 1}.
double tetra_volume_shape(complex z);
inline double tetra_volume_shape(const ShapeParameter& s) { return tetra_volume_shape(s.z); }

// zw(z-1)(w-1) - 1, the figure-eight gluing equation residual.
complex fig8_gluing_residual(complex z, complex w);

// 6 Lambda(pi/3) = 2.0298832128..., the complete hyperbolic volume of the
// figure-eight knot complement.
double fig8_complete_volume();

} // namespace knotvol::hypgeom
