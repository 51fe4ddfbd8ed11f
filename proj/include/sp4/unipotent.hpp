#pragma once

#include "sp4/mat4.hpp"

#include <optional>

namespace sp4 {

// The unipotent radical N of the minimal parabolic, coordinatized as
//
//   u(n1, n2, n4, n5) = [ 1  n1  n2  n3 ]      n3 = n1*n5 + n4
//                       [ 0   1  n4  n5 ]
//                       [ 0   0   1   0 ]
//                       [ 0   0 -n1   1 ]
//
// The (1,4)/(2,3) entries are tied together by the symplectic condition;
// (n1, n2, n4, n5) are free coordinates.

template <typename T>
struct NCoords {
  T n1{}, n2{}, n4{}, n5{};
};

using NCoordsD = NCoords<double>;
using NCoordsQ = NCoords<Rat>;

Mat4d u_matrix(const NCoordsD& n);
Mat4q u_matrix(const NCoordsQ& n);

// Exact match against the u(.) shape; nullopt if m is not of that form.
std::optional<NCoordsQ> n_coords(const Mat4q& m);

// Group law u(a) * u(b) = u(compose(a, b)) and inverses, in coordinates.
NCoordsD n_compose(const NCoordsD& a, const NCoordsD& b);
NCoordsQ n_compose(const NCoordsQ& a, const NCoordsQ& b);
NCoordsD n_inverse(const NCoordsD& a);

// Unipotent radical of the Siegel maximal parabolic P_alpha: block
// [[I, S], [0, I]] with S symmetric. In u-coordinates that is n1 = 0 and
// S = [[n2, n4], [n4, n5]].
Mat4d palpha_u_matrix(double s11, double s12, double s22);

// Unipotent radical of the Heisenberg maximal parabolic P_beta: the
// three-parameter subgroup u(n1, n2, c) with n5 = 0, where c sits in the
// (1,4) and (2,3) entries.
Mat4d pbeta_u_matrix(double n1, double n2, double c);

} // namespace sp4
