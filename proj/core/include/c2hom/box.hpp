#pragma once

#include "c2hom/mackey.hpp"

namespace c2hom {

/// Box product with the raw presentation kept around so that maps can be
/// pushed through it. Raw fixed-level generators: x_i (x) z_j for fixed-level
/// generators (index i * gfix(b) + j) followed by orbit classes [y_k (x) u_l]
/// (index k * ge(b) + l). Raw e-level generators are y_k (x) u_l.
struct BoxProduct {
  MackeyFunctor functor;
  Matrix e_to, e_from;      // raw e <-> simplified e
  Matrix fix_to, fix_from;  // raw fix <-> simplified fix
};

BoxProduct box_product(const MackeyFunctor& a, const MackeyFunctor& b);
MackeyFunctor box(const MackeyFunctor& a, const MackeyFunctor& b);

/// f box g : sa box sb -> ta box tb, given the box products of the sources and
/// of the targets.
MackeyHom box_map(const MackeyHom& f, const MackeyHom& g, const BoxProduct& src, const BoxProduct& tgt);

/// Relative box product over a Green functor that is a quotient of the
/// Burnside functor (the unit map must be onto). Computed as the quotient of
/// a box b by the kernel J of the unit map acting through the Burnside
/// action.
struct RelativeBox {
  BoxProduct raw;       // a box b
  MackeyFunctor functor;
  Matrix e_to, fix_to;  // simplified raw -> result (surjections)
  Matrix e_from, fix_from;
};
RelativeBox box_over_green_full(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyFunctor& r);
MackeyFunctor box_over_green(const MackeyFunctor& a, const MackeyFunctor& b, const MackeyFunctor& r);
MackeyHom box_over_green_map(const MackeyHom& f, const MackeyHom& g, const RelativeBox& src, const RelativeBox& tgt);

/// Quotient of m by the Mackey subfunctor generated by the given e-level and
/// fixed-level vectors. Returns the quotient with its projection.
struct MackeyQuotient {
  MackeyFunctor functor;
  Matrix e_to, e_from, fix_to, fix_from;
};
MackeyQuotient mackey_quotient(const MackeyFunctor& m, const Matrix& e_vecs, const Matrix& fix_vecs);

}  // namespace c2hom
