#pragma once

// Test-only reference computations. None of these call the library's
// linear algebra: matrices are copied out into plain int64 arrays and
// reduced here.

#include <cstdint>
#include <vector>

#include "c2hom/homalg.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;  // row-major

Mat to_mat(const c2hom::Matrix& m);
Mat zeros(std::size_t r, std::size_t c);
Mat mul(const Mat& a, const Mat& b);
/// Explicit width for products whose right factor has no rows.
Mat mul(const Mat& a, const Mat& b, std::size_t out_cols);
std::size_t rows(const Mat& a);
std::size_t cols(const Mat& a, std::size_t fallback = 0);

/// Invariant factors of Z^gens / colspan(rels): entries != 1, torsion first,
/// then one 0 per free summand.
std::vector<std::int64_t> invariants(const Mat& rels, std::size_t gens);
/// Same list in the library's representation.
std::vector<std::int64_t> library_invariants(const c2hom::FgModule& m);

std::size_t rank_mod_p(Mat a, std::int64_t p);

/// Mackey axioms (and tr res = 2) checked generator by generator, with
/// membership in the relation lattice decided by enumerating the lattice
/// modulo the exponent. Finite levels only.
struct AxiomReport {
  bool well_defined = false;
  bool mackey = false;
  bool green = false;
};
AxiomReport brute_force_axioms(const c2hom::MackeyFunctor& m);

/// Invariant factors of both levels of M box Constant(Z/a) from the
/// closed form <me (x) A, (mfix (x) A) / ((tr res - 2) x (x) z)>. M over Z;
/// a = 0 means A = Z.
struct BoxLevels {
  std::vector<std::int64_t> e, fix;
};
BoxLevels box_with_constant(const c2hom::MackeyFunctor& m, std::int64_t a);

/// A bounded complex of permutation modules given by raw data: per degree
/// the involution as a permutation of the basis, and d_n as dense matrices.
struct PermData {
  int lo = 0;
  std::vector<std::vector<int>> perm;  // perm[i][k] = g(k) in degree lo + i
  std::vector<Mat> d;                   // d[i] : degree lo + i + 1 -> lo + i
};
PermData k_sigma();        // Z{x, gx} -> Z in degrees 1, 0
PermData k_minus_sigma();  // Z -> Z{x, gx} in degrees 0, -1
PermData unit();
/// Dense tensor product with Koszul signs, basis pairs in (i, j) row-major
/// order.
PermData tensor(const PermData& a, const PermData& b);

/// Homology of the e-level and fixed-level evaluations, each as invariant
/// factors over Z (p = 0) or as F_p dimensions (p prime; one entry p per
/// dimension).
struct LevelHomology {
  std::vector<std::int64_t> e, fix;
};
LevelHomology homology(const PermData& c, int n, std::int64_t p = 0);

/// Number of monomials of degree k in d variables, by enumeration.
std::int64_t monomials(int d, int k);
/// Rank of Omega^n in weight w for R[x_1..x_d], by enumeration.
std::int64_t omega_rank(int d, int n, int w);

}  // namespace oracle
