#include "c2hom/zlin.hpp"

#include <mutex>
#include <sstream>

#include "c2hom/error.hpp"

namespace c2hom {

// ---- BaseRing ---------------------------------------------------------------

BaseRing BaseRing::integers_mod(const Int& m) {
  if (m < 2) fail(ErrorKind::InvalidParams, "modulus must be at least 2, got " + m.get_str());
  BaseRing r;
  r.kind_ = Kind::IntegersMod;
  r.modulus_ = m;
  return r;
}

bool BaseRing::is_unit(const Int& a) const {
  if (!is_mod()) return a == 1 || a == -1;
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t());
  return g == 1;
}

Int BaseRing::inverse(const Int& unit) const {
  if (!is_unit(unit)) fail(ErrorKind::Internal, unit.get_str() + " is not a unit in " + name());
  if (!is_mod()) return unit;
  Int inv;
  mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus_.get_mpz_t());
  return inv;
}

Int BaseRing::reduce(const Int& a) const { return is_mod() ? mod_floor(a, modulus_) : a; }

std::string BaseRing::name() const { return is_mod() ? "Z/" + modulus_.get_str() : "Z"; }

// ---- FgModule ---------------------------------------------------------------

struct FgModule::Lazy {
  std::once_flag once;
  std::unique_ptr<LinearSolver> solver;
};

FgModule::FgModule(BaseRing base, std::size_t gens, Matrix rels)
    : base_(std::move(base)), gens_(gens), rels_(std::move(rels)), lazy_(std::make_shared<Lazy>()) {
  if (rels_.rows() != gens_) {
    if (rels_.cols() == 0) {
      rels_ = Matrix(gens_, 0);
    } else {
      fail(ErrorKind::SchemaError, "relation matrix has " + std::to_string(rels_.rows()) + " rows for " +
                                       std::to_string(gens_) + " generators");
    }
  }
  if (base_.is_mod()) rels_.reduce_mod(base_.modulus());

  // Monomial presentations (at most one nonzero per relator) admit a cheap
  // membership test; simplified modules and their sums all have this shape.
  std::vector<Int> mods(gens_, base_.is_mod() ? base_.modulus() : Int(0));
  for (std::size_t c = 0; c < rels_.cols(); ++c) {
    std::size_t hit = gens_;
    for (std::size_t r = 0; r < gens_; ++r) {
      if (sgn(rels_(r, c)) == 0) continue;
      if (hit != gens_) return;
      hit = r;
    }
    if (hit == gens_) continue;
    mpz_gcd(mods[hit].get_mpz_t(), mods[hit].get_mpz_t(), rels_(hit, c).get_mpz_t());
  }
  row_moduli_ = std::move(mods);
}

FgModule FgModule::free(BaseRing base, std::size_t rank) { return FgModule(std::move(base), rank, Matrix(rank, 0)); }

FgModule FgModule::cyclic(BaseRing base, const Int& order) {
  if (sgn(order) == 0) return free(std::move(base), 1);
  Matrix r(1, 1);
  r(0, 0) = abs(order);
  return FgModule(std::move(base), 1, r);
}

FgModule FgModule::from_invariants(BaseRing base, const std::vector<Int>& factors) {
  Matrix r(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) r(i, i) = factors[i];
  return FgModule(std::move(base), factors.size(), r);
}

Matrix FgModule::lifted_rels() const {
  if (!base_.is_mod()) return rels_;
  return hstack(rels_, Matrix::scalar(gens_, base_.modulus()));
}

const LinearSolver& FgModule::solver() const {
  std::call_once(lazy_->once, [this] { lazy_->solver = std::make_unique<LinearSolver>(lifted_rels()); });
  return *lazy_->solver;
}

bool FgModule::is_zero_vectors(const Matrix& vecs) const {
  if (vecs.rows() != gens_) fail(ErrorKind::Internal, "vector length does not match generator count");
  if (row_moduli_) {
    const auto& mods = *row_moduli_;
    for (std::size_t r = 0; r < gens_; ++r)
      for (std::size_t c = 0; c < vecs.cols(); ++c) {
        const Int& v = vecs(r, c);
        if (sgn(v) == 0) continue;
        if (sgn(mods[r]) == 0 || !mpz_divisible_p(v.get_mpz_t(), mods[r].get_mpz_t())) return false;
      }
    return true;
  }
  return solver().solvable(vecs);
}

void FgModule::normalize(Matrix& vecs) const {
  if (row_moduli_) {
    vecs.reduce_rows_mod(*row_moduli_);
  } else if (base_.is_mod()) {
    vecs.reduce_mod(base_.modulus());
  }
}

// ---- ModuleHom --------------------------------------------------------------

ModuleHom::ModuleHom(FgModule s, FgModule t, Matrix m) : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.gens() || matrix.cols() != source.gens()) {
    if (matrix.empty() && (target.gens() == 0 || source.gens() == 0)) {
      matrix = Matrix(target.gens(), source.gens());
    } else {
      fail(ErrorKind::IllFormedHom, "matrix shape " + std::to_string(matrix.rows()) + "x" +
                                        std::to_string(matrix.cols()) + " does not match generators");
    }
  }
  if (source.base() != target.base()) fail(ErrorKind::BaseMismatch, "hom between different bases");
  target.normalize(matrix);
}

ModuleHom ModuleHom::identity(const FgModule& m) { return ModuleHom(m, m, Matrix::identity(m.gens())); }

ModuleHom ModuleHom::zero(const FgModule& s, const FgModule& t) { return ModuleHom(s, t, Matrix(t.gens(), s.gens())); }

bool is_well_defined(const ModuleHom& f) { return f.target.is_zero_vectors(f.matrix * f.source.lifted_rels()); }

bool is_zero_hom(const ModuleHom& f) { return f.target.is_zero_vectors(f.matrix); }

bool homs_equal(const ModuleHom& f, const ModuleHom& g) { return f.target.is_zero_vectors(f.matrix - g.matrix); }

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) { return ModuleHom(f.source, g.target, g.matrix * f.matrix); }

// ---- invariants -------------------------------------------------------------

std::vector<Int> invariant_factors(const FgModule& m) {
  SmithForm s = smith_form(m.lifted_rels(), kSmithNone);
  std::vector<Int> out;
  for (const Int& d : s.diag)
    if (d != 1) out.push_back(d);
  for (std::size_t i = s.rank; i < m.gens(); ++i) out.emplace_back(0);
  return out;
}

bool is_zero_module(const FgModule& m) {
  if (m.gens() == 0) return true;
  return m.is_zero_vectors(Matrix::identity(m.gens()));
}

std::optional<Int> order(const FgModule& m) {
  Int n = 1;
  for (const Int& d : invariant_factors(m)) {
    if (sgn(d) == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

bool is_finite(const FgModule& m) {
  // Over Z/m every finitely generated module is finite.
  return m.base().is_mod() || order(m).has_value();
}

bool isomorphic(const FgModule& a, const FgModule& b) {
  return a.base() == b.base() && invariant_factors(a) == invariant_factors(b);
}

Simplified simplify(const FgModule& m) {
  const std::size_t g = m.gens();
  SmithForm s = smith_form(m.lifted_rels(), kSmithLeft | kSmithLeftInverse);
  std::vector<std::size_t> keep;
  std::vector<Int> d;
  for (std::size_t i = 0; i < g; ++i) {
    Int di = i < s.rank ? s.diag[i] : Int(0);
    if (di == 1) continue;
    keep.push_back(i);
    d.push_back(di);
  }
  Matrix rels(keep.size(), 0);
  std::vector<std::size_t> rel_rows;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (sgn(d[k]) == 0) continue;
    if (m.base().is_mod() && d[k] == m.base().modulus()) continue;
    rel_rows.push_back(k);
  }
  rels = Matrix(keep.size(), rel_rows.size());
  for (std::size_t j = 0; j < rel_rows.size(); ++j) rels(rel_rows[j], j) = d[rel_rows[j]];

  Simplified out{FgModule(m.base(), keep.size(), rels), s.U.rows_subset(keep), Matrix(g, keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t r = 0; r < g; ++r) out.from(r, k) = s.Uinv(r, keep[k]);
  out.module.normalize(out.to);
  m.normalize(out.from);
  return out;
}

namespace {

// Lattice {x : F x = 0 in N}, as a basis matrix with gens(M) rows.
Matrix preimage_of_zero(const ModuleHom& f) {
  const std::size_t gm = f.source.gens();
  Matrix k = integer_kernel(hstack(f.matrix, f.target.lifted_rels()));
  return column_span_basis(k.block(0, 0, gm, k.cols()));
}

}  // namespace

SubquotientResult subquotient(const ModuleHom& f, Subquotient which) {
  if (!is_well_defined(f)) fail(ErrorKind::IllFormedHom, "map does not carry relations to relations");
  const BaseRing& base = f.source.base();
  SubquotientResult out;
  switch (which) {
    case Subquotient::Kernel: {
      Matrix basis = preimage_of_zero(f);
      LinearSolver sol(basis);
      auto rels = sol.solve(f.source.lifted_rels());
      if (!rels) fail(ErrorKind::Internal, "source relations escape the kernel lattice");
      Simplified s = simplify(FgModule(base, basis.cols(), *rels));
      out.module = s.module;
      out.map = basis * s.from;
      f.source.normalize(out.map);
      break;
    }
    case Subquotient::Image: {
      Matrix basis = preimage_of_zero(f);
      Simplified s = simplify(FgModule(base, f.source.gens(), basis));
      out.module = s.module;
      out.map = f.matrix * s.from;
      f.target.normalize(out.map);
      out.projection = s.to;
      break;
    }
    case Subquotient::Cokernel: {
      Simplified s = simplify(FgModule(base, f.target.gens(), hstack(f.target.rels(), f.matrix)));
      out.module = s.module;
      out.map = s.to;
      out.section = s.from;
      break;
    }
  }
  return out;
}

Lifter::Lifter(const Matrix& incl, const FgModule& m)
    : sub_gens_(incl.cols()), solver_(hstack(incl, m.lifted_rels())) {}

Matrix Lifter::lift(const Matrix& vecs) const {
  auto sol = solver_.solve(vecs);
  if (!sol) fail(ErrorKind::IllFormedHom, "vector does not lie in the submodule");
  return sol->block(0, 0, sub_gens_, sol->cols());
}

FgModule combine(const FgModule& a, const FgModule& b, Combine which) {
  if (a.base() != b.base()) fail(ErrorKind::BaseMismatch, a.base().name() + " vs " + b.base().name());
  if (which == Combine::DirectSum) return FgModule(a.base(), a.gens() + b.gens(), block_diag(a.rels(), b.rels()));
  Matrix rels = hstack(kron(a.rels(), Matrix::identity(b.gens())), kron(Matrix::identity(a.gens()), b.rels()));
  return FgModule(a.base(), a.gens() * b.gens(), rels);
}

FgModule direct_sum(const FgModule& a, const FgModule& b) { return combine(a, b, Combine::DirectSum); }
FgModule tensor(const FgModule& a, const FgModule& b) { return combine(a, b, Combine::Tensor); }

FgModule quotient_raw(const FgModule& m, const Matrix& vecs) {
  return FgModule(m.base(), m.gens(), hstack(m.rels(), vecs));
}

std::string describe(const FgModule& m) {
  std::vector<Int> f = invariant_factors(m);
  if (f.empty()) return "0";
  std::ostringstream os;
  std::size_t free_rank = 0;
  bool first = true;
  for (const Int& d : f) {
    if (sgn(d) == 0) {
      ++free_rank;
      continue;
    }
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
  }
  return os.str();
}

}  // namespace c2hom
