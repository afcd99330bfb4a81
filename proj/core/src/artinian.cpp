// Copyright 2026 The irr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "irr/artinian.hpp"

#include "irr/error.hpp"

namespace irr {

namespace {

// Action matrix of every standard monomial of the host, computed as
// x_i * (action of b / x_i); the basis is an order ideal sorted increasingly
// so the parent is always available.
std::vector<Matrix> monomial_matrices(const StandardBasis& host_basis,
                                      const std::vector<Matrix>& var_mats,
                                      Field f, std::size_t dim) {
  std::vector<Matrix> out;
  out.reserve(host_basis.size());
  for (std::size_t k = 0; k < host_basis.size(); ++k) {
    const Monomial& b = host_basis[k].monomial;
    if (b.is_one()) {
      out.push_back(Matrix::identity(f, dim));
      continue;
    }
    std::size_t var = 0;
    while (b[var] == 0) ++var;
    const Monomial parent = b / Monomial::variable(b.num_variables(), var);
    const auto idx = host_basis.index_of({parent, 0});
    if (!idx || *idx >= k)
      throw InvariantViolation("standard monomials are not an order ideal");
    out.push_back(var_mats[var] * out[*idx]);
  }
  return out;
}

Vector sparse_to_coordinates(const SparseVector& v, const StandardBasis& basis,
                             Field f) {
  Vector out = zero_vector(f, basis.size());
  for (const auto& t : v) {
    const auto idx = basis.index_of({t.monomial, t.component});
    if (!idx)
      throw InvariantViolation("normal form has a non-standard term");
    out[*idx] = t.coefficient;
  }
  return out;
}

}  // namespace

ArtinianAlgebra::ArtinianAlgebra(GroebnerBasis defining)
    : defining_(std::move(defining)), basis_(standard_monomials(defining_)) {
  if (defining_.rank() != 1)
    throw MismatchError("an algebra needs an ideal, not a module basis");
  const auto& ring = defining_.ring();
  const std::size_t n = ring->num_variables();
  const std::size_t d = basis_.size();
  for (std::size_t var = 0; var < n; ++var) {
    Matrix m(field(), d, d);
    const Monomial x = Monomial::variable(n, var);
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector prod{{basis_[j].monomial * x, 0, Scalar::one(field())}};
      m.set_column(j, sparse_to_coordinates(defining_.normal_form(prod),
                                            basis_, field()));
    }
    multiplications_.push_back(std::move(m));
  }
}

AlgebraPtr build_algebra(const GroebnerBasis& defining) {
  return std::make_shared<const ArtinianAlgebra>(defining);
}

Vector ArtinianAlgebra::unit() const {
  return coordinates(Polynomial::constant(ring(), 1));
}

std::vector<Vector> ArtinianAlgebra::maximal_ideal_generators() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ring()->num_variables(); ++i)
    out.push_back(coordinates(Polynomial::variable(ring(), i)));
  return out;
}

Vector ArtinianAlgebra::coordinates(const Polynomial& p) const {
  if (!same_ring(ring(), p.ring()))
    throw MismatchError("polynomial belongs to a different ambient ring");
  return sparse_to_coordinates(defining_.normal_form(to_sparse(p)), basis_,
                               field());
}

Polynomial ArtinianAlgebra::lift(const Vector& v) const {
  if (v.size() != dim()) throw MismatchError("coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.push_back({basis_[k].monomial, v[k]});
  return Polynomial::from_terms(ring(), std::move(terms));
}

Matrix ArtinianAlgebra::element_matrix(const Vector& v) const {
  if (v.size() != dim()) throw MismatchError("coordinate vector length");
  // Columns are v * b_j; build them from the unit via the multiplication
  // matrices.
  const auto mats = monomial_matrices(basis_, multiplications_, field(), dim());
  Matrix out(field(), dim(), dim());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out = out + mats[k].scaled(v[k]);
  return out;
}

Vector ArtinianAlgebra::multiply(const Vector& a, const Vector& b) const {
  return element_matrix(a).apply(b);
}

bool ArtinianAlgebra::is_local() const {
  for (const auto& m : multiplications_) {
    Matrix power = m;
    for (std::size_t k = 1; k < dim() && !power.is_zero(); ++k)
      power = power * m;
    if (!power.is_zero()) return false;
  }
  return true;
}

ArtinianModule ArtinianModule::regular(AlgebraPtr host) {
  GroebnerBasis gb = host->defining();
  StandardBasis basis = host->basis();
  return ArtinianModule(std::move(host), std::move(gb), std::move(basis));
}

ArtinianModule::ArtinianModule(AlgebraPtr host, GroebnerBasis module_gb)
    : host_(std::move(host)),
      gb_(std::move(module_gb)),
      basis_(standard_monomials(gb_)) {
  if (!same_ring(host_->ring(), gb_.ring()))
    throw MismatchError("module and host live over different rings");
  build_actions();
}

ArtinianModule::ArtinianModule(AlgebraPtr host, GroebnerBasis gb,
                               StandardBasis basis)
    : host_(std::move(host)), gb_(std::move(gb)), basis_(std::move(basis)) {
  build_actions();
}

void ArtinianModule::build_actions() {
  const auto& ring = host_->ring();
  const std::size_t n = ring->num_variables();
  const std::size_t d = basis_.size();
  const Field f = field();
  for (std::size_t var = 0; var < n; ++var) {
    Matrix m(f, d, d);
    const Monomial x = Monomial::variable(n, var);
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector prod{
          {basis_[j].monomial * x, basis_[j].component, Scalar::one(f)}};
      m.set_column(j, sparse_to_coordinates(gb_.normal_form(prod), basis_, f));
    }
    actions_.push_back(std::move(m));
  }
  for (std::uint32_t c = 0; c < basis_.rank(); ++c) {
    SparseVector e{{ring->one(), c, Scalar::one(f)}};
    generators_.push_back(
        sparse_to_coordinates(gb_.normal_form(e), basis_, f));
  }
  monomial_actions_ = monomial_matrices(host_->basis(), actions_, f, d);
}

Vector ArtinianModule::coordinates(const FreeVector& v) const {
  if (v.rank() != rank()) throw MismatchError("free vector rank mismatch");
  if (!same_ring(host_->ring(), v.ring()))
    throw MismatchError("vector belongs to a different ambient ring");
  return sparse_to_coordinates(gb_.normal_form(to_sparse(v)), basis_, field());
}

FreeVector ArtinianModule::lift(const Vector& v) const {
  if (v.size() != dim()) throw MismatchError("coordinate vector length");
  SparseVector terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      terms.push_back({basis_[k].monomial, basis_[k].component, v[k]});
  std::vector<std::vector<Term>> parts(rank());
  for (auto& t : terms)
    parts[t.component].push_back({t.monomial, t.coefficient});
  std::vector<Polynomial> comps;
  for (auto& p : parts)
    comps.push_back(Polynomial::from_terms(host_->ring(), std::move(p)));
  return FreeVector(std::move(comps));
}

Matrix ArtinianModule::action_of(const Vector& host_element) const {
  if (host_element.size() != host_->dim())
    throw MismatchError("host element has the wrong length");
  Matrix out(field(), dim(), dim());
  for (std::size_t k = 0; k < host_element.size(); ++k)
    if (!host_element[k].is_zero())
      out = out + monomial_actions_[k].scaled(host_element[k]);
  return out;
}

Vector ArtinianModule::act(const Vector& host_element, const Vector& v) const {
  if (host_element.size() != host_->dim())
    throw MismatchError("host element has the wrong length");
  Vector out = zero_vector(field(), dim());
  for (std::size_t k = 0; k < host_element.size(); ++k)
    if (!host_element[k].is_zero())
      axpy(out, host_element[k], monomial_actions_[k].apply(v));
  return out;
}

ArtinianModule module_model(const AlgebraPtr& alg, std::size_t rank,
                            std::span<const FreeVector> columns,
                            std::span<const FreeVector> extra) {
  const auto& ring = alg->ring();
  std::vector<FreeVector> gens(columns.begin(), columns.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  for (const auto& g : alg->defining().polynomials())
    for (std::size_t j = 0; j < rank; ++j)
      gens.push_back(g * FreeVector::unit(ring, rank, j));
  return ArtinianModule(alg, module_groebner(ring, rank, gens));
}

std::size_t length(const ArtinianModule& model) { return model.dim(); }

Subspace socle(const ArtinianModule& model) {
  if (model.actions().empty()) return Subspace::whole(model.field(), model.dim());
  const auto basis = common_kernel(model.actions());
  return Subspace::span(model.field(), model.dim(), basis);
}

Subspace submodule_span(const ArtinianModule& model,
                        std::span<const Vector> gens) {
  const auto& host = *model.host();
  std::vector<Vector> vecs;
  for (const auto& g : gens)
    for (std::size_t k = 0; k < host.dim(); ++k)
      vecs.push_back(model.act(unit_vector(model.field(), host.dim(), k), g));
  return Subspace::span(model.field(), model.dim(), vecs);
}

Subspace ideal_span(const ArtinianAlgebra& alg, std::span<const Vector> gens) {
  std::vector<Vector> vecs;
  for (const auto& g : gens) {
    const Matrix m = alg.element_matrix(g);
    for (std::size_t k = 0; k < alg.dim(); ++k) vecs.push_back(m.column(k));
  }
  return Subspace::span(alg.field(), alg.dim(), vecs);
}

Subspace module_colon(const ArtinianModule& model, const Subspace& n,
                      std::span<const Vector> ideal_gens) {
  const Field f = model.field();
  if (n.ambient_dimension() != model.dim())
    throw MismatchError("submodule lives in a different module");
  if (ideal_gens.empty()) return Subspace::whole(f, model.dim());
  std::vector<Matrix> maps;
  for (const auto& g : ideal_gens) {
    const Matrix a = model.action_of(g);
    Matrix reduced(f, model.dim(), model.dim());
    for (std::size_t c = 0; c < model.dim(); ++c)
      reduced.set_column(c, n.reduce(a.column(c)));
    maps.push_back(std::move(reduced));
  }
  if (model.dim() == 0) return Subspace(f, 0);
  return Subspace::span(f, model.dim(), common_kernel(maps));
}

Subspace colon_module(const ArtinianModule& model,
                      std::span<const Vector> ideal_gens) {
  return module_colon(model, Subspace(model.field(), model.dim()), ideal_gens);
}

Subspace ring_colon(const ArtinianModule& model, const Subspace& n,
                    std::span<const Vector> elements) {
  const Field f = model.field();
  const std::size_t d = model.host()->dim();
  if (n.ambient_dimension() != model.dim())
    throw MismatchError("submodule lives in a different module");
  if (elements.empty() || d == 0) return Subspace::whole(f, d);
  std::vector<Matrix> maps;
  for (const auto& w : elements) {
    Matrix m(f, model.dim(), d);
    for (std::size_t k = 0; k < d; ++k)
      m.set_column(k, n.reduce(model.act(unit_vector(f, d, k), w)));
    maps.push_back(std::move(m));
  }
  return Subspace::span(f, d, common_kernel(maps));
}

Subspace colon_into_ring(const ArtinianModule& model, const Subspace& n) {
  return ring_colon(model, n, model.generators());
}

Subspace annihilator(const ArtinianModule& model) {
  return colon_into_ring(model, Subspace(model.field(), model.dim()));
}

bool is_faithful(const ArtinianModule& model) {
  return annihilator(model).dim() == 0;
}

}  // namespace irr
