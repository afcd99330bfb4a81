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
#include "irr/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "irr/error.hpp"

namespace irr {

namespace {

std::strong_ordering compare_terms(const VectorTerm& a, const VectorTerm& b,
                                   const MonomialOrder& ord) {
  if (a.component != b.component) return b.component <=> a.component;
  return ord.compare(a.monomial, b.monomial);
}

ModuleMonomial lead_of(const SparseVector& v) {
  return {v.front().monomial, v.front().component};
}

// a + c * m * b for decreasing term lists.
SparseVector add_scaled(const SparseVector& a, std::size_t a_begin,
                        const SparseVector& b, std::size_t b_begin,
                        const Monomial& m, const Scalar& c,
                        const MonomialOrder& ord) {
  SparseVector out;
  out.reserve(a.size() - a_begin + b.size() - b_begin);
  std::size_t i = a_begin, j = b_begin;
  VectorTerm shifted;
  bool have_shifted = false;
  auto load = [&] {
    if (j < b.size()) {
      shifted = {b[j].monomial * m, b[j].component, b[j].coefficient * c};
      have_shifted = true;
    } else {
      have_shifted = false;
    }
  };
  load();
  while (i < a.size() && have_shifted) {
    const auto cmp = compare_terms(a[i], shifted, ord);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(shifted));
      ++j;
      load();
    } else {
      Scalar s = a[i].coefficient + shifted.coefficient;
      if (!s.is_zero())
        out.push_back({a[i].monomial, a[i].component, std::move(s)});
      ++i;
      ++j;
      load();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_shifted) {
    out.push_back(std::move(shifted));
    ++j;
    load();
  }
  return out;
}

void make_monic(SparseVector& v) {
  if (v.empty() || v.front().coefficient.is_one()) return;
  const Scalar inv = v.front().coefficient.inverse();
  for (auto& t : v) t.coefficient *= inv;
}

const SparseVector* find_reducer(const VectorTerm& t,
                                 const std::vector<SparseVector>& basis) {
  for (const auto& g : basis) {
    const auto& lead = g.front();
    if (lead.component == t.component && lead.monomial.divides(t.monomial))
      return &g;
  }
  return nullptr;
}

// Full reduction of v against the (monic) elements of basis.
SparseVector reduce(SparseVector v, const std::vector<SparseVector>& basis,
                    const MonomialOrder& ord) {
  SparseVector remainder;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const VectorTerm& t = v[pos];
    const SparseVector* g = find_reducer(t, basis);
    if (g == nullptr) {
      remainder.push_back(t);
      ++pos;
      continue;
    }
    const Scalar c = -(t.coefficient / g->front().coefficient);
    const Monomial m = t.monomial / g->front().monomial;
    v = add_scaled(v, pos + 1, *g, 1, m, c, ord);
    pos = 0;
  }
  return remainder;
}

struct PendingPair {
  ModuleMonomial lcm;
  std::size_t i;
  std::size_t j;
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

std::vector<SparseVector> run_buchberger(std::vector<SparseVector> inputs,
                                         std::size_t rank,
                                         const MonomialOrder& ord) {
  auto pair_less = [&ord](const PendingPair& a, const PendingPair& b) {
    const auto c = compare_pot(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<PendingPair, decltype(pair_less)> queue(pair_less);
  std::unordered_set<std::uint64_t> pending;
  std::vector<SparseVector> basis;

  // Feeding inputs in increasing lead order makes the run independent of
  // the caller's generator order.
  for (auto& v : inputs) make_monic(v);
  std::erase_if(inputs, [](const SparseVector& v) { return v.empty(); });
  std::sort(inputs.begin(), inputs.end(),
            [&](const SparseVector& a, const SparseVector& b) {
              return compare_pot(lead_of(a), lead_of(b), ord) < 0;
            });

  auto add_element = [&](SparseVector v) {
    make_monic(v);
    const std::size_t k = basis.size();
    const ModuleMonomial lk = lead_of(v);
    basis.push_back(std::move(v));
    for (std::size_t i = 0; i < k; ++i) {
      const ModuleMonomial li = lead_of(basis[i]);
      if (li.component != lk.component) continue;
      queue.insert({{lcm(li.monomial, lk.monomial), lk.component}, i, k});
      pending.insert(pair_key(i, k));
    }
  };

  for (auto& v : inputs) {
    SparseVector r = reduce(std::move(v), basis, ord);
    if (!r.empty()) add_element(std::move(r));
  }

  while (!queue.empty()) {
    const PendingPair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pair_key(pair.i, pair.j));

    const SparseVector& gi = basis[pair.i];
    const SparseVector& gj = basis[pair.j];
    const Monomial& mi = gi.front().monomial;
    const Monomial& mj = gj.front().monomial;

    if (gi.size() == 1 && gj.size() == 1) continue;
    if (rank == 1 && mi.coprime(mj)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      const auto& lk = basis[k].front();
      if (lk.component != pair.lcm.component ||
          !lk.monomial.divides(pair.lcm.monomial))
        continue;
      if (!pending.contains(pair_key(pair.i, k)) &&
          !pending.contains(pair_key(pair.j, k)))
        chain = true;
    }
    if (chain) continue;

    const Scalar minus_one = -Scalar::one(gi.front().coefficient.field());
    SparseVector s = add_scaled({}, 0, gi, 0, pair.lcm.monomial / mi,
                                Scalar::one(minus_one.field()), ord);
    s = add_scaled(s, 0, gj, 0, pair.lcm.monomial / mj, minus_one, ord);
    SparseVector r = reduce(std::move(s), basis, ord);
    if (!r.empty()) add_element(std::move(r));
  }

  // Minimalize, then interreduce.
  std::vector<SparseVector> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModuleMonomial li = lead_of(basis[i]);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModuleMonomial lj = lead_of(basis[j]);
      if (lj.component != li.component || !lj.monomial.divides(li.monomial))
        continue;
      // Equal leads: keep the earliest copy.
      redundant = !(lj.monomial == li.monomial) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<SparseVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SparseVector head{minimal[i].front()};
    SparseVector tail(minimal[i].begin() + 1, minimal[i].end());
    std::vector<SparseVector> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    SparseVector t = reduce(std::move(tail), others, ord);
    head.insert(head.end(), t.begin(), t.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SparseVector& a, const SparseVector& b) {
              return compare_pot(lead_of(a), lead_of(b), ord) < 0;
            });
  return reduced;
}

void check_vector(const PolyRingPtr& ring, std::size_t rank,
                  const FreeVector& v) {
  if (!same_ring(ring, v.ring()))
    throw MismatchError("vector belongs to a different ambient ring");
  if (v.rank() != rank)
    throw MismatchError("vector of rank " + std::to_string(v.rank()) +
                        " in a free module of rank " + std::to_string(rank));
}

}  // namespace

SparseVector to_sparse(const Polynomial& p) {
  SparseVector v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.monomial, 0, t.coefficient});
  return v;
}

SparseVector to_sparse(const FreeVector& fv) {
  SparseVector v;
  // Component 0 is the largest under position-over-term.
  for (std::size_t c = 0; c < fv.rank(); ++c)
    for (const auto& t : fv[c].terms())
      v.push_back({t.monomial, static_cast<std::uint32_t>(c), t.coefficient});
  return v;
}

Polynomial to_polynomial(const PolyRingPtr& ring, const SparseVector& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) {
    if (t.component != 0)
      throw MismatchError("vector term outside component 0");
    terms.push_back({t.monomial, t.coefficient});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

FreeVector to_free_vector(const PolyRingPtr& ring, std::size_t rank,
                          const SparseVector& v) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.component).push_back({t.monomial, t.coefficient});
  std::vector<Polynomial> comps;
  comps.reserve(rank);
  for (auto& part : parts)
    comps.push_back(Polynomial::from_terms(ring, std::move(part)));
  if (rank == 0) return FreeVector(ring, 0);
  return FreeVector(std::move(comps));
}

GroebnerBasis::GroebnerBasis(PolyRingPtr ring, std::size_t rank,
                             std::vector<SparseVector> elements, bool reduced)
    : ring_(std::move(ring)),
      rank_(rank),
      elements_(std::move(elements)),
      reduced_(reduced) {}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw MismatchError("module basis has no polynomial form");
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(to_polynomial(ring_, e));
  return out;
}

std::vector<FreeVector> GroebnerBasis::vectors() const {
  std::vector<FreeVector> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_)
    out.push_back(to_free_vector(ring_, rank_, e));
  return out;
}

std::vector<ModuleMonomial> GroebnerBasis::leading_monomials() const {
  std::vector<ModuleMonomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(lead_of(e));
  return out;
}

bool GroebnerBasis::is_unit() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& e : elements_)
    if (e.front().monomial.is_one()) hit[e.front().component] = true;
  return rank_ > 0 && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SparseVector GroebnerBasis::normal_form(SparseVector v) const {
  return reduce(std::move(v), elements_, ring_->order());
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!same_ring(ring_, p.ring()))
    throw MismatchError("polynomial belongs to a different ambient ring");
  if (rank_ != 1) throw MismatchError("polynomial reduced by a module basis");
  return to_polynomial(ring_, normal_form(to_sparse(p)));
}

FreeVector GroebnerBasis::normal_form(const FreeVector& v) const {
  check_vector(ring_, rank_, v);
  return to_free_vector(ring_, rank_, normal_form(to_sparse(v)));
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rank_ != b.rank_ ||
      a.elements_.size() != b.elements_.size())
    return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const auto& x = a.elements_[i];
    const auto& y = b.elements_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!(x[k].monomial == y[k].monomial) ||
          x[k].component != y[k].component ||
          !(x[k].coefficient == y[k].coefficient))
        return false;
  }
  return true;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens) {
  if (gens.empty())
    throw PreconditionError("buchberger needs at least one generator");
  return buchberger(gens.front().ring(), gens);
}

GroebnerBasis buchberger(const PolyRingPtr& ring,
                         std::span<const Polynomial> gens) {
  std::vector<SparseVector> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!same_ring(ring, g.ring()))
      throw MismatchError("generators belong to different ambient rings");
    inputs.push_back(to_sparse(g));
  }
  return GroebnerBasis(ring, 1, run_buchberger(std::move(inputs), 1, ring->order()),
                       true);
}

GroebnerBasis module_groebner(const PolyRingPtr& ring, std::size_t rank,
                              std::span<const FreeVector> vectors) {
  std::vector<SparseVector> inputs;
  inputs.reserve(vectors.size());
  for (const auto& v : vectors) {
    check_vector(ring, rank, v);
    inputs.push_back(to_sparse(v));
  }
  return GroebnerBasis(ring, rank,
                       run_buchberger(std::move(inputs), rank, ring->order()),
                       true);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return gb.normal_form(p);
}

FreeVector normal_form(const FreeVector& v, const GroebnerBasis& gb) {
  return gb.normal_form(v);
}

StandardBasis::StandardBasis(std::size_t num_variables, std::size_t rank,
                             std::vector<ModuleMonomial> monomials)
    : num_variables_(num_variables),
      rank_(rank),
      monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> StandardBasis::index_of(
    const ModuleMonomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StandardBasis standard_monomials(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->num_variables();
  const auto& ord = gb.ring()->order();
  std::vector<ModuleMonomial> out;
  for (std::uint32_t comp = 0; comp < gb.rank(); ++comp) {
    std::vector<Monomial> leads;
    bool unit = false;
    for (const auto& e : gb.elements()) {
      if (e.front().component != comp) continue;
      leads.push_back(e.front().monomial);
      if (e.front().monomial.is_one()) unit = true;
    }
    if (unit) continue;
    for (std::size_t v = 0; v < n; ++v) {
      const bool has_pure_power =
          std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
            return m[v] > 0 && m.degree() == m[v];
          });
      if (!has_pure_power)
        throw NotZeroDimensionalError(
            "not zero-dimensional: no pure power of " +
            gb.ring()->variables()[v] + " among the leading monomials" +
            (gb.rank() > 1 ? " of component " + std::to_string(comp) : ""));
    }
    // Depth-first walk over the order ideal; multiples of a leading
    // monomial are never standard, so the walk prunes there.
    std::vector<unsigned> exps(n, 0);
    auto is_standard = [&](const Monomial& m) {
      return std::none_of(leads.begin(), leads.end(),
                          [&](const Monomial& l) { return l.divides(m); });
    };
    auto walk = [&](auto&& self, std::size_t from) -> void {
      const Monomial m = Monomial::from_exponents(exps);
      out.push_back({m, comp});
      for (std::size_t v = from; v < n; ++v) {
        ++exps[v];
        if (is_standard(Monomial::from_exponents(exps))) self(self, v);
        --exps[v];
      }
    };
    if (is_standard(Monomial(n))) walk(walk, 0);
  }
  std::sort(out.begin(), out.end(),
            [&](const ModuleMonomial& a, const ModuleMonomial& b) {
              return compare_pot(a, b, ord) < 0;
            });
  return StandardBasis(n, gb.rank(), std::move(out));
}

std::vector<FreeVector> syzygies(const PolyRingPtr& ring,
                                 std::span<const Polynomial> gens,
                                 std::span<const Polynomial> relations) {
  const std::size_t s = gens.size();
  std::vector<FreeVector> inputs;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Polynomial> comps(s + 1, Polynomial(ring));
    comps[0] = gens[i];
    comps[i + 1] = Polynomial::constant(ring, 1);
    inputs.emplace_back(std::move(comps));
  }
  for (const auto& a : relations) {
    std::vector<Polynomial> comps(s + 1, Polynomial(ring));
    comps[0] = a;
    inputs.emplace_back(std::move(comps));
  }
  const GroebnerBasis gb = module_groebner(ring, s + 1, inputs);
  std::vector<FreeVector> out;
  for (const auto& e : gb.elements()) {
    if (e.front().component == 0) continue;
    SparseVector shifted = e;
    for (auto& t : shifted) --t.component;
    out.push_back(to_free_vector(ring, s, shifted));
  }
  return out;
}

std::vector<Polynomial> intersect_ideals(const PolyRingPtr& ring,
                                         std::span<const Polynomial> a,
                                         std::span<const Polynomial> b) {
  std::vector<std::string> names{"_t"};
  for (const auto& v : ring->variables()) names.push_back(v);
  const auto big =
      PolyRing::make(ring->field(), names, MonomialOrder::elimination(1));
  const std::size_t n = ring->num_variables();
  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      std::vector<unsigned> e(n + 1, 0);
      for (std::size_t i = 0; i < n; ++i) e[i + 1] = t.monomial[i];
      terms.push_back({Monomial::from_exponents(e), t.coefficient});
    }
    return Polynomial::from_terms(big, std::move(terms));
  };
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& p : a) gens.push_back(t * lift(p));
  for (const auto& p : b) gens.push_back(one_minus_t * lift(p));
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  for (const auto& g : buchberger(big, gens).polynomials()) {
    if (g.leading_monomial()[0] != 0) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::vector<unsigned> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = term.monomial[i + 1];
      terms.push_back({Monomial::from_exponents(e), term.coefficient});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace irr
