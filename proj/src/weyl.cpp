#include "wt/weyl.hpp"

#include <algorithm>
#include <vector>

namespace wt {

namespace {

Scalar integer(const mpz_class& n) { return Scalar(Rational(n, 1)); }

void require_same_basis(const WeylOperator& a, const WeylOperator& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatch(to_string(a.basis()) + " vs " + to_string(b.basis()));
  }
}

}  // namespace

unsigned WeylMonomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exp) d += e;
  return d;
}

int WeylMonomial::plane_shift() const {
  return static_cast<int>(exp[0] + exp[1]) - static_cast<int>(exp[3] + exp[4]);
}

WeylOperator::WeylOperator(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

WeylOperator WeylOperator::constant(Basis basis, const Scalar& c) {
  return monomial(basis, WeylMonomial{}, c);
}

WeylOperator WeylOperator::generator(Basis basis, Gen g) {
  WeylMonomial m;
  m[g] = 1;
  return monomial(basis, m);
}

WeylOperator WeylOperator::monomial(Basis basis, const WeylMonomial& m, const Scalar& c) {
  WeylOperator op(basis);
  op.add_term(m, c);
  return op;
}

Scalar WeylOperator::coeff(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

unsigned WeylOperator::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void WeylOperator::add_term(const WeylMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  require_same_basis(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  require_same_basis(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) {
  require_same_basis(a, b);
  WeylOperator::Terms acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // Move A's derivatives past B's positions, one conjugate pair at a time:
      // D^d P^c = sum_t C(d,t) c!/(c-t)! P^(c-t) D^(d-t).
      const Scalar base = ca * cb;
      std::array<unsigned, 3> lim{};
      for (int v = 0; v < 3; ++v) lim[v] = std::min(ma.exp[v + 3], mb.exp[v]);
      for (unsigned t0 = 0; t0 <= lim[0]; ++t0) {
        for (unsigned t1 = 0; t1 <= lim[1]; ++t1) {
          for (unsigned t2 = 0; t2 <= lim[2]; ++t2) {
            const std::array<unsigned, 3> t{t0, t1, t2};
            mpz_class weight = 1;
            WeylMonomial m;
            for (int v = 0; v < 3; ++v) {
              weight *= binomial(ma.exp[v + 3], t[v]) * falling(mb.exp[v], t[v]);
              m.exp[v] = ma.exp[v] + mb.exp[v] - t[v];
              m.exp[v + 3] = ma.exp[v + 3] + mb.exp[v + 3] - t[v];
            }
            acc[m] += base * integer(weight);
          }
        }
      }
    }
  }
  return {a.basis(), std::move(acc)};
}

WeylOperator power(const WeylOperator& a, unsigned n) {
  WeylOperator r = WeylOperator::identity(a.basis());
  for (unsigned k = 0; k < n; ++k) r = compose(a, r);
  return r;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) {
  return compose(a, b) - compose(b, a);
}

WeylOperator change_basis(const WeylOperator& a, Basis target) {
  if (a.basis() == target) return a;
  using G = Gen;
  const Scalar half(Rational(1, 2));
  const Scalar i = Scalar::i();
  auto gen = [&](G g) { return WeylOperator::generator(target, g); };
  std::array<WeylOperator, 6> image{WeylOperator(target), WeylOperator(target), gen(G::Q),
                                    WeylOperator(target), WeylOperator(target), gen(G::DQ)};
  if (target == Basis::ZZBAR) {
    image[0] = (gen(G::P1) + gen(G::P2)) * half;             // x
    image[1] = (gen(G::P1) - gen(G::P2)) * (-half * i);      // y
    image[3] = gen(G::D1) + gen(G::D2);                      // dx
    image[4] = (gen(G::D1) - gen(G::D2)) * i;                // dy
  } else {
    image[0] = gen(G::P1) + gen(G::P2) * i;                  // z
    image[1] = gen(G::P1) - gen(G::P2) * i;                  // zbar
    image[3] = (gen(G::D1) - gen(G::D2) * i) * half;         // dz
    image[4] = (gen(G::D1) + gen(G::D2) * i) * half;         // dzbar
  }
  // Powers are reused across monomials.
  std::array<std::vector<WeylOperator>, 6> powers;
  auto pow_of = [&](int g, unsigned n) -> const WeylOperator& {
    auto& cache = powers[g];
    if (cache.empty()) cache.push_back(WeylOperator::identity(target));
    while (cache.size() <= n) cache.push_back(compose(cache.back(), image[g]));
    return cache[n];
  };
  WeylOperator out(target);
  for (const auto& [m, c] : a.terms()) {
    WeylOperator word = WeylOperator::constant(target, c);
    for (int g = 0; g < 6; ++g) {
      if (m.exp[g]) word = compose(word, pow_of(g, m.exp[g]));
    }
    out += word;
  }
  return out;
}

WeylOperator weight_conjugate(const WeylOperator& a) {
  const WeylOperator shifted = WeylOperator::generator(a.basis(), Gen::DQ) -
                               WeylOperator::generator(a.basis(), Gen::Q);
  std::vector<WeylOperator> powers{WeylOperator::identity(a.basis())};
  WeylOperator out(a.basis());
  for (const auto& [m, c] : a.terms()) {
    WeylMonomial head = m;
    const unsigned f = head[Gen::DQ];
    head[Gen::DQ] = 0;
    while (powers.size() <= f) powers.push_back(compose(powers.back(), shifted));
    out += compose(WeylOperator::monomial(a.basis(), head, c), powers[f]);
  }
  return out;
}

Spinor apply_unweighted(const WeylOperator& a, const Spinor& s) {
  if (a.basis() != s.basis()) {
    throw BasisMismatch("operator " + to_string(a.basis()) + " on spinor " + to_string(s.basis()));
  }
  Spinor out(s.basis());
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [e, p] : s.terms()) {
      if (m.exp[3] > e.first || m.exp[4] > e.second) continue;
      QPoly qpart = p.derivative(m.exp[5]);
      if (qpart.is_zero()) continue;
      const mpz_class w = falling(e.first, m.exp[3]) * falling(e.second, m.exp[4]);
      qpart = qpart.shift(m.exp[2]) * (c * integer(w));
      out += Spinor::term(s.basis(), e.first - m.exp[3] + m.exp[0],
                          e.second - m.exp[4] + m.exp[1], std::move(qpart));
    }
  }
  return out;
}

Spinor apply(const WeylOperator& a, const Spinor& s) {
  if (a.basis() != s.basis()) {
    throw BasisMismatch("operator " + to_string(a.basis()) + " on spinor " + to_string(s.basis()));
  }
  return apply_unweighted(weight_conjugate(a), s);
}

}  // namespace wt
