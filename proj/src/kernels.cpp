#include "wt/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "wt/operators.hpp"
#include "wt/parser.hpp"
#include "wt/render.hpp"

namespace wt {

namespace {

Scalar integer(long n) { return Scalar(n); }

bool is_first_order(const RecursionKind& kind) { return kind.op != KernelOp::Ds2; }

unsigned odd_shift(const RecursionKind& kind) { return kind.parity == Parity::Odd ? 1 : 0; }

// Coefficients a^r_k of the series A^r(q), r = 0..m, k even.
class SeriesTable {
 public:
  SeriesTable(unsigned m, unsigned qmax) : qmax_(qmax), a_(m + 1, std::vector<Scalar>(qmax / 2 + 1)) {}

  [[nodiscard]] Scalar get(int r, int k) const {
    if (r < 0 || k < 0 || k % 2 != 0 || r >= static_cast<int>(a_.size())) return {};
    const auto idx = static_cast<std::size_t>(k / 2);
    return idx < a_[r].size() ? a_[r][idx] : Scalar();
  }
  void set(unsigned r, unsigned k, Scalar v) { a_[r][k / 2] = std::move(v); }
  [[nodiscard]] unsigned qmax() const { return qmax_; }
  [[nodiscard]] unsigned m() const { return static_cast<unsigned>(a_.size()) - 1; }

  [[nodiscard]] Spinor to_spinor(unsigned shift) const {
    Spinor s(Basis::ZZBAR);
    for (unsigned r = 0; r <= m(); ++r) {
      for (unsigned k = 0; k <= qmax_; k += 2) s.add(r, m() - r, k + shift, get(r, k));
    }
    return s;
  }

  static SeriesTable from_spinor(const Spinor& s, unsigned m, unsigned shift) {
    const int deg = s.q_degree();
    unsigned qmax = deg < 0 ? 0 : static_cast<unsigned>(deg);
    qmax += qmax % 2;
    SeriesTable t(m, qmax);
    for (unsigned r = 0; r <= m; ++r) {
      for (unsigned k = 0; k <= qmax; k += 2) t.set(r, k, s.coeff(r, m - r, k + shift));
    }
    return t;
  }

 private:
  unsigned qmax_;
  std::vector<std::vector<Scalar>> a_;
};

// Leading factor of the first-order relations, multiplying a^{m-p}_k and a^{m-1-p}_k.
long first_order_factor(const RecursionKind& kind, long k) {
  if (kind.op == KernelOp::Ds) return kind.parity == Parity::Odd ? k + 1 : k;
  // Ts: odd spinors give factor k, even ones k - 1.
  return kind.parity == Parity::Odd ? k : k - 1;
}

// Second-order (D_s^2) coefficients in terms of K = k + 2: g multiplies
// a_{K}, h multiplies a_{K-2}.
std::pair<long, long> second_order_factors(const RecursionKind& kind, long big_k) {
  if (kind.parity == Parity::Even) return {big_k * (big_k - 1), 2 * (2 * big_k - 3)};
  return {big_k * (big_k + 1), 2 * (2 * big_k - 1)};
}

// Relation row p evaluated at series index k (K for second order).
Scalar relation(const RecursionKind& kind, unsigned m, unsigned p, long k, const SeriesTable& a) {
  const long r = static_cast<long>(m) - static_cast<long>(p);
  const long p1 = static_cast<long>(p) + 1;
  if (is_first_order(kind)) {
    const long f = first_order_factor(kind, k);
    return integer(r * f) * a.get(r, k) + integer(p1 * f) * a.get(r - 1, k) -
           integer(2 * p1) * a.get(r - 1, k - 2);
  }
  const auto [g, h] = second_order_factors(kind, k);
  const long p2 = p1 + 1;
  return integer(r * (r - 1) * g) * a.get(r, k) +
         integer((r - 1) * p1) * (integer(2 * g) * a.get(r - 1, k) - integer(h) * a.get(r - 1, k - 2)) +
         integer(p1 * p2) *
             (integer(g) * a.get(r - 2, k) - integer(h) * a.get(r - 2, k - 2) + integer(4) * a.get(r - 2, k - 4));
}

// Coefficient of the unknown a^{m-p}_k in relation (p, k).
Scalar leading_factor(const RecursionKind& kind, unsigned m, unsigned p, long k) {
  const long r = static_cast<long>(m) - static_cast<long>(p);
  if (is_first_order(kind)) return integer(r * first_order_factor(kind, k));
  return integer(r * (r - 1) * second_order_factors(kind, k).first);
}

unsigned relation_rows(const RecursionKind& kind, unsigned m) {
  if (is_first_order(kind)) return m;
  return m >= 2 ? m - 1 : 0;
}

// Lowest series index at which relations are written.
long first_relation_index(const RecursionKind& kind) { return is_first_order(kind) ? 0 : 2; }

struct FreeParam {
  unsigned r;
  unsigned k;
};

std::vector<FreeParam> free_params(const RecursionKind& kind, unsigned m, unsigned qmax) {
  std::vector<FreeParam> out;
  if (kind.op == KernelOp::Ds2) {
    if (m >= 1) {
      for (unsigned k = 0; k <= qmax; k += 2) out.push_back({1, k});
    }
    for (unsigned r = 2; r <= m; ++r) out.push_back({r, 0});
    return out;
  }
  for (unsigned r = 1; r <= m; ++r) {
    for (unsigned k = 0; k <= qmax; k += 2) {
      if (first_order_factor(kind, k) == 0) out.push_back({r, k});
    }
  }
  return out;
}

// Fills a^r_k for r above the seeded rows, bottom-up.
void solve_rows(const RecursionKind& kind, unsigned m, SeriesTable& a, const std::set<std::pair<unsigned, unsigned>>& fixed) {
  const unsigned rows = relation_rows(kind, m);
  for (unsigned r = m + 1 - rows; r <= m && rows > 0; ++r) {
    const unsigned p = m - r;
    for (unsigned k = 0; k <= a.qmax(); k += 2) {
      if (fixed.count({r, k})) continue;
      if (static_cast<long>(k) < first_relation_index(kind)) continue;
      const Scalar lead = leading_factor(kind, m, p, k);
      a.set(r, k, Scalar());
      const Scalar rest = relation(kind, m, p, k, a);
      a.set(r, k, -rest / lead);
    }
  }
}

// Highest output q-exponent fixed by the enforced relations (index <= qmax).
long enforced_exponent(const RecursionKind& kind, unsigned qmax) {
  const long q = qmax;
  switch (kind.op) {
    case KernelOp::Ds:
      return kind.parity == Parity::Odd ? q : q - 1;
    case KernelOp::Ts:
      return kind.parity == Parity::Odd ? q + 1 : q;
    case KernelOp::Ds2:
      return kind.parity == Parity::Odd ? q - 1 : q - 2;
  }
  return q;
}

bool vanishes_through(const Spinor& s, long exponent) {
  for (const auto& [e, p] : s.terms()) {
    for (long k = 0; k <= exponent && k <= p.degree(); ++k) {
      if (!p.coeff(static_cast<unsigned>(k)).is_zero()) return false;
    }
  }
  return true;
}

std::string param_name(const FreeParam& fp) {
  return "a^" + std::to_string(fp.r) + "_" + std::to_string(fp.k);
}

void check_kind(const RecursionKind& kind) {
  if (kind.parity == Parity::Mixed) throw std::invalid_argument("recursion kind needs even or odd parity");
}

Spinor solve_single(const RecursionKind& kind, unsigned m, unsigned qmax, const QPoly& seed,
                    const std::optional<FreeParam>& unit) {
  SeriesTable a(m, qmax);
  std::set<std::pair<unsigned, unsigned>> fixed;
  for (unsigned k = 0; k <= qmax; k += 2) {
    a.set(0, k, seed.coeff(k));
    fixed.insert({0, k});
  }
  for (const auto& fp : free_params(kind, m, qmax)) {
    const bool on = unit && unit->r == fp.r && unit->k == fp.k;
    a.set(fp.r, fp.k, on ? Scalar(1) : Scalar());
    fixed.insert({fp.r, fp.k});
  }
  solve_rows(kind, m, a, fixed);
  return a.to_spinor(odd_shift(kind));
}

// Coordinates (e1, e2, k) of a homogeneous spinor.
using Coord = std::tuple<unsigned, unsigned, unsigned>;

}  // namespace

std::string to_string(const RecursionKind& kind) {
  const char* op = kind.op == KernelOp::Ds ? "Ds" : (kind.op == KernelOp::Ts ? "Ts" : "Ds2");
  return std::string(op) + "/" + to_string(kind.parity);
}

std::vector<RecursionKind> all_recursion_kinds() {
  return {{KernelOp::Ds, Parity::Odd},  {KernelOp::Ds, Parity::Even},  {KernelOp::Ts, Parity::Odd},
          {KernelOp::Ts, Parity::Even}, {KernelOp::Ds2, Parity::Even}, {KernelOp::Ds2, Parity::Odd}};
}

WeylOperator kernel_operator(KernelOp op) {
  switch (op) {
    case KernelOp::Ds:
      return build_ds_z();
    case KernelOp::Ts:
      return build_ts_z();
    case KernelOp::Ds2:
      break;
  }
  return build_ds_squared();
}

nlohmann::json to_json(const KernelFamily& family) {
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < family.basis.size(); ++i) {
    nlohmann::json entry = to_json(family.basis[i]);
    entry["extends_beyond_truncation"] = static_cast<bool>(family.extends_beyond_truncation[i]);
    if (family.kind) entry["role"] = i == 0 ? "seed" : family.free_parameters[i - 1];
    basis.push_back(std::move(entry));
  }
  nlohmann::json out{{"homogeneity", family.homogeneity},
                     {"qmax", family.qmax},
                     {"free_parameters", family.free_parameters},
                     {"basis", std::move(basis)}};
  out["kind"] = family.kind ? nlohmann::json(to_string(*family.kind)) : nlohmann::json("linear-solve");
  return out;
}

Spinor monogenic_plus(unsigned m) {
  return change_basis(Spinor::term(Basis::ZZBAR, m, 0, QPoly(Scalar(1))), Basis::XY);
}

Spinor monogenic_minus(unsigned m) {
  return solve_recursion({KernelOp::Ds, Parity::Odd}, m, QPoly(Scalar(1)), 2 * m + 2).basis.front();
}

KernelFamily solve_recursion(const RecursionKind& kind, unsigned m, const QPoly& seed, unsigned qmax) {
  check_kind(kind);
  if (qmax % 2 != 0) throw std::invalid_argument("qmax must be even");
  if (qmax < 2 * m + 2) throw std::invalid_argument("qmax must be at least 2m+2");
  if (auto par = seed.parity(); par && *par != Parity::Even) {
    throw ParityMismatch("seed A^0(q) must be even in q");
  }
  if (seed.degree() > static_cast<int>(qmax)) throw std::invalid_argument("seed degree exceeds qmax");

  KernelFamily fam;
  fam.homogeneity = m;
  fam.kind = kind;
  fam.qmax = qmax;
  fam.basis.push_back(solve_single(kind, m, qmax, seed, std::nullopt));
  for (const auto& fp : free_params(kind, m, qmax)) {
    fam.free_parameters.push_back(param_name(fp));
    fam.basis.push_back(solve_single(kind, m, qmax, QPoly(), fp));
  }
  const WeylOperator op = kernel_operator(kind.op);
  const long through = enforced_exponent(kind, qmax);
  for (const auto& s : fam.basis) {
    const Spinor image = apply(op, s);
    if (!vanishes_through(image, through)) {
      throw std::logic_error("recursion solution for " + to_string(kind) + " fails below truncation");
    }
    fam.extends_beyond_truncation.push_back(!image.is_zero());
  }
  return fam;
}

std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>> recursion_residuals(
    const RecursionKind& kind, unsigned m, const Spinor& s) {
  check_kind(kind);
  if (s.basis() != Basis::ZZBAR) throw BasisMismatch("recursion residuals need zzbar");
  const SeriesTable a = SeriesTable::from_spinor(s, m, odd_shift(kind));
  std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>> out;
  for (unsigned p = 0; p < relation_rows(kind, m); ++p) {
    for (long k = first_relation_index(kind); k <= static_cast<long>(a.qmax()) + 4; k += 2) {
      Scalar v = relation(kind, m, p, k, a);
      if (!v.is_zero()) out.push_back({{p, static_cast<unsigned>(k)}, std::move(v)});
    }
  }
  return out;
}

std::vector<Spinor> recursion_exact_span(const RecursionKind& kind, unsigned m, unsigned qmax) {
  std::vector<Spinor> elements;
  for (unsigned k = 0; k <= qmax; k += 2) {
    elements.push_back(solve_recursion(kind, m, QPoly::monomial(Scalar(1), k), qmax).basis.front());
  }
  const KernelFamily fam = solve_recursion(kind, m, QPoly(), qmax);
  elements.insert(elements.end(), fam.basis.begin() + 1, fam.basis.end());

  // Combinations whose operator image vanishes exactly.
  const WeylOperator op = kernel_operator(kind.op);
  std::vector<Spinor> images;
  std::map<Coord, std::size_t> rows;
  for (const auto& e : elements) {
    images.push_back(apply(op, e));
    for (const auto& [pe, p] : images.back().terms()) {
      for (int k = 0; k <= p.degree(); ++k) rows.try_emplace({pe.first, pe.second, k}, rows.size());
    }
  }
  Matrix mat(rows.size(), elements.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& [coord, r] : rows) {
      mat(r, c) = images[c].coeff(std::get<0>(coord), std::get<1>(coord), std::get<2>(coord));
    }
  }
  std::vector<Spinor> out;
  for (const auto& v : nullspace(mat)) {
    Spinor s(Basis::ZZBAR);
    for (std::size_t c = 0; c < v.size(); ++c) s += elements[c] * v[c];
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

KernelFamily kernel_linear_solve(const WeylOperator& op, unsigned m, unsigned qmax,
                                 std::optional<Parity> parity, Exec exec) {
  std::vector<Coord> unknowns;
  for (unsigned a = 0; a <= m; ++a) {
    for (unsigned k = 0; k <= qmax; ++k) {
      if (parity == Parity::Even && k % 2 != 0) continue;
      if (parity == Parity::Odd && k % 2 == 0) continue;
      unknowns.emplace_back(a, m - a, k);
    }
  }
  std::vector<Spinor> images;
  std::map<Coord, std::size_t> rows;
  for (const auto& [a, b, k] : unknowns) {
    images.push_back(apply(op, Spinor::term(op.basis(), a, b, QPoly::monomial(Scalar(1), k))));
    for (const auto& [pe, p] : images.back().terms()) {
      for (int d = 0; d <= p.degree(); ++d) rows.try_emplace({pe.first, pe.second, d}, rows.size());
    }
  }
  Matrix mat(rows.size(), unknowns.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& [pe, p] : images[c].terms()) {
      for (int d = 0; d <= p.degree(); ++d) {
        mat(rows.at({pe.first, pe.second, d}), c) = p.coeff(d);
      }
    }
  }
  KernelFamily fam;
  fam.homogeneity = m;
  fam.qmax = qmax;
  for (const auto& v : nullspace(mat, exec)) {
    Spinor s(op.basis());
    for (std::size_t c = 0; c < v.size(); ++c) {
      const auto& [a, b, k] = unknowns[c];
      s.add(a, b, k, v[c]);
    }
    fam.basis.push_back(std::move(s));
    fam.extends_beyond_truncation.push_back(false);
  }
  return fam;
}

std::vector<Spinor> twistor_kernel_basis(unsigned m) {
  if (m == 0) {
    return {Spinor::term(Basis::XY, 0, 0, QPoly(Scalar(1))),
            Spinor::term(Basis::XY, 0, 0, QPoly::monomial(Scalar(1), 1))};
  }
  const WeylOperator xs = build_xs();
  return {apply(xs, monogenic_plus(m - 1)), apply(xs, change_basis(monogenic_minus(m - 1), Basis::XY))};
}

Scalar verify_exclusion(unsigned n, unsigned m) {
  if (n + m == 0) return {};
  const Spinor s = apply(power(build_xs(), n), monogenic_plus(m));
  return coefficient_of(apply(build_ts_reduced(), s), n + m - 1, 0, n);
}

Scalar verify_minus_exclusion(unsigned m) {
  if (m == 0) return {};
  const Spinor t = apply(build_ts_z(), monogenic_minus(m));
  return t.coeff(0, m - 1, 3);
}

Scalar howe_ladder_constant(unsigned j, unsigned lambda) {
  // D_s X_s^j m = sum_{t<j} X_s^t [D_s, X_s] X_s^{j-1-t} m with [D_s, X_s] = -i(E+1).
  const Rational c(static_cast<long>(j) * (2 * static_cast<long>(lambda) + static_cast<long>(j) - 1), 2);
  return Scalar(Rational(0), -c);
}

std::vector<HoweComponent> howe_decompose(const Spinor& s) {
  if (s.is_zero()) return {};
  const auto deg = homogeneity(s);
  if (!deg) throw std::invalid_argument("howe_decompose needs a homogeneous spinor");
  const unsigned l = *deg;
  const WeylOperator ds = change_basis(build_ds(), s.basis());
  const WeylOperator xs = change_basis(build_xs(), s.basis());

  std::vector<HoweComponent> parts;
  Spinor rest = s;
  for (unsigned j = l + 1; j-- > 0;) {
    if (rest.is_zero()) break;
    Spinor lowered = rest;
    for (unsigned t = 0; t < j; ++t) lowered = apply(ds, lowered);
    if (lowered.is_zero()) continue;
    // D_s^j X_s^j m = prod_{t=1..j} c(t, lambda) m with lambda = (l - j) + 1.
    Scalar scale(1);
    for (unsigned t = 1; t <= j; ++t) scale *= howe_ladder_constant(t, l - j + 1);
    Spinor mono = lowered * scale.inv();
    Spinor raised = mono;
    for (unsigned t = 0; t < j; ++t) raised = apply(xs, raised);
    rest -= raised;
    parts.push_back({l - j, j, std::move(mono)});
  }
  if (!rest.is_zero()) throw HoweError("decomposition left a nonzero remainder");
  for (const auto& part : parts) {
    if (!apply(ds, part.monogenic).is_zero()) throw HoweError("component is not D_s-monogenic");
  }
  if (howe_reconstruct(parts, s.basis()) != s) throw HoweError("reconstruction mismatch");
  std::reverse(parts.begin(), parts.end());
  return parts;
}

std::vector<HoweComponent> howe_decompose_all(const Spinor& s) {
  std::set<unsigned> degrees;
  for (const auto& [e, p] : s.terms()) degrees.insert(e.first + e.second);
  std::vector<HoweComponent> out;
  for (unsigned d : degrees) {
    auto parts = howe_decompose(homogeneous_part(s, d));
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

Spinor howe_reconstruct(const std::vector<HoweComponent>& parts, Basis basis) {
  const WeylOperator xs = change_basis(build_xs(), basis);
  Spinor out(basis);
  for (const auto& part : parts) {
    Spinor v = part.monogenic;
    for (unsigned t = 0; t < part.j; ++t) v = apply(xs, v);
    out += v;
  }
  return out;
}

bool holomorphic_check(unsigned n) {
  const Spinor s = Spinor::term(Basis::ZZBAR, n, 0, QPoly::monomial(Scalar(1), 1));
  if (!apply(build_ts_z(), s).is_zero()) return false;
  const WeylOperator ode = parse_operator("1 - q^2 - q*dq");
  return apply(ode, Spinor::term(Basis::XY, 0, 0, QPoly::monomial(Scalar(1), 1))).is_zero();
}

}  // namespace wt
