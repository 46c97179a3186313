#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wt/linalg.hpp"
#include "wt/spinor.hpp"
#include "wt/weyl.hpp"

namespace wt {

enum class KernelOp { Ds, Ts, Ds2 };

/// One of the six coefficient recursion families. `parity` is the q-parity
/// of the spinor: odd spinors carry an overall factor q in front of the
/// even series A^r(q).
struct RecursionKind {
  KernelOp op;
  Parity parity;  // Even or Odd

  friend bool operator==(const RecursionKind&, const RecursionKind&) = default;
};

std::string to_string(const RecursionKind& kind);
std::vector<RecursionKind> all_recursion_kinds();
/// The operator whose kernel the family describes, in ZZBAR.
WeylOperator kernel_operator(KernelOp op);

class ParityMismatch : public std::invalid_argument {
 public:
  explicit ParityMismatch(const std::string& what) : std::invalid_argument("parity mismatch: " + what) {}
};

class HoweError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family of kernel elements of fixed homogeneity m, truncated in q.
///
/// For recursion families basis[0] is the solution generated from the seed
/// with every free parameter set to zero, and basis[i + 1] is the solution
/// with zero seed and free_parameters[i] set to one. Linear-solve families
/// have no free parameters; their basis spans the exact kernel.
struct KernelFamily {
  unsigned homogeneity = 0;
  std::optional<RecursionKind> kind;
  unsigned qmax = 0;
  std::vector<Spinor> basis;
  std::vector<std::string> free_parameters;
  std::vector<bool> extends_beyond_truncation;
};

nlohmann::json to_json(const KernelFamily& family);

/// e^{-q^2/2}(x + iy)^m, in XY.
Spinor monogenic_plus(unsigned m);
/// Odd D_s-monogenic of homogeneity m with q-degree 2m+1, normalized so the
/// coefficient of q*zbar^m is 1. ZZBAR basis.
Spinor monogenic_minus(unsigned m);

/// Solves the selected recursion bottom-up from A^0 = seed. `seed` must be
/// an even polynomial in q (the overall q of odd kinds is implicit), qmax
/// even with qmax >= 2m+2. Truncation is at q^qmax in every A^r(q).
KernelFamily solve_recursion(const RecursionKind& kind, unsigned m, const QPoly& seed, unsigned qmax);

/// Residuals of every relation of `kind` evaluated on the A^r(q) read off
/// from s (ZZBAR, homogeneity m), keyed by (relation row p, series index k).
/// An exact solution has all residuals zero.
std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>> recursion_residuals(
    const RecursionKind& kind, unsigned m, const Spinor& s);

/// Exact polynomial solutions spanned by the recursion at this truncation:
/// every seed q^0, q^2, ..., q^qmax together with every free parameter,
/// restricted to the combinations annihilated exactly by the operator.
std::vector<Spinor> recursion_exact_span(const RecursionKind& kind, unsigned m, unsigned qmax);

/// Basis of { s : homogeneous of degree m, q-degree <= qmax, op(s) = 0 } by
/// exact linear algebra, in op's basis. With `parity`, only spinors of that
/// q-parity are considered.
KernelFamily kernel_linear_solve(const WeylOperator& op, unsigned m, unsigned qmax,
                                 std::optional<Parity> parity = std::nullopt,
                                 Exec exec = Exec::Serial);

/// Twistor-kernel representatives of homogeneity m, in XY: the even branch
/// first, then the odd branch.
std::vector<Spinor> twistor_kernel_basis(unsigned m);

/// Coefficient of x^{n-1+m} q^n in T_s(X_s^n e^{-q^2/2}(x+iy)^m).
Scalar verify_exclusion(unsigned n, unsigned m);
/// Coefficient of q^3 zbar^{m-1} in T_s(monogenic_minus(m)); zero for m = 0.
Scalar verify_minus_exclusion(unsigned m);

struct HoweComponent {
  unsigned l;  // homogeneity of the monogenic
  unsigned j;  // power of X_s
  Spinor monogenic;
};

/// E+1 eigenvalue lambda of a monogenic m; returns c with
/// D_s X_s^j m = c X_s^{j-1} m.
Scalar howe_ladder_constant(unsigned j, unsigned lambda);

/// s = sum_j X_s^j m_j with D_s m_j = 0. Requires homogeneous input; the zero
/// spinor decomposes into the empty list. Components come in increasing j.
std::vector<HoweComponent> howe_decompose(const Spinor& s);
/// Degree-by-degree decomposition of an arbitrary polynomial spinor.
std::vector<HoweComponent> howe_decompose_all(const Spinor& s);
Spinor howe_reconstruct(const std::vector<HoweComponent>& parts, Basis basis);

/// T_s(z^n q e^{-q^2/2}) = 0 and (1 - q^2) f = q f' for f = q e^{-q^2/2}.
bool holomorphic_check(unsigned n);

}  // namespace wt
