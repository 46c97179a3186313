#include "wt/operators.hpp"

#include "wt/parser.hpp"

namespace wt {

WeylOperator build_xs() { return parse_operator("y*dq + i*x*q"); }
WeylOperator build_ds() { return parse_operator("i*q*dy - dx*dq"); }
WeylOperator build_euler() { return parse_operator("x*dx + y*dy"); }

WeylOperator build_ts_reduced() { return parse_operator("dx - q*dq*dx + i*q^2*dy"); }

TwistorPair build_ts_full() {
  return {build_ts_reduced(), parse_operator("2*dy + i*dq^2*dx + q*dq*dy")};
}

WeylOperator build_rho_x() { return parse_operator("-y*dx - 1/2*i*q^2"); }
WeylOperator build_rho_y() { return parse_operator("-x*dy - 1/2*i*dq^2"); }
WeylOperator build_rho_h() { return parse_operator("-x*dx + y*dy + q*dq + 1/2"); }

WeylOperator build_casimir() {
  const WeylOperator h = build_rho_h();
  const WeylOperator x = build_rho_x();
  const WeylOperator y = build_rho_y();
  const Scalar two(2);
  return compose(h, h) + WeylOperator::identity(Basis::XY) + compose(x, y) * two +
         compose(y, x) * two;
}

WeylOperator casimir_expanded() {
  return parse_operator(
      "x^2*dx^2 + y^2*dy^2 + 2*x*dx + 4*y*dy + 2*x*y*dx*dy + 1/4"
      " - 2*x*q*dx*dq + 2*y*q*dy*dq + 2*i*y*dx*dq^2 + 2*i*x*q^2*dy");
}

WeylOperator build_ds_squared() {
  return parse_operator(
      "(q^2 + 2*q*dq + 1 + dq^2)*dz^2 + 2*(-q^2 + dq^2)*dz*dzbar"
      " + (q^2 - 2*q*dq - 1 + dq^2)*dzbar^2");
}

WeylOperator build_xs_z() { return parse_operator("1/2*i*((q - dq)*z + (q + dq)*zbar)"); }
WeylOperator build_ds_z() { return parse_operator("-((q + dq)*dz + (-q + dq)*dzbar)"); }
WeylOperator build_ts_z() {
  return parse_operator("(1 - q*dq - q^2)*dz + (1 - q*dq + q^2)*dzbar");
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{"xs",   "ds",   "ts",   "ts2",     "euler",
                                              "rhoX", "rhoY", "rhoH", "casimir", "ds2"};
  return names;
}

std::optional<WeylOperator> named_operator(const std::string& name, Basis basis) {
  std::optional<WeylOperator> op;
  if (name == "xs") op = build_xs();
  else if (name == "ds") op = build_ds();
  else if (name == "ts") op = build_ts_reduced();
  else if (name == "ts2") op = build_ts_full().comp2;
  else if (name == "euler") op = build_euler();
  else if (name == "rhoX") op = build_rho_x();
  else if (name == "rhoY") op = build_rho_y();
  else if (name == "rhoH") op = build_rho_h();
  else if (name == "casimir") op = build_casimir();
  else if (name == "ds2") op = build_ds_squared();
  if (op) op = change_basis(*op, basis);
  return op;
}

}  // namespace wt
