#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wt/weyl.hpp"

namespace wt {

/// The two components of the twistor operator on the plane, by the dual
/// coframe vectors eps^1 and eps^2.
struct TwistorPair {
  WeylOperator comp1;
  WeylOperator comp2;
};

// Raising, lowering and Euler operators of the sl(2) Howe dual; XY basis.
WeylOperator build_xs();  // y*dq + i*x*q
WeylOperator build_ds();  // i*q*dy - dx*dq
WeylOperator build_euler();  // x*dx + y*dy

/// Reduced one-component twistor operator dx - q*dq*dx + i*q^2*dy.
WeylOperator build_ts_reduced();
TwistorPair build_ts_full();

// Infinitesimal mp(2,R) action.
WeylOperator build_rho_x();
WeylOperator build_rho_y();
WeylOperator build_rho_h();

/// rho(H)^2 + 1 + 2 rho(X)rho(Y) + 2 rho(Y)rho(X), normal ordered.
WeylOperator build_casimir();
/// The Casimir written out term by term in normal order (no products taken).
WeylOperator casimir_expanded();

/// D_s^2 in ZZBAR, written out from its closed form.
WeylOperator build_ds_squared();

// Complex-coordinate forms, written out directly in ZZBAR.
WeylOperator build_xs_z();
WeylOperator build_ds_z();
WeylOperator build_ts_z();

/// Registry names: xs ds ts ts2 euler rhoX rhoY rhoH casimir ds2.
const std::vector<std::string>& operator_names();
/// Looks up a registry name and converts to `basis`. nullopt if unknown.
std::optional<WeylOperator> named_operator(const std::string& name, Basis basis);

}  // namespace wt
