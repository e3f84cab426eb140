#pragma once

#include "heckecells/cells.hpp"
#include "heckecells/hybrid.hpp"

#include <set>
#include <vector>

namespace heckecells {

/// span{^pH_x H_y : x in J, y in ^I W} is a right ideal. J holds subsystem
/// indices of W_I and must be <=_R down-closed (DomainError otherwise). Each
/// product ^pH_x H_y H_s is expanded directly and, independently, through
/// Deodhar's lemma; both must agree and stay inside J x ^I W.
TheoremReport ideal_check(const HybridContext& ctx, const std::set<std::size_t>& J);
/// J = {u in W_I : u <=_R x}.
std::set<std::size_t> right_ideal_below(const HybridContext& ctx, std::size_t x_sub);

/// Every ^pH_{uw} occurring in ^pH_{xy} H_s has u <=_R x in W_I.
TheoremReport verify_preorder_compat(const HybridContext& ctx);

/// For a right cell C of W_I (index into ctx.subgroup_cells()):
/// C.^I W is a union of right cells of W, and on the subquotient with basis
/// [^pH_{cy}] every H_s acts as on the induced module ^pH_C (x) H_y, through
/// the base change r^I.
TheoremReport verify_induction(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell);

/// The right cells of W making up C.^I W, or nothing if C.^I W is not a union
/// of cells.
std::vector<std::size_t> induced_cells(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell);

/// For a right cell D of W and each x in W^I meeting D, x^-1 (D cap x W_I) is
/// a union of right cells of W_I.
TheoremReport verify_restriction(const HybridContext& ctx, const CellPartition& ambient_right, std::size_t cell);

}  // namespace heckecells
