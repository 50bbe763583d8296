#pragma once

#include <string>
#include <vector>

#include "tanglerep/rep.hpp"

namespace tanglerep {

struct CheckResult {
  std::string name;
  bool pass;
};

/// Exact matrix identities for the placed crossing and contraction
/// generators: skein, contraction square, braid moves, distant commutation,
/// curls and sandwich relations. Needs a context of degree >= 2.
std::vector<CheckResult> check_bmw_relations(const RepContext& ctx);

/// Identities of evaluated diagrams: loop value, straightening, the second
/// and third moves, the diagram form of skein, and the opposite curl pair
/// evaluating to the twist scalar and its inverse in some order.
std::vector<CheckResult> check_tangle_relations(const RepContext& ctx);

/// Commutation of every quantum-group generator with every placed crossing
/// and contraction, plus the trivial action on the cup row.
std::vector<CheckResult> check_uq_commutation(const RepContext& ctx);

/// True when every entry passes.
bool all_pass(const std::vector<CheckResult>& results);

} // namespace tanglerep
