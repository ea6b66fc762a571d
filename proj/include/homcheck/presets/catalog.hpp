#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homcheck/presets/fixtures.hpp"
#include "homcheck/presets/modules.hpp"

namespace homcheck::presets {

/// One parameter of a preset family.
struct ParamSpec {
  std::string name;
  std::string kind;        // symbol | sign | count | twist-index
  std::string constraint;  // free text, empty when unconstrained
};

struct CatalogEntry {
  std::string id;
  std::string kind;  // algebra | bialgebra | module | module-algebra | braiding
  std::string summary;
  std::vector<ParamSpec> params;
};

/// Every preset, in listing order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view id);

/// Parameters of the twisted vector representation of U_q(sl_n):
/// λ1..λ_{n-1}, ξ, r, k.
std::vector<ParamSpec> sln_vector_parameters(unsigned n);

/// Presentation of an algebra preset (qplane, fermionic-3, uq-sl2, sl3,
/// sl4, z2, v4). Throws DomainError for other ids.
PresentationPtr presentation_by_id(std::string_view id);
/// Bialgebra preset with its twist map (identity for z2), α_λ for uq-sl2 and
/// the swap for v4. Throws DomainError for other ids.
HomBialgebra bialgebra_by_id(std::string_view id, const Scalar& lambda);
LinMap twist_by_id(std::string_view id, const PresentationPtr& pres, const Scalar& lambda);

/// Module presets written as calls: `V(eps,n)`, `verma(N)` (highest weight
/// `eta`) and `Vn(n)`. Throws DomainError on a malformed call.
ModuleStructure module_by_call(std::string_view call, const Scalar& q = Scalar::q(),
                               const Scalar& eta = Scalar::sym("eta"));
/// The α_ξ family matching a module preset and the twist of its acting
/// algebra. U_q(sl_n) takes n-1 scalars; a single one is repeated.
Operator module_alpha(const ModuleStructure& m, const Scalar& xi, const std::vector<Scalar>& lambdas);
LinMap module_algebra_twist(const ModuleStructure& m, const std::vector<Scalar>& lambdas);

}  // namespace homcheck::presets
