#pragma once

#include <string>

#include "json.hpp"

#include "homanti/cohomology.hpp"
#include "homanti/deformations.hpp"

// JSON file formats. All scalars are rational strings ("p" or "p/q"); no
// floating point appears anywhere. Tensors are sparse arrays of
// {"i", "j", "k", "c"} entries with 0-based indices, zeros omitted and
// duplicates rejected; matrices are dense row-major string arrays. Exports
// are canonical: fixed key order, sparse entries in lexicographic index
// order, canonical rational strings. canonical_dump is the byte form the
// tool writes, so export(import(file)) is byte-identical for canonical
// files.

namespace homanti {

// Wraps the JSON parser; malformed text raises InputError.
nlohmann::json parse_json_text(const std::string& text);

// {"even_dim", "odd_dim", "mu", "nu", "br", "alpha", "beta"}; mu is
// p x p x p, nu is p x q x q, br is q x q x p, alpha p x p, beta q x q.
HomLieAntialgebra algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json algebra_to_json(const HomLieAntialgebra& a);

// {"module": {"even_dim", "odd_dim", "alphaV", "betaV"}, "rho0_even",
// "rho0_odd", "rho1_up", "rho1_down"}; the four lists hold one dense matrix
// per algebra basis element and their lengths must match the algebra.
Representation representation_from_json(const nlohmann::json& j, const HomLieAntialgebra& a);
nlohmann::ordered_json representation_to_json(const Representation& rho);

// {"omega0", "omega1", "omega2"} as sparse tensors with value indices in the
// given module (p x p x r, p x q x s, q x q x r).
OmegaTriple omega_from_json(const nlohmann::json& j, const HomLieAntialgebra& a,
                            const HomModule& module);
nlohmann::ordered_json omega_to_json(const OmegaTriple& omega);

// {"phi0", "phi1"} as dense p x p and q x q matrices.
NijenhuisCandidate phi_from_json(const nlohmann::json& j, const HomLieAntialgebra& a);
nlohmann::ordered_json phi_to_json(const NijenhuisCandidate& phi);

// Identity reports: an overall verdict, one verdict per identity, and the
// violation list (verdict "pass" exactly when no violations name it).
nlohmann::ordered_json report_to_json(const IdentityReport& report);

// Cohomology reports: the four dimensions plus the modular confirmations
// (absent modular ranks serialize as null).
nlohmann::ordered_json cohomology_to_json(const CohomologyReport& report);

// dump with two-space indentation and a trailing newline: the canonical byte
// form of every file the tool writes.
std::string canonical_dump(const nlohmann::ordered_json& j);

}  // namespace homanti
