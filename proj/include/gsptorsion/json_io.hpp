#pragma once

#include <string>

#include <json.hpp>

#include "gsptorsion/exponents.hpp"
#include "gsptorsion/lattice.hpp"
#include "gsptorsion/padic.hpp"
#include "gsptorsion/symplectic.hpp"
#include "gsptorsion/torsion.hpp"

namespace gspt {

using Json = nlohmann::ordered_json;

std::string to_decimal(const mpz_class& x);
std::string to_decimal(std::uint64_t x);

Json matrix_to_json(const ResidueMatrix& m);
/// Entries may be decimal strings or JSON integers; they are reduced on load.
ResidueMatrix matrix_from_json(const Json& j);

Json element_to_json(const SymplecticElement& e);
/// The multiplier field, when present, must agree with the matrix.
SymplecticElement element_from_json(const Json& j);

Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json subgroup_to_json(const TorsionSubgroup& h);
TorsionSubgroup subgroup_from_json(const Json& j);

Json type_to_json(const SubgroupType& t);
Json chain_to_json(const FlagChain& c);

Json report_to_json(const ExponentReport& r);

/// Reads a file, or standard input for "-".
Json read_json_input(const std::string& path);

}  // namespace gspt
