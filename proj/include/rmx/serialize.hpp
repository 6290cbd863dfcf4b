#pragma once

#include <json.hpp>

#include "rmx/braiding.hpp"

namespace rmx {

using Json = nlohmann::json;

// {"conductor": N, "coeffs": [[num, den], ...]} with decimal strings for the
// arbitrary-precision integers; coefficient j belongs to zeta_N^j.
Json to_json(const Cyc &value);
Cyc cyc_from_json(const Json &j);

Json to_json(const GroupElement &g); // plain integer array
GroupElement element_from_json(const Json &j);

// Sorted list of {"a": ..., "b": ..., "c": ...} records.
Json to_json(const Tensor2 &t);

Json to_json(const AxiomReport &report); // {"axioms": [{name, pass, witness}]}

Json to_json(const GradedSpace &v); // {"dims": {"a1.a2": d, ...}}

std::string degree_key(const GroupElement &g); // "1.0", "" for rank zero
GroupElement degree_from_key(const std::string &key, const GroupSpec &spec);

} // namespace rmx
