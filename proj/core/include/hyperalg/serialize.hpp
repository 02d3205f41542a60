#pragma once

#include <nlohmann/json.hpp>
#include <initializer_list>
#include <string>

#include "hyperalg/disk_grid.hpp"
#include "hyperalg/exppoly.hpp"
#include "hyperalg/symbol.hpp"

namespace hyperalg {

using Json = nlohmann::json;

Json cplx_to_json(Cplx z);
Cplx cplx_from_json(const Json& j, const char* what);

Json exppoly_to_json(const ExpPoly& f);
ExpPoly exppoly_from_json(const Json& j);

Json symbol_to_json(const SymbolSpec& phi);
SymbolSpec symbol_from_json(const Json& j);

Json grid_to_json(const DiskGrid& g);
DiskGrid grid_from_json(const Json& j);

// Throws SchemaError when `j` is not an object or has keys outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what);

// Key lookup with a SchemaError naming the missing key.
const Json& require_field(const Json& j, const char* key, const char* what);

}  // namespace hyperalg
