#ifndef FILTRA_MODULE_IO_HPP
#define FILTRA_MODULE_IO_HPP

#include <string>

#include <json.hpp>

#include "filtra/module_realization.hpp"

namespace filtra {

// Module description schema:
//   { "n": 1, "kind": "cyclic" | "polynomial",
//     "generators": ["d1", ...],   // cyclic only
//     "cutoff": 12 }               // cyclic only
ModuleRealization module_from_json(const nlohmann::json& doc);
ModuleRealization load_module_description(const std::string& path);

}  // namespace filtra

#endif
