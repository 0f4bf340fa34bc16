#include "filtra/module_io.hpp"

#include <fstream>
#include <stdexcept>

#include "filtra/parse.hpp"

namespace filtra {

ModuleRealization module_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("module description: object expected");
  const int n = doc.at("n").get<int>();
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "polynomial") return polynomial_module(n);
  if (kind != "cyclic")
    throw std::invalid_argument("module description: kind must be 'cyclic' or 'polynomial'");
  std::vector<WeylElement> generators;
  if (doc.contains("generators"))
    for (const auto& text : doc.at("generators"))
      generators.push_back(parse_weyl(text.get<std::string>(), n));
  const long cutoff = doc.value("cutoff", 12L);
  return cyclic_quotient_module(n, std::move(generators), cutoff);
}

ModuleRealization load_module_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open module description: " + path);
  nlohmann::json doc;
  in >> doc;
  return module_from_json(doc);
}

}  // namespace filtra
