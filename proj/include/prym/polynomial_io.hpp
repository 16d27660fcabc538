#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "prym/homogeneous_form.hpp"

namespace prym {

// A form read from the JSON interchange format, over whichever field the
// file names.
struct NamedForm {
  std::vector<std::string> vars;
  std::variant<HomogeneousForm<RationalField>, HomogeneousForm<FiniteField>> form;

  bool is_rational() const { return form.index() == 0; }
  const HomogeneousForm<RationalField>& rational() const { return std::get<0>(form); }
  const HomogeneousForm<FiniteField>& finite() const { return std::get<1>(form); }
};

// {"vars": [...], "degree": d, "field": "rational" | {"char": p, "ext": k},
//  "terms": [{"exp": [...], "num": "int", "den": "int", "poly": [c0, ...]?}]}
// "poly" is only meaningful over F_{p^k}: the residue's prime-field digits.
NamedForm form_from_json(const nlohmann::json& j);
NamedForm load_form(const std::string& path);

nlohmann::json form_to_json(const HomogeneousForm<RationalField>& f, const std::vector<std::string>& vars);
nlohmann::json form_to_json(const HomogeneousForm<FiniteField>& f, const std::vector<std::string>& vars);
void save_form(const std::string& path, const nlohmann::json& j);

}  // namespace prym
