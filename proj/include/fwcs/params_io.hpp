#pragma once

#include <string>

#include <json.hpp>

#include "fwcs/bicomplex.hpp"
#include "fwcs/foxwright.hpp"
#include "fwcs/foxwright_bicomplex.hpp"

namespace fwcs {

// Strict readers: unknown keys, wrong arity and non-numeric entries raise
// ValidationError naming the JSON path (and line:column for syntax errors).

/// Parses text; source is used as the file name in messages.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);
nlohmann::json read_json_file(const std::string& path);

/// {"upper":[[aRe,aIm,A],...],"lower":[[bRe,bIm,B],...]}
FWParams fw_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FWParams& params);

/// {"z1":[re,im],"z2":[re,im]}
Bicomplex bicomplex_from_json(const nlohmann::json& j, const std::string& path = "");
nlohmann::json to_json(const Bicomplex& z);

/// {"c1":r,"c2":r}
Hyperbolic hyperbolic_from_json(const nlohmann::json& j, const std::string& path = "");
nlohmann::json to_json(const Hyperbolic& h);

/// {"upper":[{"mu":<bicomplex>,"M":<hyperbolic>},...],"lower":[{"nu":<bicomplex>,"N":<hyperbolic>},...]}
BCFWParams bc_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BCFWParams& params);

FWParams load_fw_params(const std::string& path);
BCFWParams load_bc_params(const std::string& path);

/// "re,im" or "re" -> complex.
Complex parse_complex(const std::string& text);

}  // namespace fwcs
