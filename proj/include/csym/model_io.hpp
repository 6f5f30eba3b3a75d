#pragma once

// Line-oriented model files:
//
//   # Iwasawa manifold times an elliptic curve
//   dim 4
//   param t = 1/2
//   mu = 1
//   d f3 = -1*f12
//   d w3 = -1*w12        (optional; defaults to the conjugate of d f3)
//
// Omitted generators are closed. Builtin specs read "builtin:nakamura4:t=1/2".

#include <optional>
#include <string>
#include <string_view>

#include "csym/model.hpp"

namespace csym {

struct ModelOverrides {
  Binding params;  // replaces declared parameter values
  std::optional<Rational> mu;
};

/// Throws SyntaxError (with line and column) and every model validation error.
Model parse_model_file(std::string_view text, const ModelOverrides& overrides = {}, std::string name = "");
/// Emits text that parses back to an equal model.
std::string format_model_file(const Model& model);

/// "builtin:NAME[:k=v,...]" or a path to a model file.
Model load_model(const std::string& source, const ModelOverrides& overrides = {});

}  // namespace csym
