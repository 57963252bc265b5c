#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pentagon {

// Base class for every error thrown by this library.
struct pentagon_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural or axiom check failed on otherwise well-formed input.
// `code` is a stable machine-readable tag and `witness` the offending tuple.
struct validation_error : pentagon_error {
  std::string code;
  std::vector<int> witness;

  validation_error(std::string c, std::vector<int> w, const std::string& msg)
      : pentagon_error(msg), code(std::move(c)), witness(std::move(w)) {}
};

// Malformed serialized input; `path` locates the problem JSON-pointer style.
struct schema_error : pentagon_error {
  std::string path;

  schema_error(std::string p, const std::string& msg)
      : pentagon_error(msg), path(std::move(p)) {}
};

}  // namespace pentagon
