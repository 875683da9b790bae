#ifndef QPH_CONFIG_HPP
#define QPH_CONFIG_HPP

#include <string>

#include "qph/medium.hpp"
#include "qph/pipeline.hpp"

namespace qph {

struct Config {
  MediumSpec medium;
  SolverParams solver;
  std::string raw_text;  // verbatim file contents, kept for run records
};

// Plain-text sectioned key/value format; see the README for the schema.
Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

}  // namespace qph

#endif
