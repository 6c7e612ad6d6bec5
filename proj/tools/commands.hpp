#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "weylder/hochschild.hpp"

namespace cli {

using json = nlohmann::ordered_json;

struct Config {
  std::string command;
  std::string h_text;
  long characteristic = 0;
  std::optional<std::string> factors_text;
  int degree_bound = 0;
  bool json_output = false;
  unsigned long seed = 1;
  std::optional<std::string> g_text, element_text;
};

// report plus the exit status it implies (0 ok, 1 domain defect)
struct Outcome {
  json report;
  int status = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Outcome cmd_analyze(const Config& cfg, const weylder::Context& ctx);
Outcome cmd_center(const Config& cfg, const weylder::Context& ctx);
Outcome cmd_normalizer(const Config& cfg, const weylder::Context& ctx);
Outcome cmd_exp_aut(const Config& cfg, const weylder::Context& ctx);
Outcome cmd_classify(const Config& cfg, const weylder::Context& ctx, const json& input);
Outcome cmd_bracket(const Config& cfg, const weylder::Context& ctx, const json& input);
Outcome cmd_verify(const Config& cfg, const weylder::Context& ctx);

// aligned two-column table; nested objects flatten to dotted keys, arrays list one item per line
std::string render_text(const json& report);

}  // namespace cli
