#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "commands.hpp"
#include "weylder/text.hpp"

using namespace weylder;

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return 2;
}

cli::json read_stdin_json() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  try {
    return cli::json::parse(text);
  } catch (const cli::json::parse_error& e) {
    throw cli::UsageError(std::string("stdin is not valid JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivations and HH^1 of the algebras A_h inside the Weyl algebra"};
  app.set_help_flag("--help", "print this help and exit");
  cli::Config cfg;
  std::string output = "text";
  std::optional<int> bound;
  std::optional<std::string> factors, g, element;
  app.add_option("command", cfg.command, "analyze | bracket | classify | normalizer | center | exp-aut | verify")
      ->required()
      ->check(CLI::IsMember({"analyze", "bracket", "classify", "normalizer", "center", "exp-aut", "verify"}));
  app.add_option("--h", cfg.h_text, "polynomial h in x");
  app.add_option("--char", cfg.characteristic, "0 or a prime")->default_val(0);
  app.add_option("--factors", factors, "factorization of h, e.g. \"x^2,(x-1)\"");
  app.add_option("--degree-bound", bound, "enumeration bound (default 3p, or 24 in characteristic 0)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->default_val(1);
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--g", g, "polynomial g for exp-aut");
  app.add_option("--element", element, "element of A_h for exp-aut");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.factors_text = factors;
  cfg.g_text = g;
  cfg.element_text = element;
  cfg.json_output = output == "json";

  if (cfg.h_text.empty()) {
    if (cfg.command != "verify") return usage_error("--h is required");
    cfg.h_text = "x^2";
  }
  if (cfg.characteristic < 0 || (cfg.characteristic != 0 && !is_prime(cfg.characteristic)))
    return usage_error("--char must be 0 or a prime");

  try {
    Field F = cfg.characteristic ? Field(cfg.characteristic) : Field();
    Poly h = parse_poly(cfg.h_text, F);
    if (h.is_zero()) return usage_error("h must be nonzero");
    cfg.degree_bound = bound ? *bound : (cfg.characteristic ? 3 * static_cast<int>(cfg.characteristic) : 24);
    if (cfg.degree_bound < h.top()) return usage_error("--degree-bound must be at least deg h");
    Context ctx = make_context(h);

    cli::Outcome out;
    if (cfg.command == "analyze")
      out = cli::cmd_analyze(cfg, ctx);
    else if (cfg.command == "center")
      out = cli::cmd_center(cfg, ctx);
    else if (cfg.command == "normalizer")
      out = cli::cmd_normalizer(cfg, ctx);
    else if (cfg.command == "exp-aut")
      out = cli::cmd_exp_aut(cfg, ctx);
    else if (cfg.command == "verify")
      out = cli::cmd_verify(cfg, ctx);
    else if (cfg.command == "classify")
      out = cli::cmd_classify(cfg, ctx, read_stdin_json());
    else
      out = cli::cmd_bracket(cfg, ctx, read_stdin_json());

    if (cfg.json_output)
      std::cout << out.report.dump(2) << "\n";
    else
      std::cout << cli::render_text(out.report);
    return out.status;
  } catch (const cli::UsageError& e) {
    return usage_error(e.what());
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error [" << e.category() << "]: " << e.what() << "\n";
    return 1;
  }
}
