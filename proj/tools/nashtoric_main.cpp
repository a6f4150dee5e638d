#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nashtoric/cli.hpp"

namespace {

struct RawOptions {
  std::string cf, pq, cone, fraction;
  std::string mode = "normalized";
  std::string characteristic = "0";
  std::string format = "json";
  std::string out;
  int max_r = 4;
  long long max_a = 6;
  int max_steps = 10;
  int workers = 1;
};

void add_input_flags(CLI::App* cmd, RawOptions& opt) {
  cmd->add_option("--cf", opt.cf, "continued fraction, e.g. 1,2,4,2");
  cmd->add_option("--pq", opt.pq, "normal-form fraction, e.g. 5/12");
  cmd->add_option("--cone", opt.cone, "cone rays, e.g. 1,0;5,12");
}

void add_output_flags(CLI::App* cmd, RawOptions& opt) {
  cmd->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opt.out, "write the report to a file");
}

int build_and_run(const RawOptions& opt, nashtoric::RunConfig::Command command) {
  using nashtoric::RunConfig;
  RunConfig config;
  config.command = command;
  try {
    if (!opt.cf.empty()) config.cf_terms = nashtoric::parse_term_list(opt.cf);
    if (!opt.pq.empty()) config.pq = nashtoric::parse_fraction(opt.pq);
    if (!opt.fraction.empty()) config.pq = nashtoric::parse_fraction(opt.fraction);
    if (!opt.cone.empty()) config.cone = nashtoric::parse_cone_spec(opt.cone);
    config.char_p = nashtoric::parse_integer(opt.characteristic);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  config.mode = opt.mode == "nash" ? nashtoric::Mode::nash : nashtoric::Mode::normalized;
  config.format = opt.format == "text" ? RunConfig::Format::text : RunConfig::Format::json;
  config.max_r = opt.max_r;
  config.max_a = opt.max_a;
  config.max_steps = opt.max_steps;
  config.workers = opt.workers;
  if (!opt.out.empty()) config.out_file = opt.out;
  return nashtoric::run(config, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash blowup and normalized Nash blowup data of normal toric surfaces"};
  app.require_subcommand(1);

  RawOptions expand_opt, analyze_opt, verify_opt, iterate_opt;

  CLI::App* expand = app.add_subcommand("expand", "continued fraction of a normal-form P/Q");
  expand->add_option("fraction", expand_opt.fraction, "fraction P/Q, e.g. 5/12");
  add_input_flags(expand, expand_opt);
  add_output_flags(expand, expand_opt);

  CLI::App* analyze = app.add_subcommand("analyze", "chart analysis of one surface");
  add_input_flags(analyze, analyze_opt);
  analyze->add_option("--mode", analyze_opt.mode, "normalized or nash")
      ->check(CLI::IsMember({"normalized", "nash"}));
  analyze->add_option("--char", analyze_opt.characteristic, "field characteristic (normalized mode)");
  add_output_flags(analyze, analyze_opt);

  CLI::App* verify = app.add_subcommand("verify", "exhaustive classification check");
  verify->add_option("--max-r", verify_opt.max_r, "largest fraction length")->required();
  verify->add_option("--max-a", verify_opt.max_a, "largest term value")->required();
  verify->add_option("--mode", verify_opt.mode, "normalized or nash")
      ->check(CLI::IsMember({"normalized", "nash"}));
  verify->add_option("--workers", verify_opt.workers, "parallel workers");
  add_output_flags(verify, verify_opt);

  CLI::App* iterate = app.add_subcommand("iterate", "iterated normalized blowup trace");
  add_input_flags(iterate, iterate_opt);
  iterate->add_option("--max-steps", iterate_opt.max_steps, "round cap");
  add_output_flags(iterate, iterate_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  using Command = nashtoric::RunConfig::Command;
  if (expand->parsed()) return build_and_run(expand_opt, Command::expand);
  if (analyze->parsed()) return build_and_run(analyze_opt, Command::analyze);
  if (verify->parsed()) return build_and_run(verify_opt, Command::verify);
  return build_and_run(iterate_opt, Command::iterate);
}
