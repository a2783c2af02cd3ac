#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "polyinv/session.hpp"

namespace {

// "@path" reads the literal from a file, "-" from stdin.
std::string load(const std::string& arg) {
  if (arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw CLI::ValidationError("cannot read " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

std::optional<unsigned> env_budget() {
  const char* raw = std::getenv("POLYINV_MAX_DEG");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 1000000) {
    std::cerr << "ignoring POLYINV_MAX_DEG=" << raw << " (expected a positive integer)\n";
    return std::nullopt;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  using polyinv::Command;
  CLI::App app{"Exact inversion and preimages of polynomial maps"};
  app.require_subcommand(1);

  polyinv::SessionConfig cfg;
  Command cmd;
  std::string engine = "iterative", filtration = "degree", order = "grevlex", format = "pretty";
  std::optional<unsigned> budget, max_deg;
  std::optional<std::string> point, curve;

  auto common = [&](CLI::App* sub, bool wants_engine) {
    sub->add_option("map", cmd.map, "map literal, @file or - for stdin")->required();
    if (wants_engine) {
      sub->add_option("--engine", engine, "iterative, groebner or both")
          ->check(CLI::IsMember({"iterative", "groebner", "both"}));
    }
    sub->add_option("--order", order, "order inside the Groebner blocks")
        ->check(CLI::IsMember({"lex", "grevlex"}));
  };

  auto* invert = app.add_subcommand("invert", "invert F");
  common(invert, true);
  invert->add_option("--filtration", filtration, "degree or padic:<p>");
  invert->add_option("--budget", budget, "iteration budget")->check(CLI::PositiveNumber);

  auto* gb_invert = app.add_subcommand("gb-invert", "invert F with the Groebner engine");
  common(gb_invert, false);

  auto* preimage = app.add_subcommand("preimage", "preimage of a point or a curve");
  common(preimage, true);
  preimage->add_option("--point", point, "e.g. 1,1");
  preimage->add_option("--curve", curve, "e.g. \"[t + 4*t^4, 2*t^2]\"");
  preimage->add_option("--max-deg", max_deg, "t-degree budget")->check(CLI::PositiveNumber);
  preimage->add_option("--filtration", filtration, "accepted and ignored: preimages are t-adic");

  auto* gb_preimage = app.add_subcommand("gb-preimage", "preimage with the Groebner engine");
  common(gb_preimage, false);
  gb_preimage->add_option("--point", point, "e.g. 1,1");
  gb_preimage->add_option("--curve", curve, "e.g. \"[t + 4*t^4, 2*t^2]\"");

  auto* verify = app.add_subcommand("verify", "check that G is the two-sided inverse of F");
  verify->add_option("map", cmd.map, "F")->required();
  verify->add_option("inverse", cmd.second_map, "G")->required();

  auto* bench = app.add_subcommand("bench", "time both engines on seeded tame automorphisms");
  std::optional<std::uint64_t> seed;
  bench->add_option("--seed", seed, "generator seed (random if omitted, always printed)");
  bench->add_option("--count", cmd.count, "number of maps")->check(CLI::PositiveNumber);
  bench->add_option("--dim", cmd.dim, "dimension n")->check(CLI::Range(2, 6));
  bench->add_option("--max-degree", cmd.max_degree, "degree cap")->check(CLI::Range(2, 12));
  bench->add_option("--domain", cmd.domain, "QQ or ZZ")->check(CLI::IsMember({"QQ", "ZZ"}));

  for (auto* sub : {invert, gb_invert, preimage, gb_preimage, verify, bench}) {
    sub->add_flag("-v,--verbose", cfg.verbose, "print iterates and bases");
    sub->add_option("--format", format, "pretty or machine")
        ->check(CLI::IsMember({"pretty", "machine"}));
  }

  try {
    app.parse(argc, argv);
    if (invert->parsed()) cmd.kind = Command::Kind::Invert;
    if (gb_invert->parsed()) cmd.kind = Command::Kind::GbInvert;
    if (preimage->parsed()) cmd.kind = Command::Kind::Preimage;
    if (gb_preimage->parsed()) cmd.kind = Command::Kind::GbPreimage;
    if (verify->parsed()) cmd.kind = Command::Kind::Verify;
    if (bench->parsed()) cmd.kind = Command::Kind::Bench;

    if (!bench->parsed()) cmd.map = load(cmd.map);
    if (verify->parsed()) cmd.second_map = load(cmd.second_map);
    cmd.point = point;
    cmd.curve = curve;
    cmd.seed = seed;

    cfg.engine = engine == "groebner" ? polyinv::Engine::Groebner
                 : engine == "both"   ? polyinv::Engine::Both
                                      : polyinv::Engine::Iterative;
    cfg.order = order == "lex" ? polyinv::MonomialOrder::Kind::Lex
                               : polyinv::MonomialOrder::Kind::GrevLex;
    cfg.format = format == "machine" ? polyinv::OutputFormat::Machine
                                     : polyinv::OutputFormat::Pretty;
    cfg.budget = budget;
    cfg.max_deg = max_deg;
    cfg.default_budget_override = env_budget();
    if (filtration != "degree" && !preimage->parsed()) {
      if (filtration.rfind("padic:", 0) != 0) {
        throw CLI::ValidationError("--filtration", "expected degree or padic:<p>");
      }
      try {
        cfg.filtration = polyinv::FiltrationSpec::padic(mpz_class(filtration.substr(6)));
      } catch (const std::exception& e) {
        throw CLI::ValidationError("--filtration", e.what());
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : polyinv::kExitUsage;
  }

  const polyinv::Report report = polyinv::run(cfg, cmd);
  (report.exit_code == polyinv::kExitUsage ? std::cerr : std::cout) << report.text;
  return report.exit_code;
}
