// porc: synthesize, evaluate and verify PORC counting functions for systems
// of monomial equations over finite fields.
//
// Exit status: 0 success, 1 parse/input error, 2 scale cap exceeded,
// 3 verification mismatch, 4 internal consistency failure.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "porc/errors.hpp"
#include "porc/ffield.hpp"
#include "porc/monomial.hpp"
#include "porc/porcsynth.hpp"
#include "porc/serialize.hpp"
#include "porc/verify.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kScale = 2, kMismatch = 3, kInternal = 4 };

struct Config {
  std::string format = "text";
  std::string input;
  std::string text;
  std::vector<std::string> inputs;
  long long q = 0;
  std::string q_range = "2:9";
  std::uint64_t max_enum = 1'000'000;
  std::size_t max_neq = 20;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string& path, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream f(path);
  if (!f) throw porc::DomainError("cannot open '" + path + "'");
  return read_all(f);
}

porc::CountOptions count_options(const Config& cfg) {
  porc::CountOptions o;
  o.max_inequations = cfg.max_neq;
  return o;
}

bool json_out(const Config& cfg) { return cfg.format == "json"; }

int run_synthesize(const Config& cfg) {
  const auto sys = porc::parse_system(read_source(cfg.input, cfg.text));
  const auto cf = porc::synthesize_counting_function(sys, count_options(cfg));
  if (json_out(cfg))
    std::cout << porc::to_json(cf).dump() << "\n";
  else
    std::cout << porc::to_string(cf, "q") << "\n";
  return kOk;
}

int run_count(const Config& cfg) {
  const auto sys = porc::parse_system(read_source(cfg.input, cfg.text));
  const porc::BigInt n = porc::count_at(sys, porc::BigInt(static_cast<long>(cfg.q)), count_options(cfg));
  if (json_out(cfg))
    std::cout << porc::Json{{"q", cfg.q}, {"count", n.get_str()}}.dump() << "\n";
  else
    std::cout << n.get_str() << "\n";
  return kOk;
}

int run_gcd_porc(const Config& cfg) {
  const std::string src = read_source(cfg.input, cfg.text);
  std::vector<porc::IntPolynomial> fs;
  std::string var = "x";
  bool var_seen = false;
  std::istringstream lines(src);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r;") == std::string::npos) continue;
    for (std::size_t i = 0; i < line.size() && !var_seen; ++i)
      if (std::isalpha(static_cast<unsigned char>(line[i]))) {
        std::size_t j = i;
        while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
        var = line.substr(i, j - i);
        var_seen = true;
      }
    try {
      fs.push_back(porc::parse_polynomial(line));
    } catch (const porc::ParseError& e) {
      throw porc::ParseError(e.message(), lineno, e.column());
    }
  }
  if (fs.empty()) throw porc::DomainError("no polynomials given");
  const auto g = porc::synthesize_gcd_function(fs);
  if (json_out(cfg)) {
    std::cout << porc::to_json(g).dump() << "\n";
  } else {
    std::cout << "h(" << var << ") = " << porc::to_string(g, var) << "\n";
    std::cout << "m = " << g.m << "\n";
  }
  return kOk;
}

porc::CountingFunction load_function(const std::string& src, const Config& cfg) {
  const auto first = src.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && src[first] == '{') {
    const auto j = porc::Json::parse(src);
    if (j.contains("terms") && !j.contains("f")) return porc::counting_function_from_json(j);
    return porc::CountingFunction{{porc::SignedTerm{1, porc::gcd_porc_from_json(j)}}};
  }
  return porc::synthesize_counting_function(porc::parse_system(src), count_options(cfg));
}

int run_table(const Config& cfg) {
  const auto cf = load_function(read_source(cfg.input, cfg.text), cfg);
  const auto table = porc::porc_to_residue_table(cf);
  if (json_out(cfg)) {
    std::cout << porc::to_json(table).dump() << "\n";
    return kOk;
  }
  std::cout << "N = " << table.modulus << "\n";
  for (std::size_t r = 0; r < table.entries.size(); ++r)
    std::cout << "q = " << r << " (mod " << table.modulus << "): " << porc::to_string(table.entries[r], "q") << "\n";
  return kOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const auto lo = std::stoull(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(s);
    const std::string hi_str = s.substr(colon + 1);
    const auto hi = std::stoull(hi_str, &used);
    if (used != hi_str.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw porc::DomainError("--q-range expects <lo>:<hi>, got '" + s + "'");
  }
}

int run_verify(const Config& cfg) {
  porc::VerifyOptions opts;
  std::tie(opts.q_lo, opts.q_hi) = parse_range(cfg.q_range);
  opts.count = count_options(cfg);
  opts.enumeration.max_enum = cfg.max_enum;

  std::vector<std::pair<std::string, std::string>> sources;
  if (!cfg.text.empty()) sources.emplace_back("<text>", cfg.text);
  for (const auto& path : cfg.inputs) sources.emplace_back(path, read_source(path, ""));
  if (sources.empty()) sources.emplace_back("<stdin>", read_all(std::cin));

  bool ok = true;
  porc::Json all = porc::Json::array();
  for (const auto& [name, src] : sources) {
    const auto report = porc::verify_system(porc::parse_system(src), opts);
    ok = ok && report.ok();
    if (json_out(cfg)) {
      porc::Json rows = porc::Json::array();
      for (const auto& r : report.rows) {
        porc::Json row{{"q", r.q}, {"smith", r.smith.get_str()}, {"formula", r.formula.get_str()}};
        row["field"] = r.field ? porc::Json(r.field->get_str()) : porc::Json(nullptr);
        row["exponent"] = r.exponent ? porc::Json(r.exponent->get_str()) : porc::Json(nullptr);
        row["ok"] = r.agrees();
        rows.push_back(std::move(row));
      }
      all.push_back(porc::Json{{"input", name}, {"formula", porc::to_string(report.formula, "q")}, {"rows", rows}});
      continue;
    }
    std::cout << name << ": " << porc::to_string(report.formula, "q") << "\n";
    for (const auto& r : report.rows) {
      std::cout << "  q=" << r.q << " smith=" << r.smith.get_str() << " formula=" << r.formula.get_str()
                << " field=" << (r.field ? r.field->get_str() : "-")
                << " exponent=" << (r.exponent ? r.exponent->get_str() : "-") << (r.agrees() ? " ok" : " MISMATCH")
                << "\n";
    }
  }
  if (json_out(cfg)) std::cout << all.dump() << "\n";
  if (!ok) {
    std::cerr << "verification mismatch\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PORC counting functions for monomial systems over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-enum", cfg.max_enum, "Enumeration cap for the brute-force oracles")->check(CLI::PositiveNumber);
  app.add_option("--max-neq", cfg.max_neq, "Largest number of inequations accepted")->check(CLI::PositiveNumber);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Input file ('-' or omitted for stdin)");
    sub->add_option("--text", cfg.text, "Inline input instead of a file");
  };

  auto* synth = app.add_subcommand("synthesize", "Print the counting function of a system");
  add_input(synth);
  auto* count = app.add_subcommand("count", "Count solutions at one q via Smith normal form");
  add_input(count);
  count->add_option("--q", cfg.q, "Value of q")->required();
  auto* gcd = app.add_subcommand("gcd-porc", "Closed form for the gcd of integer polynomial values (one per line)");
  add_input(gcd);
  auto* table = app.add_subcommand("table", "Residue-class polynomial table of a system or JSON function");
  add_input(table);
  auto* verify = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  verify->add_option("inputs", cfg.inputs, "System files");
  verify->add_option("--text", cfg.text, "Inline system");
  verify->add_option("--q-range", cfg.q_range, "Range lo:hi of q values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*synth) return run_synthesize(cfg);
    if (*count) return run_count(cfg);
    if (*gcd) return run_gcd_porc(cfg);
    if (*table) return run_table(cfg);
    if (*verify) return run_verify(cfg);
  } catch (const porc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const porc::ScaleError& e) {
    std::cerr << "scale cap: " << e.what() << "\n";
    return kScale;
  } catch (const porc::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const porc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
