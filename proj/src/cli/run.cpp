#include "fpd/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "fpd/cli/problem_file.hpp"
#include "fpd/primdec/verify.hpp"
#include "fpd/univar/factor.hpp"

namespace fpd::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string input = "-";
  bool json = false;
  bool quiet = false;
  bool check = false;
  bool parallel = false;
  std::optional<std::string> order;
};

Json ring_json(const mpoly::Ring& ring) {
  return Json{{"p", ring.field.modulus()}, {"vars", ring.vars}, {"order", order_name(ring.order.kind())}};
}

std::string ring_label(const mpoly::Ring& ring) {
  std::string vars;
  for (const auto& v : ring.vars) vars += (vars.empty() ? "" : ",") + v;
  return "F_" + std::to_string(ring.field.modulus()) + "[" + vars + "], " + order_name(ring.order.kind());
}

std::string angle_list(const std::vector<std::string>& items) {
  std::string out = "<";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + ">";
}

int do_groebner(const groebner::Ideal& ideal, const Flags& flags, std::ostream& out) {
  const groebner::GroebnerBasis gb = ideal.groebner_basis();
  if (flags.json) {
    Json j = ring_json(*ideal.ring());
    j["groebner"] = gb.to_strings();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (!flags.quiet) out << "# reduced Groebner basis over " << ring_label(*ideal.ring()) << '\n';
  for (const auto& s : gb.to_strings()) out << s << '\n';
  return kExitOk;
}

Json report_json(const primdec::VerificationReport& report) {
  Json j = Json::object();
  for (const auto& [name, ok] : report.checks()) j[name] = ok;
  return j;
}

void print_report(const primdec::VerificationReport& report, std::ostream& out) {
  out << "verify:\n";
  for (const auto& [name, ok] : report.checks()) out << "  " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  std::string dims;
  for (std::size_t d : report.component_dimensions) dims += (dims.empty() ? "" : " + ") + std::to_string(d);
  out << "  dim R/I = " << report.input_dimension << " = " << (dims.empty() ? "0" : dims) << '\n';
  if (report.intersection_witness)
    out << "  intersection witness: " << mpoly::to_string(*report.intersection_witness) << '\n';
}

int do_decompose(const groebner::Ideal& ideal, const Flags& flags, bool run_verify, std::ostream& out) {
  primdec::Options opts;
  opts.parallel = flags.parallel;
  const primdec::Decomposition d = primdec::primary_decomposition(ideal, opts);
  std::optional<primdec::VerificationReport> report;
  if (run_verify) report = primdec::verify(d);

  if (flags.json) {
    Json j = ring_json(*ideal.ring());
    j["t"] = d.t();
    Json hs = Json::array();
    for (const auto& h : d.idempotent_polys) hs.push_back(mpoly::to_string(h));
    j["idempotents"] = hs;
    Json comps = Json::array();
    for (const auto& c : d.components) {
      const auto gb = c.groebner_basis();
      comps.push_back(Json{{"groebner", gb.to_strings()}, {"quotient_dim", quotient::macaulay_basis(gb).dimension()}});
    }
    j["components"] = comps;
    if (report) j["verify"] = report_json(*report);
    out << j.dump(2) << '\n';
  } else {
    if (!flags.quiet) {
      out << "ring: " << ring_label(*ideal.ring()) << '\n';
      out << "quotient dimension: " << d.quotient->dimension() << '\n';
    }
    out << "t = " << d.t() << '\n';
    for (std::size_t i = 0; i < d.t(); ++i) {
      const auto gb = d.components[i].groebner_basis();
      out << "I" << (i + 1) << " = " << angle_list(gb.to_strings());
      if (!flags.quiet) out << "    # dim " << quotient::macaulay_basis(gb).dimension();
      out << '\n';
      if (!flags.quiet) out << "  idempotent: " << mpoly::to_string(d.idempotent_polys[i]) << '\n';
    }
    if (report) print_report(*report, out);
  }
  return report && !report->passed() ? kExitMath : kExitOk;
}

int do_factor(const groebner::Ideal& ideal, const Flags& flags, std::ostream& out) {
  if (ideal.ring()->nvars() != 1 || ideal.generators().size() != 1)
    throw ProblemError(0, 0, "factor expects one variable and one polynomial");
  primdec::Options opts;
  opts.parallel = flags.parallel;
  const univar::Factorization fz = univar::factor(ideal.generators().front(), opts);
  if (flags.json) {
    Json j = ring_json(*ideal.ring());
    j["input"] = mpoly::to_string(fz.input);
    j["leading_coefficient"] = fz.leading_coefficient;
    j["t"] = fz.t;
    Json fs = Json::array();
    for (const auto& f : fz.factors) fs.push_back(mpoly::to_string(f));
    j["factors"] = fs;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "f = ";
  if (fz.leading_coefficient != 1) out << fz.leading_coefficient << '*';
  for (const auto& f : fz.factors) out << '(' << mpoly::to_string(f) << ')';
  out << '\n';
  if (!flags.quiet) out << "primary factors: " << fz.factors.size() << '\n';
  return kExitOk;
}

groebner::Ideal load(const Flags& flags, std::istream& in) {
  ProblemFile problem;
  if (flags.input == "-") {
    problem = read_problem(in);
  } else {
    std::ifstream file(flags.input);
    if (!file) throw ProblemError(0, 0, "cannot open '" + flags.input + "'");
    problem = read_problem(file);
  }
  if (flags.order) problem.order = *flags.order == "lex" ? mpoly::OrderKind::kLex : mpoly::OrderKind::kGrevlex;
  return build_ideal(problem);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primary decomposition of zero-dimensional ideals over F_p", "fpdecomp"};
  app.require_subcommand(1);
  Flags flags;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", flags.input, "problem file, or - for standard input");
    sub->add_flag("--json", flags.json, "machine-readable output");
    sub->add_flag("--quiet", flags.quiet, "print results only");
    sub->add_flag("--parallel", flags.parallel, "saturate components concurrently");
    sub->add_option("--order", flags.order, "override the file's monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}));
  };
  CLI::App* groebner_cmd = app.add_subcommand("groebner", "print the reduced Groebner basis");
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "primary decomposition");
  CLI::App* factor_cmd = app.add_subcommand("factor", "factor a univariate polynomial");
  CLI::App* verify_cmd = app.add_subcommand("verify", "decompose, then check the result");
  for (CLI::App* sub : {groebner_cmd, decompose_cmd, factor_cmd, verify_cmd}) add_common(sub);
  decompose_cmd->add_flag("--check", flags.check, "verify the decomposition; exit 1 on failure");

  std::vector<const char*> argv{"fpdecomp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const groebner::Ideal ideal = load(flags, in);
    if (groebner_cmd->parsed()) return do_groebner(ideal, flags, out);
    if (decompose_cmd->parsed()) return do_decompose(ideal, flags, flags.check, out);
    if (verify_cmd->parsed()) return do_decompose(ideal, flags, true, out);
    return do_factor(ideal, flags, out);
  } catch (const ProblemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
}

}  // namespace fpd::cli
