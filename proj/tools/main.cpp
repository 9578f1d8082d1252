// vgm: decides whether the zero-constant-term subspace of a group algebra
// over a finite field is a Mathieu subspace, plus the verification commands
// backing that decision procedure. Output is deterministic byte-for-byte so
// it can be golden-file tested.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vgm/field.hpp"
#include "vgm/group.hpp"
#include "vgm/group_algebra.hpp"
#include "vgm/laurent.hpp"
#include "vgm/mathieu.hpp"
#include "vgm/numeric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotMathieu = 10;
constexpr int kExitIndeterminate = 20;
constexpr int kExitVerificationFailed = 30;

int outcome_exit_code(vgm::Outcome o) {
  switch (o) {
    case vgm::Outcome::Mathieu:
      return kExitOk;
    case vgm::Outcome::NotMathieu:
      return kExitNotMathieu;
    case vgm::Outcome::Indeterminate:
      return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

int run_verdict(const std::string& field_spec, const std::string& group_spec,
                uint64_t budget) {
  const vgm::Field field = vgm::parse_field_spec(field_spec);
  const vgm::Group group = vgm::parse_group_spec(group_spec);
  vgm::DecideOptions opts;
  opts.budget = budget;
  const vgm::Verdict v = vgm::decide(field, group, opts);
  std::cout << vgm::verdict_to_json(field, group, v) << "\n";
  return outcome_exit_code(v.outcome);
}

int run_scan(std::vector<std::string> field_specs, uint64_t max_order, uint64_t budget) {
  std::vector<vgm::Field> fields;
  for (const auto& spec : field_specs) fields.push_back(vgm::parse_field_spec(spec));
  std::sort(fields.begin(), fields.end(), [](const vgm::Field& a, const vgm::Field& b) {
    return a.characteristic() != b.characteristic()
               ? a.characteristic() < b.characteristic()
               : a.degree() < b.degree();
  });
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());

  vgm::DecideOptions opts;
  opts.budget = budget;
  std::string out = "field\tgroup\toutcome\tmethod\twitness\n";
  for (const auto& field : fields) {
    for (const auto& factors : vgm::abelian_factor_lists_up_to(max_order)) {
      const vgm::Group group = vgm::Group::abelian(factors);
      const vgm::Verdict v = vgm::decide(field, group, opts);
      out += field.spec_string();
      out += '\t';
      out += group.spec_string();
      out += '\t';
      out += vgm::outcome_string(v.outcome);
      out += '\t';
      out += v.method;
      out += '\t';
      if (v.witness) {
        out += vgm::GroupAlgebra(field, group).format_element(v.witness->element);
      } else {
        out += '-';
      }
      out += '\n';
    }
  }
  std::cout << out;
  return kExitOk;
}

int run_counterexample(uint64_t p, uint64_t max_m, uint64_t max_k, bool json) {
  if (!vgm::is_prime(p)) throw std::invalid_argument("-p must be prime");
  const auto power_report = vgm::verify_power_traces_vanish(p, max_m);
  const auto cofactor_report = vgm::verify_cofactor_traces_nonzero(p, max_k);
  const bool ok = power_report.ok && cofactor_report.ok;

  const vgm::LaurentPoly f = vgm::counterexample_poly(p);
  if (json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["f"] = f.to_string();
    j["max_m"] = max_m;
    j["max_k"] = max_k;
    j["power_traces_ok"] = power_report.ok;
    j["power_trace_failures"] = power_report.failures;
    auto rows = nlohmann::ordered_json::array();
    {
      uint64_t pk = 1;
      for (uint64_t k = 1; k <= max_k; ++k) {
        pk *= p;
        const uint64_t pk1 = pk / p;
        const auto fe = f.pow(pk - 1);
        nlohmann::ordered_json row;
        row["k"] = k;
        row["trace"] = fe.coeff(1);
        row["expected"] = (pk1 % 2 == 0) ? 1 : (p - 1) % p;
        rows.push_back(std::move(row));
      }
    }
    j["cofactor_rows"] = std::move(rows);
    j["cofactor_traces_ok"] = cofactor_report.ok;
    j["ok"] = ok;
    std::cout << j.dump() << "\n";
    return ok ? kExitOk : kExitVerificationFailed;
  }

  std::string out = "f = " + f.to_string() + " over GF(" + std::to_string(p) + ")\n\n";
  out += "m\ttr(f^m)\n";
  {
    vgm::LaurentPoly power = f;
    for (uint64_t m = 1; m <= max_m; ++m) {
      if (m > 1) power = power * f;
      out += std::to_string(m);
      out += '\t';
      out += std::to_string(power.constant_term());
      out += '\n';
    }
  }
  out += "\nk\ttr(z^-1*f^(p^k-1))\texpected\n";
  {
    uint64_t pk = 1;
    for (uint64_t k = 1; k <= max_k; ++k) {
      pk *= p;
      const uint64_t pk1 = pk / p;
      const auto fe = f.pow(pk - 1);
      out += std::to_string(k);
      out += '\t';
      out += std::to_string(fe.coeff(1));
      out += '\t';
      out += std::to_string((pk1 % 2 == 0) ? 1 : (p - 1) % p);
      out += '\n';
    }
  }
  out += "\npower traces vanish: ";
  out += power_report.ok ? "yes" : "NO";
  out += "\ncofactor traces match: ";
  out += cofactor_report.ok ? "yes" : "NO";
  out += '\n';
  std::cout << out;
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_binom(uint64_t p, uint64_t max_k, uint64_t max_b, bool json) {
  const auto report = vgm::verify_binomial_congruences(p, max_k, max_b);
  if (json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["max_k"] = max_k;
    j["max_b"] = max_b;
    j["checks"] = report.checks;
    j["failures"] = report.failures;
    j["ok"] = report.ok;
    std::cout << j.dump() << "\n";
  } else {
    std::string out = "binomial(p^k-1, a) == (-1)^a and binomial(b*p, b) == 0 mod " +
                      std::to_string(p) + ", k <= " + std::to_string(max_k) +
                      ", b <= " + std::to_string(max_b) + ": ";
    out += report.ok ? "ok" : "FAILED";
    out += " (" + std::to_string(report.checks) + " checks)\n";
    for (const auto& failure : report.failures) out += "  " + failure + "\n";
    std::cout << out;
  }
  return report.ok ? kExitOk : kExitVerificationFailed;
}

int run_subset_sum(uint64_t p, const std::vector<uint64_t>& coeffs, bool json) {
  const vgm::Field field = vgm::Field(p);
  std::vector<uint64_t> reduced;
  for (uint64_t c : coeffs) reduced.push_back(c % p);
  const auto result = vgm::subset_sum_check(field, reduced);
  if (json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["coeffs"] = reduced;
    j["pass"] = result.pass;
    j["failing_subset"] = result.failing_subset;
    std::cout << j.dump() << "\n";
  } else {
    if (result.pass) {
      std::cout << "pass: every nonempty subset sums to a nonzero value (d=" << reduced.size()
                << ")\n";
    } else {
      std::string subset;
      for (uint32_t i : result.failing_subset) {
        if (!subset.empty()) subset += ',';
        subset += std::to_string(i);
      }
      std::cout << "fail: subset {" << subset << "} sums to zero\n";
    }
  }
  return result.pass ? kExitOk : kExitNotMathieu;
}

int run_orthogonality(const std::string& field_spec, const std::string& group_spec,
                      bool json) {
  const vgm::Field field = vgm::parse_field_spec(field_spec);
  const vgm::Group group = vgm::parse_group_spec(group_spec);
  if (!group.abelian_factors()) {
    throw std::invalid_argument("orthogonality requires an abelian group spec (Z...)");
  }
  const auto frame = vgm::build_eval_frame(field, *group.abelian_factors());
  const auto report = vgm::verify_kernel_correspondence(frame);
  if (json) {
    nlohmann::ordered_json j;
    j["field"] = field.spec_string();
    j["group"] = group.spec_string();
    j["monomials"] = report.monomials_checked;
    j["samples"] = report.samples_checked;
    j["ok"] = report.ok;
    if (!report.ok) j["failure"] = report.failure;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "monomial orthogonality and kernel correspondence over " << field.spec_string()
              << "[" << group.spec_string() << "]: " << (report.ok ? "ok" : "FAILED") << " ("
              << report.monomials_checked << " monomials, " << report.samples_checked
              << " samples)\n";
    if (!report.ok) std::cout << "  " << report.failure << "\n";
  }
  return report.ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathieu subspace decisions for group algebras over finite fields"};
  app.require_subcommand(1);

  std::string field_spec, group_spec;
  std::vector<std::string> field_specs;
  uint64_t budget = uint64_t{1} << 20;
  uint64_t max_order = 0, prime = 0, max_m = 0, max_k = 0, max_b = 0;
  std::vector<uint64_t> coeff_list;
  bool json = false;

  auto* verdict = app.add_subcommand("verdict", "decide one field/group pair");
  verdict->add_option("-f,--field", field_spec, "field spec: p or p^k")->required();
  verdict->add_option("-g,--group", group_spec, "group spec: Z<d>xZ<d>... or S3|D4|Q8")->required();
  verdict->add_option("--budget", budget, "max candidates for exhaustive search");

  auto* scan = app.add_subcommand("scan", "decide all abelian groups up to an order bound");
  scan->add_option("-f,--field", field_specs, "comma-separated field specs")
      ->required()
      ->delimiter(',');
  scan->add_option("-M", max_order, "maximum group order")->required();
  scan->add_option("--budget", budget, "max candidates for exhaustive search");

  auto* counter = app.add_subcommand(
      "counterexample", "verify the trace identities of the Laurent polynomial z^-1+z^(p-1)");
  counter->add_option("-p", prime, "prime characteristic")->required();
  counter->add_option("-M", max_m, "check tr(f^m)=0 for m=1..M")->required();
  counter->add_option("-k", max_k, "check cofactor traces for k=1..K")->required();
  counter->add_flag("--json", json, "machine-readable output");

  auto* binom = app.add_subcommand("binom", "verify the binomial congruences behind the traces");
  binom->add_option("-p", prime, "prime modulus")->required();
  binom->add_option("-k", max_k, "alternating-sign rows up to p^k-1")->required();
  binom->add_option("-b", max_b, "vanishing binomial(b*p, b) up to b")->required();
  binom->add_flag("--json", json, "machine-readable output");

  auto* subset = app.add_subcommand("subset-sum", "check all nonempty subset sums are nonzero");
  subset->add_option("-p", prime, "prime modulus")->required();
  subset->add_option("-c", coeff_list, "comma-separated coefficients")->required()->delimiter(',');
  subset->add_flag("--json", json, "machine-readable output");

  auto* ortho = app.add_subcommand(
      "orthogonality", "verify the evaluation functional vanishes exactly off the constant");
  ortho->add_option("-f,--field", field_spec, "field spec: p or p^k")->required();
  ortho->add_option("-g,--group", group_spec, "abelian group spec")->required();
  ortho->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(verdict)) return run_verdict(field_spec, group_spec, budget);
    if (app.got_subcommand(scan)) return run_scan(field_specs, max_order, budget);
    if (app.got_subcommand(counter)) return run_counterexample(prime, max_m, max_k, json);
    if (app.got_subcommand(binom)) return run_binom(prime, max_k, max_b, json);
    if (app.got_subcommand(subset)) return run_subset_sum(prime, coeff_list, json);
    if (app.got_subcommand(ortho)) return run_orthogonality(field_spec, group_spec, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
