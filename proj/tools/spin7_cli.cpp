// spin7: exact verification of the Spin(7) instanton deformation identities.

#include "spin7/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace spin7;

constexpr int kUsageError = 2;
constexpr int kInputError = 3;

std::string example_key(const std::string &name) {
  std::string k;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c))) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return k;
}

std::vector<GeometryRecord> load_records(const std::string &path) {
  std::vector<GeometryRecord> records = catalog();
  if (path.empty()) return records;
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file '" + path + "'");
  for (auto &g : parse_catalog(in)) records.push_back(std::move(g));
  return records;
}

void print_verdict(std::ostream &os, const RigidityVerdict &v) {
  os << "Scal = " << v.scal << "\n"
     << "lambda_L = " << v.lambda_L << "\n"
     << "threshold = 9 - Scal/4 = " << v.threshold << "\n"
     << "margin = " << v.margin << "\n"
     << "verdict: " << (v.rigid ? "RIGID" : "NOT RIGID") << "\n";
}

int cmd_verify(const std::string &suite, const std::string &format, bool strict) {
  const VerificationReport r = run_verification(suite, strict);
  std::cout << (format == "structured" ? render_structured(r) : render_text(r));
  return r.passed() ? 0 : 1;
}

int cmd_decompose(const std::string &path, const std::vector<int> &requested) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kInputError;
  }
  KForm f(0);
  try {
    f = parse_kform(in);
  } catch (const ParseError &e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kInputError;
  }
  std::vector<int> parts;
  if (f.grade() == 2) parts = {7, 21};
  else if (f.grade() == 3) parts = {8, 48};
  else {
    std::cerr << "error: decompose supports grade 2 or 3, got grade " << f.grade() << "\n";
    return kInputError;
  }
  if (!requested.empty()) {
    for (int p : requested)
      if (std::find(parts.begin(), parts.end(), p) == parts.end()) {
        std::cerr << "error: component " << p << " does not exist for grade " << f.grade() << "\n";
        return kUsageError;
      }
    parts = requested;
  }
  bool first = true;
  for (int p : parts) {
    const KForm c = f.grade() == 2 ? project2(f, static_cast<Lambda2Part>(p)) : project3(f, static_cast<Lambda3Part>(p));
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "# component " << p << "\n# norm_sq " << c.norm_sq() << "\n" << format_kform(c);
  }
  return 0;
}

int cmd_catalog(const std::string &file) {
  const auto records = load_records(file);
  const LeeForm dx1(KForm::dx(1));
  const Rational pointwise = torsion_from_lee(dx1).T.norm_sq() / dx1.form().norm_sq();
  for (const auto &g : records) {
    const RigidityVerdict v = flat_verdict(g);
    std::cout << g.name << ": |theta|^2 = " << g.theta_norm_sq << ", |T|^2 = " << g.torsion_norm_sq
              << ", delta theta = " << g.delta_theta << ", Scal = " << v.scal;
    if (g.expected_scal) std::cout << " (expected " << *g.expected_scal << ")";
    std::cout << ", margin = " << v.margin << ", " << (v.rigid ? "RIGID" : "NOT RIGID") << "\n";
  }
  std::cout << "pointwise |T|^2/|theta|^2 from T = -(7/6)*(theta^Phi): " << pointwise << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact Spin(7) instanton deformation checks"};
  app.require_subcommand(1);

  std::string suite = "all", format = "text";
  bool strict = false;
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all|clifford|cayley|spinor|torsion|rigidity")
      ->check(CLI::IsMember({"all", "clifford", "cayley", "spinor", "torsion", "rigidity"}));
  verify->add_option("--format", format, "text|structured")->check(CLI::IsMember({"text", "structured"}));
  verify->add_flag("--strict-paper", strict, "Treat normalization mismatches as failures");

  std::string input;
  std::vector<int> components;
  auto *decompose = app.add_subcommand("decompose", "Split a 2-form (7+21) or 3-form (8+48)");
  decompose->add_option("file", input, "KForm document")->required();
  decompose->add_option("--components", components, "Subset of components, e.g. 7,21")->delimiter(',');

  std::string example, scal, lambda, theta2, t2, dtheta, catalog_file;
  auto *rigidity = app.add_subcommand("rigidity", "Evaluate the rigidity condition");
  auto *opt_example = rigidity->add_option("--example", example, "Catalog entry (su3, sp2t2, or a user record)");
  auto *opt_scal = rigidity->add_option("--scal", scal, "Scalar curvature p/q");
  auto *opt_lambda = rigidity->add_option("--lambda", lambda, "Smallest eigenvalue of the curvature operator p/q");
  auto *opt_theta2 = rigidity->add_option("--theta2", theta2, "|theta|^2 p/q");
  auto *opt_t2 = rigidity->add_option("--t2", t2, "|T|^2 p/q");
  auto *opt_dtheta = rigidity->add_option("--dtheta", dtheta, "delta theta p/q");
  rigidity->add_option("--catalog", catalog_file, "Additional catalog file");

  std::string catalog_in;
  auto *cat = app.add_subcommand("catalog", "List homogeneous examples and their verdicts");
  cat->add_option("--file", catalog_in, "Additional catalog file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) return cmd_verify(suite, format, strict);
    if (*decompose) return cmd_decompose(input, components);
    if (*cat) return cmd_catalog(catalog_in);
    if (*rigidity) {
      const bool by_example = opt_example->count() > 0;
      const bool by_scal = opt_scal->count() > 0;
      const bool by_norms = opt_theta2->count() + opt_t2->count() + opt_dtheta->count() > 0;
      if (by_example + by_scal + by_norms != 1) {
        std::cerr << "error: choose exactly one of --example, --scal, or --theta2/--t2/--dtheta\n";
        return kUsageError;
      }
      const Rational lam = opt_lambda->count() ? Rational::parse(lambda) : Rational(0);
      if (by_scal) {
        if (!opt_lambda->count()) {
          std::cerr << "error: --scal requires --lambda\n";
          return kUsageError;
        }
        print_verdict(std::cout, rigidity_verdict(lam, Rational::parse(scal)));
        return 0;
      }
      if (by_norms) {
        if (!opt_theta2->count() || !opt_t2->count() || !opt_dtheta->count()) {
          std::cerr << "error: --theta2, --t2 and --dtheta must be given together\n";
          return kUsageError;
        }
        const Rational s = scalar_curvature(Rational::parse(theta2), Rational::parse(t2), Rational::parse(dtheta));
        print_verdict(std::cout, rigidity_verdict(lam, s));
        return 0;
      }
      for (const auto &g : load_records(catalog_file))
        if (example_key(g.name) == example_key(example)) {
          std::cout << "example: " << g.name << "\n";
          print_verdict(std::cout, rigidity_verdict(lam, scalar_curvature(g.theta_norm_sq, g.torsion_norm_sq, g.delta_theta)));
          return 0;
        }
      std::cerr << "error: unknown example '" << example << "'\n";
      return kUsageError;
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
