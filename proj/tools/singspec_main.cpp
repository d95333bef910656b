// singspec: spectra, monodromy and nearby-fiber classes from the command line.
//
//   singspec sp "x^2+y^3" --vars x,y [--weights 1/2,1/3] [--json]
//   singspec nearby model.json [--variant total|open|local] [--dim n] [--json]
//   singspec check [--json]
//
// Exit codes: 0 success, 1 check failure, 2 invalid input, 3 internal
// consistency failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "singspec/error.hpp"
#include "singspec/parser.hpp"
#include "singspec/report.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

void emit(const singspec::Report& r, bool json) { std::cout << (json ? r.to_json() : r.to_text()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity spectra, monodromy eigenvalues and motivic nearby-fiber classes"};
  app.require_subcommand(1);

  bool json = false;
  std::string poly_text, vars_text, weights_text;
  auto* sp = app.add_subcommand("sp", "Spectrum of a weighted-homogeneous isolated singularity");
  sp->add_option("polynomial", poly_text, "Polynomial, e.g. \"x^2+y^3\"")->required();
  sp->add_option("--vars", vars_text, "Comma-separated variable order, e.g. x,y")->required();
  sp->add_option("--weights", weights_text, "Comma-separated weights, e.g. 1/2,1/3 (inferred if omitted)");
  sp->add_flag("--json", json, "Machine-readable output");

  std::string model_path, variant = "total";
  std::int64_t dim_value = 0;
  auto* nearby = app.add_subcommand("nearby", "Evaluate the motivic nearby fiber of an SNC model file");
  nearby->add_option("model", model_path, "Model file (JSON)")->required();
  nearby->add_option("--variant", variant, "total, open or local")
      ->check(CLI::IsMember({"total", "open", "local"}));
  auto* dim_opt = nearby->add_option("--dim", dim_value, "Dimension n used for the twist t^n (default: the model's n)");
  nearby->add_flag("--json", json, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Run the built-in cross-validation corpus");
  check->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    singspec::Report report;
    if (sp->parsed()) {
      std::optional<singspec::WeightVector> weights;
      if (!weights_text.empty()) weights = singspec::WeightVector::parse(weights_text);
      report.command = "sp";
      report.spectrum = singspec::run_sp(poly_text, singspec::parse_variable_list(vars_text), weights);
    } else if (nearby->parsed()) {
      const singspec::SncModel model = singspec::load_model(model_path);
      report.command = "nearby";
      std::optional<std::int64_t> dim;
      if (dim_opt->count() > 0) dim = dim_value;
      report.nearby = singspec::run_nearby(model, model_path, variant, dim);
      for (const auto& id : report.nearby->missing_components) {
        std::cerr << "warning: MissingStratum: component '" << id << "' appears in no stratum\n";
      }
    } else {
      report.command = "check";
      report.check = singspec::run_check();
      emit(report, json);
      return report.check->ok() ? 0 : kExitCheckFailed;
    }
    emit(report, json);
    return 0;
  } catch (const singspec::ConsistencyFailure& e) {
    std::cerr << "internal error: " << e.kind() << ": " << e.what() << "\n";
    return kExitInternal;
  } catch (const singspec::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitInvalid;
  }
}
