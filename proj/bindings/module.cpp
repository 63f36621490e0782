// pybind11 module exposing the main workbench operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threeweight/codes.hpp"
#include "threeweight/codespec.hpp"
#include "threeweight/field.hpp"
#include "threeweight/quadform.hpp"
#include "threeweight/report.hpp"

namespace py = pybind11;

namespace {

using namespace threeweight;

py::object json_to_py(const nlohmann::ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

struct Built {
  CodeSpec spec;
  std::unique_ptr<FieldTower> tower;  // heap: QuadSpace keeps its address
  std::unique_ptr<QuadSpace> space;
};

Built build(int p, int m, int k, bool allow_unsupported = false) {
  Built b;
  b.spec = validate(p, m, k, allow_unsupported);
  b.tower = FieldTower::build_unique(b.spec.p, b.spec.m, b.spec.e);
  b.space = std::make_unique<QuadSpace>(*b.tower);
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "verification workbench for a family of three-weight p-ary cyclic codes";
  mod.attr("__version__") = "0.1.0";

  py::register_exception<Error>(mod, "WorkbenchError");

  mod.def(
      "analyze",
      [](int p, int m, int k, std::int64_t budget, bool brute_force_only, bool skip_dual,
         int threads) {
        AnalyzeOptions opt;
        opt.pair_budget = budget;
        opt.brute_force_only = brute_force_only;
        opt.skip_dual = skip_dual;
        opt.threads = threads;
        const AnalysisOutcome out = run_analysis(p, m, k, opt);
        py::dict d;
        d["report"] = json_to_py(out.report);
        d["exit_code"] = out.exit_code;
        d["match"] = out.match.has_value() ? py::cast(*out.match) : py::none();
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("budget") = 531441,
      py::arg("brute_force_only") = false, py::arg("skip_dual") = false, py::arg("threads") = 0,
      "Run the full analysis pipeline and return the JSON report as a dict.");

  mod.def(
      "validate",
      [](int p, int m, int k) {
        const CodeSpec spec = validate(p, m, k);
        py::dict d;
        d["p"] = spec.p;
        d["m"] = spec.m;
        d["k"] = spec.k;
        d["e"] = spec.e;
        d["s"] = spec.s;
        d["q"] = spec.q;
        d["n"] = spec.n;
        d["dim"] = spec.dim;
        d["u"] = spec.u;
        d["regime"] = regime_name(spec.regime);
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("k"),
      "Validate a parameter triple and return the derived constants.");

  mod.def(
      "predicted_distribution",
      [](int p, int m, int k) {
        return predicted_distribution(validate(p, m, k)).entries;
      },
      py::arg("p"), py::arg("m"), py::arg("k"),
      "Closed-form weight distribution as a dict weight -> count.");

  mod.def(
      "enumerate_distribution",
      [](int p, int m, int k, std::int64_t budget, bool brute_force_only, int threads) {
        Built b = build(p, m, k, brute_force_only);
        EnumerateOptions opt;
        opt.pair_budget = budget;
        opt.brute_force_only = brute_force_only;
        opt.threads = threads;
        return enumerate_distribution(b.spec, *b.tower, *b.space, opt).entries;
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("budget") = 531441,
      py::arg("brute_force_only") = false, py::arg("threads") = 0,
      "Exact enumerated weight distribution as a dict weight -> count.");

  mod.def(
      "value_distribution",
      [](int p, int m, int k, int threads) {
        Built b = build(p, m, k);
        const ValueDistribution vd = value_distribution(b.spec, *b.space, threads);
        py::dict d;
        d["counts"] = vd.counts;
        d["first_moment"] = vd.first_moment;
        d["second_moment"] = vd.second_moment;
        d["kind"] = b.spec.regime == Regime::KeEvenEOdd ? "S" : "T";
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("threads") = 0,
      "Value distribution of the character sums over all (a, b) pairs.");

  mod.def(
      "intersection_set_counts",
      [](int p, int m, int k) {
        Built b = build(p, m, k);
        const auto counts = intersection_set_counts(b.spec, *b.space);
        return std::vector<std::int64_t>(counts.begin(), counts.end());
      },
      py::arg("p"), py::arg("m"), py::arg("k"),
      "Cardinalities of the four second-moment solution sets.");

  mod.def(
      "s_sum",
      [](int p, int m, int k, std::int64_t a, std::int64_t b) {
        Built built = build(p, m, k);
        return s_sum(built.spec, *built.space, static_cast<Code>(a), static_cast<Code>(b));
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("a"), py::arg("b"),
      "S(a, b) with a and b given as element codes in [0, p^m).");

  mod.def(
      "t_sum",
      [](int p, int m, int k, std::int64_t a, std::int64_t b) {
        Built built = build(p, m, k);
        return t_sum(built.spec, *built.space, static_cast<Code>(a), static_cast<Code>(b));
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("a"), py::arg("b"),
      "T(a, b) with a and b given as element codes in [0, p^m).");

  mod.def(
      "dual_certify",
      [](int p, int m, int k, std::int64_t n_budget) {
        const CodeSpec spec = validate(p, m, k);
        const FieldTower tower = FieldTower::build(spec.p, spec.m, spec.e);
        const DualCertificate cert = dual_min_distance_certify(spec, tower, n_budget);
        py::dict d;
        d["n"] = cert.n;
        d["dim"] = cert.dim;
        d["d"] = cert.d;
        d["witness_positions"] = cert.witness_positions;
        d["witness_coeffs"] = cert.witness_coeffs;
        d["packing_bound"] = cert.packing_bound;
        d["optimal"] = cert.optimal;
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("k"), py::arg("n_budget") = 20000,
      "Certify the dual minimum distance and return the witness.");

  mod.def(
      "code_polynomials",
      [](int p, int m, int k) {
        const CodeSpec spec = validate(p, m, k);
        const FieldTower tower = FieldTower::build(spec.p, spec.m, spec.e);
        const CodePolynomials cp = code_polynomials(spec, tower);
        py::dict d;
        d["modulus"] = tower.modulus().to_string();
        d["h1"] = cp.h1.to_string();
        d["h2"] = cp.h2.to_string();
        d["h"] = cp.h.to_string();
        d["g"] = cp.g.to_string();
        d["dual_generator"] = dual_generator(cp.h, spec.n).to_string();
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("k"),
      "Minimal, parity-check, generator and dual generator polynomials "
      "as coefficient strings (low degree first).");

  mod.def("sphere_packing_max_d", &sphere_packing_max_d, py::arg("n"), py::arg("dim"),
          py::arg("p"), "Largest minimum distance allowed by the sphere-packing bound.");
}
