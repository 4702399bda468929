#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>

#include "bohr/bohr_sum.hpp"
#include "bohr/dilatation.hpp"
#include "bohr/extremal_maps.hpp"
#include "bohr/pairing.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/selfcheck.hpp"
#include "bohr/subordination.hpp"

namespace py = pybind11;
using bohr::Complex;

namespace {

bohr::RadiusProblem make_problem(const std::string& theorem, double K, double k, int n, double a) {
  bohr::RadiusProblem p{bohr::parse_radius_id(theorem), K, k, n, a};
  p.validate();
  return p;
}

bohr::NamedMap make_named(const std::string& map, std::optional<double> k, std::size_t order,
                          const bohr::RadiusProblem* p = nullptr) {
  bohr::NamedMap spec{bohr::parse_map_id(map), k, order};
  if (bohr::needs_parameter(spec.name) && !spec.k && p && p->uses_K()) spec.k = p->dilatation_bound();
  spec.validate();
  return spec;
}

std::vector<Complex> to_vector(const bohr::PowerSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

py::dict certificate(const bohr::RootCertificate& c) {
  py::dict d;
  d["theorem"] = std::string(bohr::radius_id(c.problem->kind));
  d["root"] = c.root;
  d["lo"] = c.lo;
  d["hi"] = c.hi;
  d["residual"] = c.residual;
  d["iterations"] = c.iterations;
  d["monotone_checked"] = c.monotone_checked;
  return d;
}

py::dict profile(const bohr::BohrProfile& p) {
  py::dict d;
  d["map_id"] = p.map_id;
  d["bound"] = p.bound;
  d["r_grid"] = p.r_grid;
  d["partial_sums"] = p.partial_sums;
  d["tail_bounds"] = p.tail_bounds;
  d["verdicts"] = p.verdicts;
  d["all_pass"] = p.all_pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_bohr, m) {
  m.doc() = "Bohr radius computations for analytic and harmonic maps of the unit disc";

  py::register_exception<bohr::BracketError>(m, "BracketError", PyExc_RuntimeError);

  m.def("radius_ids", [] {
    std::vector<std::string> ids;
    for (auto k : bohr::all_radius_kinds()) ids.emplace_back(bohr::radius_id(k));
    return ids;
  });
  m.def("map_ids", [] {
    std::vector<std::string> ids;
    for (auto k : bohr::all_maps()) ids.emplace_back(bohr::map_id(k));
    return ids;
  });

  m.def(
      "solve_radius",
      [](const std::string& theorem, double K, double k, int n, double a, double tol) {
        return certificate(bohr::solve_radius(make_problem(theorem, K, k, n, a), {tol}));
      },
      py::arg("theorem"), py::arg("K") = 1.0, py::arg("k") = 1.0, py::arg("n") = 1, py::arg("a") = 0.0,
      py::arg("tol") = 1e-13, "Radius and its root certificate.");

  m.def(
      "radius_table",
      [](int max_n) {
        std::vector<double> radii;
        for (int n = 1; n <= max_n; ++n) radii.push_back(bohr::solve_radius(bohr::RadiusProblem::unit_monomial(n)).root);
        return radii;
      },
      py::arg("max_n") = 4, "Radii of the unit monomial dilatation family for n = 1..max_n.");

  m.def(
      "majorant_value",
      [](const std::string& theorem, double r, double K, double k, int n, double a) {
        return bohr::majorant_value(make_problem(theorem, K, k, n, a), r);
      },
      py::arg("theorem"), py::arg("r"), py::arg("K") = 1.0, py::arg("k") = 1.0, py::arg("n") = 1, py::arg("a") = 0.0);

  m.def(
      "closed_form_radius",
      [](const std::string& theorem, double K) { return bohr::closed_form_radius(make_problem(theorem, K, 1.0, 1, 0.0)); },
      py::arg("theorem"), py::arg("K") = 1.0);

  m.def(
      "map_coefficients",
      [](const std::string& map, std::optional<double> k, std::size_t order) {
        const bohr::HarmonicMap f = bohr::make_map(make_named(map, k, order));
        return py::make_tuple(to_vector(f.h()), to_vector(f.g()));
      },
      py::arg("map"), py::arg("k") = py::none(), py::arg("order") = 2000, "Coefficient lists (h, g).");

  m.def(
      "bohr_partial_sum",
      [](const std::string& map, double r, std::optional<double> k, std::size_t order) {
        const bohr::NamedMap spec = make_named(map, k, order);
        const bohr::PartialSum s = bohr::bohr_partial_sum(bohr::make_map(spec), r, order, bohr::tail_constant(spec.name));
        return py::make_tuple(s.sum, s.tail);
      },
      py::arg("map"), py::arg("r"), py::arg("k") = py::none(), py::arg("order") = 2000,
      "(partial sum, tail bound) of the Bohr majorant series.");

  m.def(
      "verify",
      [](const std::string& map, const std::string& theorem, double K, double k, int n, double a,
         std::optional<double> map_k, double margin, int grid, std::optional<double> bound, std::size_t order) {
        const bohr::RadiusProblem p = make_problem(theorem, K, k, n, a);
        const bohr::Pairing pairing{make_named(map, map_k, order, &p), p};
        bohr::VerifyOptions opt;
        opt.margin = margin;
        opt.grid_size = grid;
        opt.bound = bound;
        opt.tail_constant = bohr::tail_constant(pairing.map.name);
        opt.map_id = map;
        return profile(bohr::verify_inequality(bohr::build_map(pairing), p, opt));
      },
      py::arg("map"), py::arg("theorem"), py::arg("K") = 1.0, py::arg("k") = 1.0, py::arg("n") = 1, py::arg("a") = 0.0,
      py::arg("map_k") = py::none(), py::arg("margin") = 1e-3, py::arg("grid") = 256, py::arg("bound") = py::none(),
      py::arg("order") = 2000);

  m.def(
      "sharpness",
      [](const std::string& map, const std::string& theorem, double epsilon, double K, double k, int n, double a,
         std::optional<double> map_k) {
        const bohr::RadiusProblem p = make_problem(theorem, K, k, n, a);
        const bohr::Pairing pairing{make_named(map, map_k, 2000, &p), p};
        if (!bohr::is_extremal(pairing)) throw std::invalid_argument("the map is not extremal for this statement");
        return bohr::sharpness_scan(bohr::build_map(pairing), p, epsilon, std::nullopt,
                                    bohr::tail_constant(pairing.map.name));
      },
      py::arg("map"), py::arg("theorem"), py::arg("epsilon") = 0.01, py::arg("K") = 1.0, py::arg("k") = 1.0,
      py::arg("n") = 1, py::arg("a") = 0.0, py::arg("map_k") = py::none(),
      "Bohr sum just above the radius minus the bound.");

  m.def(
      "image_curve",
      [](const std::string& map, double r, int samples, std::optional<double> k) {
        const bohr::NamedMap spec = make_named(map, k, 1);
        if (samples < 64) throw std::invalid_argument("image curves need at least 64 samples");
        std::vector<Complex> pts;
        for (int j = 0; j < samples; ++j)
          pts.push_back(bohr::closed_form_eval(spec, std::polar(r, 2.0 * std::numbers::pi * j / samples)));
        return pts;
      },
      py::arg("map"), py::arg("r"), py::arg("samples") = 512, py::arg("k") = py::none());

  m.def(
      "boundary_reach",
      [](const std::string& map, double r, int samples, std::optional<double> k) {
        const bohr::BoundaryReach b = bohr::boundary_reach(make_named(map, k, 1), r, samples);
        return py::make_tuple(b.max_mod, b.min_mod);
      },
      py::arg("map"), py::arg("r"), py::arg("samples") = 512, py::arg("k") = py::none(), "(max |f|, min |f|) on |z| = r.");

  m.def(
      "g_from_monomial",
      [](const std::vector<Complex>& h, double k, double theta, int n) {
        return to_vector(bohr::g_from_monomial(bohr::PowerSeries(h), {k, theta, n}));
      },
      py::arg("h"), py::arg("k"), py::arg("theta") = 0.0, py::arg("n") = 1);

  m.def(
      "g_from_mobius",
      [](const std::vector<Complex>& h, double a, bool minus) {
        return to_vector(bohr::g_from_mobius(bohr::PowerSeries(h), {a, minus}));
      },
      py::arg("h"), py::arg("a"), py::arg("minus") = false);

  m.def(
      "domination_campaign",
      [](int cases, std::uint64_t base_seed, std::size_t order) {
        py::list out;
        for (const auto& e : bohr::run_domination_campaign({cases, base_seed, order})) {
          py::dict d;
          d["seed"] = e.seed;
          d["map"] = e.map_id;
          d["psi"] = e.psi;
          d["worst_margin"] = e.worst_margin;
          out.append(d);
        }
        return out;
      },
      py::arg("cases") = 200, py::arg("base_seed") = 1, py::arg("order") = 200);

  m.def(
      "selfcheck",
      [](bool quick) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : bohr::run_selfcheck({quick, false})) out.emplace_back(c.name, c.passed, c.detail);
        return out;
      },
      py::arg("quick") = true, "List of (name, passed, detail).");
}
