#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "permsieve/acceptance.hpp"
#include "permsieve/cache.hpp"
#include "permsieve/csp.hpp"
#include "permsieve/report.hpp"
#include "permsieve/scan.hpp"

namespace py = pybind11;
using namespace permsieve;

namespace {

Permutation to_perm(const std::vector<int>& entries) { return Permutation(entries); }

std::vector<int> to_list(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

py::dict poly_dict(const IntPolynomial& f) {
  py::dict d;
  d["offset"] = f.min_exponent();
  d["coeffs"] = f.raw_coeffs();
  d["text"] = f.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_permsieve, m) {
  m.doc() = "Exact cyclic sieving checks over S_n";

  static py::exception<Error> exc(m, "PermsieveError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("stat_keys", [] {
    std::vector<std::string> keys;
    for (const auto& s : stat_registry()) keys.push_back(s.key);
    return keys;
  });
  m.def("map_keys", [] {
    std::vector<std::string> keys;
    for (const auto& d : map_registry()) keys.push_back(d.key);
    return keys;
  });

  m.def("parse", [](const std::string& text) { return to_list(parse_permutation(text)); }, py::arg("text"));

  m.def(
      "stat_eval", [](const std::string& key, const std::vector<int>& perm) { return evaluate(find_stat(key), to_perm(perm)); },
      py::arg("key"), py::arg("perm"));

  m.def(
      "stat_gf",
      [](const std::string& key, int n, int workers) {
        std::optional<IntPolynomial> f;
        {
          py::gil_scoped_release release;
          f = generating_function(find_stat(key), n, workers);
        }
        return poly_dict(*f);
      },
      py::arg("key"), py::arg("n"), py::arg("workers") = 1);

  m.def(
      "map_apply",
      [](const std::string& key, const std::vector<int>& perm) { return to_list(find_map(key).apply(to_perm(perm))); },
      py::arg("key"), py::arg("perm"));

  m.def(
      "map_orbits",
      [](const std::string& key, int n) {
        const OrbitDecomposition d = decompose(find_map(key), n);
        py::dict out;
        out["order"] = d.order;
        out["sizes"] = d.size_counts;
        out["signature"] = orbit_signature(d);
        out["fixed"] = fixed_counts(d);
        return out;
      },
      py::arg("key"), py::arg("n"));

  m.def(
      "csp_check",
      [](const std::string& stat, const std::string& map, int n) {
        return to_json(csp_check(find_stat(stat), find_map(map), n)).dump();
      },
      py::arg("stat"), py::arg("map"), py::arg("n"),
      "JSON text of the verdict: holds, table, gf, residues, witnesses, signature.");

  m.def(
      "equidistributed",
      [](const std::string& a, const std::string& b, int n) { return equidistribution(find_stat(a), find_stat(b), n); },
      py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "q_minus_one", [](const std::string& key, int n) { return q_minus_one(find_stat(key), n); }, py::arg("key"),
      py::arg("n"));

  m.def(
      "scan",
      [](int n_min, int n_max, std::vector<std::string> stats, std::vector<std::string> maps, int workers,
         std::optional<std::string> cache_dir, const std::string& format) {
        py::gil_scoped_release release;
        std::optional<Cache> cache;
        if (cache_dir) cache.emplace(*cache_dir);
        const ScanReport r = scan(n_min, n_max, {std::move(stats), std::move(maps)}, {workers, cache ? &*cache : nullptr});
        return render(r, parse_format(format));
      },
      py::arg("n_min") = 4, py::arg("n_max") = 6, py::arg("stats") = std::vector<std::string>{},
      py::arg("maps") = std::vector<std::string>{}, py::arg("workers") = 1, py::arg("cache_dir") = py::none(),
      py::arg("format") = "json");

  m.def(
      "run_criterion",
      [](int id) {
        CriterionResult r;
        {
          py::gil_scoped_release release;
          r = run_criterion(id);
        }
        return py::make_tuple(r.pass, r.title, r.notes);
      },
      py::arg("id"));
}
