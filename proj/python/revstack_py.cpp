#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revstack/basis.hpp"
#include "revstack/entringer.hpp"
#include "revstack/io.hpp"
#include "revstack/pairs.hpp"
#include "revstack/series.hpp"
#include "revstack/sorter.hpp"
#include "revstack/tables.hpp"
#include "revstack/verify.hpp"

namespace py = pybind11;
using namespace revstack;

namespace
{

// Big counts cross the boundary as decimal strings; the Python side turns
// them back into ints.
using Cells = std::vector<std::tuple<int, int, int, std::string>>;

Cells cells(const tables::CountTable &table)
{
  Cells out;
  for (const auto &[key, value] : table.entries())
    out.emplace_back(key[0], key[1], key[2], value.str());
  return out;
}

tables::SweepOptions sweep(unsigned workers)
{
  tables::SweepOptions o;
  o.workers = workers;
  return o;
}

series::TruncatedSeries named_series(const std::string &name, int order)
{
  if (name == "wilf")
    return series::wilf_series(order);
  if (name == "mu0" || name == "mu1" || name == "mu2")
    return series::mu_u_series(name[2] - '0', order);
  if (name == "tier0" || name == "tier1" || name == "tier2")
    return series::tier_series(name[4] - '0', order);
  throw std::invalid_argument("unknown series '" + name + "'");
}

basis::Strategy strategy_of(const std::string &name, int tier)
{
  if (name.empty())
    return basis::default_strategy(tier);
  if (name == "exhaustive")
    return basis::Strategy::Exhaustive;
  if (name == "extension")
    return basis::Strategy::Extension;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_revstack, m)
{
  m.doc() = "Reverse-pass stack sorting core";

  py::register_exception<tables::CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<PermutationError>(m, "PermutationError", PyExc_ValueError);
  py::register_exception<series::SeriesError>(m, "SeriesError", PyExc_ValueError);

  m.def("parse", [](const std::string &text) { return parse_permutation(text).vector(); });
  m.def("rev_tier", [](const std::vector<int> &p) { return pairs::rev_tier(Permutation(p).values()); });
  m.def("simulated_tier", [](const std::vector<int> &p) { return sorter::simulated_tier(Permutation(p).values()); });
  m.def("classify", [](const std::vector<int> &p) { return std::string(pairs::to_string(pairs::classify(Permutation(p)))); });
  m.def("machine_sorts", [](const std::vector<int> &p, int k) { return sorter::series_machine_sort(Permutation(p), k).sorted; });

  m.def("tier_json", [](const std::vector<int> &p) {
    const Permutation perm(p);
    return io::tier_json(perm, pairs::profile(perm), sorter::simulated_tier(perm.values())).dump();
  });
  m.def("trace_json", [](const std::vector<int> &p) {
    const Permutation perm(p);
    return io::trace_json(perm, sorter::rev_tier_by_simulation(perm)).dump();
  });
  m.def("machine_json", [](const std::vector<int> &p, int k) {
    const Permutation perm(p);
    return io::machine_json(perm, k, sorter::series_machine_sort(perm, k)).dump();
  });

  m.def("exact_table", [](int max_n, unsigned workers, bool allow_large) {
    auto o = sweep(workers);
    o.allow_large = allow_large;
    return cells(tables::exact_tier_table(max_n, o));
  }, py::arg("max_n"), py::arg("workers") = 0, py::arg("allow_large") = false);
  m.def("cumulative_table", [](int max_n, unsigned workers, bool allow_large) {
    auto o = sweep(workers);
    o.allow_large = allow_large;
    return cells(tables::cumulative_tier_table(max_n, o));
  }, py::arg("max_n"), py::arg("workers") = 0, py::arg("allow_large") = false);
  m.def("refined_counts", [](int max_n, const std::string &source, unsigned workers) {
    const auto r = source == "brute" ? tables::refined_counts_bruteforce(max_n, sweep(workers))
                                     : tables::refined_counts_recurrence(max_n);
    return std::map<std::string, Cells>{{"eta", cells(r.eta)}, {"mu_u", cells(r.mu_up)}, {"mu_d", cells(r.mu_down)}};
  }, py::arg("max_n"), py::arg("source") = "recurrence", py::arg("workers") = 0);

  m.def("basis_json", [](int tier, int max_len, const std::string &strategy, unsigned workers) {
    const auto s = strategy_of(strategy, tier);
    basis::SearchOptions o;
    o.workers = workers;
    return io::basis_json(basis::compute_basis(tier, max_len, s, o), s).dump();
  }, py::arg("tier"), py::arg("max_len"), py::arg("strategy") = "", py::arg("workers") = 0);
  m.def("av_count", [](const std::vector<std::vector<int>> &basis_perms, int max_n, unsigned workers) {
    std::vector<Permutation> b(basis_perms.begin(), basis_perms.end());
    return basis::enumerate_av(b, max_n, workers);
  }, py::arg("basis"), py::arg("max_n"), py::arg("workers") = 0);

  m.def("entringer_json", [](int max_n) { return io::entringer_json(entringer::entringer_table(max_n)).dump(); });
  m.def("family_json", [](int n, unsigned workers) { return io::family_json(entringer::maximal_tier_family(n, workers)).dump(); },
        py::arg("n"), py::arg("workers") = 0);
  m.def("bijection_f", [](const std::vector<int> &p) { return entringer::bijection_f(Permutation(p)).vector(); });
  m.def("bijection_f_inverse", [](const std::vector<int> &p) { return entringer::bijection_f_inverse(Permutation(p)).vector(); });

  m.def("series", [](const std::string &name, int order) {
    const auto s = named_series(name, order);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &c : s.coefficients())
      out.emplace_back(numerator(c).str(), denominator(c).str());
    return out;
  }, py::arg("name"), py::arg("order") = series::default_order);

  m.def("verify", [](const std::string &suite, int max_n, unsigned workers) {
    verify::VerifyOptions o;
    o.max_n = max_n;
    o.workers = workers;
    std::vector<std::tuple<std::string, std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (auto &r : verify::run(suite, o))
        out.emplace_back(r.suite, r.name, r.passed, r.detail);
    }
    return out;
  }, py::arg("suite") = "all", py::arg("max_n") = 9, py::arg("workers") = 0);
}
