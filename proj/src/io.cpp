#include "revstack/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace revstack::io
{

namespace
{

int column_count(const tables::CountTable &table)
{
  return std::max(table.max_n() - 1, 1);
}

/// Last tier column filled for row n.
int last_column(const tables::CountTable &table, int n)
{
  if (table.kind() == tables::TableKind::CumulativeTier)
    return column_count(table) - 1;
  return std::max(n - 2, 0);
}

std::string column_label(tables::TableKind kind, int t)
{
  return (kind == tables::TableKind::CumulativeTier ? "t<=" : "t=") + std::to_string(t);
}

Json sequence(std::span<const int> values)
{
  return Json(std::vector<int>(values.begin(), values.end()));
}

Json state_json(const sorter::SeriesMachineState &state)
{
  Json stacks = Json::array();
  for (const auto &s : state.stacks)
    stacks.push_back(sequence(s));
  return Json{{"input", sequence(state.input)}, {"stacks", stacks}, {"output", sequence(state.output)}};
}

Json refined_entries(const tables::CountTable &table)
{
  Json out = Json::array();
  for (const auto &[key, value] : table.entries())
    out.push_back(Json{{"n", key[0]}, {"t", key[1]}, {"k", key[2]}, {"count", big(value)}});
  return out;
}

} // namespace

Json big(const BigInt &value)
{
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Json rational(const Rational &value)
{
  if (boost::multiprecision::denominator(value) == 1)
    return big(boost::multiprecision::numerator(value));
  return value.str();
}

Json permutation(const Permutation &perm)
{
  return perm.to_string();
}

Json tier_json(const Permutation &perm, const pairs::SeparatedPairProfile &profile, int simulated_tier)
{
  std::string orient;
  for (auto o : profile.orientations)
    orient.push_back(pairs::to_char(o));
  return Json{{"schema", schema::tier},
              {"permutation", permutation(perm)},
              {"tier", profile.tier},
              {"simulated_tier", simulated_tier},
              {"class", pairs::to_string(profile.class_label)},
              {"orientations", orient},
              {"witness", profile.witness_sequence}};
}

Json trace_json(const Permutation &perm, const sorter::SortTrace &trace)
{
  Json passes = Json::array();
  for (const auto &p : trace.passes)
    passes.push_back(Json{{"input", sequence(p.input_at_start)},
                          {"emitted", sequence(p.emitted)},
                          {"residual_stack", sequence(p.residual_stack_bottom_to_top)}});
  Json steps = Json::array();
  for (const auto &s : trace.steps)
    steps.push_back(Json{{"pass", s.pass},
                         {"action", sorter::to_string(s.action)},
                         {"value", s.value},
                         {"output", sequence(s.output)},
                         {"stack", sequence(s.stack)},
                         {"input", sequence(s.input)}});
  return Json{{"schema", schema::trace},
              {"permutation", permutation(perm)},
              {"tier", trace.tier},
              {"sorted", trace.sorted},
              {"final_output", sequence(trace.final_output)},
              {"passes", passes},
              {"steps", steps}};
}

Json machine_json(const Permutation &perm, int num_stacks, const sorter::SeriesResult &result)
{
  Json steps = Json::array();
  for (const auto &s : result.trace)
    steps.push_back(Json{{"action", sorter::to_string(s.action)},
                         {"value", s.value},
                         {"from", s.from},
                         {"to", s.to},
                         {"state", state_json(s.state)}});
  return Json{{"schema", schema::machine},
              {"permutation", permutation(perm)},
              {"stacks", num_stacks},
              {"sorted", result.sorted},
              {"steps", steps}};
}

Json table_json(const tables::CountTable &table)
{
  Json columns = Json::array();
  for (int t = 0; t < column_count(table); ++t)
    columns.push_back(column_label(table.kind(), t));
  Json rows = Json::array();
  for (int n = 1; n <= table.max_n(); ++n) {
    Json counts = Json::array();
    for (int t = 0; t <= last_column(table, n); ++t)
      counts.push_back(big(table.at(n, t)));
    rows.push_back(Json{{"n", n}, {"counts", counts}});
  }
  return Json{{"schema", schema::table},
              {"kind", tables::to_string(table.kind())},
              {"max_n", table.max_n()},
              {"columns", columns},
              {"rows", rows}};
}

Json refined_json(const tables::RefinedCounts &counts, const std::string &source)
{
  return Json{{"schema", schema::refined},
              {"kind", "refined"},
              {"source", source},
              {"max_n", counts.max_n},
              {"eta", refined_entries(counts.eta)},
              {"mu_u", refined_entries(counts.mu_up)},
              {"mu_d", refined_entries(counts.mu_down)}};
}

Json basis_json(const basis::BasisReport &report, basis::Strategy strategy)
{
  Json by_length = Json::object();
  for (const auto &[len, perms] : report.elements_by_length) {
    Json list = Json::array();
    for (const auto &p : perms)
      list.push_back(permutation(p));
    by_length[std::to_string(len)] = list;
  }
  return Json{{"schema", schema::basis},
              {"tier_bound", report.tier_bound},
              {"search_bound", report.search_bound},
              {"length_bound", basis::length_bound(report.tier_bound)},
              {"complete", report.complete},
              {"strategy", basis::to_string(strategy)},
              {"size", report.size()},
              {"elements_by_length", by_length}};
}

Json entringer_json(const entringer::EntringerTable &table)
{
  Json rows = Json::array();
  for (int n = 1; n <= table.max_n; ++n) {
    Json entries = Json::array();
    for (int k = 1; k <= n; ++k)
      entries.push_back(big(table.at(n, k)));
    rows.push_back(Json{{"n", n}, {"entries", entries}, {"sum", big(table.row_sums[static_cast<std::size_t>(n)])}});
  }
  return Json{{"schema", schema::entringer}, {"max_n", table.max_n}, {"rows", rows}};
}

Json family_json(const entringer::MaximalTierFamily &family)
{
  Json by_k = Json::object();
  for (const auto &[k, members] : family.members_by_k) {
    Json list = Json::array();
    for (const auto &p : members)
      list.push_back(permutation(p));
    by_k[std::to_string(k)] = list;
  }
  return Json{{"schema", schema::family}, {"n", family.n}, {"size", family.size()}, {"members_by_k", by_k}};
}

Json series_json(const std::string &name, const series::TruncatedSeries &s)
{
  Json coefficients = Json::array();
  for (const auto &c : s.coefficients())
    coefficients.push_back(rational(c));
  return Json{{"schema", schema::series}, {"name", name}, {"order", s.order()}, {"coefficients", coefficients}};
}

std::string table_csv(const tables::CountTable &table)
{
  std::ostringstream out;
  out << 'n';
  const int columns = column_count(table);
  for (int t = 0; t < columns; ++t)
    out << ',' << column_label(table.kind(), t);
  out << '\n';
  for (int n = 1; n <= table.max_n(); ++n) {
    out << n;
    const int last = last_column(table, n);
    for (int t = 0; t <= last; ++t)
      out << ',' << table.at(n, t);
    for (int t = last + 1; t < columns; ++t)
      out << ',';
    out << '\n';
  }
  return out.str();
}

std::string refined_csv(const tables::RefinedCounts &counts)
{
  std::ostringstream out;
  out << "kind,n,t,k,count\n";
  auto emit = [&](const char *kind, const tables::CountTable &table) {
    for (const auto &[key, value] : table.entries())
      out << kind << ',' << key[0] << ',' << key[1] << ',' << key[2] << ',' << value << '\n';
  };
  emit("eta", counts.eta);
  emit("mu_u", counts.mu_up);
  emit("mu_d", counts.mu_down);
  return out.str();
}

std::string basis_text(const basis::BasisReport &report)
{
  std::ostringstream out;
  for (const auto &p : report.elements())
    out << p.to_string() << '\n';
  return out.str();
}

std::string series_text(const series::TruncatedSeries &s)
{
  std::ostringstream out;
  for (int n = 0; n <= s.order(); ++n)
    out << n << ": " << s[n] << '\n';
  return out.str();
}

std::string table_text(const tables::CountTable &table)
{
  const int columns = column_count(table);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n"};
  for (int t = 0; t < columns; ++t)
    header.push_back(column_label(table.kind(), t));
  cells.push_back(header);
  for (int n = 1; n <= table.max_n(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int t = 0; t <= last_column(table, n); ++t)
      row.push_back(table.at(n, t).str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(columns) + 1, 0);
  for (const auto &row : cells)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto &row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0)
        line += "  ";
      line += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    out << line << '\n';
  }
  return out.str();
}

} // namespace revstack::io
