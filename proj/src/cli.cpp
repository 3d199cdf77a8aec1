#include "revstack/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string_view>

#include <CLI11.hpp>

#include "revstack/io.hpp"
#include "revstack/sweep.hpp"
#include "revstack/verify.hpp"

namespace revstack::cli
{

namespace
{

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class Format
{
  Text,
  Json,
  Csv,
};

void add_format(CLI::App *cmd, Format &format, bool csv = false)
{
  std::map<std::string, Format> allowed{{"text", Format::Text}, {"json", Format::Json}};
  if (csv)
    allowed.emplace("csv", Format::Csv);
  cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(allowed, CLI::ignore_case));
}

void print_json(std::ostream &out, const io::Json &doc)
{
  out << doc.dump(2) << '\n';
}

struct Config
{
  unsigned workers = 0;
  Format format = Format::Text;
  std::string perm_text;
  std::vector<std::string> perm_texts;
  std::string which;
  int max_n = 0;
  int tier = 0;
  int stacks = 1;
  int order = series::default_order;
  int n = 0;
  std::optional<int> k;
  std::string strategy;
  std::string source = "recurrence";
  bool allow_large = false;
  bool long_running = false;
};

Permutation parse_arg(const std::string &text)
{
  return parse_permutation(text);
}

int cmd_tier(const Config &c, std::ostream &out)
{
  const auto perm = parse_arg(c.perm_text);
  if (c.format == Format::Json) {
    print_json(out, io::tier_json(perm, pairs::profile(perm), sorter::simulated_tier(perm.values())));
    return 0;
  }
  out << pairs::rev_tier(perm.values()) << '\n';
  return 0;
}

int cmd_trace(const Config &c, std::ostream &out)
{
  const auto perm = parse_arg(c.perm_text);
  const auto trace = sorter::rev_tier_by_simulation(perm);
  if (c.format == Format::Json)
    print_json(out, io::trace_json(perm, trace));
  else
    out << sorter::render_trace_text(trace);
  return 0;
}

int cmd_machine(const Config &c, std::ostream &out)
{
  const auto perm = parse_arg(c.perm_text);
  if (c.stacks < 1)
    throw UsageError("--stacks must be at least 1");
  const auto result = sorter::series_machine_sort(perm, c.stacks);
  if (c.format == Format::Json)
    print_json(out, io::machine_json(perm, c.stacks, result));
  else
    out << sorter::render_series_text(result);
  return 0;
}

int cmd_table(const Config &c, std::ostream &out, std::ostream &err)
{
  tables::SweepOptions opt;
  opt.workers = c.workers;
  opt.allow_large = c.allow_large;
  if (c.allow_large)
    opt.progress = [&err](int n) { err << "sweeping n = " << n << '\n'; };

  if (c.which == "refined") {
    tables::RefinedCounts counts;
    if (c.source == "recurrence") {
      if (c.max_n < 1)
        throw UsageError("--max-n must be positive");
      counts = tables::refined_counts_recurrence(c.max_n);
    } else {
      counts = tables::refined_counts_bruteforce(c.max_n, opt);
    }
    if (c.format == Format::Json)
      print_json(out, io::refined_json(counts, c.source));
    else
      out << io::refined_csv(counts);
    return 0;
  }

  const auto exact = tables::exact_tier_table(c.max_n, opt);
  const auto table = c.which == "exact" ? exact : tables::cumulative_from_exact(exact);
  switch (c.format) {
  case Format::Json:
    print_json(out, io::table_json(table));
    break;
  case Format::Csv:
    out << io::table_csv(table);
    break;
  case Format::Text:
    out << io::table_text(table);
    break;
  }
  return 0;
}

int cmd_basis(const Config &c, std::ostream &out, std::ostream &err)
{
  basis::Strategy strategy = basis::default_strategy(c.tier);
  if (c.strategy == "exhaustive")
    strategy = basis::Strategy::Exhaustive;
  else if (c.strategy == "extension")
    strategy = basis::Strategy::Extension;
  basis::SearchOptions opt;
  opt.workers = c.workers;
  opt.long_running = c.long_running;
  if (c.long_running)
    opt.progress = [&err](int length, std::size_t members) {
      err << "length " << length << " from " << members << " class members\n";
    };
  const int max_len = c.max_n > 0 ? c.max_n : std::min(basis::length_bound(c.tier), basis::default_search_cap);
  const auto report = basis::compute_basis(c.tier, max_len, strategy, opt);
  if (c.format == Format::Json) {
    print_json(out, io::basis_json(report, strategy));
  } else {
    out << io::basis_text(report);
    if (!report.complete)
      err << "incomplete: searched lengths <= " << report.search_bound << ", elements may have length up to "
          << basis::length_bound(report.tier_bound) << '\n';
  }
  return 0;
}

int cmd_av_count(const Config &c, std::ostream &out)
{
  std::vector<Permutation> basis_perms;
  for (const auto &t : c.perm_texts)
    basis_perms.push_back(parse_arg(t));
  const auto counts = basis::enumerate_av(basis_perms, c.max_n, c.workers);
  if (c.format == Format::Json) {
    io::Json basis_json = io::Json::array();
    for (const auto &p : basis_perms)
      basis_json.push_back(p.to_string());
    print_json(out, io::Json{{"schema", io::schema::av_count}, {"basis", basis_json}, {"counts", counts}});
    return 0;
  }
  for (std::size_t n = 0; n < counts.size(); ++n)
    out << n << ": " << counts[n] << '\n';
  return 0;
}

int cmd_entringer(const Config &c, std::ostream &out)
{
  if (c.max_n < 1)
    throw UsageError("--max-n must be positive");
  const auto table = entringer::entringer_table(c.max_n);
  if (c.format == Format::Json) {
    print_json(out, io::entringer_json(table));
    return 0;
  }
  for (int n = 1; n <= c.max_n; ++n) {
    out << n << ':';
    for (int k = 1; k <= n; ++k)
      out << ' ' << table.at(n, k);
    out << " | " << table.row_sums[static_cast<std::size_t>(n)] << '\n';
  }
  return 0;
}

int cmd_family(const Config &c, std::ostream &out)
{
  auto family = entringer::maximal_tier_family(c.n, c.workers);
  if (c.k) {
    auto members = family.members_by_k[*c.k];
    family.members_by_k.clear();
    if (!members.empty())
      family.members_by_k[*c.k] = std::move(members);
  }
  if (c.format == Format::Json) {
    print_json(out, io::family_json(family));
    return 0;
  }
  for (const auto &[k, members] : family.members_by_k)
    for (const auto &p : members)
      out << k << ' ' << p.to_string() << '\n';
  return 0;
}

int cmd_bijection(const Config &c, std::ostream &out)
{
  const auto perm = parse_arg(c.perm_text);
  const auto image = c.which == "f" ? entringer::bijection_f(perm) : entringer::bijection_f_inverse(perm);
  if (c.format == Format::Json)
    print_json(out, io::Json{{"schema", io::schema::bijection},
                             {"direction", c.which},
                             {"input", perm.to_string()},
                             {"output", image.to_string()}});
  else
    out << image.to_string() << '\n';
  return 0;
}

int cmd_series(const Config &c, std::ostream &out)
{
  series::TruncatedSeries s;
  if (c.which == "wilf")
    s = series::wilf_series(c.order);
  else if (c.which.rfind("mu", 0) == 0)
    s = series::mu_u_series(c.which[2] - '0', c.order);
  else
    s = series::tier_series(c.which[4] - '0', c.order);
  if (c.format == Format::Json)
    print_json(out, io::series_json(c.which, s));
  else
    out << io::series_text(s);
  return 0;
}

int cmd_verify(const Config &c, std::ostream &out)
{
  verify::VerifyOptions opt;
  opt.max_n = c.max_n;
  opt.workers = c.workers;
  if (c.format == Format::Text)
    opt.on_result = [&out](const verify::CheckResult &r) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
      if (!r.passed && !r.detail.empty())
        out << " (" << r.detail << ')';
      out << std::endl;
    };
  const auto results = verify::run(c.which, opt);
  const bool ok = verify::all_passed(results);
  if (c.format == Format::Json) {
    io::Json checks = io::Json::array();
    for (const auto &r : results)
      checks.push_back(io::Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    print_json(out, io::Json{{"schema", io::schema::verify},
                             {"suite", c.which},
                             {"max_n", c.max_n},
                             {"passed", ok},
                             {"checks", checks}});
  } else {
    std::size_t failed = 0;
    for (const auto &r : results)
      failed += r.passed ? 0 : 1;
    out << results.size() - failed << " passed, " << failed << " failed\n";
  }
  return ok ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Reverse-pass stack sorting toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("-j,--workers", c.workers, "Worker threads (0: REVSTACK_WORKERS or all cores)")
    ->envname("REVSTACK_WORKERS")
    ->check(CLI::NonNegativeNumber);

  auto perm_arg = [&c](CLI::App *cmd) { cmd->add_option("permutation", c.perm_text, "e.g. 2413 or 2,4,1,3")->required(); };

  auto *tier = app.add_subcommand("tier", "Rev-tier of a permutation");
  perm_arg(tier);
  add_format(tier, c.format);

  auto *trace = app.add_subcommand("trace", "Pass-by-pass run of the single stack");
  perm_arg(trace);
  add_format(trace, c.format);

  auto *machine = app.add_subcommand("machine", "Run the stacks-in-series machine");
  perm_arg(machine);
  machine->add_option("-k,--stacks", c.stacks, "Number of stacks")->required();
  add_format(machine, c.format);

  auto *table = app.add_subcommand("table", "Count tables by length and rev-tier");
  table->add_option("kind", c.which, "exact | cumulative | refined")
    ->required()
    ->check(CLI::IsMember({"exact", "cumulative", "refined"}));
  table->add_option("--max-n", c.max_n, "Largest length")->required();
  table->add_option("--source", c.source, "Refined counts: recurrence | brute")
    ->check(CLI::IsMember({"recurrence", "brute"}));
  table->add_flag("--allow-large", c.allow_large, "Permit one length above the default cap");
  add_format(table, c.format, true);

  auto *basis_cmd = app.add_subcommand("basis", "Mine the basis of {rev-tier <= t}");
  basis_cmd->add_option("-t,--tier", c.tier, "Tier bound t")->required()->check(CLI::NonNegativeNumber);
  basis_cmd->add_option("--max-len", c.max_n, "Longest candidate length (default min(3(t+1), 10))");
  basis_cmd->add_option("--strategy", c.strategy, "exhaustive | extension")
    ->check(CLI::IsMember({"exhaustive", "extension"}));
  basis_cmd->add_flag("--long-running", c.long_running, "Permit lengths up to 12");
  add_format(basis_cmd, c.format);

  auto *av = app.add_subcommand("av-count", "Count Av(basis) by length");
  av->add_option("basis", c.perm_texts, "Basis permutations")->required();
  av->add_option("--max-n", c.max_n, "Largest length")->required();
  add_format(av, c.format);

  auto *ent = app.add_subcommand("entringer", "Entringer numbers E(n, k)");
  ent->add_option("--max-n", c.max_n, "Largest n")->required();
  add_format(ent, c.format);

  auto *family = app.add_subcommand("family", "Permutations of length n with rev-tier n-2");
  family->add_option("n", c.n, "Length")->required();
  family->add_option("-k", c.k, "Keep only those with 1 at position k+1");
  add_format(family, c.format);

  auto *bij = app.add_subcommand("bijection", "Alternating permutations <-> maximal rev-tier");
  bij->add_option("direction", c.which, "f | finv")->required()->check(CLI::IsMember({"f", "finv"}));
  perm_arg(bij);
  add_format(bij, c.format);

  auto *ser = app.add_subcommand("series", "Generating function coefficients");
  ser->add_option("name", c.which, "mu0 | mu1 | mu2 | tier0 | tier1 | tier2 | wilf")
    ->required()
    ->check(CLI::IsMember({"mu0", "mu1", "mu2", "tier0", "tier1", "tier2", "wilf"}));
  ser->add_option("--order", c.order, "Truncation order");
  add_format(ser, c.format);

  auto *ver = app.add_subcommand("verify", "Run invariant suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  ver->add_option("suite", c.which, "Suite name or all")->required()->check(CLI::IsMember(suites));
  c.max_n = 0;
  ver->add_option("--max-n", c.max_n, "Largest exhaustive length (default 9)");
  add_format(ver, c.format);

  if (const char *env = std::getenv("REVSTACK_WORKERS")) {
    unsigned ignored = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ignored);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      err << "error: REVSTACK_WORKERS must be a non-negative integer, got '" << env << "'\n";
      return 2;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tier)
      return cmd_tier(c, out);
    if (*trace)
      return cmd_trace(c, out);
    if (*machine)
      return cmd_machine(c, out);
    if (*table)
      return cmd_table(c, out, err);
    if (*basis_cmd)
      return cmd_basis(c, out, err);
    if (*av)
      return cmd_av_count(c, out);
    if (*ent)
      return cmd_entringer(c, out);
    if (*family)
      return cmd_family(c, out);
    if (*bij)
      return cmd_bijection(c, out);
    if (*ser)
      return cmd_series(c, out);
    if (*ver) {
      if (c.max_n == 0)
        c.max_n = 9;
      return cmd_verify(c, out);
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace revstack::cli
