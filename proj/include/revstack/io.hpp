#ifndef REVSTACK_IO_HPP
#define REVSTACK_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "revstack/basis.hpp"
#include "revstack/bigint.hpp"
#include "revstack/entringer.hpp"
#include "revstack/pairs.hpp"
#include "revstack/series.hpp"
#include "revstack/sorter.hpp"
#include "revstack/tables.hpp"

namespace revstack::io
{

using Json = nlohmann::ordered_json;

/// Schema tags carried by every JSON document in the top-level "schema" field.
namespace schema
{
inline constexpr const char *tier = "revstack.tier.v1";
inline constexpr const char *trace = "revstack.trace.v1";
inline constexpr const char *machine = "revstack.machine.v1";
inline constexpr const char *table = "revstack.table.v1";
inline constexpr const char *refined = "revstack.refined.v1";
inline constexpr const char *basis = "revstack.basis.v1";
inline constexpr const char *av_count = "revstack.av_count.v1";
inline constexpr const char *entringer = "revstack.entringer.v1";
inline constexpr const char *family = "revstack.family.v1";
inline constexpr const char *bijection = "revstack.bijection.v1";
inline constexpr const char *series = "revstack.series.v1";
inline constexpr const char *verify = "revstack.verify.v1";
} // namespace schema

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json big(const BigInt &value);

/// Rationals with denominator 1 go through big(), others become "p/q".
Json rational(const Rational &value);

Json permutation(const Permutation &perm);

Json tier_json(const Permutation &perm, const pairs::SeparatedPairProfile &profile, int simulated_tier);
Json trace_json(const Permutation &perm, const sorter::SortTrace &trace);
Json machine_json(const Permutation &perm, int num_stacks, const sorter::SeriesResult &result);

/// Rows n, columns t; exact and cumulative tables.
Json table_json(const tables::CountTable &table);
Json refined_json(const tables::RefinedCounts &counts, const std::string &source);

Json basis_json(const basis::BasisReport &report, basis::Strategy strategy);
Json entringer_json(const entringer::EntringerTable &table);
Json family_json(const entringer::MaximalTierFamily &family);
Json series_json(const std::string &name, const series::TruncatedSeries &s);

/// "n,t=0,t=1,..." (exact) or "n,t<=0,..." (cumulative); one row per n,
/// padded with empty cells past the last tier of that row.
std::string table_csv(const tables::CountTable &table);

/// Long format "kind,n,t,k,count" with kind in {eta, mu_u, mu_d}; zero
/// entries are omitted.
std::string refined_csv(const tables::RefinedCounts &counts);

/// One permutation per line, shortest first.
std::string basis_text(const basis::BasisReport &report);

/// "n: coefficient" lines for n = 0..order.
std::string series_text(const series::TruncatedSeries &s);

/// Table rendered as aligned text columns.
std::string table_text(const tables::CountTable &table);

} // namespace revstack::io

#endif // REVSTACK_IO_HPP
