#ifndef LISTACCESS_HARNESS_HPP
#define LISTACCESS_HARNESS_HPP

#include "listaccess/classic.hpp"
#include "listaccess/cost_models.hpp"
#include "listaccess/generator.hpp"
#include "listaccess/trace.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace listaccess::harness
{

enum ExitCode : int
{
    Ok = 0,
    CheckFailed = 1,
    InputError = 2,
    UnsupportedPair = 3,
};

inline constexpr std::string_view amr_token = "amr";

/// One algorithm run in a comparison; total() is derived from the components.
struct ComparisonRow
{
    std::string algorithm;
    std::string model;
    CostBreakdown costs;
    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t buffer = 0;
    std::optional<std::uint64_t> seed;

    friend bool operator==(ComparisonRow const &, ComparisonRow const &) = default;
};

inline constexpr std::string_view csv_header =
    "algorithm,model,access,matching,replacement,exchange,total,n,l,buffer,seed";

std::string to_csv(std::span<ComparisonRow const> rows);
/// Throws ParseError on a malformed document or an inconsistent total.
std::vector<ComparisonRow> parse_csv(std::string_view text);

/// JSON Lines, one object per request with fields t, element, source,
/// position, cost, matched, inserted, evicted, flags_added.
std::string to_trace_jsonl(Trace const & trace);

struct RunOutcome
{
    std::string algorithm;
    std::string model;
    CostBreakdown costs;
    Trace trace;
};

/*
 * Runs `amr` or one of the classical algorithms. A model is required to be
 * absent for `amr` and defaults to full otherwise. Throws Unsupported for
 * pairs that are not defined and std::invalid_argument for unknown tokens.
 */
RunOutcome execute(std::string_view algorithm, std::optional<CostModel> model,
                   Workload const & workload);

/// Either a workload file or a generator spec, with an optional buffer override.
struct WorkloadSource
{
    std::optional<std::string> path;
    std::optional<GeneratorSpec> generated;
    std::optional<std::size_t> buffer;
};

struct LoadedWorkload
{
    Workload workload;
    std::optional<std::uint64_t> seed;
};

LoadedWorkload load(WorkloadSource const & source);

struct RunOptions
{
    WorkloadSource source;
    std::string algorithm;
    std::optional<std::string> model;
    std::optional<std::string> trace_path;
    std::optional<std::string> csv_path;
};

int cmd_run(RunOptions const & options, std::ostream & out, std::ostream & err);

struct CompareOptions
{
    WorkloadSource source;
    std::vector<std::string> algorithms;
    std::vector<std::string> models;
    std::optional<std::string> csv_path;
};

/// Builds sorted comparison rows; unsupported pairs are reported on err.
std::vector<ComparisonRow> compare(CompareOptions const & options, LoadedWorkload const & loaded,
                                   std::ostream & err);

int cmd_compare(CompareOptions const & options, std::ostream & out, std::ostream & err);

struct GenOptions
{
    GeneratorSpec spec;
    std::optional<std::string> output_path;
};

int cmd_gen(GenOptions const & options, std::ostream & out, std::ostream & err);

struct PaperCheck
{
    std::string name;
    std::string algorithm;
    std::optional<CostModel> model;
    Workload workload;
    CostBreakdown expected;
};

/// The worked examples with their published totals.
std::vector<PaperCheck> paper_checks();

int cmd_paper_examples(std::span<PaperCheck const> checks, std::ostream & out);

} // namespace listaccess::harness

#endif
