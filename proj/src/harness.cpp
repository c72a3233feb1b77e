#include "listaccess/harness.hpp"

#include "listaccess/amr.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace listaccess::harness
{

namespace
{

template <typename T, typename F>
std::string join(std::vector<T> const & items, F && format)
{
    std::string out;
    for (auto const & item : items) {
        if (!out.empty())
            out += ';';
        out += format(item);
    }
    return out;
}

void write_file(std::string const & path, std::string const & content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + path + "'");
    file << content;
    if (!file)
        throw std::runtime_error("failed writing '" + path + "'");
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, char const * what)
{
    T value{};
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
        auto next = line.find(sep, pos);
        fields.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return fields;
}

// Canonical ordering used for comparison output.
int algorithm_rank(std::string_view token)
{
    if (token == amr_token)
        return 4;
    auto a = parse_algorithm(token);
    return a ? static_cast<int>(*a) : 5;
}

std::string describe(CostBreakdown const & c)
{
    std::ostringstream ss;
    ss << "total " << c.total() << " (access " << c.access << ", matching " << c.matching
       << ", replacement " << c.replacement << ", exchange " << c.exchange << ")";
    return ss.str();
}

void print_warnings(Workload const & w, std::ostream & err)
{
    for (auto const & warning : validate_workload(w).warnings)
        err << "warning: " << warning.message << '\n';
}

ComparisonRow make_row(RunOutcome const & run, LoadedWorkload const & loaded)
{
    return ComparisonRow{run.algorithm,
                         run.model,
                         run.costs,
                         loaded.workload.requests.size(),
                         loaded.workload.list.size(),
                         loaded.workload.buffer_capacity,
                         loaded.seed};
}

// Maps library exceptions onto the CLI exit-code contract.
template <typename F>
int guarded(std::ostream & err, F && body)
{
    try {
        return body();
    } catch (Unsupported const & e) {
        err << "error: unsupported: " << e.what() << '\n';
        return UnsupportedPair;
    } catch (std::exception const & e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

} // namespace

std::string to_csv(std::span<ComparisonRow const> rows)
{
    std::ostringstream ss;
    ss << csv_header << '\n';
    for (auto const & r : rows) {
        ss << r.algorithm << ',' << r.model << ',' << r.costs.access << ',' << r.costs.matching << ','
           << r.costs.replacement << ',' << r.costs.exchange << ',' << r.costs.total() << ',' << r.n
           << ',' << r.l << ',' << r.buffer << ',';
        if (r.seed)
            ss << *r.seed;
        ss << '\n';
    }
    return ss.str();
}

std::vector<ComparisonRow> parse_csv(std::string_view text)
{
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty() || lines.front() != csv_header)
        throw ParseError(1, "missing or unexpected CSV header");

    std::vector<ComparisonRow> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto const line_no = k + 1;
        auto f = split(lines[k], ',');
        if (f.size() != 11)
            throw ParseError(line_no, "expected 11 fields, got " + std::to_string(f.size()));
        ComparisonRow r;
        r.algorithm = std::string(f[0]);
        r.model = std::string(f[1]);
        r.costs.access = parse_number<Cost>(f[2], line_no, "access");
        r.costs.matching = parse_number<Cost>(f[3], line_no, "matching");
        r.costs.replacement = parse_number<Cost>(f[4], line_no, "replacement");
        r.costs.exchange = parse_number<Cost>(f[5], line_no, "exchange");
        auto total = parse_number<Cost>(f[6], line_no, "total");
        if (total != r.costs.total())
            throw ParseError(line_no, "total does not equal the sum of its components");
        r.n = parse_number<std::size_t>(f[7], line_no, "n");
        r.l = parse_number<std::size_t>(f[8], line_no, "l");
        r.buffer = parse_number<std::size_t>(f[9], line_no, "buffer");
        if (!f[10].empty())
            r.seed = parse_number<std::uint64_t>(f[10], line_no, "seed");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string to_trace_jsonl(Trace const & trace)
{
    std::string out;
    for (auto const & ev : trace) {
        nlohmann::ordered_json j;
        j["t"] = ev.t;
        j["element"] = ev.element.token();
        j["source"] = ev.source == Source::List ? "list" : "buffer";
        j["position"] = ev.position;
        j["cost"] = ev.cost;
        j["matched"] = join(ev.matched, [](MatchPair const & m) {
            return std::to_string(m.k) + ":" + m.element.token();
        });
        auto placement = [](Placement const & p) {
            return std::to_string(p.slot) + ":" + p.element.token();
        };
        j["inserted"] = join(ev.inserted, placement);
        j["evicted"] = join(ev.evicted, placement);
        j["flags_added"] = join(ev.flags_added, [](std::size_t p) { return std::to_string(p); });
        out += j.dump();
        out += '\n';
    }
    return out;
}

RunOutcome execute(std::string_view algorithm, std::optional<CostModel> model,
                   Workload const & workload)
{
    if (algorithm == amr_token) {
        if (model)
            throw Unsupported("amr carries its own cost model; --model '" + model->token() +
                              "' cannot be combined with it");
        auto result = serve_amr(workload);
        return {std::string(amr_token), std::string(amr_token), result.costs, std::move(result.trace)};
    }

    auto classic = parse_algorithm(algorithm);
    if (!classic)
        throw std::invalid_argument("unknown algorithm '" + std::string(algorithm) + "'");
    auto const m = model.value_or(CostModel::full());
    auto result = run_classic(*classic, m, workload);
    return {std::string(algorithm), m.token(), result.costs, std::move(result.trace)};
}

LoadedWorkload load(WorkloadSource const & source)
{
    if (source.path.has_value() == source.generated.has_value())
        throw std::invalid_argument("give exactly one of --workload or --dist");

    LoadedWorkload loaded{};
    if (source.path) {
        loaded.workload = load_workload(*source.path);
    } else {
        loaded.workload = generate(*source.generated);
        loaded.seed = source.generated->seed;
    }
    if (source.buffer)
        loaded.workload.buffer_capacity = *source.buffer;
    require_valid(loaded.workload);
    return loaded;
}

int cmd_run(RunOptions const & options, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        auto loaded = load(options.source);
        print_warnings(loaded.workload, err);

        std::optional<CostModel> model;
        if (options.model)
            model = CostModel::parse(*options.model);
        auto run = execute(options.algorithm, model, loaded.workload);

        out << "algorithm: " << run.algorithm << '\n'
            << "model: " << run.model << '\n'
            << "access: " << run.costs.access << '\n'
            << "matching: " << run.costs.matching << '\n'
            << "replacement: " << run.costs.replacement << '\n'
            << "exchange: " << run.costs.exchange << '\n'
            << "total: " << run.costs.total() << '\n';

        if (options.trace_path)
            write_file(*options.trace_path, to_trace_jsonl(run.trace));
        if (options.csv_path) {
            std::vector<ComparisonRow> rows{make_row(run, loaded)};
            write_file(*options.csv_path, to_csv(rows));
        }
        return static_cast<int>(Ok);
    });
}

std::vector<ComparisonRow> compare(CompareOptions const & options, LoadedWorkload const & loaded,
                                   std::ostream & err)
{
    std::vector<std::string> algorithms = options.algorithms;
    for (auto const & a : algorithms)
        if (a != amr_token && !parse_algorithm(a))
            throw std::invalid_argument("unknown algorithm '" + a + "'");

    std::vector<CostModel> models;
    for (auto const & token : options.models)
        models.push_back(CostModel::parse(token));
    if (models.empty())
        models.push_back(CostModel::full());
    std::sort(models.begin(), models.end());
    models.erase(std::unique(models.begin(), models.end()), models.end());

    std::sort(algorithms.begin(), algorithms.end(),
              [](auto const & a, auto const & b) { return algorithm_rank(a) < algorithm_rank(b); });
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

    std::vector<ComparisonRow> rows;
    for (auto const & a : algorithms) {
        if (a == amr_token) {
            rows.push_back(make_row(execute(a, std::nullopt, loaded.workload), loaded));
            continue;
        }
        for (auto const & m : models) {
            try {
                rows.push_back(make_row(execute(a, m, loaded.workload), loaded));
            } catch (Unsupported const & e) {
                err << "note: skipping " << a << " under " << m.token() << ": " << e.what() << '\n';
            }
        }
    }
    return rows;
}

int cmd_compare(CompareOptions const & options, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        auto loaded = load(options.source);
        print_warnings(loaded.workload, err);
        auto rows = compare(options, loaded, err);

        out << std::left << std::setw(11) << "algorithm" << std::setw(13) << "model" << std::right
            << std::setw(10) << "access" << std::setw(10) << "matching" << std::setw(13)
            << "replacement" << std::setw(10) << "exchange" << std::setw(10) << "total" << '\n';
        for (auto const & r : rows)
            out << std::left << std::setw(11) << r.algorithm << std::setw(13) << r.model
                << std::right << std::setw(10) << r.costs.access << std::setw(10) << r.costs.matching
                << std::setw(13) << r.costs.replacement << std::setw(10) << r.costs.exchange
                << std::setw(10) << r.costs.total() << '\n';

        if (options.csv_path)
            write_file(*options.csv_path, to_csv(rows));
        return static_cast<int>(Ok);
    });
}

int cmd_gen(GenOptions const & options, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        auto const & spec = options.spec;
        auto workload = generate(spec);

        std::ostringstream summary;
        summary << "dist=" << spec.distribution_token() << " list-size=" << spec.list_size
                << " length=" << spec.length << " seed=" << spec.seed
                << " buffer=" << spec.buffer_capacity;

        auto text = "# generated " + summary.str() + "\n" + serialize_workload(workload);
        if (options.output_path) {
            write_file(*options.output_path, text);
            out << "wrote " << *options.output_path << ": " << summary.str() << '\n';
        } else {
            out << text;
            err << "generated " << summary.str() << '\n';
        }
        return static_cast<int>(Ok);
    });
}

std::vector<PaperCheck> paper_checks()
{
    auto list_a_to_i = ListConfig(tokenize("A B C D E F G H I"));
    return {
        {"illustration", std::string(amr_token), std::nullopt,
         Workload{list_a_to_i, tokenize("I E G D I E D A B I"), 3}, CostBreakdown{31, 3, 0, 0}},
        {"demonstration", std::string(amr_token), std::nullopt,
         Workload{list_a_to_i, tokenize("I E G D I E D B A I"), 3}, CostBreakdown{31, 4, 1, 0}},
        {"table1-row1-mtf", "mtf", CostModel::full(),
         Workload{ListConfig(tokenize("A B C D E F G H I J K")), tokenize("K J I H G F E D C B A"), 0},
         CostBreakdown{121, 0, 0, 0}},
    };
}

int cmd_paper_examples(std::span<PaperCheck const> checks, std::ostream & out)
{
    std::size_t passed = 0;
    for (auto const & check : checks) {
        std::string actual;
        bool ok = false;
        try {
            auto run = execute(check.algorithm, check.model, check.workload);
            ok = run.costs == check.expected;
            actual = describe(run.costs);
        } catch (std::exception const & e) {
            actual = std::string("error: ") + e.what();
        }
        passed += ok ? 1 : 0;
        out << (ok ? "PASS" : "FAIL") << ' ' << check.name << ": expected "
            << describe(check.expected) << ", actual " << actual << '\n';
    }
    out << passed << '/' << checks.size() << " pass\n";
    return passed == checks.size() ? Ok : CheckFailed;
}

} // namespace listaccess::harness
