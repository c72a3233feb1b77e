// Command-line front end for the list-access simulators.
//
//   listaccess run --workload demo.txt --algorithm amr
//   listaccess compare --workload demo.txt --algorithm mtf,amr --model full --csv out.csv
//   listaccess gen --dist zipf:1.2 --list-size 10 --length 1000 --seed 7 -o w.txt
//   listaccess paper-examples

#include "listaccess/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace h = listaccess::harness;

namespace
{

struct GeneratorFlags
{
    std::string dist;
    std::size_t list_size = 0;
    std::optional<std::size_t> length;
    std::uint64_t seed = 0;
    std::optional<std::size_t> buffer;

    void add_to(CLI::App & cmd, bool dist_required)
    {
        auto * d = cmd.add_option("--dist", dist,
                                  "uniform | zipf:<s> | burst:<run> | reverse");
        if (dist_required)
            d->required();
        cmd.add_option("--list-size", list_size, "number of list elements");
        cmd.add_option("--length", length, "request count (defaults to list size for reverse)");
        cmd.add_option("--seed", seed, "64-bit generator seed");
    }

    listaccess::GeneratorSpec spec() const
    {
        listaccess::GeneratorSpec s;
        s.set_distribution(dist);
        s.list_size = list_size;
        using D = listaccess::GeneratorSpec::Distribution;
        s.length = length.value_or(s.distribution == D::Reverse ? list_size : 0);
        s.seed = seed;
        if (buffer)
            s.buffer_capacity = *buffer;
        return s;
    }
};

h::WorkloadSource make_source(std::optional<std::string> const & path, GeneratorFlags const & gen,
                              std::optional<std::size_t> buffer)
{
    h::WorkloadSource source;
    source.path = path;
    if (!gen.dist.empty())
        source.generated = gen.spec();
    source.buffer = buffer;
    return source;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"List accessing simulator: classical self-organizing lists and buffered look-ahead"};
    app.require_subcommand(1);

    std::optional<std::string> workload_path;
    std::string algorithm;
    std::vector<std::string> algorithms;
    std::optional<std::string> model;
    std::vector<std::string> models;
    std::optional<std::size_t> buffer;
    std::optional<std::string> trace_path;
    std::optional<std::string> csv_path;
    std::optional<std::string> output_path;
    GeneratorFlags gen;

    auto * run = app.add_subcommand("run", "serve one workload with one algorithm");
    run->add_option("--workload", workload_path, "workload file");
    run->add_option("--algorithm", algorithm, "static | mtf | transpose | fc | amr")->required();
    run->add_option("--model", model, "full | partial | pd:<d> | centralized");
    run->add_option("--buffer", buffer, "override the buffer capacity");
    run->add_option("--trace", trace_path, "write a JSON Lines trace");
    run->add_option("--csv", csv_path, "write a one-row CSV");
    gen.add_to(*run, false);

    auto * cmp = app.add_subcommand("compare", "compare algorithm/model pairs on one workload");
    cmp->add_option("--workload", workload_path, "workload file");
    cmp->add_option("--algorithm", algorithms, "algorithms, comma separated")->delimiter(',');
    cmp->add_option("--model", models, "models for classical algorithms, comma separated")
        ->delimiter(',');
    cmp->add_option("--buffer", buffer, "override the buffer capacity");
    cmp->add_option("--csv", csv_path, "write the comparison as CSV");
    gen.add_to(*cmp, false);

    auto * gen_cmd = app.add_subcommand("gen", "generate a workload file");
    gen.add_to(*gen_cmd, true);
    gen_cmd->add_option("--buffer", buffer, "buffer capacity written to the file (default 3)");
    gen_cmd->add_option("-o", output_path, "output path (stdout when omitted)");

    auto * paper = app.add_subcommand("paper-examples", "replay the published worked examples");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        auto code = app.exit(e);
        return code == 0 ? h::Ok : h::InputError;
    }

    try {
        if (*run) {
            gen.buffer = buffer;
            h::RunOptions options{make_source(workload_path, gen, buffer), algorithm, model,
                                  trace_path, csv_path};
            return h::cmd_run(options, std::cout, std::cerr);
        }
        if (*cmp) {
            h::CompareOptions options{make_source(workload_path, gen, buffer), algorithms, models,
                                      csv_path};
            return h::cmd_compare(options, std::cout, std::cerr);
        }
        if (*gen_cmd) {
            gen.buffer = buffer;
            return h::cmd_gen({gen.spec(), output_path}, std::cout, std::cerr);
        }
        if (*paper) {
            auto checks = h::paper_checks();
            return h::cmd_paper_examples(checks, std::cout);
        }
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return h::InputError;
    }
    return h::InputError;
}
