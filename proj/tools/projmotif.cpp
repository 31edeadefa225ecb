// Command-line front end: find / gen / oracle / bench.

#include <CLI11.hpp>
#include <json.hpp>

#include <projmotif/projmotif.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

int env_workers() {
    if (const char* env = std::getenv("PROJMOTIF_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) {
            return static_cast<int>(v);
        }
    }
    return 1;
}

projmotif::SequenceSet read_input(const std::string& path) {
    if (path == "-") {
        return projmotif::parse_fasta(std::cin);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw projmotif::IoError("cannot open input file: " + path);
    }
    return projmotif::parse_fasta(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw projmotif::IoError("cannot open output file: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw projmotif::IoError("failed writing to: " + path);
    }
}

projmotif::HashBackend parse_backend(const std::string& name) {
    if (name == "dense") {
        return projmotif::HashBackend::dense;
    }
    if (name == "grouped") {
        return projmotif::HashBackend::grouped;
    }
    return projmotif::HashBackend::automatic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planted (l,d)-motif discovery by random projection"};
    app.require_subcommand(1);

    auto* find_cmd = app.add_subcommand("find", "search a FASTA file for the best (l,d) motif");
    std::string find_input;
    int find_l = 0;
    int find_d = 0;
    std::optional<int> find_k;
    std::optional<int> find_s;
    std::optional<std::int64_t> find_m;
    double find_q = 0.95;
    std::uint64_t find_seed = 0;
    int find_workers = env_workers();
    std::string find_backend = "auto";
    int find_max_em = 5;
    int find_s_floor = 3;
    bool find_no_early_stop = false;
    std::string find_format = "json";
    find_cmd->add_option("-i,--input", find_input, "FASTA file, or - for stdin")->required();
    find_cmd->add_option("--l", find_l, "motif length")->required();
    find_cmd->add_option("--d", find_d, "mutations per occurrence")->required();
    find_cmd->add_option("--k", find_k, "projection width (default l-d-1)");
    find_cmd->add_option("--s", find_s, "bucket threshold (default from the bucket-size formula)");
    find_cmd->add_option("--m", find_m, "trial count (default from the success-probability formula)");
    find_cmd->add_option("--q", find_q, "target success probability")->capture_default_str();
    find_cmd->add_option("--seed", find_seed, "master seed")->capture_default_str();
    find_cmd->add_option("--workers", find_workers, "worker threads (env PROJMOTIF_WORKERS)")->capture_default_str();
    find_cmd->add_option("--backend", find_backend, "hashing backend")
        ->check(CLI::IsMember({"dense", "grouped", "auto"}))
        ->capture_default_str();
    find_cmd->add_option("--max-em-iters", find_max_em, "EM iteration cap")->capture_default_str();
    find_cmd->add_option("--s-floor", find_s_floor, "minimum derived bucket threshold")->capture_default_str();
    find_cmd->add_flag("--no-early-stop", find_no_early_stop, "run all m trials even after a perfect score");
    find_cmd->add_option("--format", find_format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "generate a planted (l,d) instance");
    int gen_t = 0;
    int gen_n = 0;
    int gen_l = 0;
    int gen_d = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--t", gen_t, "number of sequences")->required();
    gen_cmd->add_option("--n", gen_n, "sequence length")->required();
    gen_cmd->add_option("--l", gen_l, "motif length")->required();
    gen_cmd->add_option("--d", gen_d, "mutations per occurrence")->required();
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("-o,--out", gen_out, "FASTA output path; truth JSON goes to <out>.truth.json")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "run an exact solver on a small instance");
    std::string oracle_input;
    int oracle_l = 0;
    std::string oracle_method = "naive";
    std::optional<std::uint64_t> oracle_limit;
    oracle_cmd->add_option("-i,--input", oracle_input, "FASTA file, or - for stdin")->required();
    oracle_cmd->add_option("--l", oracle_l, "motif length")->required();
    oracle_cmd->add_option("--method", oracle_method, "solver to run")
        ->check(CLI::IsMember({"naive", "median"}))
        ->capture_default_str();
    oracle_cmd->add_option("--limit", oracle_limit, "search-space guard (default 1e8 naive, 4^12 median)");

    auto* bench_cmd = app.add_subcommand("bench", "compare the projection pipeline against the exact oracles");
    projmotif::BenchConfig bench;
    bench.run.s = 3;  // the derived threshold is unattainable at oracle scale
    int bench_s = 3;
    std::optional<std::int64_t> bench_m;
    int bench_workers = env_workers();
    std::string bench_backend = "auto";
    bench_cmd->add_option("--instances", bench.instances, "instance count")->capture_default_str();
    bench_cmd->add_option("--t", bench.t, "sequences per instance")->capture_default_str();
    bench_cmd->add_option("--n", bench.n, "sequence length")->capture_default_str();
    bench_cmd->add_option("--l", bench.l, "motif length")->capture_default_str();
    bench_cmd->add_option("--d", bench.d, "mutations per occurrence")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "master seed")->capture_default_str();
    bench_cmd->add_option("--s", bench_s, "bucket threshold for the pipeline")->capture_default_str();
    bench_cmd->add_option("--m", bench_m, "trial count override");
    bench_cmd->add_option("--q", bench.run.q, "target success probability")->capture_default_str();
    bench_cmd->add_option("--workers", bench_workers, "worker threads (env PROJMOTIF_WORKERS)")->capture_default_str();
    bench_cmd->add_option("--backend", bench_backend, "hashing backend")
        ->check(CLI::IsMember({"dense", "grouped", "auto"}))
        ->capture_default_str();
    bench_cmd->add_option("--naive-limit", bench.naive_limit, "naive oracle configuration guard")->capture_default_str();
    bench_cmd->add_option("--median-limit", bench.median_limit, "median oracle candidate guard")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(find_cmd)) {
            const projmotif::SequenceSet seqs = read_input(find_input);
            projmotif::RunConfig config;
            config.l = find_l;
            config.d = find_d;
            config.k = find_k;
            config.s = find_s;
            config.m = find_m;
            config.q = find_q;
            config.seed = find_seed;
            config.workers = find_workers;
            config.backend = parse_backend(find_backend);
            config.max_em_iters = find_max_em;
            config.s_floor = find_s_floor;
            config.early_stop = !find_no_early_stop;
            const projmotif::RunResult result = projmotif::run(config, seqs);
            std::cout << (find_format == "tsv" ? projmotif::render_result_tsv(result)
                                               : projmotif::render_result_json(result));
        } else if (app.got_subcommand(gen_cmd)) {
            const projmotif::PlantedInstance inst = projmotif::generate_planted(gen_t, gen_n, gen_l, gen_d, gen_seed);
            write_file(gen_out, projmotif::serialize_fasta(inst.sequences));
            write_file(gen_out + ".truth.json", projmotif::truth_json(inst));
            std::cerr << "wrote " << gen_out << " and " << gen_out << ".truth.json\n";
        } else if (app.got_subcommand(oracle_cmd)) {
            const projmotif::SequenceSet seqs = read_input(oracle_input);
            nlohmann::ordered_json doc;
            if (oracle_method == "naive") {
                const projmotif::NaiveMfpResult res =
                    projmotif::naive_mfp(seqs, oracle_l, oracle_limit.value_or(100000000ULL));
                doc["method"] = "naive";
                doc["score"] = res.score;
                doc["positions"] = res.positions;
                doc["consensus"] = res.consensus;
            } else {
                const projmotif::MedianStringResult res =
                    projmotif::median_string(seqs, oracle_l, oracle_limit.value_or(16777216ULL));
                doc["method"] = "median";
                doc["median"] = res.median;
                doc["total_distance"] = res.total_distance;
            }
            std::cout << doc.dump(2) << "\n";
        } else if (app.got_subcommand(bench_cmd)) {
            bench.run.s = bench_s;
            bench.run.m = bench_m;
            bench.run.workers = bench_workers;
            bench.run.backend = parse_backend(bench_backend);
            std::cout << projmotif::benchmark(bench);
        }
        return 0;
    } catch (const projmotif::NoEnrichedBucketsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const projmotif::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const projmotif::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const projmotif::ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
