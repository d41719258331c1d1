// Command-line front end: Milnor table computation, basing reports, table
// comparison, and a batch corpus runner with a content-addressed cache.

#include "milnorkit/basing.hpp"
#include "milnorkit/cache.hpp"
#include "milnorkit/config.hpp"
#include "milnorkit/diagram.hpp"
#include "milnorkit/milnor.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace milnorkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidDiagram = 3;
constexpr int kExitDegreeOverflow = 4;
constexpr int kExitComponentMismatch = 5;
constexpr int kExitHypothesisUnmet = 6;

void usage(std::ostream& out) {
    out << "usage: milnorkit <command> [options]\n"
           "\n"
           "commands:\n"
           "  compute <input.json> [--degree N] [--format json|text]\n"
           "  compute --braid \"s1 s1\" --strands K [--degree N] [--format json|text]\n"
           "  basing <input.json> [--cap K] [--relative other.json]\n"
           "  compare <a.json> <b.json> --n K\n"
           "  corpus --dir PATH [--degree N] [--cache DIR] [--out DIR]\n"
           "\n"
           "inputs are PD JSON documents:\n"
           "  {\"components\":[[arcId,...],...],\"crossings\":[{\"over_in\":a,...,\"sign\":1},...]}\n"
           "\n"
           "MILNORKIT_MAX_DEGREE overrides the degree ceiling (default 8).\n"
           "exit codes: 0 ok, 1 partial failure, 2 parse error, 3 invalid diagram,\n"
           "            4 degree overflow, 5 component mismatch, 6 hypothesis unmet\n";
}

Limits limits_from_env() {
    Limits limits;
    if (const char* env = std::getenv("MILNORKIT_MAX_DEGREE")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                limits.max_degree = v;
                limits.max_class = std::max(limits.max_class, v);
            }
        } catch (...) {
            // ignore unusable values, keep defaults
        }
    }
    return limits;
}

struct Options {
    std::vector<std::string> positional;
    std::optional<std::string> braid;
    std::optional<int> strands;
    std::optional<int> degree;
    std::optional<int> cap;
    std::optional<int> n;
    std::optional<std::string> relative;
    std::optional<std::string> dir;
    std::optional<std::string> cache;
    std::optional<std::string> out;
    std::string format = "json";
};

int parse_int(const std::string& flag, const std::string& value) {
    try {
        return std::stoi(value);
    } catch (...) {
        throw ParseError("flag " + flag + " needs an integer, got '" + value + "'");
    }
}

Options parse_options(int argc, char** argv, int first) {
    Options opt;
    for (int i = first; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const std::string& flag) {
            if (i + 1 >= argc) throw ParseError("flag " + flag + " needs a value");
            return std::string(argv[++i]);
        };
        if (arg == "--braid") opt.braid = next(arg);
        else if (arg == "--strands") opt.strands = parse_int(arg, next(arg));
        else if (arg == "--degree") opt.degree = parse_int(arg, next(arg));
        else if (arg == "--cap") opt.cap = parse_int(arg, next(arg));
        else if (arg == "--n") opt.n = parse_int(arg, next(arg));
        else if (arg == "--relative") opt.relative = next(arg);
        else if (arg == "--dir") opt.dir = next(arg);
        else if (arg == "--cache") opt.cache = next(arg);
        else if (arg == "--out") opt.out = next(arg);
        else if (arg == "--format") opt.format = next(arg);
        else if (!arg.empty() && arg[0] == '-') throw ParseError("unknown flag " + arg);
        else opt.positional.push_back(arg);
    }
    return opt;
}

LinkDiagram load_diagram(const std::string& path) {
    const auto text = read_file(path);
    if (!text) throw ParseError("cannot read " + path);
    return parse_pd(*text);
}

LinkDiagram load_input(const Options& opt) {
    if (opt.braid) {
        if (!opt.strands) throw ParseError("--braid needs --strands");
        if (!opt.positional.empty())
            throw ParseError("give either an input path or --braid, not both");
        return parse_braid(*opt.braid, *opt.strands);
    }
    if (opt.positional.empty()) throw ParseError("missing input path");
    return load_diagram(opt.positional[0]);
}

int cmd_compute(const Options& opt, const Limits& limits) {
    const LinkDiagram d = load_input(opt);
    const int degree = opt.degree.value_or(4);
    if (degree > limits.max_degree)
        throw DegreeOverflow("degree " + std::to_string(degree) + " above ceiling " +
                             std::to_string(limits.max_degree));
    const MilnorTable t = table(d, degree, limits);
    if (opt.format == "text")
        std::cout << t.to_text();
    else if (opt.format == "json")
        std::cout << t.to_json() << '\n';
    else
        throw ParseError("unknown format '" + opt.format + "'");
    return kExitOk;
}

int cmd_basing(const Options& opt, const Limits& limits) {
    const LinkDiagram d = load_input(opt);
    const std::string id =
        opt.positional.empty() ? std::string("braid") : opt.positional[0];
    const int cap = opt.cap.value_or(6);
    BasingReport report;
    if (opt.relative) {
        const LinkDiagram other = load_diagram(*opt.relative);
        report = relative_max_basing(d, other, cap, id, *opt.relative, limits);
    } else {
        report = max_basing_rel_unlink(d, cap, id, limits);
    }
    std::cout << report.to_json(d.component_count()) << '\n';
    return kExitOk;
}

int cmd_compare(const Options& opt, const Limits& limits) {
    if (opt.positional.size() != 2) throw ParseError("compare needs two input paths");
    if (!opt.n) throw ParseError("compare needs --n");
    const LinkDiagram a = load_diagram(opt.positional[0]);
    const LinkDiagram b = load_diagram(opt.positional[1]);
    const bool equal = mu_n_equal(a, b, *opt.n, limits);
    std::cout << "{\"equal\":" << (equal ? "true" : "false") << ",\"n\":" << *opt.n
              << "}\n";
    return kExitOk;
}

int cmd_corpus(const Options& opt, const Limits& limits) {
    if (!opt.dir) throw ParseError("corpus needs --dir");
    const int degree = opt.degree.value_or(4);
    const std::string out_dir = opt.out.value_or(".");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::optional<ResultCache> cache;
    if (opt.cache) cache.emplace(*opt.cache);

    std::vector<std::string> inputs;
    for (const auto& entry : fs::directory_iterator(*opt.dir)) {
        if (entry.path().extension() == ".json") inputs.push_back(entry.path().string());
    }
    std::sort(inputs.begin(), inputs.end());

    int computed = 0, cached = 0, failed = 0;
    for (const std::string& path : inputs) {
        try {
            const LinkDiagram d = load_diagram(path);
            std::string payload;
            bool from_cache = false;
            std::string key;
            if (cache) {
                key = ResultCache::key_for(d, degree);
                if (auto hit = cache->load(key)) {
                    payload = *hit;
                    from_cache = true;
                }
            }
            if (!from_cache) {
                payload = table(d, degree, limits).to_json() + "\n";
                if (cache) cache->store(key, payload);
            }
            const std::string out_path =
                (fs::path(out_dir) / (fs::path(path).stem().string() + ".table.json"))
                    .string();
            write_file_atomic(out_path, payload);
            from_cache ? ++cached : ++computed;
        } catch (const Error& e) {
            std::cerr << path << ": " << e.what() << '\n';
            ++failed;
        }
    }
    std::cout << "computed " << computed << " cached " << cached << " failed " << failed
              << '\n';
    return failed == 0 ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(std::cerr);
        return kExitParse;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        usage(std::cout);
        return kExitOk;
    }
    const Limits limits = limits_from_env();
    try {
        const Options opt = parse_options(argc, argv, 2);
        if (command == "compute") return cmd_compute(opt, limits);
        if (command == "basing") return cmd_basing(opt, limits);
        if (command == "compare") return cmd_compare(opt, limits);
        if (command == "corpus") return cmd_corpus(opt, limits);
        usage(std::cerr);
        return kExitParse;
    } catch (const ComponentMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComponentMismatch;
    } catch (const HypothesisUnmet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHypothesisUnmet;
    } catch (const DegreeOverflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegreeOverflow;
    } catch (const InvalidDiagram& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidDiagram;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const IndexError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
