// Command-line front end: verify | dims | graph | hilbert | paths.
// Exit codes: 0 success, 1 failed check, 2 input error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ufna/hilbert.hpp"
#include "ufna/language.hpp"
#include "ufna/morphism.hpp"
#include "ufna/presentation.hpp"
#include "ufna/quiver.hpp"
#include "ufna/verify.hpp"

namespace {

constexpr std::uint64_t kCliDefaultCap = 1'000'000;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ufna::ParseError("cannot open input file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ufna::ParseError("cannot open output file \"" + path + "\"");
    out << text;
}

std::uint64_t cap_default_from_env() {
    const char* env = std::getenv("UFNA_CAP");
    if (!env || !*env) return kCliDefaultCap;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw ufna::ParseError(std::string("UFNA_CAP is not a number: \"") + env + "\"");
    }
}

std::string join_ints(const std::vector<ufna::Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += values[i].get_str();
    }
    return out;
}

std::string join_poly(const ufna::IntPoly& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < poly.coeff.size(); ++i) {
        if (i) out += ' ';
        out += poly.coeff[i].get_str();
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ufnarovskii quiver toolkit for finitely presented monomial algebras"};
    app.require_subcommand(1);

    std::string file;
    std::string json_out = "-";
    std::string dot_out = "-";
    int max_degree = 10;
    int m_max = -1;
    int expand_terms = 10;
    int path_length = 1;
    std::uint64_t seed = 0;
    std::uint64_t cap = 0; // resolved after parsing: flag > env > default

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "presentation file (JSON or compact text), '-' for stdin")
            ->required();
        sub->add_option("--cap", cap, "element cap for basis enumeration (default UFNA_CAP or 1000000)");
    };

    CLI::App* verify = app.add_subcommand("verify", "machine-check the construction degree by degree");
    add_common(verify);
    verify->add_option("-n,--max-degree", max_degree, "largest degree checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--m-max", m_max, "certificate search bound (default: max degree)");
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--json", json_out, "report destination, '-' for stdout");

    CLI::App* dims = app.add_subcommand("dims", "print dim A_0 .. dim A_N");
    add_common(dims);
    dims->add_option("-n,--max-degree", max_degree, "largest degree printed")->check(CLI::NonNegativeNumber);

    CLI::App* graph = app.add_subcommand("graph", "export the quiver as Graphviz DOT");
    add_common(graph);
    graph->add_option("--dot", dot_out, "DOT destination, '-' for stdout");

    CLI::App* hilbert = app.add_subcommand("hilbert", "rational Hilbert series of A");
    add_common(hilbert);
    hilbert->add_option("--expand", expand_terms, "expansion terms to print")->check(CLI::NonNegativeNumber);

    CLI::App* paths = app.add_subcommand("paths", "list paths of one length with their words");
    add_common(paths);
    paths->add_option("-n,--length", path_length, "path length")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cap == 0) cap = cap_default_from_env();
        const ufna::Presentation parsed = ufna::parse_input(read_input(file));

        if (verify->parsed()) {
            ufna::VerifyOptions opts;
            opts.max_degree = max_degree;
            opts.m_max = m_max;
            opts.cap = cap;
            opts.seed = seed;
            const ufna::VerifyResult result = ufna::run_verify(parsed, opts);
            write_output(json_out, ufna::report_text(result.report));
            return result.pass ? 0 : 1;
        }

        const ufna::Presentation p = ufna::normalize(parsed);
        if (dims->parsed()) {
            std::vector<ufna::Int> values;
            for (int n = 0; n <= max_degree; ++n)
                values.push_back(ufna::count_normal_words(n, p, cap));
            std::cout << join_ints(values) << "\n";
            return 0;
        }
        if (graph->parsed()) {
            write_output(dot_out, ufna::export_dot(ufna::build_quiver(p, cap), p));
            return 0;
        }
        if (hilbert->parsed()) {
            const ufna::Quiver q = ufna::build_quiver(p, cap);
            const ufna::RationalSeries h = ufna::hilbert_algebra(p, q, cap);
            std::cout << "numerator: " << join_poly(h.num) << "\n";
            std::cout << "denominator: " << join_poly(h.den) << "\n";
            std::cout << "expansion: " << join_ints(ufna::expand(h, expand_terms)) << "\n";
            return 0;
        }
        if (paths->parsed()) {
            const ufna::Quiver q = ufna::build_quiver(p, cap);
            for (const ufna::Path& path : ufna::enumerate_paths(q, path_length, cap)) {
                std::string route = word_string(p, q.vertices[path.source]);
                for (int ai : path.arrows)
                    route += "->" + word_string(p, q.vertices[q.arrows[ai].target]);
                ufna::Word labels;
                labels.letters = ufna::path_labels(q, path);
                std::cout << word_string(p, ufna::path_word(q, path)) << "  "
                          << word_string(p, labels) << "  " << route << "\n";
            }
            return 0;
        }
    } catch (const ufna::ParseError& e) {
        std::cerr << "input error: " << e.what();
        if (e.position > 0) std::cerr << " (at byte " << e.position << ")";
        std::cerr << "\n";
        return 2;
    } catch (const ufna::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
