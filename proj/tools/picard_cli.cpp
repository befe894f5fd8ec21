// Command-line front end: verify, decompose, eval, random-word, selftest.
// Exit codes: 0 success, 1 domain failure (non-member, bad word), 2 usage or
// parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "picard/picard.hpp"

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// path "-" selects standard input
std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw io_error("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

int cmd_verify(const std::string& input) {
    const picard::Mat3 m = picard::matrix_from_json(read_all(input));
    picard::verify_membership(m);
    std::cout << "member\n";
    return 0;
}

int cmd_decompose(const std::string& input, bool trace) {
    const picard::Mat3 m = picard::matrix_from_json(read_all(input));
    const picard::GroupMatrix g = picard::GroupMatrix::verify(m);
    const picard::Decomposition d = picard::decompose(g);
    if (trace) {
        int idx = 0;
        for (const picard::ReductionStep& s : d.trace.steps)
            std::cerr << "step " << ++idx << ": m=" << s.m << " n=" << s.n
                      << " k=" << s.k << " gamma=" << picard::to_string(s.gamma)
                      << " norm13=" << s.norm13_before << " -> " << s.norm13_after
                      << "\n";
        std::cerr << "steps: " << d.trace.steps.size() << "\n";
    }
    std::cout << picard::format_word(d.word) << "\n";
    return 0;
}

int cmd_eval(const std::string& input) {
    const picard::GeneratorWord w = picard::parse_word(read_all(input));
    std::cout << picard::matrix_to_json(picard::evaluate(w).mat()) << "\n";
    return 0;
}

int cmd_random_word(std::uint64_t seed, std::uint64_t max_length) {
    const picard::GeneratorWord w = picard::random_word(seed, max_length);
    std::cout << picard::format_word(w) << "\n";
    std::cout << picard::matrix_to_json(picard::evaluate(w).mat()) << "\n";
    return 0;
}

int cmd_selftest(int radius, bool inject_fault) {
    picard::SelftestOptions opt;
    opt.bfs_radius = radius;
    opt.corrupt_rotation = inject_fault;
    return picard::run_selftest(std::cout, opt) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for the Picard modular group SU(2,1;Z[i]): membership "
        "verification and constructive decomposition into the generators T1, T2, R, J."};
    app.require_subcommand(1);

    std::string input = "-";
    bool trace = false;
    std::uint64_t seed = 1;
    std::uint64_t max_length = 16;
    int radius = 5;
    bool inject_fault = false;

    CLI::App* verify = app.add_subcommand(
        "verify", "Check membership of a matrix (JSON on --input); prints 'member' "
                  "or the violated condition.");
    verify->add_option("--input", input, "input path, '-' for stdin");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Decompose a member matrix (JSON on --input) into a word in "
                     "T1, T2, R, J.");
    decompose->add_option("--input", input, "input path, '-' for stdin");
    decompose->add_flag("--trace", trace,
                        "print per-step reduction records to stderr");

    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate a word (text on --input) to its matrix JSON.");
    eval->add_option("--input", input, "input path, '-' for stdin");

    CLI::App* random = app.add_subcommand(
        "random-word",
        "Emit a pseudo-random word and its matrix JSON. Sampling is over words, "
        "not matrices: the group is infinite, so no uniform matrix distribution "
        "exists.");
    random->add_option("--seed", seed, "RNG seed; output is deterministic per seed");
    random->add_option("--max-length", max_length, "maximum token count")
        ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1000000}));

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the invariant suites and the BFS enumeration oracle.");
    selftest->add_option("--radius", radius, "Cayley ball radius for the BFS oracle")
        ->check(CLI::Range(0, 8));
    selftest->add_flag("--inject-fault", inject_fault,
                       "negative control: corrupt the rotation generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(input);
        if (*decompose) return cmd_decompose(input, trace);
        if (*eval) return cmd_eval(input);
        if (*random) return cmd_random_word(seed, max_length);
        if (*selftest) return cmd_selftest(radius, inject_fault);
    } catch (const picard::membership_error& e) {
        std::cout << picard::membership_error::describe(e.why()) << "\n";
        return 1;
    } catch (const picard::json_parse_error& e) {
        std::cout << "parse-error\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const picard::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
