// ===========================================================================
// tresyn — synthesize and work with timed regular expressions
// ===========================================================================
//
// Subcommands:
//   synth   find a shortest expression consistent with labeled examples
//   check   decide membership of one word in one expression
//   decide  report whether any consistent expression exists at all
//   naive   print the fallback disjunction-of-witnesses solution
//   sample  draw labeled example files from a target expression
//
// Exit codes: 0 success / accept / solvable; 1 no solution / reject /
// unsolvable; 2 input error; 3 budget, cap, or solver failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tresyn/datagen.hpp"
#include "tresyn/membership.hpp"
#include "tresyn/simple.hpp"
#include "tresyn/synth.hpp"

namespace {

using namespace tresyn;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

int fail_input(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
}

struct SynthArgs {
    std::string pos_path;
    std::string neg_path;
    std::string strategy = "edge";
    std::string solver; /* empty → TRESYN_SOLVER or builtin */
    std::optional<int> max_len;
    int start_len = 1;
    bool check_solvable = true;
    bool widen = false;
    bool json = false;
    std::uint64_t seed = 0; /* accepted for interface stability; the search is deterministic */
};

int run_synth(const SynthArgs& args) {
    std::vector<TimedWord> positives, negatives;
    try {
        positives = read_word_file(args.pos_path);
        negatives = read_word_file(args.neg_path);
    } catch (const std::exception& e) {
        return fail_input(e);
    }

    SynthConfig config;
    if (args.strategy == "trivial") config.strategy = Strategy::Trivial;
    else if (args.strategy == "edge") config.strategy = Strategy::Edge;
    else if (args.strategy == "containment") config.strategy = Strategy::Containment;
    else {
        std::cerr << "error: unknown strategy '" << args.strategy << "'\n";
        return kInputError;
    }
    std::string solver = args.solver;
    if (solver.empty()) {
        const char* env = std::getenv("TRESYN_SOLVER");
        solver = env ? env : "builtin";
    }
    if (solver == "builtin") {
        config.solver = SolverChoice::Builtin;
    } else if (solver.rfind("smtlib:", 0) == 0 && solver.size() > 7) {
        config.solver = SolverChoice::External;
        config.external = ExternalSolver{solver.substr(7)};
    } else {
        std::cerr << "error: --solver must be 'builtin' or 'smtlib:COMMAND'\n";
        return kInputError;
    }
    config.start_length = args.start_len;
    config.max_length = args.max_len;
    config.check_solvable_first = args.check_solvable;
    config.widen = args.widen;

    SynthReport report;
    try {
        report = synthesize(positives, negatives, config);
    } catch (const std::invalid_argument& e) {
        return fail_input(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    }

    int code = kOk;
    switch (report.outcome) {
        case Outcome::Found:
            std::cout << format_tre(*report.tre) << "\n";
            break;
        case Outcome::NoTreExists:
            std::cout << "no solution";
            if (report.witness) std::cout << "; obscured witness: " << format_timed_word(*report.witness);
            std::cout << "\n";
            code = kNegative;
            break;
        case Outcome::LengthCapped:
            std::cout << "length_capped\n";
            code = kBudget;
            break;
        case Outcome::BudgetExceeded:
            std::cout << "budget_exceeded\n";
            code = kBudget;
            break;
    }
    if (args.json) std::cout << report_to_json(report) << "\n";
    return code;
}

int run_check(const std::string& tre_text, const std::string& word_text, bool verbose) {
    TrePtr t;
    TimedWord w;
    try {
        t = parse_tre(tre_text);
        w = parse_timed_word(word_text);
    } catch (const std::exception& e) {
        return fail_input(e);
    }
    const bool ok = membership(*t, w);
    std::cout << (ok ? "accept" : "reject") << "\n";
    if (verbose)
        for (const Derivation& d : satisfied_derivations(*t, w)) std::cout << format_derivation(d) << "\n";
    return ok ? kOk : kNegative;
}

int run_decide(const std::string& pos_path, const std::string& neg_path) {
    std::vector<TimedWord> positives, negatives;
    try {
        positives = read_word_file(pos_path);
        negatives = read_word_file(neg_path);
    } catch (const std::exception& e) {
        return fail_input(e);
    }
    const SolvableResult r = check_solvable(positives, negatives);
    switch (r.status) {
        case SolvableResult::Status::Solvable:
            std::cout << "solvable\n";
            return kOk;
        case SolvableResult::Status::Unsolvable:
            std::cout << "unsolvable";
            if (r.witness) std::cout << "; obscured witness: " << format_timed_word(*r.witness);
            std::cout << "\n";
            return kNegative;
        case SolvableResult::Status::Unknown:
            break;
    }
    std::cout << "unknown (budget exhausted)\n";
    return kBudget;
}

int run_naive(const std::string& pos_path, const std::string& neg_path) {
    std::vector<TimedWord> positives, negatives;
    try {
        positives = read_word_file(pos_path);
        negatives = read_word_file(neg_path);
    } catch (const std::exception& e) {
        return fail_input(e);
    }
    const SolvableResult r = check_solvable(positives, negatives);
    if (r.status == SolvableResult::Status::Unknown) {
        std::cout << "unknown (budget exhausted)\n";
        return kBudget;
    }
    if (r.status == SolvableResult::Status::Unsolvable) {
        std::cout << "unsolvable";
        if (r.witness) std::cout << "; obscured witness: " << format_timed_word(*r.witness);
        std::cout << "\n";
        return kNegative;
    }
    std::cout << format_tre(*naive_solution(positives, negatives)) << "\n";
    return kOk;
}

struct SampleArgs {
    std::string tre_text;
    int n_pos = 0;
    int n_neg = 0;
    std::string out_prefix;
    SampleLimits limits;
};

int run_sample(const SampleArgs& args) {
    TrePtr target;
    try {
        target = parse_tre(args.tre_text);
    } catch (const std::exception& e) {
        return fail_input(e);
    }
    Dataset dataset;
    try {
        dataset = generate_dataset(*target, args.n_pos, args.n_neg, args.limits);
        write_word_file(args.out_prefix + ".pos", dataset.positives);
        write_word_file(args.out_prefix + ".neg", dataset.negatives);
        std::ofstream manifest(args.out_prefix + ".manifest.json");
        if (!manifest) throw std::runtime_error("cannot write manifest for prefix '" + args.out_prefix + "'");
        manifest << dataset_manifest(*target, args.limits, dataset) << "\n";
    } catch (const std::invalid_argument& e) {
        return fail_input(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    }
    std::cout << "wrote " << dataset.positives.size() << " positive and " << dataset.negatives.size()
              << " negative words to " << args.out_prefix << ".{pos,neg}\n";
    if (static_cast<int>(dataset.positives.size()) < dataset.requested_positives ||
        static_cast<int>(dataset.negatives.size()) < dataset.requested_negatives) {
        std::cerr << "error: sampling attempts exhausted before reaching the requested counts\n";
        return kBudget;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timed-regular-expression synthesis from labeled example words"};
    app.require_subcommand(1);

    SynthArgs synth_args;
    int synth_max_len = -1;
    CLI::App* synth = app.add_subcommand("synth", "Synthesize a shortest consistent expression");
    synth->add_option("--pos", synth_args.pos_path, "File of positive words, one per line")->required();
    synth->add_option("--neg", synth_args.neg_path, "File of negative words, one per line")->required();
    synth->add_option("--strategy", synth_args.strategy, "trivial | edge | containment")->capture_default_str();
    synth->add_option("--max-len", synth_max_len, "Stop after this candidate length");
    synth->add_option("--start-len", synth_args.start_len, "First candidate length")->capture_default_str();
    synth->add_option("--solver", synth_args.solver, "builtin | smtlib:COMMAND (default: $TRESYN_SOLVER or builtin)");
    synth->add_flag("--check-solvable,!--no-check-solvable", synth_args.check_solvable,
                    "Decide solvability first (on by default)");
    synth->add_flag("--widen", synth_args.widen, "Drop restrictions the examples do not require");
    synth->add_flag("--json", synth_args.json, "Append the full report as JSON");
    synth->add_option("--seed", synth_args.seed, "Accepted for interface stability; results are deterministic");

    std::string check_tre, check_word;
    bool check_verbose = false;
    CLI::App* check = app.add_subcommand("check", "Decide membership of a word");
    check->add_option("--tre", check_tre, "Expression text, e.g. \"(a b[2,4])[5,6]\"")->required();
    check->add_option("--word", check_word, "Word text, e.g. \"a@1.5 b@2\"")->required();
    check->add_flag("--verbose", check_verbose, "Print the satisfied derivations");

    std::string decide_pos, decide_neg;
    CLI::App* decide = app.add_subcommand("decide", "Decide whether any consistent expression exists");
    decide->add_option("--pos", decide_pos, "File of positive words")->required();
    decide->add_option("--neg", decide_neg, "File of negative words")->required();

    std::string naive_pos, naive_neg;
    CLI::App* naive = app.add_subcommand("naive", "Print the fallback disjunction solution");
    naive->add_option("--pos", naive_pos, "File of positive words")->required();
    naive->add_option("--neg", naive_neg, "File of negative words")->required();

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "Draw labeled example files from a target expression");
    sample->add_option("--tre", sample_args.tre_text, "Target expression")->required();
    sample->add_option("-n,--pos", sample_args.n_pos, "Positive count")->required();
    sample->add_option("--neg", sample_args.n_neg, "Negative count")->capture_default_str();
    sample->add_option("--out", sample_args.out_prefix, "Output prefix for .pos/.neg/.manifest.json")->required();
    sample->add_option("--seed", sample_args.limits.seed, "Random seed")->capture_default_str();
    sample->add_option("--max-len", sample_args.limits.max_word_length, "Longest sampled word")->capture_default_str();
    sample->add_option("--grid", sample_args.limits.delay_grid, "Delay grid denominator")->capture_default_str();
    sample->add_option("--attempts", sample_args.limits.max_rejection_attempts, "Rejection-sampling budget")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    if (synth->parsed()) {
        if (synth_max_len >= 0) synth_args.max_len = synth_max_len;
        return run_synth(synth_args);
    }
    if (check->parsed()) return run_check(check_tre, check_word, check_verbose);
    if (decide->parsed()) return run_decide(decide_pos, decide_neg);
    if (naive->parsed()) return run_naive(naive_pos, naive_neg);
    if (sample->parsed()) return run_sample(sample_args);
    return kInputError;
}
