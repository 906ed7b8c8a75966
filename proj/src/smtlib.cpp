#include "tresyn/smtlib.hpp"

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace tresyn {

// ===========================================================================
// Minimal S-expression reader for solver models
// ===========================================================================

namespace {

struct Sexp {
    std::string atom;        /* leaf only */
    std::vector<Sexp> list;  /* node only */
    bool is_atom{false};
};

class SexpReader {
public:
    explicit SexpReader(const std::string& text) : text_(text) {}

    /* Read every toplevel expression; nullopt on unbalanced input. */
    std::optional<std::vector<Sexp>> run() {
        std::vector<Sexp> out;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) return out;
            auto e = read();
            if (!e) return std::nullopt;
            out.push_back(std::move(*e));
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == ';') { /* comment to end of line */
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::optional<Sexp> read() {
        skip_space();
        if (pos_ >= text_.size()) return std::nullopt;
        if (text_[pos_] == '(') {
            ++pos_;
            Sexp node;
            for (;;) {
                skip_space();
                if (pos_ >= text_.size()) return std::nullopt;
                if (text_[pos_] == ')') {
                    ++pos_;
                    return node;
                }
                auto child = read();
                if (!child) return std::nullopt;
                node.list.push_back(std::move(*child));
            }
        }
        if (text_[pos_] == ')') return std::nullopt;
        Sexp leaf;
        leaf.is_atom = true;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            leaf.atom += text_[pos_++];
        return leaf;
    }

    const std::string& text_;
    std::size_t pos_{0};
};

std::optional<std::int64_t> as_int(const Sexp& e) {
    if (e.is_atom) {
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(e.atom, &used);
            if (used != e.atom.size()) return std::nullopt;
            return v;
        } catch (...) {
            return std::nullopt;
        }
    }
    /* Negative literals print as (- 5). */
    if (e.list.size() == 2 && e.list[0].is_atom && e.list[0].atom == "-") {
        const auto inner = as_int(e.list[1]);
        if (inner) return -*inner;
    }
    return std::nullopt;
}

std::optional<bool> as_bool(const Sexp& e) {
    if (!e.is_atom) return std::nullopt;
    if (e.atom == "true") return true;
    if (e.atom == "false") return false;
    return std::nullopt;
}

void collect_defines(const Sexp& e, std::map<std::string, const Sexp*>& defines) {
    if (e.is_atom) return;
    if (e.list.size() >= 5 && e.list[0].is_atom && e.list[0].atom == "define-fun" && e.list[1].is_atom) {
        defines[e.list[1].atom] = &e.list[e.list.size() - 1];
        return;
    }
    for (const Sexp& child : e.list) collect_defines(child, defines);
}

}  // namespace

std::optional<Assignment> parse_model(const std::string& model_text, const std::vector<std::uint32_t>& ids) {
    const auto exprs = SexpReader(model_text).run();
    if (!exprs) return std::nullopt;
    std::map<std::string, const Sexp*> defines;
    for (const Sexp& e : *exprs) collect_defines(e, defines);

    Assignment assignment;
    for (std::uint32_t id : ids) {
        const std::string suffix = std::to_string(id);
        const auto lookup = [&](const std::string& prefix) -> const Sexp* {
            const auto found = defines.find(prefix + suffix);
            return found == defines.end() ? nullptr : found->second;
        };
        const Sexp* l = lookup("l_");
        if (!l) {
            /* Unconstrained interval: the script declared it, but some
             * solvers omit don't-cares from the model. */
            assignment.by_id.emplace(id, Interval());
            continue;
        }
        const Sexp* u = lookup("u_");
        const Sexp* lc = lookup("lc_");
        const Sexp* uc = lookup("uc_");
        const Sexp* uinf = lookup("uinf_");
        const auto lo = as_int(*l);
        if (!lo) return std::nullopt;
        const bool lo_closed = lc ? as_bool(*lc).value_or(false) : false;
        const bool unbounded = uinf ? as_bool(*uinf).value_or(false) : false;
        try {
            if (unbounded) {
                assignment.by_id.emplace(id, Interval::make(*lo, lo_closed, std::nullopt, false));
            } else {
                if (!u) return std::nullopt;
                const auto hi = as_int(*u);
                if (!hi) return std::nullopt;
                const bool hi_closed = uc ? as_bool(*uc).value_or(false) : false;
                assignment.by_id.emplace(id, Interval::make(*lo, lo_closed, *hi, hi_closed));
            }
        } catch (const std::invalid_argument&) {
            return std::nullopt; /* model violates the interval well-formedness constraints */
        }
    }
    return assignment;
}

// ===========================================================================
// Subprocess driver
// ===========================================================================

ExternalResult solve_external(const ExternalSolver& solver, const Problem& problem) {
    namespace fs = std::filesystem;
    static std::atomic<unsigned> counter{0};
    const std::string base =
        (fs::temp_directory_path() /
         ("tresyn_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
            .string();
    const std::string script_path = base + ".smt2";
    const std::string out_path = base + ".out";
    {
        std::ofstream script(script_path);
        if (!script) return {SmtVerdict::Error, std::nullopt, "cannot write " + script_path};
        script << emit_smtlib(problem);
    }
    const std::string command = solver.command + " < " + script_path + " > " + out_path + " 2>/dev/null";
    const int rc = std::system(command.c_str());
    std::string first_line;
    std::string rest;
    {
        std::ifstream out(out_path);
        std::getline(out, first_line);
        std::stringstream tail;
        tail << out.rdbuf();
        rest = tail.str();
    }
    fs::remove(script_path);
    fs::remove(out_path);
    if (first_line == "sat") {
        auto assignment = parse_model(rest, problem.interval_ids);
        if (!assignment) return {SmtVerdict::Error, std::nullopt, "sat, but the model did not parse"};
        return {SmtVerdict::Sat, std::move(assignment), "sat"};
    }
    if (first_line == "unsat") return {SmtVerdict::Unsat, std::nullopt, "unsat"};
    if (first_line == "unknown") return {SmtVerdict::Unknown, std::nullopt, "unknown"};
    return {SmtVerdict::Error, std::nullopt,
            first_line.empty() ? "solver produced no output (exit " + std::to_string(rc) + ")" : first_line};
}

}  // namespace tresyn
