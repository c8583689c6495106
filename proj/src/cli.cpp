#include "permcode/cli.hpp"

#include "permcode/core.hpp"
#include "permcode/enumerate.hpp"
#include "permcode/inverse.hpp"
#include "permcode/lehmer.hpp"
#include "permcode/report.hpp"
#include "permcode/slicer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>

namespace permcode::cli {

namespace {

// Applies `fn` to the single positional word, or to every non-blank line of
// `in`. Input errors go to `err` (with the line number in batch mode) and
// make the result kExitUsage; processing continues with the next line.
int for_each_word(const std::string& word, std::istream& in, std::ostream& err,
                  const std::function<void(const std::string&)>& fn) {
    if (!word.empty()) {
        try {
            fn(word);
        } catch (const InvalidInput& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        return kExitPass;
    }
    int status = kExitPass;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            fn(line);
        } catch (const InvalidInput& e) {
            err << "line " << lineno << ": error: " << e.what() << '\n';
            status = kExitUsage;
        }
    }
    return status;
}

std::string stats_line(const FiveTuple& tuple, const std::array<std::string_view, 5>& names,
                       const std::vector<LambdaClass>& classes) {
    std::string out;
    for (std::size_t i = 0; i < 5; ++i) out += std::string(names[i]) + '=' + tuple.sets[i].to_string() + ' ';
    out += "lambda=";
    for (std::size_t i = 0; i < classes.size(); ++i) out += (i ? "," : "") + std::to_string(to_int(classes[i]));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation codes b and Lehmer, set-valued statistics, exhaustive verifiers", "permcode"};
    app.require_subcommand(1);

    std::string code = "b";
    std::string kind = "perm";
    std::string word;
    int n = 0;
    int jobs = 1;
    int cap = kDefaultCap;
    std::string theorem = "2";
    std::string side = "perms";
    std::string format = "text";

    auto* encode = app.add_subcommand("encode", "permutation -> subexcedant sequence");
    encode->add_option("--code", code, "b or lehmer")->check(CLI::IsMember({"b", "lehmer"}));
    encode->add_option("word", word, "permutation; one per line on stdin if omitted");

    auto* decode = app.add_subcommand("decode", "subexcedant sequence -> permutation");
    decode->add_option("--code", code, "b or lehmer")->check(CLI::IsMember({"b", "lehmer"}));
    decode->add_option("word", word, "sequence; one per line on stdin if omitted");

    auto* stats = app.add_subcommand("stats", "five set-valued statistics and the lambda classes");
    stats->add_option("--kind", kind, "perm or seq")->check(CLI::IsMember({"perm", "seq"}));
    stats->add_option("word", word, "word; one per line on stdin if omitted");

    auto* trace = app.add_subcommand("trace", "slices and profiles of a permutation, step by step");
    trace->add_option("word", word, "permutation; one per line on stdin if omitted");

    auto* verify = app.add_subcommand("verify", "exhaustive verification over all words of length n");
    verify->add_option("--n", n, "word length")->required();
    verify->add_option("--theorem", theorem, "2, bijection, corollary2 or eulerian")
        ->check(CLI::IsMember({"2", "bijection", "corollary2", "eulerian"}));
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--max-n", cap, "enumeration cap override")->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "double Eulerian distribution table");
    table->add_option("--n", n, "word length")->required();
    table->add_option("--side", side, "perms or seqs")->check(CLI::IsMember({"perms", "seqs"}));
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "json or text")->check(CLI::IsMember({"text", "json"}));
    table->add_option("--max-n", cap, "enumeration cap override")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (encode->parsed()) {
            return for_each_word(word, in, err, [&](const std::string& text) {
                const auto p = Permutation::parse(text);
                const auto s = code == "b" ? b_encode(p) : lehmer_encode(p);
                out << format_word(s.word()) << '\n';
            });
        }
        if (decode->parsed()) {
            return for_each_word(word, in, err, [&](const std::string& text) {
                const auto s = SubexcedantSeq::parse(text);
                const auto p = code == "b" ? b_decode(s) : lehmer_decode(s);
                out << format_word(p.word()) << '\n';
            });
        }
        if (stats->parsed()) {
            return for_each_word(word, in, err, [&](const std::string& text) {
                if (kind == "perm") {
                    const auto p = Permutation::parse(text);
                    out << stats_line(five_tuple_perm(p), kPermTupleNames, lambda_perm(p)) << '\n';
                } else {
                    const auto s = SubexcedantSeq::parse(text);
                    out << stats_line(five_tuple_seq(s), kSeqTupleNames, lambda_seq(s)) << '\n';
                }
            });
        }
        if (trace->parsed()) {
            bool first = true;
            return for_each_word(word, in, err, [&](const std::string& text) {
                const auto p = Permutation::parse(text);
                if (!first) out << '\n';
                first = false;
                out << format_trace(p);
            });
        }
        if (verify->parsed()) {
            Report r;
            if (theorem == "2") r = verify_theorem2(n, jobs, cap);
            else if (theorem == "bijection") r = verify_bijection(n, jobs, cap);
            else if (theorem == "corollary2") r = verify_corollary2(n, jobs, cap);
            else r = eulerian_check(n, jobs, cap);
            if (format == "json") out << to_json(r).dump(2) << '\n';
            else out << to_text(r);
            return r.pass ? kExitPass : kExitCounterexample;
        }
        if (table->parsed()) {
            const Side s = side == "perms" ? Side::Perms : Side::Seqs;
            const Report r = table_report(double_eulerian(n, s, jobs, cap), s);
            if (format == "json") out << to_json(r).dump(2) << '\n';
            else out << table_text(*r.table);
            return r.pass ? kExitPass : kExitCounterexample;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace permcode::cli
