// notemap: exact rational note-set mapping toolkit, command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "notemap/notemap.hpp"

namespace {

using namespace notemap;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) fail(ErrorCode::IoError, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) fail(ErrorCode::IoError, "cannot write '" + path + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) fail(ErrorCode::IoError, "cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

PinPolicy pin_policy_from(const std::optional<int>& degree, const std::string& pin_list) {
    PinPolicy pin;
    if (degree) {
        if (*degree < 0) fail(ErrorCode::InvalidArgument, "--degree must be non-negative");
        pin.target_degree = static_cast<std::size_t>(*degree);
    }
    if (!pin_list.empty()) {
        std::set<std::size_t> pinned;
        std::stringstream ss(pin_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                pinned.insert(static_cast<std::size_t>(std::stoul(item)));
            } catch (const std::exception&) {
                fail(ErrorCode::InvalidArgument, "--pin expects comma-separated indices");
            }
        }
        pin.pinned_zero = std::move(pinned);
    }
    return pin;
}

FunctionAlgorithm load_algorithm_file(const std::string& path) {
    std::string text = read_file(path);
    FunctionAlgorithm alg;
    std::stringstream ss(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        alg.add_step("f" + std::to_string(++count),
                     parse_function_expr(line.substr(start, end - start + 1)));
    }
    return alg;
}

Score score_from_stages(const std::vector<NoteSet>& stages, const FunctionAlgorithm& alg) {
    Score score;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        NoteSet labeled = stages[i];
        labeled.label = "S" + std::to_string(i);
        score.sets.push_back(std::move(labeled));
    }
    for (std::size_t i = 0; i < alg.steps.size(); ++i) {
        ScoreFunction f;
        f.label = alg.steps[i].label;
        f.poly = alg.steps[i].poly;
        f.from = "S" + std::to_string(i);
        f.to = "S" + std::to_string(i + 1);
        score.functions.push_back(std::move(f));
    }
    return score;
}

/// Shared tail for run/progression: text to stdout, or json/midi to --out.
int emit_stages(const std::vector<NoteSet>& stages, const FunctionAlgorithm& alg,
                const std::string& emit, const std::string& out_path, char var) {
    if (emit == "text") {
        for (std::size_t i = 0; i < stages.size(); ++i) {
            std::string label = stages[i].label.value_or("S" + std::to_string(i));
            if (i) std::cout << alg.steps[i - 1].label << "(" << var
                             << ") = " << format_polynomial(alg.steps[i - 1].poly, var) << "\n";
            std::cout << label << " = " << format_note_set(stages[i]) << "\n";
        }
        return 0;
    }
    Score score = score_from_stages(stages, alg);
    if (emit == "json") {
        std::string text = export_json(score);
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
        return 0;
    }
    if (emit == "midi") {
        if (out_path.empty())
            fail(ErrorCode::InvalidArgument, "--emit midi requires --out <path>");
        write_file(out_path, export_midi(score));
        return 0;
    }
    fail(ErrorCode::InvalidArgument, "--emit must be text, json, or midi");
}

int cmd_solve(const std::string& from_text, const std::string& to_text,
              const std::optional<int>& degree, const std::string& pin_list) {
    NoteSet from = parse_note_set(from_text);
    NoteSet to = parse_note_set(to_text);
    InterpolationProblem problem{make_pairs(from, to), pin_policy_from(degree, pin_list)};
    RationalPolynomial f = interpolate(problem);
    std::cout << "f(n) = " << format_polynomial(f, 'n') << "\n";
    return 0;
}

int cmd_apply(const std::string& fn_text, const std::string& set_text) {
    RationalPolynomial f = parse_function_expr(fn_text);
    NoteSet s = parse_note_set(set_text);
    std::cout << format_note_set(apply_to_set(f, s)) << "\n";
    return 0;
}

int cmd_run(const std::string& algorithm_path, const std::string& set_text,
            const std::string& emit, const std::string& out_path) {
    FunctionAlgorithm alg = load_algorithm_file(algorithm_path);
    NoteSet start = parse_note_set(set_text);
    return emit_stages(run_algorithm(alg, start), alg, emit, out_path, 'n');
}

int cmd_progression(const std::string& template_id, const std::string& key,
                    const std::optional<int>& offset, const std::string& emit,
                    const std::string& out_path) {
    if (!key.empty() && offset)
        fail(ErrorCode::InvalidArgument, "--key and --offset are mutually exclusive");
    std::string id = template_id;
    int extra_offset = 0;
    if (!key.empty()) {
        if (id.find('@') != std::string::npos)
            fail(ErrorCode::InvalidArgument, "template already names a key; drop --key");
        id += "@" + key;
    } else if (offset) {
        if (id.find('@') != std::string::npos)
            fail(ErrorCode::InvalidArgument, "template already names a key; drop --offset");
        extra_offset = *offset;
    }
    auto [tpl, key_offset] = resolve_template(id);
    auto stages = realize_progression(*tpl, key_offset + extra_offset);
    FunctionAlgorithm alg = derive_algorithm(stages);
    if (emit == "text") std::cout << "template: " << tpl->name << "\n";
    return emit_stages(stages, alg, emit, out_path, 'x');
}

int cmd_verify(const std::string& case_filter, bool expect_known_errata,
               const std::string& errata_path, const std::string& emit,
               const std::string& out_path) {
    std::vector<KnownErratum> errata = errata_path.empty()
                                           ? default_known_errata()
                                           : parse_known_errata(read_file(errata_path));
    std::optional<std::string> filter;
    if (!case_filter.empty()) {
        bool known = false;
        for (const auto& id : registered_case_ids())
            if (id.rfind(case_filter, 0) == 0) known = true;
        if (!known)
            fail(ErrorCode::UnknownCase, "no verification case matches '" + case_filter + "'");
        filter = case_filter;
    }
    VerificationReport report = run_all(expect_known_errata, errata, filter);

    std::string rendered;
    if (emit == "text") {
        rendered = render_report_text(report);
    } else if (emit == "json") {
        Score score;
        score.report = report;
        rendered = export_json(score);
    } else {
        fail(ErrorCode::InvalidArgument, "--emit must be text or json");
    }
    if (out_path.empty())
        std::cout << rendered;
    else
        write_file(out_path, rendered);
    return report.success ? 0 : 3;
}

int cmd_validate(const std::string& score_path) {
    Score score = import_json(read_file(score_path));
    RealizationVerdict verdict = validate_realization(score.events, score.sets);
    if (verdict.valid) {
        std::cout << "VALID: " << score.sets.size() << " sets, " << score.functions.size()
                  << " functions, " << score.events.size() << " events\n";
        return 0;
    }
    std::cout << "INVALID: " << verdict.violations.size() << " violation(s)\n";
    for (const auto& v : verdict.violations)
        std::cout << "  event " << v.event_index << ": " << v.reason << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational note-set mapping: solve, apply, and verify "
                 "polynomial maps between note-sets"};
    app.require_subcommand(1);

    std::string from_text, to_text, pin_list;
    std::optional<int> degree;
    auto* solve = app.add_subcommand("solve", "derive the polynomial mapping one set to another");
    solve->add_option("--from", from_text, "source note-set, e.g. \"{-7,-2,2,8}\"")->required();
    solve->add_option("--to", to_text, "target note-set")->required();
    solve->add_option("--degree", degree, "target degree (default: pairs - 1)");
    solve->add_option("--pin", pin_list, "comma-separated coefficient indices forced to 0");

    std::string fn_text, apply_set;
    auto* apply = app.add_subcommand("apply", "apply a function expression to a note-set");
    apply->add_option("--fn", fn_text, "function expression, e.g. \"n - 5\"")->required();
    apply->add_option("--set", apply_set, "note-set")->required();

    std::string algo_path, run_set, run_emit = "text", run_out;
    auto* run = app.add_subcommand("run", "run an algorithm file (one expression per line)");
    run->add_option("--algorithm", algo_path, "algorithm file")->required();
    run->add_option("--set", run_set, "starting note-set")->required();
    run->add_option("--emit", run_emit, "text|json|midi (default text)");
    run->add_option("--out", run_out, "output path (required for midi)");

    std::string template_id, key, prog_emit = "text", prog_out;
    std::optional<int> offset;
    auto* progression =
        app.add_subcommand("progression", "realize a chord progression and derive its algorithm");
    progression->add_option("--template", template_id, "template id, e.g. I-IV64-V6-I or NEAP@C")
        ->required();
    progression->add_option("--key", key, "key letter (A-G, optional # or b)");
    progression->add_option("--offset", offset, "integer transposition instead of a key");
    progression->add_option("--emit", prog_emit, "text|json|midi (default text)");
    progression->add_option("--out", prog_out, "output path (required for midi)");

    std::string case_filter, errata_path, verify_emit = "text", verify_out;
    bool expect_errata = false;
    auto* verify = app.add_subcommand("verify-paper",
                                      "re-derive every registered claim and report errata");
    verify->add_option("--case", case_filter, "run only cases with this id prefix");
    verify->add_flag("--expect-known-errata", expect_errata,
                     "succeed when every mismatch is in the known-errata list");
    verify->add_option("--errata", errata_path, "override the built-in known-errata list");
    verify->add_option("--emit", verify_emit, "text|json (default text)");
    verify->add_option("--out", verify_out, "write the report to a file");

    std::string score_path;
    auto* validate = app.add_subcommand("validate", "check a score file and its realization");
    validate->add_option("--score", score_path, "score JSON file")->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(from_text, to_text, degree, pin_list);
        if (apply->parsed()) return cmd_apply(fn_text, apply_set);
        if (run->parsed()) return cmd_run(algo_path, run_set, run_emit, run_out);
        if (progression->parsed())
            return cmd_progression(template_id, key, offset, prog_emit, prog_out);
        if (verify->parsed())
            return cmd_verify(case_filter, expect_errata, errata_path, verify_emit, verify_out);
        if (validate->parsed()) return cmd_validate(score_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const notemap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == ErrorCode::NotAFunction || e.code() == ErrorCode::CardinalityMismatch)
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
