// padcell: parse, evaluate, decompose, and check formulas over Q_p with
// restricted multiplication. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 domain error, 2 verification failure, 64 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "padcell/decompose.hpp"
#include "padcell/json_io.hpp"
#include "padcell/oracle.hpp"
#include "padcell/parser.hpp"
#include "padcell/printer.hpp"
#include "padcell/semantics.hpp"

namespace {

using namespace padcell;

struct Opts {
    long prime = 3;
    int precision = 8;
    int val_window = -1; // negative: use the default grid scale
    int unit_depth = -1;
    int cap = 12;
    int jobs = 1;
    bool json = false;
    long n = 1;
    int m = 1;
    std::vector<std::string> assigns;
    std::string file;
    std::vector<std::string> inputs;
};

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_option("-p,--prime", o.prime, "Prime p")->envname("PADCELL_PRIME");
    cmd->add_option("-N,--precision", o.precision, "Significant digits carried");
    cmd->add_option("--cap", o.cap, "Refinement depth cap");
    cmd->add_flag("--json", o.json, "JSON output for text-default commands");
    cmd->add_option("--file", o.file, "Read the input from a file");
}

std::string input_text(const Opts& o, std::size_t idx = 0) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw UnsupportedTerm("cannot open " + o.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (idx >= o.inputs.size()) throw UnsupportedTerm("missing input formula");
    return o.inputs[idx];
}

Assignment parse_assigns(const Opts& o, const PrecisionContext& ctx) {
    Assignment asg;
    for (const std::string& a : o.assigns) {
        auto eq = a.find('=');
        if (eq == std::string::npos)
            throw UnsupportedTerm("--assign expects var=value, got " + a);
        asg[a.substr(0, eq)] = padic_from_string(a.substr(eq + 1), ctx);
    }
    return asg;
}

SampleGrid make_grid(const Opts& o) {
    if (o.val_window >= 0 && o.unit_depth >= 1)
        return sample_grid(o.prime, o.val_window, o.unit_depth);
    SampleGrid g = default_grid(o.prime);
    if (o.val_window >= 0) g = sample_grid(o.prime, o.val_window, g.unit_depth);
    else if (o.unit_depth >= 1) g = sample_grid(o.prime, g.val_window, o.unit_depth);
    return g;
}

int cmd_parse(const Opts& o) {
    auto parsed = parse_any(input_text(o));
    std::string kind = std::holds_alternative<Term>(parsed) ? "term" : "formula";
    std::string text = std::holds_alternative<Term>(parsed)
                           ? print(std::get<Term>(parsed))
                           : print(std::get<Formula>(parsed));
    if (o.json) std::cout << nlohmann::json{{"kind", kind}, {"text", text}} << "\n";
    else std::cout << text << "\n";
    return 0;
}

int cmd_eval(const Opts& o) {
    PrecisionContext ctx(o.prime, o.precision);
    Assignment asg = parse_assigns(o, ctx);
    auto parsed = parse_any(input_text(o));
    if (std::holds_alternative<Term>(parsed)) {
        PAdic v = eval_term(std::get<Term>(parsed), asg, ctx);
        if (o.json) std::cout << nlohmann::json{{"value", v.to_string()}} << "\n";
        else std::cout << v.to_string() << "\n";
    } else {
        TriBool v = eval_formula(std::get<Formula>(parsed), asg, ctx);
        if (o.json) std::cout << nlohmann::json{{"value", tri_str(v)}} << "\n";
        else std::cout << tri_str(v) << "\n";
    }
    return 0;
}

int cmd_decompose(const Opts& o) {
    DecomposeConfig cfg{o.prime, o.cap};
    Decomposition dec = decompose(parse_formula(input_text(o)), cfg);
    std::cout << decomposition_to_json(dec).dump(2) << "\n";
    return 0;
}

int cmd_qe(const Opts& o) {
    DecomposeConfig cfg{o.prime, o.cap};
    Formula f = parse_formula(input_text(o));
    bool value = eliminate_exists(f, cfg);
    std::cout << nlohmann::json{{"input", print(f)}, {"value", value}} << "\n";
    return 0;
}

EquivReport parallel_equiv(const Formula& lhs, const Formula& rhs, const SampleGrid& grid,
                           const PrecisionContext& ctx, int cap, int jobs) {
    if (jobs <= 1) return equiv_check(lhs, rhs, grid, ctx, cap);
    std::size_t chunk = (grid.points.size() + jobs - 1) / jobs;
    std::vector<SampleGrid> parts;
    for (std::size_t start = 0; start < grid.points.size(); start += chunk) {
        SampleGrid part = grid;
        part.points.assign(grid.points.begin() + start,
                           grid.points.begin() +
                               std::min(grid.points.size(), start + chunk));
        parts.push_back(std::move(part));
    }
    std::vector<EquivReport> reports(parts.size());
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < parts.size(); ++i)
        workers.emplace_back([&, i] { reports[i] = equiv_check(lhs, rhs, parts[i], ctx, cap); });
    for (auto& w : workers) w.join();
    EquivReport merged;
    for (const EquivReport& r : reports) { // chunk order keeps the merge deterministic
        merged.agree_count += r.agree_count;
        merged.disagreements.insert(merged.disagreements.end(), r.disagreements.begin(),
                                    r.disagreements.end());
        merged.undecided.insert(merged.undecided.end(), r.undecided.begin(),
                                r.undecided.end());
    }
    return merged;
}

int cmd_equiv(const Opts& o) {
    if (o.inputs.size() < 2 && o.file.empty())
        throw UnsupportedTerm("equiv needs two formulas");
    Formula lhs = parse_formula(input_text(o, 0));
    Formula rhs = parse_formula(o.inputs.size() >= 2 ? o.inputs[1] : input_text(o, 1));
    PrecisionContext ctx(o.prime, o.precision);
    SampleGrid grid = make_grid(o);
    EquivReport rep = parallel_equiv(lhs, rhs, grid, ctx, o.cap, o.jobs);
    std::cout << equiv_report_to_json(rep, o.prime).dump(2) << "\n";
    if (!rep.disagreements.empty()) {
        std::cerr << "equiv: " << rep.disagreements.size() << " disagreement(s)\n";
        return 2;
    }
    return 0;
}

int cmd_cosets(const Opts& o) {
    std::cout << coset_table_to_json(o.n, o.m, o.prime).dump(2) << "\n";
    return 0;
}

int cmd_linearize(const Opts& o) {
    Term t = parse_term(input_text(o));
    auto fv = free_vars(t);
    if (fv.size() > 1) throw ScopeError("linearize: more than one variable");
    std::string var = fv.empty() ? "t" : *fv.begin();
    auto nfs = normal_form(t, o.prime);
    std::cout << normal_forms_to_json(nfs, var).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cell decomposition over Q_p with restricted multiplication"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* parse_cmd = app.add_subcommand("parse", "Parse and reprint a term or formula");
    parse_cmd->add_option("input", o.inputs, "Term or formula");
    add_common(parse_cmd, o);

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a term or formula at a point");
    eval_cmd->add_option("input", o.inputs, "Term or formula");
    eval_cmd->add_option("--assign", o.assigns, "Variable binding var=value")
        ->allow_extra_args(false);
    add_common(eval_cmd, o);

    CLI::App* dec_cmd = app.add_subcommand("decompose", "Cell decomposition of a formula");
    dec_cmd->add_option("input", o.inputs, "Quantifier-free formula in one variable");
    add_common(dec_cmd, o);

    CLI::App* qe_cmd = app.add_subcommand("qe", "Decide exists var. body");
    qe_cmd->add_option("input", o.inputs, "exists-quantified formula");
    add_common(qe_cmd, o);

    CLI::App* eq_cmd = app.add_subcommand("equiv", "Compare two formulas on a sample grid");
    eq_cmd->add_option("input", o.inputs, "Two formulas");
    eq_cmd->add_option("-V,--val-window", o.val_window, "Grid valuation window");
    eq_cmd->add_option("-D,--depth", o.unit_depth, "Grid unit depth");
    eq_cmd->add_option("--jobs", o.jobs, "Parallel evaluation threads");
    add_common(eq_cmd, o);

    CLI::App* cs_cmd = app.add_subcommand("cosets", "List coset representatives of Q_{n,m}");
    cs_cmd->add_option("-n", o.n, "Power index n")->required();
    cs_cmd->add_option("-m", o.m, "Unit depth m")->required();
    add_common(cs_cmd, o);

    CLI::App* lin_cmd = app.add_subcommand("linearize", "Linear-plus-tail normal forms of a term");
    lin_cmd->add_option("input", o.inputs, "Term in one variable");
    add_common(lin_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(o);
        if (eval_cmd->parsed()) return cmd_eval(o);
        if (dec_cmd->parsed()) return cmd_decompose(o);
        if (qe_cmd->parsed()) return cmd_qe(o);
        if (eq_cmd->parsed()) return cmd_equiv(o);
        if (cs_cmd->parsed()) return cmd_cosets(o);
        if (lin_cmd->parsed()) return cmd_linearize(o);
        std::cerr << "no subcommand\n";
        return 64;
    } catch (const DepthExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
