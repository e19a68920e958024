#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/args.hpp"
#include "cli/commands.hpp"
#include "hopfaz/error.hpp"

using namespace hopfaz;
using namespace hopfaz::cli;

namespace {

struct ParamArgs {
    std::size_t n = 1;
    std::string A, alpha = "1", gamma, Lambda;

    void attach(CLI::App* sub)
    {
        sub->add_option("--n", n, "number of skew-primitive generators")->check(CLI::Range(1, 8));
        sub->add_option("--A", A, "r-form matrix, e.g. \"1,0;0,1\" or @file.json (default 0)");
        sub->add_option("--alpha", alpha, "nonzero scalar, e.g. 2 or -1/2 (default 1)");
        sub->add_option("--gamma", gamma, "vector \"g1,...,gn\" or @file.json (default 0)");
        sub->add_option("--Lambda", Lambda, "lower-triangular matrix (default 0)");
    }

    ENParams build(const Field& f) const
    {
        ENParams p = ENParams::zero(n, f);
        if (!A.empty()) p.A = parse_matrix_arg(f, A, "--A");
        p.alpha = parse_scalar_arg(f, alpha, "--alpha");
        if (!gamma.empty()) p.gamma = parse_vector_arg(f, gamma, "--gamma");
        if (!Lambda.empty()) p.Lambda = parse_matrix_arg(f, Lambda, "--Lambda");
        return p;
    }
};

std::set<std::string> to_set(const std::string& list)
{
    auto v = split_list(list);
    return {v.begin(), v.end()};
}

std::vector<mpq_class> rational_list(const std::string& text, const std::string& what)
{
    std::vector<mpq_class> out;
    for (const auto& s : split_list(text)) out.push_back(parse_scalar_arg(Field::rational(), s, what).rational());
    return out;
}

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

int emit(const VerdictReport& rep, bool json)
{
    if (json)
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << render_text(rep);
    return rep.exit_code;
}

int fail(bool json, int code, const std::string& message, const std::string& pointer = {})
{
    if (json) {
        Json j{{"error", message}, {"exit_code", code}};
        if (!pointer.empty()) j["pointer"] = pointer;
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << "hopfaz: " << message << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Azumaya tests for cleft extensions of finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    std::string field_spec = "rational";
    bool json = false;
    app.add_option("--field", field_spec, "rational or prime:p")->capture_default_str();
    app.add_flag("--json", json, "machine-readable output");

    ParamArgs params;
    std::string routes = "det,theta,fg";

    auto* en_check = app.add_subcommand("en-check", "decide the Azumaya property of A_sigma over E(n)");
    params.attach(en_check);
    en_check->add_option("--routes", routes, "subset of det,theta,fg,dual")->capture_default_str();

    std::string document_path, suites;
    auto* verify = app.add_subcommand("verify", "run identity suites on a structure-constant document");
    verify->add_option("document", document_path, "JSON document")->required();
    verify->add_option("--suites", suites, "subset of hopf,cocycle,dqt,comodule,integrals,s-identities,azumaya");

    bool with_sigma = false;
    auto* table = app.add_subcommand("table", "r_{A,sigma} generator values against their closed forms");
    ParamArgs table_params;
    table_params.attach(table);
    table->add_flag("--sigma", with_sigma, "also print the sigma and sigma^-1 generator values");

    SweepSpec sweep_spec;
    std::string s_alpha = "1,-1,2", s_gamma = "0,1,2", s_lambda = "0,1,-1/2", s_t = "0,1,-2", s_routes = routes;
    auto* sweep = app.add_subcommand("sweep", "cross-check the routes over a parameter grid");
    sweep->add_option("--n", sweep_spec.n, "generators; n = 1 walks a grid, n >= 2 samples")->check(CLI::Range(1, 8));
    sweep->add_option("--alpha", s_alpha, "n = 1 grid values")->capture_default_str();
    sweep->add_option("--gamma", s_gamma, "n = 1 grid values")->capture_default_str();
    sweep->add_option("--lambda", s_lambda, "n = 1 grid values")->capture_default_str();
    sweep->add_option("--t", s_t, "n = 1 grid values")->capture_default_str();
    sweep->add_option("--points", sweep_spec.points, "n >= 2 sample count")->capture_default_str();
    sweep->add_option("--seed", sweep_spec.seed, "n >= 2 sampler seed")->capture_default_str();
    sweep->add_option("--lo", sweep_spec.lo, "smallest sampled entry")->capture_default_str();
    sweep->add_option("--hi", sweep_spec.hi, "largest sampled entry")->capture_default_str();
    sweep->add_option("--routes", s_routes, "subset of det,theta,fg,dual")->capture_default_str();
    sweep->add_option("--jobs", sweep_spec.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));

    ParamArgs export_params;
    std::string out_path;
    auto* exporter = app.add_subcommand("export", "write E(n) with sigma, r_A and Cl as a structure-constant document");
    export_params.attach(exporter);
    exporter->add_option("--out", out_path, "output file (default stdout)");

    for (auto* sub : {en_check, verify, table, sweep, exporter}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        Field f = Field::rational();
        try {
            f = Field::parse(field_spec);
        } catch (const std::exception& e) {
            throw InputError(std::string("--field: ") + e.what());
        }
        if (*en_check) return emit(cmd_en_check(params.build(f), to_set(routes)), json);
        if (*table) return emit(cmd_table(table_params.build(f), with_sigma), json);
        if (*verify) {
            StructureConstantDocument doc = parse_document(load_json(document_path));
            return emit(cmd_verify(doc, suites.empty() ? std::set<std::string>{} : to_set(suites)), json);
        }
        if (*sweep) {
            sweep_spec.field = f;
            sweep_spec.alphas = rational_list(s_alpha, "--alpha");
            sweep_spec.gammas = rational_list(s_gamma, "--gamma");
            sweep_spec.lambdas = rational_list(s_lambda, "--lambda");
            sweep_spec.ts = rational_list(s_t, "--t");
            sweep_spec.routes = to_set(s_routes);
            return emit(cmd_sweep(sweep_spec), json);
        }
        if (*exporter) {
            std::string text = emit_document(export_en_document(export_params.build(f))).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!(out << text)) throw InputError("cannot write '" + out_path + "'");
            }
            return 0;
        }
    } catch (const DocumentError& e) {
        return fail(json, exit_input_error, e.what(), e.pointer().empty() ? "/" : e.pointer());
    } catch (const std::invalid_argument& e) {
        return fail(json, exit_input_error, e.what());
    } catch (const std::domain_error& e) {
        return fail(json, exit_input_error, e.what());
    } catch (const std::exception& e) {
        return fail(json, exit_disagreement, std::string("internal error: ") + e.what());
    }
    return exit_input_error;
}
