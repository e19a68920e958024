#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "cli/args.hpp"
#include "hopfaz/error.hpp"

namespace hopfaz::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

Json string_list(const std::set<std::string>& s)
{
    Json out = Json::array();
    for (const auto& x : s) out.push_back(x);
    return out;
}

Json entry_json(const TableEntry& e)
{
    Json j;
    j["family"] = e.family;
    j["left"] = e.left;
    j["right"] = e.right;
    j["computed"] = e.computed.to_string();
    j["expected"] = e.expected.to_string();
    j["match"] = e.matches();
    return j;
}

void add_table(VerdictReport& rep, const std::string& key, const std::vector<TableEntry>& entries)
{
    Json rows = Json::array();
    std::vector<std::string> order;
    std::map<std::string, std::string> first_miss;
    for (const auto& e : entries) {
        rows.push_back(entry_json(e));
        if (std::find(order.begin(), order.end(), e.family) == order.end()) order.push_back(e.family);
        if (!e.matches() && !first_miss.count(e.family))
            first_miss[e.family] = e.left + "," + e.right + ": computed " + e.computed.to_string() + ", expected " +
                                   e.expected.to_string();
    }
    for (const auto& fam : order) {
        auto it = first_miss.find(fam);
        rep.checks.push_back({key + "." + fam, it == first_miss.end(), it == first_miss.end() ? "" : it->second});
    }
    rep.extra[key] = rows;
}

std::string first_failure(const VerdictReport& r)
{
    for (const auto& c : r.checks)
        if (!c.passed) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
    return {};
}

} // namespace

Json params_json(const ENParams& p)
{
    Json j;
    j["n"] = p.n;
    j["field"] = p.field().to_string();
    j["A"] = matrix_to_string(p.A);
    j["alpha"] = p.alpha.to_string();
    j["gamma"] = vector_to_string(p.gamma);
    j["Lambda"] = matrix_to_string(p.Lambda);
    return j;
}

// Route verdicts must coincide; each route may contribute several entries (F and G).
namespace {

bool routes_agree(const std::map<std::string, bool>& routes, std::string& witness)
{
    if (routes.empty()) return true;
    bool first = routes.begin()->second;
    for (const auto& [name, v] : routes) {
        if (v != first) {
            witness = routes.begin()->first + "=" + (first ? "true" : "false") + " but " + name + "=" + (v ? "true" : "false");
            return false;
        }
    }
    return true;
}

} // namespace

void finalize_routes(VerdictReport& rep)
{
    std::string witness;
    bool agree = routes_agree(rep.routes, witness);
    rep.checks.push_back({"routes-agree", agree, witness});
    if (!rep.all_checks_passed() || rep.routes.empty()) {
        rep.verdict = "disagreement";
        rep.exit_code = exit_disagreement;
    } else if (rep.routes.begin()->second) {
        rep.verdict = "azumaya";
        rep.exit_code = exit_azumaya;
    } else {
        rep.verdict = "not-azumaya";
        rep.exit_code = exit_not_azumaya;
    }
}

VerdictReport cmd_en_check(const ENParams& p, const std::set<std::string>& routes)
{
    auto start = Clock::now();
    p.validate();
    for (const auto& r : routes)
        if (!kAllRoutes.count(r)) throw InputError("unknown route '" + r + "' (expected det, theta, fg or dual)");
    if (routes.empty()) throw InputError("no routes selected");

    VerdictReport rep;
    rep.command = "en-check";
    rep.input = params_json(p);
    rep.input["routes"] = string_list(routes);

    auto en = std::make_shared<const HopfAlgebra>(build_en(p.n, p.field()));
    Functional2 sigma = cocycle_en(p, *en);
    Functional2 r = rform_en(p.A);
    rep.add_report(check_left_2cocycle(sigma, *en), "cocycle");
    rep.add_report(check_dqt_rform(r, *en), "r-form");

    if (routes.count("det")) {
        CriterionResult c = en_azumaya_criterion(p);
        rep.determinants["criterion"] = c.det.to_string();
        rep.routes["det"] = c.azumaya;
    }
    if (routes.count("theta")) {
        CleftEvidence ev = is_azumaya_cleft(*en, sigma, r);
        rep.determinants["theta_sigma"] = ev.det_theta.to_string();
        rep.routes["theta"] = ev.azumaya;
    }
    if (routes.count("fg")) {
        AzumayaEvidence ev = is_azumaya(build_a_sigma(*en, sigma), r);
        rep.determinants["F"] = ev.det_F.to_string();
        rep.determinants["G"] = ev.det_G.to_string();
        rep.routes["F"] = !ev.det_F.is_zero();
        rep.routes["G"] = !ev.det_G.is_zero();
    }
    if (routes.count("dual")) {
        Matrix phi = self_duality_map(p.n, p.field());
        DualPictureEvidence ev =
            dual_picture_test(*en, transport_to_element(r, phi), transport_to_element(sigma, phi));
        rep.determinants["dual_theta"] = ev.det_theta.to_string();
        rep.determinants["dual_theta_dual_route"] = ev.det_theta_dual_route.to_string();
        rep.routes["dual"] = ev.azumaya;
        rep.checks.push_back({"dual-consistent", ev.consistent, ev.consistent ? "" : "the two dual routes differ"});
    }
    finalize_routes(rep);
    rep.timing_us = elapsed_us(start);
    return rep;
}

VerdictReport cmd_verify(const StructureConstantDocument& doc, const std::set<std::string>& requested)
{
    auto start = Clock::now();
    for (const auto& s : requested)
        if (!kAllSuites.count(s)) throw InputError("unknown suite '" + s + "'");
    const HopfAlgebra& h = *doc.hopf;
    const Functional2* sigma = doc.functionals.count("sigma") ? &doc.functionals.at("sigma") : nullptr;
    const Functional2* r = doc.functionals.count("r") ? &doc.functionals.at("r") : nullptr;

    auto available = [&](const std::string& s) {
        if (s == "cocycle" || s == "s-identities") return sigma != nullptr;
        if (s == "dqt") return r != nullptr;
        if (s == "comodule") return doc.comodule_algebra.has_value();
        if (s == "azumaya") return sigma && r;
        return true;
    };
    std::set<std::string> suites;
    if (requested.empty()) {
        for (const auto& s : kAllSuites)
            if (available(s)) suites.insert(s);
    } else {
        for (const auto& s : requested) {
            if (!available(s)) throw InputError("suite '" + s + "' needs data the document does not provide");
            suites.insert(s);
        }
    }

    VerdictReport rep;
    rep.command = "verify";
    rep.input = emit_document(doc);
    rep.input["suites"] = string_list(suites);

    auto run = [&](const std::string& name, auto&& body) {
        if (!suites.count(name)) return;
        try {
            body();
        } catch (const std::exception& e) {
            rep.checks.push_back({name, false, e.what()});
        }
    };
    run("hopf", [&] { rep.add_report(verify_hopf_axioms(h), "hopf"); });
    run("cocycle", [&] { rep.add_report(check_left_2cocycle(*sigma, h), "cocycle"); });
    run("dqt", [&] { rep.add_report(check_dqt_rform(*r, h), "dqt"); });
    run("comodule", [&] {
        rep.add_report(check_comodule_algebra(doc.comodule_algebra->algebra, doc.comodule_algebra->side), "comodule");
    });
    run("integrals", [&] { rep.add_report(check_integral_identities(h), "integrals"); });
    run("s-identities", [&] { rep.add_report(check_s_identities(h, *sigma), "s-identities"); });
    run("azumaya", [&] {
        CleftEvidence ev = is_azumaya_cleft(h, *sigma, *r);
        rep.determinants["theta_sigma"] = ev.det_theta.to_string();
        rep.routes["theta"] = ev.azumaya;
    });

    bool ok = rep.all_checks_passed();
    rep.verdict = ok ? "pass" : "fail";
    rep.exit_code = ok ? 0 : 1;
    rep.timing_us = elapsed_us(start);
    return rep;
}

VerdictReport cmd_table(const ENParams& p, bool include_sigma)
{
    auto start = Clock::now();
    p.validate();
    VerdictReport rep;
    rep.command = "table";
    rep.input = params_json(p);
    rep.input["include_sigma"] = include_sigma;
    add_table(rep, "rsigma", rsigma_generator_table(p));
    if (include_sigma) add_table(rep, "sigma", sigma_generator_table(p));
    bool ok = rep.all_checks_passed();
    rep.verdict = ok ? "match" : "mismatch";
    rep.exit_code = ok ? 0 : exit_disagreement;
    rep.timing_us = elapsed_us(start);
    return rep;
}

std::vector<ENParams> sweep_points(const SweepSpec& spec, std::size_t* skipped)
{
    if (spec.n == 0) throw InputError("n must be positive");
    const Field& f = spec.field;
    std::vector<ENParams> out;
    std::size_t skip = 0;
    if (spec.n == 1) {
        for (const auto& a : spec.alphas)
            for (const auto& g : spec.gammas)
                for (const auto& l : spec.lambdas)
                    for (const auto& t : spec.ts) {
                        try {
                            ENParams p = ENParams::h4(f.from_rational(a), f.from_rational(g), f.from_rational(l),
                                                      f.from_rational(t));
                            if (p.alpha.is_zero()) throw ParameterError("alpha vanishes");
                            out.push_back(std::move(p));
                        } catch (const std::exception&) {
                            ++skip;
                        }
                    }
    } else {
        if (spec.lo > spec.hi) throw InputError("empty entry range");
        std::mt19937_64 rng(spec.seed);
        const auto span = static_cast<std::uint64_t>(spec.hi - spec.lo + 1);
        auto draw = [&] { return f.from_int(spec.lo + static_cast<long long>(rng() % span)); };
        for (std::size_t k = 0; k < spec.points; ++k) {
            ENParams p = ENParams::zero(spec.n, f);
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = 0; j < spec.n; ++j) p.A(i, j) = draw();
            p.alpha = f.from_int(rng() % 2 ? 2 : 1);
            for (auto& g : p.gamma) g = draw();
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = 0; j <= i; ++j) p.Lambda(i, j) = draw();
            out.push_back(std::move(p));
        }
    }
    if (skipped) *skipped = skip;
    return out;
}

VerdictReport cmd_sweep(const SweepSpec& spec)
{
    auto start = Clock::now();
    for (const auto& r : spec.routes)
        if (!kAllRoutes.count(r)) throw InputError("unknown route '" + r + "'");
    std::size_t skipped = 0;
    std::vector<ENParams> points = sweep_points(spec, &skipped);

    std::vector<Json> results(points.size());
    std::vector<int> codes(points.size(), exit_disagreement);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            Json pj;
            pj["params"] = params_json(points[i]);
            try {
                VerdictReport r = cmd_en_check(points[i], spec.routes);
                pj["verdict"] = r.verdict;
                Json dets = Json::object();
                for (const auto& [k, v] : r.determinants) dets[k] = v;
                pj["determinants"] = dets;
                Json routes = Json::object();
                for (const auto& [k, v] : r.routes) routes[k] = v;
                pj["routes"] = routes;
                if (r.exit_code == exit_disagreement) pj["failure"] = first_failure(r);
                codes[i] = r.exit_code;
            } catch (const std::exception& e) {
                pj["verdict"] = "error";
                pj["failure"] = e.what();
            }
            results[i] = std::move(pj);
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerdictReport rep;
    rep.command = "sweep";
    rep.input["n"] = spec.n;
    rep.input["field"] = spec.field.to_string();
    rep.input["routes"] = string_list(spec.routes);
    if (spec.n == 1) {
        auto list = [](const std::vector<mpq_class>& v) {
            Json out = Json::array();
            for (const auto& q : v) out.push_back(q.get_str());
            return out;
        };
        rep.input["alpha"] = list(spec.alphas);
        rep.input["gamma"] = list(spec.gammas);
        rep.input["lambda"] = list(spec.lambdas);
        rep.input["t"] = list(spec.ts);
    } else {
        rep.input["points"] = spec.points;
        rep.input["seed"] = spec.seed;
        rep.input["lo"] = spec.lo;
        rep.input["hi"] = spec.hi;
    }

    std::size_t az = 0, not_az = 0, bad = 0;
    std::string first_bad;
    Json arr = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (codes[i] == exit_azumaya)
            ++az;
        else if (codes[i] == exit_not_azumaya)
            ++not_az;
        else if (bad++ == 0)
            first_bad = "point " + std::to_string(i);
        arr.push_back(std::move(results[i]));
    }
    rep.checks.push_back({"routes-agree", bad == 0, first_bad});
    rep.extra["points"] = arr;
    rep.extra["summary"] = Json{{"evaluated", points.size()}, {"skipped", skipped}, {"azumaya", az},
                                {"not_azumaya", not_az}, {"disagreements", bad}};
    rep.verdict = bad == 0 ? "consistent" : "disagreement";
    rep.exit_code = bad == 0 ? 0 : exit_disagreement;
    rep.timing_us = elapsed_us(start);
    return rep;
}

StructureConstantDocument export_en_document(const ENParams& p)
{
    p.validate();
    auto en = std::make_shared<const HopfAlgebra>(build_en(p.n, p.field()));
    StructureConstantDocument doc;
    doc.hopf = en;
    doc.functionals.emplace("sigma", cocycle_en(p, *en));
    doc.functionals.emplace("r", rform_en(p.A));
    doc.comodule_algebra = ComoduleAlgebraBlock{build_clifford(p, en), CoactionSide::plain};
    return doc;
}

} // namespace hopfaz::cli
