#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "cli/args.hpp"
#include "cli/commands.hpp"
#include "hopfaz/error.hpp"

using namespace hopfaz;
using namespace hopfaz::cli;

namespace {

Field q = Field::rational();

ENParams h4(long alpha, long gamma, long lambda, long t)
{
    return ENParams::h4(q.from_int(alpha), q.from_int(gamma), q.from_int(lambda), q.from_int(t));
}

Json e1_json(const ENParams& p = ENParams::zero(1)) { return emit_document(export_en_document(p)); }

std::string pointer_of(const Json& doc)
{
    try {
        parse_document(doc);
    } catch (const DocumentError& e) {
        return e.pointer();
    }
    return "<no error>";
}

const CheckResult* find_check(const VerdictReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerdictReport untimed(VerdictReport r)
{
    r.timing_us = 0;
    return r;
}

} // namespace

TEST_CASE("command-line scalars, vectors and matrices")
{
    CHECK(parse_scalar_arg(q, "-3/4", "x") == q.from_fraction(-3, 4));
    CHECK(parse_scalar_arg(Field::prime(7), "1/2", "x") == Field::prime(7).from_int(4));
    CHECK_THROWS_AS(parse_scalar_arg(q, "0.5", "x"), InputError);
    CHECK_THROWS_AS(parse_scalar_arg(q, "1/0", "x"), InputError);
    CHECK_THROWS_AS(parse_scalar_arg(Field::prime(7), "1/7", "x"), InputError);

    Matrix m = parse_matrix_arg(q, "0,1;1,0", "m");
    CHECK(m.rows() == 2);
    CHECK(m(0, 1) == q.one());
    CHECK(m(1, 1) == q.zero());
    CHECK(matrix_to_string(m) == "0,1;1,0");
    CHECK_THROWS_AS(parse_matrix_arg(q, "1,2;3", "m"), InputError);
    CHECK_THROWS_AS(parse_matrix_arg(q, "@/nonexistent/m.json", "m"), InputError);

    const char* path = "test_cli_matrix.json";
    {
        std::ofstream out(path);
        out << "[[1, \"-1/2\"], [0, 3]]";
    }
    Matrix f = parse_matrix_arg(q, std::string("@") + path, "m");
    CHECK(f(0, 1) == q.from_fraction(-1, 2));
    CHECK(f(1, 1) == q.from_int(3));
    std::remove(path);

    CHECK(parse_vector_arg(q, "1, -2 ,1/3", "v") == Vector{q.one(), q.from_int(-2), q.from_fraction(1, 3)});
    CHECK(vector_to_string(parse_vector_arg(q, "1,-2", "v")) == "1,-2");
    CHECK(split_list(" det, theta ") == std::vector<std::string>{"det", "theta"});
    CHECK_THROWS_AS(split_list("det,,fg"), InputError);
}

TEST_CASE("structure-constant documents round-trip")
{
    ENParams p = ENParams::zero(2);
    p.A(0, 1) = q.from_int(2);
    p.alpha = q.from_fraction(-1, 3);
    p.gamma = {q.one(), q.from_int(-1)};
    p.Lambda(1, 0) = q.from_fraction(1, 2);
    StructureConstantDocument doc = export_en_document(p);
    Json j = emit_document(doc);
    StructureConstantDocument back = parse_document(j);
    CHECK(*back.hopf == *doc.hopf);
    CHECK(back.hopf->labels == doc.hopf->labels);
    CHECK(back.functionals.at("sigma") == doc.functionals.at("sigma"));
    CHECK(back.functionals.at("r") == doc.functionals.at("r"));
    REQUIRE(back.comodule_algebra);
    CHECK(back.comodule_algebra->algebra.algebra == doc.comodule_algebra->algebra.algebra);
    CHECK(back.comodule_algebra->side == CoactionSide::plain);
    CHECK(emit_document(back) == j);

    StructureConstantDocument f7 = parse_document(emit_document(export_en_document(ENParams::zero(1, Field::prime(7)))));
    CHECK(f7.hopf->field() == Field::prime(7));
}

TEST_CASE("schema violations cite JSON pointers")
{
    Json base = e1_json();
    CHECK(pointer_of(base) == "<no error>");

    Json j = base;
    j.erase("mult");
    CHECK(pointer_of(j) == "");

    j = base;
    j["schema"] = "something/else";
    CHECK(pointer_of(j) == "/schema");

    j = base;
    j["field"] = "prime:8";
    CHECK(pointer_of(j) == "/field");

    j = base;
    j["mult"][1][2] = Json{{"zz", 1}};
    CHECK(pointer_of(j) == "/mult/1/2/zz");

    j = base;
    j["mult"][2].erase(3);
    CHECK(pointer_of(j) == "/mult/2");

    j = base;
    j["comult"][0][0] = Json::array({1, "1"});
    CHECK(pointer_of(j) == "/comult/0/0");

    j = base;
    j["counit"][1] = "1.5";
    CHECK(pointer_of(j) == "/counit/1");

    j = base;
    j["labels"][3] = "x1";
    CHECK(pointer_of(j) == "/labels/3");

    j = base;
    j["functionals"]["sigma"]["c;c"] = 1;
    CHECK(pointer_of(j) == "/functionals/sigma/c;c");

    j = base;
    j["comodule_algebra"]["side"] = "left";
    CHECK(pointer_of(j) == "/comodule_algebra/side");

    j = base;
    j["extra_member"] = 1;
    CHECK(pointer_of(j) == "/extra_member");

    j = base;
    j["antipode"][2] = Json{{"a/b", 1}};
    CHECK(pointer_of(j) == "/antipode/2/a~1b");
}

TEST_CASE("verify on the shipped-style E(1) document passes")
{
    VerdictReport r = cmd_verify(export_en_document(ENParams::zero(1)));
    CHECK(r.exit_code == 0);
    CHECK(r.verdict == "pass");
    CHECK(r.all_checks_passed());
    CHECK(find_check(r, "hopf.antipode"));
    CHECK(find_check(r, "cocycle.convolution-invertible"));
    CHECK(find_check(r, "comodule.coaction-multiplicative") != nullptr);

    VerdictReport only = cmd_verify(export_en_document(ENParams::zero(1)), {"hopf"});
    for (const auto& c : only.checks) CHECK(c.name.rfind("hopf.", 0) == 0);
    CHECK_THROWS_AS(cmd_verify(export_en_document(ENParams::zero(1)), {"nonsense"}), InputError);
}

TEST_CASE("verify reports a corrupted antipode with a witness")
{
    Json j = e1_json();
    j["antipode"][2] = Json{{"x1", "1"}};
    VerdictReport r = cmd_verify(parse_document(j), {"hopf"});
    CHECK(r.exit_code == 1);
    const CheckResult* c = find_check(r, "hopf.antipode");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->witness.find("x1") != std::string::npos);
}

TEST_CASE("verify reports a non-invertible cocycle")
{
    Json j = e1_json();
    j["functionals"]["sigma"] = Json::object();
    VerdictReport r = cmd_verify(parse_document(j), {"cocycle"});
    CHECK(r.exit_code == 1);
    const CheckResult* c = find_check(r, "cocycle.convolution-invertible");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->witness.find("not convolution invertible") != std::string::npos);
}

TEST_CASE("en-check verdicts and exit codes")
{
    VerdictReport yes = cmd_en_check(h4(1, 0, 0, 1), kAllRoutes);
    CHECK(yes.exit_code == exit_azumaya);
    CHECK(yes.routes.size() == 5);
    for (const auto& [name, v] : yes.routes) CHECK(v);
    CHECK(yes.determinants.at("criterion") == "2");

    VerdictReport no = cmd_en_check(h4(1, 0, 0, 0), kAllRoutes);
    CHECK(no.exit_code == exit_not_azumaya);
    CHECK(no.verdict == "not-azumaya");
    CHECK(no.determinants.at("theta_sigma") == "0");

    ENParams p = ENParams::zero(2);
    p.Lambda = Matrix::identity(q, 2);
    VerdictReport lam = cmd_en_check(p);
    CHECK(lam.exit_code == exit_azumaya);
    CHECK(lam.determinants.at("criterion") == "16");

    CHECK_THROWS_AS(cmd_en_check(h4(0, 0, 0, 1)), ParameterError);
    CHECK_THROWS_AS(cmd_en_check(h4(1, 0, 0, 1), {"bogus"}), InputError);
    CHECK_THROWS_AS(cmd_en_check(h4(1, 0, 0, 1), {}), InputError);
}

TEST_CASE("split route verdicts are a disagreement")
{
    VerdictReport r;
    r.routes = {{"det", true}, {"F", false}};
    finalize_routes(r);
    CHECK(r.exit_code == exit_disagreement);
    CHECK(r.verdict == "disagreement");
    CHECK(find_check(r, "routes-agree")->witness.find("F=false") != std::string::npos);

    VerdictReport failed;
    failed.routes = {{"det", true}};
    failed.checks.push_back({"cocycle.left-cocycle", false, "(c, c, c)"});
    finalize_routes(failed);
    CHECK(failed.exit_code == exit_disagreement);
}

TEST_CASE("table reproduces closed forms")
{
    VerdictReport r = cmd_table(ENParams::h4(q.from_int(2), q.from_int(3), q.from_int(1), q.from_int(5)), true);
    CHECK(r.exit_code == 0);
    CHECK(r.extra.at("rsigma").size() == 9);
    CHECK(r.extra.at("sigma").size() == 18);
    for (const auto& row : r.extra.at("rsigma"))
        if (row.at("family") == "r(x_j,c)") CHECK(row.at("computed") == "-3/2");

    // Trivial sigma leaves r_A.
    ENParams trivial = ENParams::zero(2);
    trivial.A = parse_matrix_arg(q, "1,2;-1,3", "A");
    VerdictReport t = cmd_table(trivial);
    for (const auto& row : t.extra.at("rsigma")) {
        if (row.at("family") != "r(x_i,x_j)") continue;
        std::size_t i = row.at("left").get<std::string>().back() - '1';
        std::size_t j = row.at("right").get<std::string>().back() - '1';
        CHECK(row.at("computed") == trivial.A(i, j).to_string());
    }
}

TEST_CASE("reports round-trip through JSON")
{
    std::vector<VerdictReport> reports{cmd_en_check(h4(2, 1, 1, 3), kAllRoutes), cmd_table(ENParams::zero(1), true),
                                       cmd_verify(export_en_document(ENParams::zero(1)))};
    SweepSpec s;
    s.alphas = {1};
    s.gammas = {0, 1};
    reports.push_back(cmd_sweep(s));
    for (const auto& r : reports) {
        Json j = to_json(r);
        CHECK(report_from_json(j) == r);
        CHECK(to_json(report_from_json(Json::parse(j.dump()))) == j);
    }

    Json bad = to_json(reports[0]);
    bad["checks"][1]["passed"] = "yes";
    try {
        report_from_json(bad);
        FAIL("expected a DocumentError");
    } catch (const DocumentError& e) {
        CHECK(e.pointer() == "/checks/1/passed");
    }
    bad = to_json(reports[0]);
    bad.erase("verdict");
    CHECK_THROWS_AS(report_from_json(bad), DocumentError);
}

TEST_CASE("reports are deterministic and independent of the worker count")
{
    CHECK(untimed(cmd_en_check(h4(2, 1, 1, 3))) == untimed(cmd_en_check(h4(2, 1, 1, 3))));

    SweepSpec s;
    s.n = 2;
    s.points = 4;
    s.seed = 11;
    VerdictReport one = cmd_sweep(s);
    s.jobs = 3;
    VerdictReport three = cmd_sweep(s);
    CHECK(untimed(one) == untimed(three));
    CHECK(one.extra.at("summary").at("evaluated") == 4);
    s.seed = 12;
    CHECK(cmd_sweep(s).extra.at("points") != one.extra.at("points"));
}

TEST_CASE("sweep skips points that do not embed in the field")
{
    SweepSpec s;
    s.field = Field::prime(7);
    s.alphas = {1, 7};
    s.gammas = {0};
    s.lambdas = {0, mpq_class(1, 7)};
    s.ts = {1};
    VerdictReport r = cmd_sweep(s);
    CHECK(r.extra.at("summary").at("evaluated") == 1);
    CHECK(r.extra.at("summary").at("skipped") == 3);
    CHECK(r.exit_code == 0);
}
