#include "report.hpp"

#include "sweil/builders.hpp"
#include "sweil/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace sweil;
using namespace sweil::cli;
using nlohmann::ordered_json;

namespace {

RunConfig cfg(Mode m, const std::string& backend, int emax) {
    RunConfig c;
    c.mode = m;
    c.backend = backend;
    c.emax = emax;
    c.b0max = 1;
    c.window = 1;
    return c;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split_csv(const std::string& l) {
    std::vector<std::string> out(1);
    for (char c : l) {
        if (c == ',') out.emplace_back();
        else out.back() += c;
    }
    return out;
}

}  // namespace

TEST_CASE("mode names") {
    for (Mode m : {Mode::verify_n2, Mode::verify_s2a, Mode::verify_chain, Mode::verify_relative, Mode::sca_tables,
                   Mode::cohomology, Mode::kahler})
        CHECK(parse_mode(mode_name(m)) == m);
    CHECK_FALSE(parse_mode("verify"));
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(run(cfg(Mode::verify_n2, "loop:so3", 1)), std::invalid_argument);
    CHECK_THROWS_AS(run(cfg(Mode::verify_s2a, "fmu:0:0", 1)), std::invalid_argument);
    CHECK_THROWS_AS(run(cfg(Mode::cohomology, "fmu:0:0", 1)), std::invalid_argument);
    CHECK_THROWS_AS(run(cfg(Mode::kahler, "witt", 1)), std::invalid_argument);
    RunConfig c = cfg(Mode::verify_s2a, "loop:sl2", 1);
    c.alpha = "1/0";
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    c.alpha = "0";
    c.jobs = 0;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
    CHECK_THROWS_AS(render(Outcome{}, "xml"), std::invalid_argument);
}

TEST_CASE("cohomology CSV for the abelian relative complex") {
    RunConfig c = cfg(Mode::cohomology, "loop:abelian:1", 2);
    c.relative = true;
    c.b0max = 2;
    const Outcome o = run(c);
    CHECK(o.pass);
    const auto lines = split_lines(render(o, "csv"));
    REQUIRE(lines.size() > 1);
    CHECK(lines[0] == "E,DegS,a,b,DegLambda,dim,rank_in,rank_out,coh_dim,gram_signature,harmonic_dim");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 11);
        CHECK(cells[5] == cells[8]);
    }
    CHECK(lines.size() - 1 == o.doc["rows"].size());
}

TEST_CASE("empty documents stay valid") {
    Outcome o;
    o.doc["mode"] = "cohomology";
    o.doc["backend"] = "loop:sl2";
    o.doc["params"] = ordered_json::object();
    o.doc["checks"] = ordered_json::array();
    o.doc["summary"] = ordered_json::object();
    o.doc["rows"] = ordered_json::array();
    CHECK(ordered_json::parse(render(o, "json")) == o.doc);
    CHECK(render(o, "csv") == "E,DegS,a,b,DegLambda,dim,rank_in,rank_out,coh_dim,gram_signature,harmonic_dim\n");
    CHECK_NOTHROW(render(o, "text"));
}

TEST_CASE("a failing check carries its witness monomial") {
    const auto b = algebra::parse_backend("loop:abelian:1");
    verify::Settings s;
    s.window = 1;
    s.box = {2, 1, false};
    auto rep = [&](Sym sy, int n) { return fieldops::build_n2_family(b, sy, n); };
    auto table = [](const sca::Gen& x, const sca::Gen& y) { return sca::n2_bracket(x.sym, x.n, y.sym, y.n); };
    // wrong central charge
    const auto r = verify::check_representation("n2-wrong-c", b, {Sym::L, Sym::H, Sym::h, Sym::p}, rep, table, algebra::Scalar(4), s, true);
    REQUIRE_FALSE(r.pass);
    const ordered_json j = relation_json(r, false);
    CHECK(j["status"] == "fail");
    REQUIRE(j.contains("witness"));
    CHECK_NOTHROW(fock::parse_monomial(j["witness"]["state"].get<std::string>()));
    CHECK(j["witness"]["state"] == r.witness->state);
    CHECK_FALSE(j.contains("millis"));
    CHECK(relation_json(r, true).contains("millis"));
}

TEST_CASE("reports do not depend on the thread count") {
    for (Mode m : {Mode::verify_n2, Mode::verify_chain, Mode::kahler}) {
        RunConfig c = cfg(m, "loop:sl2", 1);
        c.jobs = 1;
        const std::string one = render(run(c), "json");
        c.jobs = 5;
        CHECK(render(run(c), "json") == one);
    }
}

TEST_CASE("fractions are written exactly") {
    RunConfig c = cfg(Mode::sca_tables, "loop:sl2", 0);
    c.alpha = "-3/6";
    c.window = 1;
    const Outcome o = run(c);
    CHECK(o.doc["params"]["alpha"] == "-1/2");
    CHECK(o.pass);
}
