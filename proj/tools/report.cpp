#include "report.hpp"

#include "sweil/builders.hpp"
#include "sweil/cohomology.hpp"
#include "sweil/sca.hpp"
#include "sweil/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace sweil::cli {

using nlohmann::ordered_json;
using algebra::BackendKind;
using algebra::GradedBackend;
using algebra::Scalar;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 7> kModes{{
    {Mode::verify_n2, "verify-n2"},
    {Mode::verify_s2a, "verify-s2a"},
    {Mode::verify_chain, "verify-chain"},
    {Mode::verify_relative, "verify-relative"},
    {Mode::sca_tables, "sca-tables"},
    {Mode::cohomology, "cohomology"},
    {Mode::kahler, "kahler"},
}};

using Clock = std::chrono::steady_clock;

const char* status(bool pass) { return pass ? "pass" : "fail"; }

ordered_json box_json(const verify::BoxSpec& b) {
    ordered_json j;
    j["emax"] = b.emax;
    j["b0max"] = b.b0max;
    j["relative"] = b.relative;
    return j;
}

}  // namespace

ordered_json relation_json(const verify::RelationReport& r, bool timing) {
    ordered_json j;
    j["check"] = r.check;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["box"] = box_json(r.box);
    j["states"] = r.states;
    j["relations"] = r.relations;
    j["status"] = status(r.pass);
    if (r.witness) {
        j["witness"] = {{"relation", r.witness->relation},
                        {"state", r.witness->state},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
    }
    if (timing) j["millis"] = static_cast<long long>(r.millis);
    return j;
}

namespace {

ordered_json simple_check(const std::string& name, bool pass, const std::string& detail = {}) {
    ordered_json j;
    j["check"] = name;
    j["status"] = status(pass);
    if (!detail.empty()) j["witness"] = detail;
    return j;
}

Scalar parse_alpha(const std::string& text) {
    const Scalar a(algebra::parse_rational(text));
    return a;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

struct Context {
    const RunConfig& cfg;
    GradedBackend backend;
    int emax;
    Outcome out;
    ordered_json checks = ordered_json::array();

    void add(const verify::RelationReport& r) {
        out.pass = out.pass && r.pass;
        checks.push_back(relation_json(r, cfg.timing));
    }
    void add(const std::string& name, bool pass, const std::string& detail = {}) {
        out.pass = out.pass && pass;
        checks.push_back(simple_check(name, pass, detail));
    }
    verify::Settings settings() const {
        verify::Settings s;
        s.window = cfg.window;
        s.box = {emax, cfg.b0max, cfg.relative};
        s.jobs = cfg.jobs;
        return s;
    }
};

void central_charge(Context& c, ordered_json& summary) {
    const Scalar got = verify::extract_central_charge(c.backend);
    const Scalar want = verify::claimed_central_charge(c.backend);
    summary["central_charge"] = got.str();
    summary["claimed_central_charge"] = want.str();
    c.add("central-charge", got == want, got == want ? "" : "extracted " + got.str() + ", claimed " + want.str());
}

void run_verify_n2(Context& c, ordered_json& summary) {
    require(c.backend.kind != BackendKind::witt, "verify-n2 needs an fmu or loop backend");
    central_charge(c, summary);
    c.add(verify::check_n2(c.backend, c.settings()));
}

void run_verify_s2a(Context& c, ordered_json& summary, const Scalar& alpha) {
    require(c.backend.kind == BackendKind::loop, "verify-s2a needs a loop backend");
    central_charge(c, summary);
    c.add(verify::check_s2a(c.backend, alpha, c.settings()));
    // S'(2,0) commutes with d
    if (alpha.is_zero()) c.add(verify::check_d_compat(c.backend, c.settings()));
}

void run_verify_chain(Context& c) {
    require(c.backend.is_lie(), "verify-chain needs a loop or witt backend");
    for (const auto& r : verify::check_chain(c.backend, c.settings())) c.add(r);
}

void run_verify_relative(Context& c) {
    require(c.backend.has_identity_form(), "verify-relative needs a loop backend with an orthonormal form");
    for (const auto& r : verify::check_relative_derext(c.backend, c.settings())) c.add(r);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot read golden file '" + path + "'");
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

void run_sca_tables(Context& c, ordered_json& summary, const Scalar& alpha) {
    const int w = c.cfg.window;
    const auto diff = sca::vf_table_diff(alpha, w);
    ordered_json jd = ordered_json::array();
    for (const auto& d : diff) jd.push_back({{"pair", d.pair}, {"table", d.table}, {"oracle", d.oracle}});
    c.add("table-vs-vector-fields", diff.empty(), diff.empty() ? "" : diff.front().pair);
    c.out.doc["oracle_diff"] = jd;

    auto lines = sca::table_lines(alpha, w);
    summary["brackets"] = lines.size();
    if (!c.cfg.golden.empty()) {
        auto golden = read_lines(c.cfg.golden);
        std::sort(lines.begin(), lines.end());
        std::sort(golden.begin(), golden.end());
        std::vector<std::string> extra, missing;
        std::set_difference(lines.begin(), lines.end(), golden.begin(), golden.end(), std::back_inserter(extra));
        std::set_difference(golden.begin(), golden.end(), lines.begin(), lines.end(), std::back_inserter(missing));
        ordered_json gd = ordered_json::array();
        for (const auto& l : missing) gd.push_back("- " + l);
        for (const auto& l : extra) gd.push_back("+ " + l);
        c.add("golden-table", gd.empty(), gd.empty() ? "" : gd[0].get<std::string>());
        c.out.doc["golden_diff"] = gd;
    }

    const auto jac = sca::check_super_jacobi(alpha, w);
    c.add("super-jacobi", jac.pass, jac.witness);
    const auto der = sca::check_derext_derivations(alpha, w);
    c.add("exterior-derivations", der.pass, der.witness);
    const auto flow = sca::check_spectral_flow(alpha, w);
    c.add("spectral-flow", flow.pass, flow.witness);
    if (sca::is_integer(alpha)) {
        const auto f = sca::check_F_identification(alpha, w);
        c.add("F-as-vector-field", f.pass, f.witness);
    }
}

ordered_json row_json(const cohomology::PieceRow& r) {
    ordered_json j;
    j["E"] = r.energy;
    j["DegS"] = r.deg_s;
    if (r.ab) {
        j["a"] = r.ab->first;
        j["b"] = r.ab->second;
    }
    j["DegLambda"] = r.deg_l;
    j["dim"] = r.dim;
    j["rank_in"] = r.rank_in;
    j["rank_out"] = r.rank_out;
    j["coh_dim"] = r.coh_dim;
    if (r.gram) j["gram_signature"] = r.gram->str();
    if (r.harmonic) j["harmonic_dim"] = *r.harmonic;
    if (!r.flag.empty()) j["flag"] = r.flag;
    return j;
}

void run_cohomology(Context& c, ordered_json& summary) {
    require(c.backend.is_lie(), "cohomology needs a loop or witt backend");
    require(!c.cfg.relative || c.backend.kind == BackendKind::loop, "the relative complex needs a loop backend");
    cohomology::Ranges r;
    r.emin = 0;
    r.emax = c.emax;
    r.smin = -c.cfg.b0max;
    r.smax = c.cfg.b0max;
    r.relative = c.cfg.relative;
    r.hodge = c.cfg.relative && c.backend.has_identity_form();
    r.oracle = true;
    const auto rep = cohomology::cohomology_table(c.backend, fieldops::build_differential_d(c.backend).d, r);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) rows.push_back(row_json(row));
    summary["rows"] = rep.rows.size();
    summary["matrices"] = rep.matrices;
    c.add("d-squared-zero", rep.d_squared_zero);
    c.add("dense-oracle", rep.oracle_ran && rep.oracle_agrees);
    if (r.hodge) c.add("hodge-consistent", rep.hodge_consistent);

    const auto boxes = cohomology::koszul_acyclicity(c.backend);
    ordered_json kj = ordered_json::array();
    std::string first_bad;
    bool all = true;
    for (const auto& k : boxes) {
        kj.push_back({{"component", k.comp + 1},
                      {"mode", k.mode},
                      {"dim", k.dim},
                      {"rank", k.rank},
                      {"coh_dim", k.coh_dim},
                      {"status", status(k.pass())}});
        if (!k.pass() && all) first_bad = "component " + std::to_string(k.comp + 1) + " mode " + std::to_string(k.mode);
        all = all && k.pass();
    }
    c.add("koszul-acyclic", all, first_bad);
    c.out.doc["rows"] = rows;
    c.out.doc["koszul"] = kj;
}

void run_kahler(Context& c) {
    require(c.backend.kind == BackendKind::loop, "kahler needs a loop backend");
    require(c.backend.has_identity_form(), "kahler needs an orthonormal invariant form");
    const auto rep = cohomology::kahler_report(c.backend, c.emax, c.cfg.b0max, c.cfg.jobs);
    for (const auto& k : rep.checks) c.add(k.name, k.pass, k.pass ? "" : k.detail);
    ordered_json pieces = ordered_json::array();
    for (const auto& p : rep.pieces)
        pieces.push_back({{"E", p.energy}, {"DegLambda", p.deg_l}, {"dim", p.dim}, {"gram_signature", p.gram.str()}});
    c.out.doc["pieces"] = pieces;

    cohomology::Ranges r;
    r.emax = c.emax;
    r.smin = -c.cfg.b0max;
    r.smax = c.cfg.b0max;
    r.relative = true;
    ordered_json lef = ordered_json::array();
    for (const auto& row : cohomology::lefschetz_report(c.backend, r)) {
        ordered_json j;
        j["E"] = row.energy;
        j["DegS"] = row.deg_s;
        j["DegLambda"] = row.deg_l;
        if (row.hh_eigenvalue) j["HH"] = row.hh_eigenvalue->str();
        j["EE_closed"] = row.ee_closed;
        j["EE_exact"] = row.ee_exact;
        j["FF_closed"] = row.ff_closed;
        j["FF_exact"] = row.ff_exact;
        j["sl2_on_cohomology"] = row.sl2_on_cohomology;
        lef.push_back(std::move(j));
    }
    // informational: FF need not preserve cocycles on the nose
    c.out.doc["lefschetz"] = lef;
}

std::string csv_cell(const ordered_json& row, const char* key) {
    if (!row.contains(key)) return "";
    const auto& v = row[key];
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render_csv(const ordered_json& doc) {
    std::ostringstream os;
    if (doc["mode"] == "cohomology") {
        static const char* cols[] = {"E",       "DegS",     "a",       "b",           "DegLambda",   "dim",
                                     "rank_in", "rank_out", "coh_dim", "gram_signature", "harmonic_dim"};
        for (std::size_t i = 0; i < std::size(cols); ++i) os << (i ? "," : "") << cols[i];
        os << "\n";
        for (const auto& row : doc.value("rows", ordered_json::array())) {
            for (std::size_t i = 0; i < std::size(cols); ++i) os << (i ? "," : "") << csv_cell(row, cols[i]);
            os << "\n";
        }
        return os.str();
    }
    os << "check,status,states,relations,witness\n";
    for (const auto& ch : doc["checks"]) {
        std::string w;
        if (ch.contains("witness"))
            w = ch["witness"].is_string() ? ch["witness"].get<std::string>()
                                          : ch["witness"]["relation"].get<std::string>() + " on " +
                                                ch["witness"]["state"].get<std::string>();
        os << csv_quote(ch["check"].get<std::string>()) << "," << ch["status"].get<std::string>() << ","
           << csv_cell(ch, "states") << "," << csv_cell(ch, "relations") << "," << csv_quote(w) << "\n";
    }
    return os.str();
}

std::string render_text(const ordered_json& doc) {
    std::ostringstream os;
    os << doc["mode"].get<std::string>() << " on " << doc["backend"].get<std::string>() << "\n";
    for (const auto& [k, v] : doc["params"].items()) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& ch : doc["checks"]) {
        os << (ch["status"] == "pass" ? "PASS " : "FAIL ") << ch["check"].get<std::string>();
        if (ch.contains("states")) os << "  (" << ch["states"] << " states, " << ch["relations"] << " relations)";
        os << "\n";
        if (ch.contains("witness")) {
            const auto& w = ch["witness"];
            if (w.is_string()) {
                os << "     " << w.get<std::string>() << "\n";
            } else {
                os << "     relation " << w["relation"].get<std::string>() << "\n"
                   << "     state    " << w["state"].get<std::string>() << "\n"
                   << "     lhs      " << w["lhs"].get<std::string>() << "\n"
                   << "     rhs      " << w["rhs"].get<std::string>() << "\n";
            }
        }
    }
    if (doc.contains("rows")) {
        os << "  E  S    a/b  L   dim  in  out  coh  gram      harm\n";
        for (const auto& r : doc["rows"]) {
            char buf[160];
            const std::string ab = r.contains("a") ? csv_cell(r, "a") + "/" + csv_cell(r, "b") : "-";
            std::snprintf(buf, sizeof buf, "%3d %2d %6s %2d %5d %3d %4d %4d  %-9s %4s\n", r["E"].get<int>(),
                          r["DegS"].get<int>(), ab.c_str(), r["DegLambda"].get<int>(), r["dim"].get<int>(),
                          r["rank_in"].get<int>(), r["rank_out"].get<int>(), r["coh_dim"].get<int>(),
                          csv_cell(r, "gram_signature").c_str(), csv_cell(r, "harmonic_dim").c_str());
            os << buf;
        }
    }
    for (const auto& [k, v] : doc["summary"].items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view name) {
    for (const auto& [m, n] : kModes)
        if (n == name) return m;
    return std::nullopt;
}

std::string_view mode_name(Mode m) {
    for (const auto& [mm, n] : kModes)
        if (mm == m) return n;
    return "?";
}

Outcome run(const RunConfig& cfg) {
    require(cfg.b0max >= 0 && cfg.window >= 0 && cfg.jobs >= 1, "budgets must be nonnegative and jobs positive");
    const bool heavy = cfg.mode == Mode::cohomology || cfg.mode == Mode::kahler;
    const int emax = cfg.emax.value_or(heavy ? 2 : 3);
    require(emax >= 0, "emax must be nonnegative");
    Context c{cfg, algebra::parse_backend(cfg.backend), emax, {}};
    const bool uses_alpha = cfg.mode == Mode::verify_s2a || cfg.mode == Mode::sca_tables;
    const Scalar alpha = parse_alpha(cfg.alpha);

    ordered_json& doc = c.out.doc;
    doc["mode"] = std::string(mode_name(cfg.mode));
    doc["backend"] = cfg.mode == Mode::sca_tables ? std::string("none") : c.backend.label;
    ordered_json params;
    if (uses_alpha) params["alpha"] = alpha.str();
    if (cfg.mode != Mode::sca_tables) {
        params["emax"] = emax;
        params["b0max"] = cfg.b0max;
    }
    if (cfg.mode != Mode::cohomology && cfg.mode != Mode::kahler) params["window"] = cfg.window;
    if (cfg.mode == Mode::cohomology || cfg.mode == Mode::verify_relative || cfg.mode == Mode::kahler)
        params["relative"] = cfg.mode != Mode::cohomology || cfg.relative;
    doc["params"] = params;

    const auto t0 = Clock::now();
    ordered_json summary;
    try {
        switch (cfg.mode) {
            case Mode::verify_n2: run_verify_n2(c, summary); break;
            case Mode::verify_s2a: run_verify_s2a(c, summary, alpha); break;
            case Mode::verify_chain: run_verify_chain(c); break;
            case Mode::verify_relative: run_verify_relative(c); break;
            case Mode::sca_tables: run_sca_tables(c, summary, alpha); break;
            case Mode::cohomology: run_cohomology(c, summary); break;
            case Mode::kahler: run_kahler(c); break;
        }
    } catch (const algebra::unsupported_operation& e) {
        throw std::invalid_argument(e.what());
    }
    doc["checks"] = c.checks;
    summary["status"] = status(c.out.pass);
    if (cfg.timing) summary["millis"] = static_cast<long long>(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    doc["summary"] = summary;
    // the arrays after "checks" read better at the end
    for (const char* k : {"rows", "koszul", "pieces", "lefschetz", "oracle_diff", "golden_diff"}) {
        if (!doc.contains(k)) continue;
        ordered_json v = doc[k];
        doc.erase(k);
        doc[k] = std::move(v);
    }
    return std::move(c.out);
}

std::string render(const Outcome& o, std::string_view format) {
    if (format == "json") return o.doc.dump(2) + "\n";
    if (format == "csv") return render_csv(o.doc);
    if (format == "text") return render_text(o.doc);
    throw std::invalid_argument("unknown format '" + std::string(format) + "'");
}

}  // namespace sweil::cli
