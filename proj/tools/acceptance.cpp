// Runs the acceptance suite and prints one line per criterion.
//
//   acceptance [--golden FILE] [--strict]
//
// Exit status is 0 when every criterion passes, or when the only failures are
// the documented ones in kKnownFailures (unless --strict).

#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace sweil::cli;
using nlohmann::ordered_json;

namespace {

// criterion -> the only check allowed to fail in it
const std::map<int, std::string> kKnownFailures{
    {9, "adjoint of theta(h_0) = -theta(p_0)"},
};

struct Job {
    std::string key;
    RunConfig cfg;
};

RunConfig make(Mode m, const std::string& backend, int emax = 3) {
    RunConfig c;
    c.mode = m;
    c.backend = backend;
    c.emax = emax;
    c.b0max = 2;
    c.window = 2;
    return c;
}

std::vector<Job> suite(const std::string& golden) {
    std::vector<Job> jobs;
    for (const char* fmu : {"fmu:0:0", "fmu:-1:1", "fmu:1/2:0"}) jobs.push_back({std::string("n2 ") + fmu, make(Mode::verify_n2, fmu)});
    for (const char* loop : {"loop:abelian:1", "loop:sl2"}) jobs.push_back({std::string("n2 ") + loop, make(Mode::verify_n2, loop)});
    for (const char* lie : {"loop:sl2", "witt"}) jobs.push_back({std::string("chain ") + lie, make(Mode::verify_chain, lie)});
    for (const char* a : {"0", "1", "1/2"}) {
        RunConfig c = make(Mode::verify_s2a, "loop:sl2");
        c.alpha = a;
        jobs.push_back({std::string("s2a ") + a, c});
    }
    for (const char* a : {"0", "1/2", "1"}) {
        RunConfig c = make(Mode::sca_tables, "loop:sl2");
        c.alpha = a;
        c.window = 3;
        if (std::strcmp(a, "1/2") == 0) c.golden = golden;
        jobs.push_back({std::string("tables ") + a, c});
    }
    jobs.push_back({"relative", make(Mode::verify_relative, "loop:sl2")});
    jobs.push_back({"kahler", make(Mode::kahler, "loop:sl2", 2)});
    for (const char* b : {"loop:abelian:1", "loop:sl2"}) {
        RunConfig c = make(Mode::cohomology, b, 2);
        c.relative = true;
        jobs.push_back({std::string("coh-rel ") + b, c});
    }
    jobs.push_back({"coh-abs loop:sl2", make(Mode::cohomology, "loop:sl2", 1)});
    return jobs;
}

struct Result {
    Outcome out;
    std::string json;
    double seconds = 0;
};

std::map<std::string, Result> run_all(const std::vector<Job>& jobs, int threads) {
    std::map<std::string, Result> out;
    for (Job j : jobs) {
        j.cfg.jobs = threads;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        r.out = run(j.cfg);
        r.json = render(r.out, "json");
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.emplace(j.key, std::move(r));
    }
    return out;
}

const ordered_json* find_check(const ordered_json& doc, const std::string& name) {
    for (const auto& c : doc["checks"])
        if (c["check"] == name) return &c;
    return nullptr;
}

bool check_passes(const ordered_json& doc, const std::string& name) {
    const auto* c = find_check(doc, name);
    return c && (*c)["status"] == "pass";
}

std::vector<std::string> failing(const ordered_json& doc) {
    std::vector<std::string> out;
    for (const auto& c : doc["checks"])
        if (c["status"] != "pass") out.push_back(c["check"].get<std::string>());
    return out;
}

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> failed{};  // failing checks, "key: check"
    double seconds = 0;
    std::string note{};
};

}  // namespace

int main(int argc, char** argv) {
    std::string golden;
    bool strict = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) {
            strict = true;
        } else if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc) {
            golden = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--golden FILE] [--strict]\n";
            return 2;
        }
    }

    const auto jobs = suite(golden);
    std::map<std::string, Result> r8;
    try {
        r8 = run_all(jobs, 8);
    } catch (const std::exception& e) {
        std::cerr << "acceptance: " << e.what() << "\n";
        return 1;
    }

    std::vector<Criterion> crit;
    // all checks of the given runs, optionally restricted to a set of names
    auto from_runs = [&](int id, std::string title, const std::vector<std::string>& keys,
                         const std::set<std::string>& only = {}) {
        Criterion c{id, std::move(title)};
        for (const auto& k : keys) {
            const Result& r = r8.at(k);
            c.seconds += r.seconds;
            for (const auto& f : failing(r.out.doc))
                if (only.empty() || only.count(f)) c.failed.push_back(k + ": " + f);
        }
        c.pass = c.failed.empty();
        return c;
    };
    auto require = [](Criterion& c, bool ok, const std::string& what) {
        if (!ok) {
            c.pass = false;
            c.failed.push_back(what);
        }
    };
    auto charge = [&](const std::string& key) { return r8.at(key).out.doc["summary"].value("central_charge", std::string("?")); };

    {
        Criterion c = from_runs(1, "N=2 module of central charge 3 - 6 lambda on F(lambda, mu)",
                                {"n2 fmu:0:0", "n2 fmu:-1:1", "n2 fmu:1/2:0"});
        require(c, charge("n2 fmu:0:0") == "3", "fmu:0:0 central charge " + charge("n2 fmu:0:0"));
        require(c, charge("n2 fmu:-1:1") == "9", "fmu:-1:1 central charge " + charge("n2 fmu:-1:1"));
        require(c, charge("n2 fmu:1/2:0") == "0", "fmu:1/2:0 central charge " + charge("n2 fmu:1/2:0"));
        crit.push_back(c);
    }
    {
        Criterion c = from_runs(2, "N=2 module of central charge 3 dim V on loop algebras",
                                {"n2 loop:abelian:1", "n2 loop:sl2"});
        require(c, charge("n2 loop:abelian:1") == "3", "abelian central charge " + charge("n2 loop:abelian:1"));
        require(c, charge("n2 loop:sl2") == "9", "sl2 central charge " + charge("n2 loop:sl2"));
        crit.push_back(c);
    }
    crit.push_back(from_runs(3, "chain identities for d, h, tau and theta", {"chain loop:sl2", "chain witt"}));
    {
        Criterion c = from_runs(4, "S'(2,alpha) module for alpha in {0, 1, 1/2}", {"s2a 0", "s2a 1", "s2a 1/2"},
                                {"central-charge", "s2a-relations"});
        for (const char* k : {"s2a 0", "s2a 1", "s2a 1/2"}) require(c, charge(k) == "9", std::string(k) + " central charge " + charge(k));
        crit.push_back(c);
    }
    {
        Criterion c{5, "S'(2,0) commutes with d"};
        require(c, check_passes(r8.at("s2a 0").out.doc, "d-compat"), "s2a 0: d-compat");
        crit.push_back(c);
    }
    crit.push_back(from_runs(6, "structure constants against vector fields, super-Jacobi, F as a vector field",
                             {"tables 0", "tables 1/2"},
                             {"table-vs-vector-fields", "golden-table", "super-jacobi", "F-as-vector-field"}));
    if (golden.empty()) crit.back().note = "no golden file given";
    {
        Criterion c = from_runs(7, "spectral flow is a homomorphism", {"tables 1/2", "tables 1"}, {"spectral-flow"});
        crit.push_back(c);
    }
    {
        Criterion c = from_runs(8, "exterior sl(2) on the relative complex, negative control", {"relative"});
        crit.push_back(c);
    }
    crit.push_back(from_runs(9, "Kahler package on relative boxes E <= 2", {"kahler"}));
    {
        Criterion c{10, "Koszul acyclicity on single-pair boxes"};
        for (const char* k : {"coh-rel loop:abelian:1", "coh-rel loop:sl2"})
            require(c, check_passes(r8.at(k).out.doc, "koszul-acyclic"), std::string(k) + ": koszul-acyclic");
        crit.push_back(c);
    }
    {
        Criterion c = from_runs(11, "cohomology engine: d = 0 case, dense oracle, d^2 = 0",
                                {"coh-rel loop:abelian:1", "coh-rel loop:sl2", "coh-abs loop:sl2"},
                                {"d-squared-zero", "dense-oracle"});
        bool all = true;
        for (const auto& row : r8.at("coh-rel loop:abelian:1").out.doc["rows"]) all = all && row["coh_dim"] == row["dim"];
        require(c, all, "abelian: coh_dim != dim on some row");
        require(c, !r8.at("coh-rel loop:abelian:1").out.doc["rows"].empty(), "abelian: no rows");
        crit.push_back(c);
    }
    {
        Criterion c{12, "--jobs 1 and --jobs 8 give byte-identical JSON"};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto r1 = run_all(jobs, 1);
            for (const auto& j : jobs)
                if (r1.at(j.key).json != r8.at(j.key).json) {
                    c.pass = false;
                    c.failed.push_back(j.key);
                }
        } catch (const std::exception& e) {
            require(c, false, e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        crit.push_back(c);
    }

    bool ok = true;
    for (const Criterion& c : crit) {
        bool known = false;
        if (!c.pass) {
            auto it = kKnownFailures.find(c.id);
            known = it != kKnownFailures.end() && !strict;
            for (const auto& f : c.failed) known = known && f.size() >= it->second.size() &&
                                                   f.compare(f.size() - it->second.size(), std::string::npos, it->second) == 0;
        }
        ok = ok && (c.pass || known);
        char head[32], secs[32];
        std::snprintf(head, sizeof head, "criterion %2d: %s", c.id, c.pass ? "PASS" : "FAIL");
        std::snprintf(secs, sizeof secs, "[%.1f s]", c.seconds);
        std::cout << head << "  " << c.title << "  " << secs;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        if (known) std::cout << "  (documented failure)";
        std::cout << "\n";
        for (const auto& f : c.failed) std::cout << "      failed: " << f << "\n";
    }
    std::cout << (ok ? "acceptance: ok" : "acceptance: FAILED") << "\n";
    return ok ? 0 : 1;
}
