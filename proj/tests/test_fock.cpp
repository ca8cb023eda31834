#include "doctest.h"
#include "sweil/fock.hpp"

#include <set>

using namespace sweil::fock;
using sweil::algebra::Scalar;

namespace {

GenKey g(int u, int m) { return {Family::gamma, u - 1, m}; }
GenKey b(int u, int m) { return {Family::beta, u - 1, m}; }
GenKey e(int u, int m) { return {Family::eps, u - 1, m}; }
GenKey t(int u, int m) { return {Family::tau, u - 1, m}; }

FockVector on(const GenKey& k, const std::string& text) { return apply_generator(k, FockVector(parse_monomial(text))); }

}  // namespace

TEST_CASE("creation and annihilation") {
    CHECK(on(t(1, 1), "| e(1,+1)") == FockVector(vacuum()));
    CHECK(on(g(1, -1), "vac").is_zero());
    // e2 e1 vac = -e1 e2 vac in the canonical order
    CHECK(on(e(1, 2), "| e(1,+1)") == FockVector(parse_monomial("| e(1,+1) e(1,+2)"), Scalar(-1)));
    CHECK(on(e(1, 1), "| e(1,+1)").is_zero());
    CHECK(on(t(1, -2), "| t(1,-2)").is_zero());
    // gamma_0 acts as d/d beta_0, beta_2 as -d/d gamma_2
    CHECK(on(g(1, 0), "b(1,0) b(1,0) |") == FockVector(parse_monomial("b(1,0) |"), Scalar(2)));
    CHECK(on(b(1, 2), "g(1,+2) |") == FockVector(vacuum(), Scalar(-1)));
}

TEST_CASE("canonical commutation relations on a box") {
    auto box = enumerate_box(2, {2, 1, false});
    std::vector<GenKey> keys;
    for (int u = 1; u <= 2; ++u)
        for (int m = -2; m <= 2; ++m) keys.insert(keys.end(), {g(u, m), b(u, m), e(u, m), t(u, m)});
    auto apply2 = [](const GenKey& x, const GenKey& y, const Monomial& m) {
        return apply_generator(x, apply_generator(y, FockVector(m)));
    };
    for (const Monomial& m : box) {
        for (const GenKey& x : keys)
            for (const GenKey& y : keys) {
                if (is_fermion(x.family) != is_fermion(y.family)) {
                    CHECK(apply2(x, y, m) + Scalar(-1) * apply2(y, x, m) == FockVector{});
                    continue;
                }
                const bool fer = is_fermion(x.family);
                FockVector lhs = apply2(x, y, m) + Scalar(fer ? 1 : -1) * apply2(y, x, m);
                FockVector rhs;
                const bool pair = x.comp == y.comp && x.mode == y.mode && x.family == dual(y.family);
                // eps tau + tau eps = 1, gamma beta - beta gamma = 1
                if (pair) rhs = FockVector(m, Scalar(fer || x.family == Family::gamma ? 1 : -1));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("normal ordering") {
    auto p = normal_order_pair(t(1, 1), e(1, 1));
    CHECK(p.first == e(1, 1));
    CHECK(p.second == t(1, 1));
    CHECK(p.sign == -1);
    auto q = normal_order_pair(b(1, 0), g(1, 0));
    CHECK(q.first == b(1, 0));
    CHECK(q.second == g(1, 0));
    CHECK(q.sign == 1);
    auto r = normal_order_pair(b(1, 1), g(1, 2));
    CHECK(r.first == g(1, 2));
    CHECK(r.sign == 1);
    CHECK_THROWS(normal_order_pair(b(1, 0), e(1, 1)));
}

TEST_CASE("degrees") {
    CHECK(energy_and_degrees(vacuum()) == Degrees{});
    CHECK(energy_and_degrees(parse_monomial("| e(1,+2) t(1,-1)")) == Degrees{3, 0, 0, 1, 1});
    auto d = energy_and_degrees(parse_monomial("g(1,+1) b(2,0) b(2,-2) | t(1,0)"));
    CHECK(d == Degrees{3, -1, -1, 0, 1});
    CHECK(energy_and_degrees(parse_monomial("| t(1,0)"), true).b == 0);
}

TEST_CASE("box enumeration") {
    auto b0 = enumerate_box(1, {0, 0, false});
    REQUIRE(b0.size() == 2);
    CHECK(b0[0] == vacuum());
    CHECK(to_text(b0[1]) == "| t(1,0)");
    CHECK(enumerate_box(1, {1, 0, false}).size() == 10);
    auto rel = enumerate_box(1, {1, 0, true});
    CHECK(rel.size() == 5);
    for (const auto& m : rel) CHECK(is_relative(m, 1));
    CHECK(rel[0] == relative_vacuum(1));
    CHECK_THROWS(enumerate_box(1, {-1, 0, false}));

    // independent oracle: closure of the vacuum under creators within budget
    for (int dim : {1, 2}) {
        for (int emax = 0; emax <= 3; ++emax) {
            Box box{emax, 2, false};
            auto fast = enumerate_box(dim, box);
            std::set<Monomial> seen(fast.begin(), fast.end());
            CHECK(seen.size() == fast.size());
            std::set<Monomial> oracle{vacuum()};
            std::vector<Monomial> frontier{vacuum()};
            while (!frontier.empty()) {
                Monomial cur = frontier.back();
                frontier.pop_back();
                for (int u = 0; u < dim; ++u)
                    for (int m = -emax; m <= emax; ++m)
                        for (Family f : {Family::gamma, Family::beta, Family::eps, Family::tau}) {
                            GenKey k{f, u, m};
                            if (!is_creator(k)) continue;
                            Monomial nxt = cur;
                            if (apply_generator(pack(k), nxt) == 0) continue;
                            if (energy(nxt) > emax || zero_boson_count(nxt) > 2) continue;
                            if (oracle.insert(nxt).second) frontier.push_back(nxt);
                        }
            }
            CHECK(oracle == seen);
            for (std::size_t i = 1; i < fast.size(); ++i) CHECK(energy(fast[i - 1]) <= energy(fast[i]));
        }
    }
}

TEST_CASE("degree-constrained boxes") {
    Box box{3, 2, false};
    auto all = enumerate_box(1, box);
    box.deg_s = 0;
    box.deg_l = 1;
    auto sub = enumerate_box(1, box);
    std::size_t count = 0;
    for (const auto& m : all) {
        auto d = energy_and_degrees(m);
        count += d.deg_s == 0 && d.deg_l == 1;
    }
    CHECK(sub.size() == count);
    CHECK(count > 0);
}

TEST_CASE("text format") {
    const std::string s = "g(1,+2) b(1,0) | e(1,+1) t(1,-3)";
    Monomial m = parse_monomial(s);
    CHECK(m.nb() == 2);
    CHECK(m.nf() == 2);
    CHECK(to_text(parse_monomial(to_text(m))) == to_text(m));
    CHECK(to_text(vacuum()) == "vac");
    CHECK_THROWS(parse_monomial("| t(1,-3) e(1,+1)"));
    CHECK_THROWS(parse_monomial("e(1,+1) |"));
    CHECK_THROWS(parse_monomial("g(1,-1) |"));
    CHECK(to_text(FockVector(m, Scalar::frac(-1, 2))) == "(-1/2)*[" + to_text(m) + "]");
}

TEST_CASE("hash is incremental") {
    Monomial a = parse_monomial("g(1,+2) b(1,0) | e(1,+1) t(1,-3)");
    Monomial b = a;
    apply_generator(pack({Family::tau, 0, 1}), b);
    apply_generator(pack({Family::eps, 0, 1}), b);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
}
