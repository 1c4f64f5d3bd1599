#include "doctest.h"
#include "oracles.hpp"

#include "bqk/boltzmann.hpp"
#include "bqk/coloring.hpp"
#include "bqk/io.hpp"

using namespace bqk;

namespace {

Biquasile order2() { return biquasile_from_json(read_json(data_dir() / "biquasiles" / "order2.json")); }

BoltzmannWeight weight(const std::string& name) {
    return weight_from_json(read_json(data_dir() / "weights" / (name + ".json")));
}

DualGraphDiagram link(const std::string& name) {
    auto links = bundled_links();
    auto* e = find_entry(links, name);
    REQUIRE(e);
    return to_dual_graph(e->diagram);
}

}  // namespace

TEST_SUITE("boltzmann") {

TEST_CASE("125 weights over Z5 on the order-2 biquasile") {
    auto B = order2();
    auto S = solve_weights(B, 5);
    CHECK(S.count == 125);
    auto phi = weight("phi_z5");
    CHECK(weight_in_space(B, phi));
    CHECK(check_weight(B, phi));
    CHECK(oracle::weight_ok(B.star_table(), B.dot_table(), phi.coeffs, 5));
}

TEST_CASE("solution count equals brute-force filtering") {
    for (const auto& B : enumerate_biquasiles(2))
        for (int64_t m : {2, 3}) {
            uint64_t brute = 0;
            oracle::each_vector(m, 8, [&](const oracle::Vec& v) {
                brute += oracle::weight_ok(B.star_table(), B.dot_table(), v, m);
            });
            CHECK(solve_weights(B, m).count == brute);
        }
}

TEST_CASE("every generator passes the axiom checker") {
    auto B = alexander({3, 2, 2, 1});
    auto S = solve_weights(B, 3);
    for (const auto& g : S.generators) {
        BoltzmannWeight W{3, 3, g};
        CHECK(check_weight(B, W));
    }
}

TEST_CASE("the three Z6 weights are Boltzmann weights") {
    auto B = order2();
    for (const char* name : {"phi1_z6", "phi2_z6", "phi3_z6"}) {
        CAPTURE(name);
        auto W = weight(name);
        CHECK(check_weight(B, W));
        CHECK(weight_in_space(B, W));
        CHECK(oracle::weight_ok(B.star_table(), B.dot_table(), W.coeffs, 6));
    }
}

TEST_CASE("broken weights produce witnesses") {
    auto B = order2();
    auto W = BoltzmannWeight::from_terms(2, 5, {{{1, 1, 1}, 1}});
    auto v = check_weight(B, W);
    CHECK_FALSE(v);
    CHECK_FALSE(oracle::weight_ok(B.star_table(), B.dot_table(), W.coeffs, 5));
    CHECK_FALSE(weight_in_space(B, W));
    auto bad = BoltzmannWeight::zero(3, 5);
    CHECK(check_weight(B, bad).kind == WeightVerdict::incomplete);
    // phi(1,1,2) carries weight under axiom (i) for the order-2 biquasile
    auto V = check_weight(B, BoltzmannWeight::from_terms(2, 5, {{{1, 1, 2}, 1}}));
    CHECK(V.kind == WeightVerdict::axiom_i);
}

TEST_CASE("linear weights pass the axioms and lie in the solution space") {
    for (int64_t m = 2; m <= 5; ++m)
        for (const auto& p : unit_triples(m)) {
            auto B = alexander(p);
            for (int64_t g = 0; g < m; ++g) {
                auto W = linear_weight(p, g);
                CHECK(check_weight(B, W));
                if (m <= 3) CHECK(weight_in_space(B, W));
            }
        }
}

TEST_CASE("linear weights are linear in gamma") {
    const AlexanderParams p{7, 3, 2, 5};
    for (int64_t g = 0; g < 7; ++g)
        for (int64_t h = 0; h < 7; ++h) {
            auto U = linear_weight(p, g), V = linear_weight(p, h), W = linear_weight(p, g + h);
            for (std::size_t i = 0; i < W.coeffs.size(); ++i) CHECK(W.coeffs[i] == (U.coeffs[i] + V.coeffs[i]) % 7);
        }
    auto Z = linear_weight(p, 0);
    CHECK(Z == BoltzmannWeight::zero(7, 7));
}

TEST_CASE("linear weight formula on residues") {
    const AlexanderParams p{5, 2, 3, 4};
    const int64_t g = 3, si = inverse_mod(3, 5), ni = inverse_mod(4, 5);
    auto W = linear_weight(p, g);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) {
                int64_t rx = residue_of(x, 5), ry = residue_of(y, 5), rz = residue_of(z, 5);
                int64_t want = mod(-g * (si * ni + 2 * 4) * rx + g * si * 2 * ry + g * rz, 5);
                CHECK(W(x, y, z) == want);
            }
}

TEST_CASE("enhanced polynomials separate Hopf from the (4,2) torus link") {
    auto B = order2();
    auto phi = weight("phi_z5");
    auto hopf = enhanced_polynomial(link("L2a1"), B, phi);
    auto torus = enhanced_polynomial(link("L4a1"), B, phi);
    CHECK(hopf.text() == "4 + 4u");
    CHECK(torus.text() == "4 + 4u^2");
    CHECK(hopf.at_one() == 8);
    CHECK(torus.at_one() == 8);
    CHECK(hopf == parse_polynomial("4 + 4u", 5));
}

TEST_CASE("pictured Hopf colorings have weights 0 and 1") {
    auto B = order2();
    auto phi = weight("phi_z5");
    auto G = link("L2a1");
    std::set<int64_t> ws;
    for (const auto& f : enumerate_colorings(G, B)) ws.insert(coloring_weight(G, phi, f));
    CHECK(ws == std::set<int64_t>{0, 1});
}

TEST_CASE("Z6 table spot values") {
    auto B = order2();
    CHECK(enhanced_polynomial(link("L7a7"), B, weight("phi1_z6")).text() == "12 + 4u^2");
    CHECK(enhanced_polynomial(link("L6a5"), B, weight("phi1_z6")).text() == "4 + 12u^2");
    CHECK(enhanced_polynomial(link("L2a1"), B, weight("phi2_z6")).text() == "4 + 4u^3");
    CHECK(enhanced_polynomial(link("L7a7"), B, weight("phi3_z6")).text() == "16");
}

TEST_CASE("polynomial text and parsing") {
    EnhancedPolynomial P{6, {{0, 4}, {2, 12}}};
    CHECK(P.text() == "4 + 12u^2");
    CHECK(parse_polynomial(P.text(), 6) == P);
    CHECK(EnhancedPolynomial{5, {{1, 1}}}.text() == "u");
    CHECK(EnhancedPolynomial{5, {}}.text() == "0");
    CHECK(parse_polynomial("16", 6).at_one() == 16);
    CHECK_THROWS(parse_polynomial("4 + + u", 6));
}

TEST_CASE("order mismatch is rejected") {
    CHECK_THROWS(enhanced_polynomial(link("L2a1"), alexander({3, 1, 1, 2}), weight("phi_z5")));
}

TEST_CASE("zero weight") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& B : enumerate_biquasiles(k)) {
            auto Z = BoltzmannWeight::zero(k, 2);
            CHECK(check_weight(B, Z));
            CHECK(weight_in_space(B, Z));
        }
    auto B = order2();
    auto G = link("L4a1");
    for (const auto& f : enumerate_colorings(G, B)) CHECK(coloring_weight(G, BoltzmannWeight::zero(2, 5), f) == 0);
}

TEST_CASE("random weights are judged like the oracle") {
    std::mt19937 rng(31);
    auto B = order2();
    int passes = 0;
    for (int t = 0; t < 400; ++t) {
        BoltzmannWeight W = BoltzmannWeight::zero(2, 5);
        for (auto& c : W.coeffs) c = rng() % 5;
        bool want = oracle::weight_ok(B.star_table(), B.dot_table(), W.coeffs, 5);
        CHECK(bool(check_weight(B, W)) == want);
        CHECK(weight_in_space(B, W) == want);
        passes += want;
    }
    CHECK(passes < 400);
}

TEST_CASE("linear weight over Z5 with d=2, s=3, n=4 lies in the solution space") {
    const AlexanderParams p{5, 2, 3, 4};
    auto W = linear_weight(p, 1);
    CHECK(check_weight(alexander(p), W));
    CHECK(weight_in_space(alexander(p), W));
}

TEST_CASE("pictured weights: 2 phi(1,1,2) = 0 and phi(2,2,2) + phi(1,2,2) = 1") {
    auto phi = weight("phi_z5");
    CHECK((2 * phi(0, 0, 1)) % 5 == 0);
    CHECK((phi(1, 1, 1) + phi(0, 1, 1)) % 5 == 1);
}

}
