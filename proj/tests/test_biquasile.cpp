#include "doctest.h"
#include "oracles.hpp"

#include "bqk/io.hpp"

using namespace bqk;

namespace {

Biquasile order2() { return biquasile_from_json(read_json(data_dir() / "biquasiles" / "order2.json")); }

}  // namespace

TEST_SUITE("biquasile") {

TEST_CASE("block matrix of Z3 with d=s=1, n=2") {
    auto B = alexander({3, 1, 1, 2});
    CHECK(render_block_matrix(B) ==
          "[ 1 3 2 | 2 3 1 ]\n"
          "[ 3 2 1 | 3 1 2 ]\n"
          "[ 2 1 3 | 1 2 3 ]\n");
}

TEST_CASE("block matrix of Z3 with d=s=2, n=1") {
    auto B = alexander({3, 2, 2, 1});
    CHECK(render_block_matrix(B) ==
          "[ 3 1 2 | 1 3 2 ]\n"
          "[ 2 3 1 | 3 2 1 ]\n"
          "[ 1 2 3 | 2 1 3 ]\n");
}

TEST_CASE("fixture files match the generated tables") {
    for (auto [name, p] : {std::pair{"alex_3_1_1_2", AlexanderParams{3, 1, 1, 2}},
                           std::pair{"alex_3_2_2_1", AlexanderParams{3, 2, 2, 1}}}) {
        CAPTURE(name);
        CHECK(biquasile_from_json(read_json(data_dir() / "biquasiles" / (std::string(name) + ".json"))) ==
              alexander(p));
    }
}

TEST_CASE("order-2 fixture is x*y = x+y, x.y = x+y+1") {
    // here element k stands for k - 1, unlike the Alexander labelling
    auto B = order2();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(B.star(x, y) == (x + y) % 2);
            CHECK(B.dot(x, y) == (x + y + 1) % 2);
        }
    CHECK(check_axioms(B));
}

TEST_CASE("every Alexander biquasile up to modulus 7 satisfies the axioms") {
    for (int64_t m = 2; m <= 7; ++m)
        for (const auto& p : unit_triples(m)) {
            auto B = alexander(p);
            CAPTURE(m);
            CHECK(check_axioms(B));
            CHECK(oracle::axioms_hold(B.star_table(), B.dot_table()));
        }
}

TEST_CASE("closed-form divisions of an Alexander biquasile") {
    const AlexanderParams p{5, 2, 3, 4};
    auto B = alexander(p);
    const int64_t m = 5, d = 2, s = 3, n = 4;
    const int64_t si = inverse_mod(s, m), ni = inverse_mod(n, m), di = inverse_mod(d, m);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            int64_t x = residue_of(i, m), y = residue_of(j, m);
            CHECK(B.star_ldiv(i, j) == index_of(d * s * n * x + ni * y, m));
            CHECK(B.dot_ldiv(i, j) == index_of(-d * si * x + si * y, m));
            CHECK(B.dot_rdiv(i, j) == index_of(di * x - di * s * y, m));
        }
}

TEST_CASE("divisions invert the operations") {
    auto B = alexander({7, 3, 5, 2});
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y) {
            CHECK(B.star(y, B.star_ldiv(y, x)) == x);
            CHECK(B.star(B.star_rdiv(x, y), y) == x);
            CHECK(B.dot(y, B.dot_ldiv(y, x)) == x);
            CHECK(B.dot(B.dot_rdiv(x, y), y) == x);
        }
    auto T = derived_divisions(B);
    CHECK(oracle::left_div(B.star_table(), 2, 5) == T.star_ldiv[1][4]);
}

TEST_CASE("malformed and non-Latin tables are classified") {
    Table good{{1, 2}, {2, 1}};
    CHECK(check_axioms(good, {{2, 1}, {1, 2}}));
    CHECK(check_axioms({{1, 2}}, good).kind == AxiomVerdict::malformed);
    CHECK(check_axioms({{1, 3}, {2, 1}}, good).kind == AxiomVerdict::malformed);
    CHECK(check_axioms({{1, 1}, {2, 2}}, good).kind == AxiomVerdict::not_latin);
    CHECK_THROWS_AS(Biquasile::from_tables({{1, 1}, {2, 2}}, good), std::invalid_argument);
}

TEST_CASE("axiom failures carry a genuine witness") {
    // Latin pairs chosen so that the exchange laws fail
    int failures = 0;
    for (const auto& S : latin_squares(3))
        for (const auto& D : latin_squares(3)) {
            auto v = check_axioms(S, D);
            CHECK(bool(v) == oracle::axioms_hold(S, D));
            if (v) continue;
            ++failures;
            auto [a, b, x, y] = v.witness;
            auto s = [&](int u, int w) { return oracle::op(S, u, w); };
            auto d = [&](int u, int w) { return oracle::op(D, u, w); };
            if (v.kind == AxiomVerdict::axiom_i)
                CHECK(s(a, d(x, s(y, d(a, b)))) != s(s(a, d(x, y)), d(x, s(y, d(s(a, d(x, y)), b)))));
            else
                CHECK(s(y, d(s(a, d(x, y)), b)) != s(s(y, d(a, b)), d(s(a, d(x, s(y, d(a, b)))), b)));
        }
    CHECK(failures > 0);
}

TEST_CASE("latin square counts") {
    CHECK(latin_squares(1).size() == 1);
    CHECK(latin_squares(2).size() == 2);
    CHECK(latin_squares(3).size() == 12);
    CHECK(latin_squares(4).size() == 576);
}

TEST_CASE("enumeration of small orders") {
    CHECK(enumerate_biquasiles(1).size() == 1);
    auto two = enumerate_biquasiles(2);
    CHECK(two.size() == 4);
    CHECK(std::find(two.begin(), two.end(), order2()) != two.end());
    CHECK(two == enumerate_biquasiles_serial(2));
    auto three = enumerate_biquasiles(3);
    CHECK(three == enumerate_biquasiles_serial(3));
    for (const auto& B : three) CHECK(oracle::axioms_hold(B.star_table(), B.dot_table()));
    std::size_t brute = 0;
    for (const auto& S : latin_squares(3))
        for (const auto& D : latin_squares(3)) brute += oracle::axioms_hold(S, D);
    CHECK(three.size() == brute);
    CHECK_THROWS_AS(enumerate_biquasiles(5), std::out_of_range);
    CHECK_THROWS_AS(enumerate_biquasiles(0), std::out_of_range);
}

TEST_CASE("order 4 has 2880 biquasiles") {
    auto four = enumerate_biquasiles(4);
    CHECK(four.size() == 2880);
    CHECK(four == enumerate_biquasiles_serial(4));
    auto squares = latin_squares(4);
    std::size_t brute = 0;
    for (const auto& S : squares)
        for (const auto& D : squares) brute += oracle::axioms_hold(S, D);
    CHECK(brute == 2880);
}

TEST_CASE("non-unit parameters are rejected") {
    CHECK_THROWS_AS(alexander({6, 2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(alexander({4, 1, 1, 0}), std::invalid_argument);
    CHECK(unit_triples(6).size() == 8);
    CHECK(unit_triples(7).size() == 216);
}

TEST_CASE("Z2 with d=s=n=1 is x*y = -x+y, x.y = x+y") {
    auto B = alexander({2, 1, 1, 1});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            int64_t rx = residue_of(x, 2), ry = residue_of(y, 2);
            CHECK(B.star(x, y) == index_of(-rx + ry, 2));
            CHECK(B.dot(x, y) == index_of(rx + ry, 2));
        }
}

TEST_CASE("order-1 and order-2 verdicts agree with direct evaluation") {
    CHECK(check_axioms({{1}}, {{1}}));
    Table t{{1, 2}, {2, 1}};
    CHECK(bool(check_axioms(t, t)) == oracle::axioms_hold(t, t));
    for (const auto& S : latin_squares(2))
        for (const auto& D : latin_squares(2)) CHECK(bool(check_axioms(S, D)) == oracle::axioms_hold(S, D));
}

TEST_CASE("mutated tables are judged like the oracle") {
    std::mt19937 rng(26);
    auto base = alexander({3, 1, 1, 2});
    for (int t = 0; t < 200; ++t) {
        Table S = base.star_table(), D = base.dot_table();
        Table& T = rng() % 2 ? S : D;
        T[rng() % 3][rng() % 3] = 1 + rng() % 3;
        auto v = check_axioms(S, D);
        bool latin = true;
        for (const auto& U : {S, D})
            for (int i = 0; i < 3; ++i) {
                std::set<int> row(U[i].begin(), U[i].end()), col{U[0][i], U[1][i], U[2][i]};
                latin &= row.size() == 3 && col.size() == 3;
            }
        if (!latin)
            CHECK(v.kind == AxiomVerdict::not_latin);
        else
            CHECK(bool(v) == oracle::axioms_hold(S, D));
    }
}

}
