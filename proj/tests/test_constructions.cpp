#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qec/code.hpp"
#include "qec/constructions.hpp"
#include "qec/pauli.hpp"
#include "test_util.hpp"

using namespace qec;

namespace {

std::vector<Pauli> gens_from(const std::vector<std::string>& strs) {
    std::vector<Pauli> out;
    for (const auto& s : strs) out.push_back(parse_pauli(s));
    return out;
}

StabilizerCode wrap(const std::vector<Pauli>& gens) {
    StabilizerCode c;
    c.n = gens.empty() ? 0 : gens.front().n;
    c.k = c.n - gens.size();
    c.generators = gens;
    return c;
}

// Phaseless group equality: identical row spans of the symplectic matrices.
bool same_group(const std::vector<Pauli>& a, const std::vector<Pauli>& b) {
    BitMat ra = check_matrix(wrap(a));
    BitMat rb = check_matrix(wrap(b));
    BitMat both = ra;
    both.insert(both.end(), rb.begin(), rb.end());
    std::size_t rank_a = gf2_rank(ra), rank_b = gf2_rank(rb);
    return rank_a == rank_b && gf2_rank(both) == rank_a;
}

std::vector<std::string> gen_strings(const StabilizerCode& c) {
    std::vector<std::string> out;
    for (const auto& g : c.generators) out.push_back(format_pauli(g));
    return out;
}

}  // namespace

TEST_CASE("catalog census") {
    const auto& entries = catalog_list();
    CHECK(entries.size() >= 13);
    std::set<std::string> names;
    for (const auto& e : entries) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        std::size_t param = e.takes_param ? e.default_param : 0;
        StabilizerCode c = catalog(e.name, param);
        auto report = validate(c);
        CAPTURE(report.issues.empty() ? "" : report.issues.front());
        CHECK(report.ok);
        CHECK(c.n == e.n);
        CHECK(c.k == e.k);
        CHECK(c.claimed_distance == e.d);
        CHECK(c.logical_x.size() == c.k);
        CHECK(c.logical_z.size() == c.k);
    }
    CHECK_THROWS_AS(catalog("no_such_code"), input_error);
}

TEST_CASE("fixed catalog generators") {
    auto five = catalog("five");
    CHECK(gen_strings(five) ==
          std::vector<std::string>{"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
    CHECK(format_pauli(five.logical_x[0]) == "XXXXX");
    CHECK(format_pauli(five.logical_z[0]) == "ZZZZZ");

    auto steane = catalog("steane");
    CHECK(gen_strings(steane) ==
          std::vector<std::string>{"XXXXIII", "XXIIXXI", "XIXIXIX", "ZZZZIII",
                                   "ZZIIZZI", "ZIZIZIZ"});

    auto shor = catalog("shor9");
    CHECK(shor.n == 9);
    CHECK(shor.k == 1);
    CHECK(format_pauli(shor.logical_x[0]) == "XXXXXXXXX");
    CHECK(format_pauli(shor.logical_z[0]) == "ZZZZZZZZZ");

    auto rep = catalog("dist2", 4);
    CHECK(gen_strings(rep) == std::vector<std::string>{"XXXX", "ZZZZ"});
    CHECK(rep.k == 2);
    CHECK_THROWS_AS(catalog("dist2", 5), input_error);
}

TEST_CASE("sigma is a fixed-point-free linear involution-avoiding map") {
    for (std::size_t j = 3; j <= 6; ++j) {
        std::uint64_t size = 1ull << j;
        // Linearity over GF(2).
        for (std::uint64_t a = 0; a < size; ++a)
            for (std::uint64_t b = 0; b < size; ++b)
                CHECK(sigma(j, a ^ b) == (sigma(j, a) ^ sigma(j, b)));
        // Bijective: kernel trivial.
        std::set<std::uint64_t> image;
        for (std::uint64_t a = 0; a < size; ++a) image.insert(sigma(j, a));
        CHECK(image.size() == size);
        // No fixed points away from zero, and sigma^2 also fixed-point-free
        // (these make the codes below have distance >= 3).
        for (std::uint64_t a = 1; a < size; ++a) {
            CHECK(sigma(j, a) != a);
            CHECK(sigma(j, sigma(j, a)) != a);
        }
    }
}

TEST_CASE("distance-3 family reproduces the fixed small codes") {
    auto f3 = family_2j(3);
    CHECK(f3.n == 8);
    CHECK(f3.k == 3);
    CHECK(same_group(f3.generators, catalog("eight").generators));

    auto f4 = family_2j(4);
    CHECK(f4.n == 16);
    CHECK(f4.k == 10);
    CHECK(gen_strings(f4) ==
          std::vector<std::string>{"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
                                   "IXIXIXIXZYZYZYZY", "IXIXZYZYXIXIYZYZ",
                                   "IXZYXIYZIXZYXIYZ", "IYXZIYXZIYXZIYXZ"});
    CHECK(same_group(f4.generators, catalog("code16_10_3").generators));

    for (std::size_t j = 3; j <= 6; ++j) {
        auto f = family_2j(j);
        CHECK(f.n == (1ull << j));
        CHECK(f.k == f.n - j - 2);
        auto report = validate(f);
        CAPTURE(j);
        CHECK(report.ok);
    }
}

TEST_CASE("distance-4 family reproduces the fixed small codes") {
    auto g3 = family_2j_d4(3);
    CHECK(g3.n == 8);
    CHECK(g3.k == 0);
    CHECK(same_group(g3.generators, catalog("code8_0_4").generators));

    auto g4 = family_2j_d4(4);
    CHECK(g4.n == 16);
    CHECK(g4.k == 6);
    CHECK(same_group(g4.generators, catalog("code16_6_4").generators));

    for (std::size_t j = 3; j <= 6; ++j) {
        auto g = family_2j_d4(j);
        CHECK(g.n == (1ull << j));
        CHECK(g.k == g.n - 2 * j - 2);
        CHECK(validate(g).ok);
    }
}

TEST_CASE("css construction") {
    // Hamming [7,4] parity check; self-dual-containing, gives the 7-qubit code.
    BitMat h;
    h.push_back(BitVec::from_string("1111000"));
    h.push_back(BitVec::from_string("1100110"));
    h.push_back(BitVec::from_string("1010101"));
    auto c = css(h, h);
    CHECK(c.n == 7);
    CHECK(c.k == 1);
    CHECK(validate(c).ok);
    CHECK(same_group(c.generators, catalog("steane").generators));
    // X-type generators come first.
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_FALSE(c.generators[i].z.any());
        CHECK_FALSE(c.generators[i + 3].x.any());
    }

    // Classical repetition code protecting one kind of error only.
    BitMat rep;
    rep.push_back(BitVec::from_string("110"));
    rep.push_back(BitVec::from_string("011"));
    auto bitflip = css(rep, BitMat{});
    CHECK(bitflip.n == 3);
    CHECK(bitflip.k == 1);
    CHECK(validate(bitflip).ok);

    // Empty checks: bare qubits.
    auto trivial = css(BitMat{}, BitMat{}, 3);
    CHECK(trivial.n == 3);
    CHECK(trivial.k == 3);
    CHECK(validate(trivial).ok);

    // Non-orthogonal rows must be rejected with the offending pair named.
    BitMat p1{BitVec::from_string("110")};
    BitMat q1{BitVec::from_string("100")};
    CHECK_THROWS_AS(css(p1, q1), input_error);
    try {
        css(p1, q1);
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
    }

    // Dependent rows rejected.
    BitMat dep{BitVec::from_string("110"), BitVec::from_string("110")};
    CHECK_THROWS_AS(css(dep, BitMat{}), input_error);

    // Length mismatch rejected.
    BitMat p2{BitVec::from_string("1100")};
    BitMat q2{BitVec::from_string("001")};
    CHECK_THROWS_AS(css(p2, q2), input_error);
}

TEST_CASE("adding and removing qubits") {
    auto five = catalog("five");
    auto six = add_qubit(five);
    CHECK(six.n == 6);
    CHECK(six.k == 1);
    CHECK(validate(six).ok);
    // Original generators extended by identity still stabilize.
    for (const auto& g : five.generators) {
        Pauli ext(6);
        ext.phase = g.phase;
        for (std::size_t q = 0; q < 5; ++q) {
            ext.x.set(q, g.x.get(q));
            ext.z.set(q, g.z.get(q));
        }
        CHECK(in_stabilizer(six, ext));
    }

    // Removing the freshly added qubit restores the original parameters.
    auto back = remove_qubit(six);
    CHECK(back.n == 5);
    CHECK(back.k == 1);
    CHECK(validate(back).ok);
    CHECK(same_group(back.generators, five.generators));

    // Removing a qubit from the five-qubit code leaves the [[4,2]] code.
    auto four = remove_qubit(five);
    CHECK(four.n == 4);
    CHECK(four.k == 2);
    auto report = validate(four);
    CAPTURE(report.issues.empty() ? "" : report.issues.front());
    CHECK(report.ok);
    CHECK(same_group(four.generators, catalog("code422").generators));

    auto three = remove_qubit(remove_qubit(catalog("steane")));
    CHECK(three.n == 5);
    CHECK(three.k == 3);
    CHECK(validate(three).ok);
}

TEST_CASE("pasting codes together") {
    auto thirteen = paste(catalog("eight"), 2, catalog("five"), 1);
    CHECK(thirteen.n == 13);
    CHECK(thirteen.k == 7);
    CHECK(validate(thirteen).ok);
    CHECK(same_group(thirteen.generators, catalog("code13_7_3").generators));
    CHECK(gen_strings(catalog("code13_7_3")) ==
          std::vector<std::string>{
              "XXXXXXXXIIIII", "ZZZZZZZZIIIII", "IIIIIIIIXZZXI",
              "IXIXYZYZIXZZX", "IXZYIXZYXIXZZ", "IYXZXZIYZXIXZ"});

    // Prefix counts must leave matching tail lengths, and tails must exist.
    CHECK_THROWS_AS(paste(catalog("eight"), 1, catalog("five"), 1), input_error);
    CHECK_THROWS_AS(paste(catalog("five"), 4, catalog("five"), 4), input_error);
}

TEST_CASE("concatenation") {
    auto inner = catalog("five");
    auto big = catalog("code25_1_9");
    CHECK(big.n == 25);
    CHECK(big.k == 1);
    CHECK(big.claimed_distance == 9);
    CHECK(validate(big).ok);

    auto built = concatenate(inner, inner);
    CHECK(built.n == 25);
    CHECK(built.k == 1);
    CHECK(validate(built).ok);
    CHECK(same_group(built.generators, big.generators));

    // Block structure: first 20 generators are the inner generators embedded
    // block by block; the last 4 substitute logicals into the outer ones.
    std::vector<std::string> expected;
    std::vector<std::string> inner_strs = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    std::string id5 = "IIIII";
    for (std::size_t b = 0; b < 5; ++b)
        for (const auto& g : inner_strs) {
            std::string row;
            for (std::size_t c = 0; c < 5; ++c) row += (c == b ? g : id5);
            expected.push_back(row);
        }
    std::string lx = "XXXXX", lz = "ZZZZZ", lid = "IIIII";
    for (const auto& g : inner_strs) {
        std::string row;
        for (char ch : g)
            row += (ch == 'X' ? lx : ch == 'Z' ? lz : lid);
        expected.push_back(row);
    }
    CHECK(gen_strings(built) == expected);
    CHECK(format_pauli(built.logical_x[0]) == std::string(25, 'X'));
    CHECK(format_pauli(built.logical_z[0]) == std::string(25, 'Z'));

    // Concatenating with a bare single-qubit outer code is the identity.
    StabilizerCode bare;
    bare.name = "bare";
    bare.n = 1;
    bare.k = 1;
    bare.claimed_distance = 1;
    bare.logical_x.push_back(parse_pauli("X"));
    bare.logical_z.push_back(parse_pauli("Z"));
    auto same = concatenate(bare, inner);
    CHECK(same.n == 5);
    CHECK(same.k == 1);
    CHECK(same_group(same.generators, inner.generators));

    // Inner code must encode exactly one qubit with logicals supplied.
    CHECK_THROWS_AS(concatenate(inner, catalog("code422")), input_error);
}

TEST_CASE("perfect code family") {
    auto p2 = perfect_code(2);
    CHECK(p2.n == 5);
    CHECK(p2.k == 1);
    CHECK(same_group(p2.generators, catalog("five").generators));

    auto p3 = perfect_code(3);
    CHECK(p3.n == 21);
    CHECK(p3.k == 15);
    auto report = validate(p3);
    CAPTURE(report.issues.empty() ? "" : report.issues.front());
    CHECK(report.ok);
    // Sphere-packing equality: (1 + 3n) * 2^k == 2^n.
    unsigned long long covered = (1ull + 3ull * p3.n) << p3.k;
    CHECK(covered == (1ull << p3.n));
}

TEST_CASE("attached logicals are canonical") {
    for (const char* name : {"eight", "code16_6_4", "xz7", "code11_1_5"}) {
        auto c = catalog(name);
        CAPTURE(name);
        CHECK(validate(c).ok);
        for (std::size_t i = 0; i < c.k; ++i) {
            for (std::size_t jj = 0; jj < c.k; ++jj) {
                bool anti = commutes(c.logical_x[i], c.logical_z[jj]);
                CHECK(anti == (i == jj));
            }
            CHECK_FALSE(in_stabilizer_phaseless(c, c.logical_x[i]));
            CHECK_FALSE(in_stabilizer_phaseless(c, c.logical_z[i]));
        }
    }
}
