#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "qec/clifford.hpp"
#include "qec/constructions.hpp"
#include "qec/tableau.hpp"
#include "test_util.hpp"

using namespace qec;
using namespace testutil;

namespace {

CMat gate_matrix(GateKind k) {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx i(0, 1);
    switch (k) {
        case GateKind::H: return {{s, s}, {s, -s}};
        case GateKind::P: return {{1, 0}, {0, i}};
        case GateKind::PDAG: return {{1, 0}, {0, -i}};
        case GateKind::X: return sigma(1);
        case GateKind::Y: return sigma(3);
        case GateKind::Z: return sigma(2);
        case GateKind::CNOT: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case GateKind::CZ: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
        case GateKind::CY: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -i}, {0, 0, i, 0}};
        case GateKind::SWAP: return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        default: throw std::runtime_error("no matrix");
    }
}

bool tableau_equal(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i < a.n; ++i) {
        auto same = [](const Pauli& p, const Pauli& q) {
            return p.x == q.x && p.z == q.z && ((p.phase - q.phase) % 4 + 4) % 4 == 0;
        };
        if (!same(a.x_images[i], b.x_images[i]) || !same(a.z_images[i], b.z_images[i]))
            return false;
    }
    return true;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t len, std::mt19937_64& rng) {
    static const std::vector<GateKind> unary = {GateKind::H,    GateKind::P, GateKind::PDAG,
                                                GateKind::X,    GateKind::Y, GateKind::Z};
    static const std::vector<GateKind> binary = {GateKind::CNOT, GateKind::CZ, GateKind::CY,
                                                 GateKind::SWAP};
    Circuit c;
    c.n = n;
    for (std::size_t i = 0; i < len; ++i) {
        if (n >= 2 && rng() % 2) {
            std::size_t a = rng() % n, b = rng() % (n - 1);
            if (b >= a) ++b;
            c.gates.push_back(Gate::binary(binary[rng() % binary.size()], a, b));
        } else {
            c.gates.push_back(Gate::unary(unary[rng() % unary.size()], rng() % n));
        }
    }
    return c;
}

CliffordTableau bitwise_cnot(std::size_t n) {
    Circuit c;
    c.n = 2 * n;
    for (std::size_t q = 0; q < n; ++q) c.gates.push_back(Gate::binary(GateKind::CNOT, q, n + q));
    return circuit_tableau(c);
}

}  // namespace

TEST_CASE("circuit text parses and formats stably") {
    std::string text =
        "qubits 3\n"
        "H 0\n"
        "CNOT 0 1\n"
        "MEASURE Z 2\n"
        "MEASURE XZX CORRECT ZZI FORCE +1\n";
    Circuit c = parse_circuit(text);
    CHECK(c.n == 3);
    CHECK(c.gates.size() == 4);
    CHECK(c.gates[3].has_correction);
    CHECK(c.gates[3].forced_outcome == +1);
    std::string once = format_circuit(c);
    CHECK(format_circuit(parse_circuit(once)) == once);

    CHECK_THROWS_AS(parse_circuit("CNOT 0 0\n"), input_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 2\n"), input_error);
    CHECK_THROWS_AS(parse_circuit("FLIP 0\n"), input_error);
}

TEST_CASE("gate conjugation matches the matrix oracle") {
    std::mt19937_64 rng(7);
    for (GateKind k : {GateKind::H, GateKind::P, GateKind::PDAG, GateKind::X, GateKind::Y,
                       GateKind::Z, GateKind::CNOT, GateKind::CZ, GateKind::CY, GateKind::SWAP}) {
        std::size_t arity = k >= GateKind::CNOT ? 2 : 1;
        Gate g = arity == 1 ? Gate::unary(k, 0) : Gate::binary(k, 0, 1);
        CMat u = gate_matrix(k);
        for (int trial = 0; trial < 40; ++trial) {
            Pauli p = random_pauli(arity, rng);
            Pauli q = p;
            conjugate_pauli(q, g);
            CMat expected = matmul(matmul(u, pauli_matrix(p)), dagger(u));
            CHECK(approx_equal(pauli_matrix(q), expected));
        }
    }
}

TEST_CASE("binary gates honor the stated wire order") {
    // CNOT control 0: X on the control spreads to the target.
    Pauli p = parse_pauli("XI");
    conjugate_pauli(p, Gate::binary(GateKind::CNOT, 0, 1));
    CHECK(format_pauli(p) == "XX");
    p = parse_pauli("XI");
    conjugate_pauli(p, Gate::binary(GateKind::CNOT, 1, 0));
    CHECK(format_pauli(p) == "XI");
}

TEST_CASE("tableaux compose like circuits") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Circuit a = random_clifford_circuit(n, 12, rng);
        Circuit b = random_clifford_circuit(n, 12, rng);
        Circuit ab = a;
        for (const auto& g : b.gates) ab.gates.push_back(g);
        CliffordTableau ta = circuit_tableau(a), tb = circuit_tableau(b);
        CHECK(tableau_valid(ta));
        CHECK(tableau_equal(compose(ta, tb), circuit_tableau(ab)));

        // Conjugating through the tableau equals conjugating gate by gate.
        Pauli p = random_pauli(n, rng);
        Pauli via_gates = p;
        for (const auto& g : a.gates) conjugate_pauli(via_gates, g);
        Pauli via_tableau = conjugate(ta, p);
        CHECK(format_pauli(via_gates) == format_pauli(via_tableau));
    }
}

TEST_CASE("tableau text round-trips and is validated") {
    CliffordTableau t = circuit_tableau(parse_circuit("qubits 2\nH 0\nCNOT 0 1\nP 1\n"));
    CliffordTableau back = tableau_from_text(tableau_to_text(t));
    CHECK(tableau_equal(t, back));
    // Two identical rows cannot form a valid tableau.
    CHECK_THROWS_AS(tableau_from_text("XX\nXX\nZI\nIZ\n"), input_error);
}

TEST_CASE("full stabilizer simulation basics") {
    std::mt19937_64 rng(3);
    StabilizerState s = StabilizerState::zero_state(2);
    auto r = measure_pauli(s, parse_pauli("ZI"), rng);
    CHECK(r.deterministic);
    CHECK(r.outcome == +1);

    apply_gate(s, Gate::unary(GateKind::H, 0));
    apply_gate(s, Gate::binary(GateKind::CNOT, 0, 1));
    r = measure_pauli(s, parse_pauli("ZZ"), rng);
    CHECK(r.deterministic);
    CHECK(r.outcome == +1);
    r = measure_pauli(s, parse_pauli("XX"), rng);
    CHECK(r.deterministic);
    CHECK(r.outcome == +1);

    auto first = measure_pauli(s, parse_pauli("ZI"), rng, +1);
    CHECK(!first.deterministic);
    CHECK(first.outcome == +1);
    auto again = measure_pauli(s, parse_pauli("IZ"), rng);
    CHECK(again.deterministic);
    CHECK(again.outcome == +1);
    // Forcing an outcome of probability zero is an input error.
    CHECK_THROWS_AS(measure_pauli(s, parse_pauli("ZI"), rng, -1), input_error);
}

TEST_CASE("teleportation script moves the logical qubit to the last wire") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        PartialStabilizer s;
        s.n = 3;
        s.gens = {parse_pauli("IXX"), parse_pauli("IZZ")};
        s.logical_x = {parse_pauli("XII")};
        s.logical_z = {parse_pauli("ZII")};
        Circuit c = parse_circuit(
            "qubits 3\n"
            "CNOT 0 1\n"
            "MEASURE XII CORRECT ZZZ\n"
            "MEASURE IZI CORRECT IXX\n");
        std::mt19937_64 rng(seed);
        run_circuit(s, c, rng);
        CHECK(format_pauli(reduce_mod_group(s.gens, s.logical_x[0])) == "IIX");
        CHECK(format_pauli(reduce_mod_group(s.gens, s.logical_z[0])) == "IIZ");
    }
}

TEST_CASE("one-ancilla measurement scripts realize the expected letter maps") {
    std::mt19937_64 rng(5);
    auto reduced = [](const PartialStabilizer& s, const Pauli& p) {
        return format_pauli(reduce_mod_group(s.gens, p));
    };

    // |0> ancilla, CNOT data->ancilla, Y measured on the ancilla: the data
    // qubit picks up X -> -Y, Z -> Z.
    {
        PartialStabilizer s;
        s.n = 2;
        s.gens = {parse_pauli("IZ")};
        s.logical_x = {parse_pauli("XI")};
        s.logical_z = {parse_pauli("ZI")};
        apply_gate(s, Gate::binary(GateKind::CNOT, 0, 1));
        measure_pauli(s, parse_pauli("IY"), rng, +1);
        CHECK(reduced(s, s.logical_x[0]) == "-YI");
        CHECK(reduced(s, s.logical_z[0]) == "ZI");
    }

    // |+> ancilla, CNOT ancilla->data, Y measured on the ancilla: X -> X,
    // Z -> -Y.
    {
        PartialStabilizer s;
        s.n = 2;
        s.gens = {parse_pauli("IX")};
        s.logical_x = {parse_pauli("XI")};
        s.logical_z = {parse_pauli("ZI")};
        apply_gate(s, Gate::binary(GateKind::CNOT, 1, 0));
        measure_pauli(s, parse_pauli("IY"), rng, +1);
        CHECK(reduced(s, s.logical_x[0]) == "XI");
        CHECK(reduced(s, s.logical_z[0]) == "-YI");
    }

    // +1 Y-eigenstate ancilla, CNOT ancilla->data, Y measured on the data
    // wire: the qubit relocates to the ancilla with X -> Y, Z -> X.
    {
        PartialStabilizer s;
        s.n = 2;
        s.gens = {parse_pauli("IY")};
        s.logical_x = {parse_pauli("XI")};
        s.logical_z = {parse_pauli("ZI")};
        apply_gate(s, Gate::binary(GateKind::CNOT, 1, 0));
        measure_pauli(s, parse_pauli("YI"), rng, +1);
        CHECK(reduced(s, s.logical_x[0]) == "IY");
        CHECK(reduced(s, s.logical_z[0]) == "IX");
    }
}

TEST_CASE("synthesis reproduces tableaux exactly within the gate budget") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        CliffordTableau t = circuit_tableau(random_clifford_circuit(n, 30, rng));
        Circuit c = synthesize_clifford(t);
        CHECK(is_clifford_only(c));
        CHECK(tableau_equal(circuit_tableau(c), t));
        CHECK(two_qubit_gate_count(c) <= n * n + n - 1);
    }
}

TEST_CASE("synthesis corner cases") {
    CliffordTableau id = CliffordTableau::identity(3);
    CHECK(synthesize_clifford(id).gates.empty());

    CliffordTableau sw = circuit_tableau(parse_circuit("qubits 2\nSWAP 0 1\n"));
    Circuit c = synthesize_clifford(sw);
    CHECK(tableau_equal(circuit_tableau(c), sw));
    CHECK(two_qubit_gate_count(c) <= 5);
}

TEST_CASE("swap decomposition is three alternating controlled-nots") {
    Circuit c = swap_decomposition(0, 1);
    CHECK(c.gates.size() == 3);
    CliffordTableau sw = circuit_tableau(parse_circuit("qubits 2\nSWAP 0 1\n"));
    CHECK(tableau_equal(circuit_tableau(c), sw));
    Circuit twice = c;
    for (const auto& g : c.gates) twice.gates.push_back(g);
    CHECK(tableau_equal(circuit_tableau(twice), CliffordTableau::identity(2)));
}

TEST_CASE("bitwise controlled-not is transversal for the seven-qubit code only") {
    StabilizerCode steane = catalog("steane");
    StabilizerCode five = catalog("five");
    CHECK(is_valid_transversal(steane, bitwise_cnot(7)));
    CHECK(!is_valid_transversal(five, bitwise_cnot(5)));

    CliffordTableau action = encoded_action(steane, bitwise_cnot(7));
    CliffordTableau cnot = circuit_tableau(parse_circuit("qubits 2\nCNOT 0 1\n"));
    CHECK(tableau_equal(action, cnot));
}

TEST_CASE("bitwise one-qubit maps act as expected logicals") {
    StabilizerCode steane = catalog("steane");
    StabilizerCode five = catalog("five");

    auto one_qubit = [](const std::string& text) {
        return circuit_tableau(parse_circuit("qubits 1\n" + text));
    };

    CliffordTableau h = bitwise_expand(one_qubit("H 0\n"), 7);
    CHECK(is_valid_transversal(steane, h));
    CHECK(tableau_equal(encoded_action(steane, h), one_qubit("H 0\n")));

    // Bitwise P acts as the inverse phase gate on the encoded qubit.
    CliffordTableau p = bitwise_expand(one_qubit("P 0\n"), 7);
    CHECK(is_valid_transversal(steane, p));
    CHECK(tableau_equal(encoded_action(steane, p), one_qubit("PDAG 0\n")));

    // The cyclic X->Y->Z map is transversal on the five-qubit code and acts
    // as itself on the encoded qubit.
    CliffordTableau cyc = one_qubit("PDAG 0\nH 0\n");
    CHECK(format_pauli(conjugate(cyc, parse_pauli("X"))) == "Y");
    CHECK(format_pauli(conjugate(cyc, parse_pauli("Z"))) == "X");
    CliffordTableau cyc5 = bitwise_expand(cyc, 5);
    CHECK(is_valid_transversal(five, cyc5));
    CHECK(tableau_equal(encoded_action(five, cyc5), cyc));
}

TEST_CASE("four-qubit map checks pass on distance-three and distance-four codes") {
    for (const char* name : {"five", "eight"}) {
        FourQubitReport rep = four_qubit_universal_check(catalog(name));
        CHECK(rep.tableau_ok);
        CHECK(rep.orthogonal_ok);
        CHECK(rep.transversal_ok);
        CHECK(rep.cnot_script_ok);
        CHECK(rep.ok());
    }
}

TEST_CASE("binary orthogonality test") {
    BitMat id3;
    for (std::size_t i = 0; i < 3; ++i) {
        BitVec row(3);
        row.set(i, true);
        id3.push_back(row);
    }
    CHECK(orthogonal_group_member(id3));
    id3[2] = BitVec(3);
    CHECK(!orthogonal_group_member(id3));
    BitMat bad = {BitVec(2)};
    CHECK_THROWS_AS(orthogonal_group_member(bad), input_error);
}

TEST_CASE("encoder structure for the five-qubit code") {
    StabilizerCode five = catalog("five");
    Circuit c = encoder_circuit(five);
    CHECK(c.n == 5);
    CHECK(is_clifford_only(c));
    std::size_t h = 0, cnot = 0, cz = 0, cy = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::H) ++h;
        if (g.kind == GateKind::CNOT) ++cnot;
        if (g.kind == GateKind::CZ) ++cz;
        if (g.kind == GateKind::CY) ++cy;
    }
    CHECK(h == 4);
    CHECK(cnot == 2);
    // Z phases between pairs of control wires are applied exactly once, by
    // the later row of each pair.
    CHECK(cz == 4);
    CHECK(cy == 2);
    std::size_t one_qubit = c.gates.size() - two_qubit_gate_count(c);
    CHECK(one_qubit <= 2 * (five.n - five.k));
    CHECK(two_qubit_gate_count(c) <= (five.k + (five.n - five.k)) * (five.n - five.k));
}

TEST_CASE("encoder gate bound holds across the catalog") {
    for (const char* name : {"five", "steane", "code422", "shor9", "eight"}) {
        StabilizerCode code = catalog(name);
        Circuit c = encoder_circuit(code);
        std::size_t r = code.generators.size();
        CHECK(two_qubit_gate_count(c) <= (code.k + r) * (code.n - code.k));
    }
}

TEST_CASE("trivial code needs no encoding gates") {
    StabilizerCode trivial;
    trivial.n = 2;
    trivial.k = 2;
    trivial.logical_x = {parse_pauli("XI"), parse_pauli("IX")};
    trivial.logical_z = {parse_pauli("ZI"), parse_pauli("IZ")};
    CHECK(encoder_circuit(trivial).gates.empty());
}

TEST_CASE("measurement-free decoder has the expected shape") {
    StabilizerCode five = catalog("five");
    Circuit c = decode_by_measurement(five);
    CHECK(c.n == 6);
    CHECK(is_clifford_only(c));
    for (const auto& g : c.gates) CHECK(g.kind != GateKind::MEASURE);
}

TEST_CASE("reduction modulo a stabilizer group canonicalizes cosets") {
    StabilizerCode five = catalog("five");
    Pauli g0 = five.generators[0];
    CHECK(format_pauli(reduce_mod_group(five.generators, g0)) == "IIIII");
    Pauli mixed = multiply(five.logical_x[0], five.generators[2]);
    CHECK(format_pauli(reduce_mod_group(five.generators, mixed)) ==
          format_pauli(reduce_mod_group(five.generators, five.logical_x[0])));
}
