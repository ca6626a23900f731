#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qec/clifford.hpp"
#include "qec/constructions.hpp"
#include "qec/dense.hpp"
#include "test_util.hpp"

using namespace qec;
using namespace testutil;

namespace {

// Identity plus every Pauli of weight <= t (phase 0).
std::vector<Pauli> errors_up_to_weight(std::size_t n, std::size_t t) {
    std::vector<Pauli> out = {Pauli(n)};
    std::vector<std::vector<std::size_t>> supports = {{}};
    for (std::size_t w = 1; w <= t; ++w) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : supports)
            if (s.size() == w - 1)
                for (std::size_t q = s.empty() ? 0 : s.back() + 1; q < n; ++q) {
                    auto e = s;
                    e.push_back(q);
                    next.push_back(e);
                }
        for (const auto& s : next) {
            std::vector<int> letters(s.size(), 1);
            for (;;) {
                Pauli p(n);
                for (std::size_t i = 0; i < s.size(); ++i) p.set_letter(s[i], letters[i]);
                out.push_back(p);
                std::size_t i = 0;
                while (i < letters.size() && letters[i] == 3) letters[i++] = 1;
                if (i == letters.size()) break;
                ++letters[i];
            }
        }
        supports.insert(supports.end(), next.begin(), next.end());
    }
    return out;
}

// Independent symplectic verdict: a set of errors is correctable iff every
// pairwise (phaseless) quotient either trips a syndrome bit or lies in the
// stabilizer.
bool symplectic_correctable(const StabilizerCode& code, const std::vector<Pauli>& errors) {
    for (const auto& a : errors)
        for (const auto& b : errors) {
            Pauli q = multiply(a, b);
            if (syndrome(code, q).any()) continue;
            if (!in_stabilizer_phaseless(code, q)) return false;
        }
    return true;
}

DenseState random_state(std::size_t n, std::mt19937_64& rng) {
    DenseState s = DenseState::basis(n, 0);
    std::normal_distribution<double> g;
    for (auto& a : s.amp) a = std::complex<double>(g(rng), g(rng));
    s.normalize();
    return s;
}

}  // namespace

TEST_CASE("five-qubit encoded zero matches the sixteen-term expansion") {
    auto words = codeword_states(catalog("five"));
    REQUIRE(words.size() == 2);
    struct Term { const char* bits; double sign; };
    const Term expected[16] = {
        {"00000", 1},  {"10010", 1},  {"01001", 1},  {"10100", 1},
        {"01010", 1},  {"11011", -1}, {"00110", -1}, {"11000", -1},
        {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
        {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", 1},
    };
    std::vector<double> want(32, 0.0);
    for (const auto& t : expected) want[std::stoul(t.bits, nullptr, 2)] = t.sign / 4.0;
    for (std::size_t idx = 0; idx < 32; ++idx) {
        CHECK(std::abs(words[0].amp[idx].real() - want[idx]) < 1e-12);
        CHECK(std::abs(words[0].amp[idx].imag()) < 1e-12);
    }
}

TEST_CASE("seven-qubit encoded zero is the even-codeword superposition") {
    auto words = codeword_states(catalog("steane"));
    std::size_t nonzero = 0;
    for (std::size_t idx = 0; idx < 128; ++idx) {
        double a = std::abs(words[0].amp[idx]);
        if (a < 1e-12) continue;
        ++nonzero;
        CHECK(std::abs(words[0].amp[idx].real() - 1.0 / std::sqrt(8.0)) < 1e-12);
        CHECK(std::popcount(idx) % 2 == 0);
    }
    CHECK(nonzero == 8);
}

TEST_CASE("trivial code encodes basis states as themselves") {
    StabilizerCode trivial;
    trivial.n = 2;
    trivial.k = 2;
    trivial.logical_x = {parse_pauli("XI"), parse_pauli("IX")};
    trivial.logical_z = {parse_pauli("ZI"), parse_pauli("IZ")};
    auto words = codeword_states(trivial);
    REQUIRE(words.size() == 4);
    CHECK(std::abs(words[0].amp[0] - 1.0) < 1e-12);
}

TEST_CASE("codewords are generator eigenvectors and logicals act correctly") {
    for (const char* name : {"five", "steane", "shor9", "amp4", "code11_1_5"}) {
        StabilizerCode code = catalog(name);
        auto words = codeword_states(code);
        for (const auto& w : words)
            for (const auto& m : code.generators) {
                DenseState mw = w;
                apply_pauli_dense(mw, m);
                for (std::size_t idx = 0; idx < w.amp.size(); ++idx)
                    CHECK(std::abs(mw.amp[idx] - w.amp[idx]) < 1e-10);
            }
        // Orthonormality.
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = 0; b < words.size(); ++b)
                CHECK(std::abs(fidelity(words[a], words[b]) - (a == b ? 1.0 : 0.0)) < 1e-10);
        if (code.k == 1) {
            DenseState x0 = words[0];
            apply_pauli_dense(x0, code.logical_x[0]);
            CHECK(fidelity(x0, words[1]) > 1.0 - 1e-10);
            DenseState z1 = words[1];
            apply_pauli_dense(z1, code.logical_z[0]);
            for (std::size_t idx = 0; idx < z1.amp.size(); ++idx)
                CHECK(std::abs(z1.amp[idx] + words[1].amp[idx]) < 1e-10);
        }
    }
}

TEST_CASE("error-correction conditions on standard examples") {
    StabilizerCode five = catalog("five");
    auto rep = verify_kl_condition(five, errors_up_to_weight(5, 1));
    CHECK(rep.correctable);
    CHECK(!rep.degenerate);
    CHECK(rep.hermiticity_residual < 1e-10);

    auto rep9 = verify_kl_condition(catalog("shor9"), errors_up_to_weight(9, 1));
    CHECK(rep9.correctable);
    CHECK(rep9.degenerate);

    auto rep2 = verify_kl_condition(five, errors_up_to_weight(5, 2));
    CHECK(!rep2.correctable);

    CHECK_THROWS_AS(verify_kl_condition(five, std::vector<Pauli>{parse_pauli("XIIII")}),
                    input_error);
}

TEST_CASE("dense verdicts agree with the symplectic classification") {
    for (const char* name : {"five", "steane", "code422", "shor9"}) {
        StabilizerCode code = catalog(name);
        auto errors = errors_up_to_weight(code.n, 1);
        auto rep = verify_kl_condition(code, errors);
        CHECK(rep.correctable == symplectic_correctable(code, errors));
    }
}

TEST_CASE("dense circuit simulation basics") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        DenseState s = random_state(3, rng);
        Circuit c = parse_circuit("qubits 3\nH 1\nH 1\n");
        CHECK(fidelity(run_circuit_dense(c, s), s) > 1.0 - 1e-10);
    }

    // Bell state.
    Circuit bell = parse_circuit("qubits 2\nH 0\nCNOT 0 1\n");
    DenseState b = run_circuit_dense(bell, DenseState::basis(2, 0));
    CHECK(std::abs(b.amp[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(b.amp[3] - 1.0 / std::sqrt(2.0)) < 1e-12);

    // Toffoli flips the target iff both controls are set.
    Circuit tof;
    tof.n = 3;
    tof.gates.push_back(Gate::toffoli(0, 1, 2));
    for (std::size_t idx = 0; idx < 8; ++idx) {
        DenseState out = run_circuit_dense(tof, DenseState::basis(3, idx));
        std::size_t want = (idx >> 2 & 1) && (idx >> 1 & 1) ? idx ^ 1 : idx;
        CHECK(std::abs(out.amp[want] - 1.0) < 1e-12);
    }

    // Forcing an impossible measurement outcome is rejected.
    Circuit imp = parse_circuit("qubits 1\nMEASURE Z 0 FORCE -1\n");
    CHECK_THROWS_AS(run_circuit_dense(imp, DenseState::basis(1, 0)), input_error);
}

TEST_CASE("dense teleportation works for every measurement branch") {
    std::mt19937_64 rng(23);
    DenseState in = random_state(1, rng);
    for (const char* f0 : {"+1", "-1"})
        for (const char* f1 : {"+1", "-1"}) {
            DenseState s = DenseState::basis(3, 0);
            for (std::size_t idx = 0; idx < 2; ++idx) s.amp[idx << 2] = in.amp[idx];
            std::string text = std::string("qubits 3\nH 1\nCNOT 1 2\nCNOT 0 1\n") +
                               "MEASURE X 0 CORRECT ZZZ FORCE " + f0 + "\n" +
                               "MEASURE Z 1 CORRECT IXX FORCE " + f1 + "\n";
            DenseState out = run_circuit_dense(parse_circuit(text), s);
            // The corrections undo the -1 branches, so every branch ends with
            // wire 0 in |+>, wire 1 in |0>, and the input state on wire 2.
            DenseState want = DenseState::basis(3, 0);
            want.amp[0] = 0.0;
            for (std::size_t b2 = 0; b2 < 2; ++b2)
                for (std::size_t b0 = 0; b0 < 2; ++b0)
                    want.amp[(b0 << 2) | b2] = in.amp[b2] / std::sqrt(2.0);
            CHECK(fidelity(out, want) > 1.0 - 1e-10);
        }
}

TEST_CASE("dense and stabilizer simulations agree on random circuits") {
    std::mt19937_64 rng(31);
    static const std::vector<GateKind> unary = {GateKind::H, GateKind::P, GateKind::PDAG,
                                                GateKind::X, GateKind::Y, GateKind::Z};
    static const std::vector<GateKind> binary = {GateKind::CNOT, GateKind::CZ, GateKind::CY,
                                                 GateKind::SWAP};
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 5;
        Circuit c;
        c.n = n;
        for (int d = 0; d < 40; ++d) {
            if (rng() % 2) {
                std::size_t a = rng() % n, b = rng() % (n - 1);
                if (b >= a) ++b;
                c.gates.push_back(Gate::binary(binary[rng() % binary.size()], a, b));
            } else {
                c.gates.push_back(Gate::unary(unary[rng() % unary.size()], rng() % n));
            }
        }
        StabilizerState sym = StabilizerState::zero_state(n);
        std::mt19937_64 r2(0);
        run_circuit(sym, c, r2);
        DenseState dense = run_circuit_dense(c, DenseState::basis(n, 0));
        for (const auto& g : sym.stab) {
            DenseState gs = dense;
            apply_pauli_dense(gs, g);
            for (std::size_t idx = 0; idx < gs.amp.size(); ++idx)
                CHECK(std::abs(gs.amp[idx] - dense.amp[idx]) < 1e-9);
        }
    }
}

TEST_CASE("encoding networks produce the exact codewords") {
    for (const char* name : {"five", "steane", "code422", "eight"}) {
        StabilizerCode code = catalog(name);
        Circuit enc = encoder_circuit(code);
        auto words = codeword_states(standard_frame_code(code));
        for (std::size_t c = 0; c < (std::size_t(1) << code.k); ++c) {
            std::size_t index = 0;
            for (std::size_t i = 0; i < code.k; ++i)
                if ((c >> i) & 1u) index |= std::size_t(1) << (code.k - 1 - i);
            DenseState out = run_circuit_dense(enc, DenseState::basis(code.n, index));
            CHECK(fidelity(out, words[c]) > 1.0 - 1e-10);
        }
    }
}

TEST_CASE("measurement-free decoder extracts the logical qubit") {
    StabilizerCode frame = standard_frame_code(catalog("five"));
    auto words = codeword_states(frame);
    Circuit dec = decode_by_measurement(catalog("five"));
    std::mt19937_64 rng(41);
    DenseState logical = random_state(1, rng);
    DenseState in = DenseState::basis(6, 0);
    for (std::size_t idx = 0; idx < 32; ++idx)
        in.amp[idx << 1] = logical.amp[0] * words[0].amp[idx] + logical.amp[1] * words[1].amp[idx];
    DenseState out = run_circuit_dense(dec, in);
    DenseState want = DenseState::basis(6, 0);
    for (std::size_t idx = 0; idx < 32; ++idx)
        for (std::size_t b = 0; b < 2; ++b)
            want.amp[(idx << 1) | b] = words[0].amp[idx] * logical.amp[b];
    CHECK(fidelity(out, want) > 1.0 - 1e-10);
}

TEST_CASE("toffoli ancilla relations") {
    ToffoliAncillaReport rep = toffoli_ancilla_check();
    CHECK(rep.ancilla_fixed);
    CHECK(rep.companion_negated);
    CHECK(rep.sum_is_plus_cube);
    CHECK(rep.conjugation_ok);
    CHECK(rep.ok());
}

TEST_CASE("amplitude damping conditions") {
    auto amp4 = amplitude_damping_check(catalog("amp4"), 1);
    CHECK(amp4.ok);
    CHECK(amp4.pairs_checked > 0);
    auto shor = amplitude_damping_check(catalog("shor9"), 2);
    CHECK(shor.ok);
    // The four-qubit code cannot reach second order.
    CHECK(!amplitude_damping_check(catalog("amp4"), 2).ok);
    CHECK_THROWS_AS(amplitude_damping_check(catalog("amp4"), 0), input_error);
}

TEST_CASE("cyclic five-qubit projector") {
    NonadditiveReport rep = nonadditive_projector_check();
    CHECK(std::abs(rep.trace_re - 6.0) < 1e-12);
    CHECK(std::abs(rep.trace_im) < 1e-12);
    CHECK(rep.idempotent_residual < 1e-12);
    CHECK(rep.conjugate_overlap < 1e-12);
    CHECK(rep.ok());
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(DenseState::basis(15, 0), input_error);
    StabilizerCode big = catalog("code16_10_3");
    CHECK_THROWS_AS(verify_kl_condition(big, errors_up_to_weight(16, 0)), input_error);
}
