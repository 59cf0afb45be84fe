// Acceptance suite: every criterion is exact rational arithmetic, one
// PASS/FAIL line per criterion. Usage: acceptance <polymo-binary> <data-dir>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polymo/chow.hpp"
#include "polymo/cox.hpp"
#include "polymo/problem.hpp"
#include "polymo/score.hpp"
#include "test_deformations.hpp"

using namespace polymo;
using namespace polymo::testing;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void expect(bool ok, const std::string& what) {
    if (!ok) note("check failed: " + what);
}

void expect_eq(const Rational& got, const Rational& want, const std::string& what) {
    if (got != want)
        note(what + ": got " + rat_to_string(got) + ", want " + rat_to_string(want));
}

void criterion(int index, const std::string& name, void (*body)()) {
    g_notes.clear();
    try {
        body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    if (g_notes.empty()) {
        std::printf("[PASS] criterion %d: %s\n", index, name.c_str());
    } else {
        ++g_failures;
        std::printf("[FAIL] criterion %d: %s\n", index, name.c_str());
        for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
    }
    std::fflush(stdout);
}

ToricVariety P(int n) { return ToricVariety::build(projective_space_fan(n)); }

std::string g_cli;
std::string g_data;

// ---- criterion bodies ----

void classical_oracle_suite() {
    ChowRing p2(P(2));
    expect_eq(p2.intersection_number({{1}, {1}}), 1, "<H,H> on P^2");

    ChowRing p4(P(4));
    expect_eq(p4.intersection_number({{1}, {1}, {1}, {1}}), 1, "<H^4> on P^4");

    ChowRing f0(ToricVariety::build(p1xp1_fan()));
    expect_eq(f0.intersection_number({{1, 0}, {0, 1}}), 1, "<f,s> on P1xP1");
    expect_eq(f0.intersection_number({{1, 0}, {1, 0}}), 0, "<f,f> on P1xP1");

    ToricVariety f1 = ToricVariety::build(hirzebruch1_fan());
    ChowRing f1ring(f1);
    expect_eq(f1ring.intersection_number({f1.ray_degree(1), f1.ray_degree(1)}), -1,
              "<D2,D2> on F1");

    // normalization-cone independence on every test fan
    for (const Fan& fan : {projective_space_fan(2), projective_space_fan(4), p1xp1_fan(),
                           hirzebruch1_fan()}) {
        ToricVariety v = ToricVariety::build(fan);
        ChowRing ring(v);
        std::vector<DivisorClass> classes(v.dimension(), v.ray_degree(0));
        Rational base = ring.intersection_number(classes);
        for (size_t c = 0; c < fan.max_cones.size(); ++c)
            expect(ring.intersection_number_via_cone(classes, int(c)) == base,
                   "cone-independent normalization");
    }
}

void undeformed_equivalence() {
    for (const Fan& fan : {projective_space_fan(2), projective_space_fan(4),
                           projective_space_fan(5), p1xp1_fan(), hirzebruch1_fan()}) {
        ToricVariety v = ToricVariety::build(fan);
        PolymologyRing ring(v, DeformedEuler::undeformed(v));
        ChowRing chow(v);
        const int n = v.dimension();
        const int r = v.class_rank();

        // exhaustive tuples of Pic basis classes
        std::vector<int> tuple(n, 0);
        for (;;) {
            std::vector<DivisorClass> classes;
            std::vector<WVector> sigmas;
            for (int i : tuple) {
                DivisorClass basis(r, 0);
                basis[i] = 1;
                classes.push_back(basis);
                sigmas.push_back(wvector_from_class(basis));
            }
            expect(ring.product(sigmas) == chow.intersection_number(classes),
                   "basis tuple equivalence");
            int pos = n - 1;
            while (pos >= 0 && tuple[pos] == r - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }

        // exhaustive multisets of toric divisor classes deg(D_rho)
        std::vector<int> pick(n, 0);
        for (;;) {
            std::vector<DivisorClass> classes;
            std::vector<WVector> sigmas;
            for (int i : pick) {
                classes.push_back(v.ray_degree(i));
                sigmas.push_back(wvector_from_class(v.ray_degree(i)));
            }
            expect(ring.product(sigmas) == chow.intersection_number(classes),
                   "ray divisor tuple equivalence");
            int pos = n - 1;
            while (pos >= 0 && pick[pos] == v.ray_count() - 1) --pos;
            if (pos < 0) break;
            int next = pick[pos] + 1;
            for (int i = pos; i < n; ++i) pick[i] = next;  // nondecreasing tuples
        }
    }
}

void classical_restriction_values() {
    ToricVariety p4 = P(4);
    DeformedEuler e4 = DeformedEuler::undeformed(p4);
    PolymologyRing ring4(p4, e4);
    ChowRing chow4(p4);
    std::vector<WVector> hhh = {{rat(1)}, {rat(1)}, {rat(1)}};
    for (long d = 1; d <= 3; ++d) {
        Polynomial f(5);
        for (int i = 0; i < 5; ++i) {
            Monomial m(5, 0);
            m[i] = int(d);
            f.add_term(m, 1);
        }
        CompleteIntersectionData ci = extract_gammas(p4, e4, {default_jacobian(p4, "X", f)});
        EvalReport rep = score_product(ring4, ci, hhh);
        expect_eq(rep.value, d, "degree-" + std::to_string(d) + " hypersurface of P^4");
        expect_eq(chow4.intersection_number({{1}, {1}, {1}, {d}}), rep.value,
                  "oracle cross-check on P^4");
    }

    ToricVariety p5 = P(5);
    DeformedEuler e5 = DeformedEuler::undeformed(p5);
    PolymologyRing ring5(p5, e5);
    Polynomial q1(6), q2(6);
    for (int i = 0; i < 6; ++i) {
        Monomial m(6, 0);
        m[i] = 2;
        q1.add_term(m, 1);
    }
    q2.add_term({1, 1, 0, 0, 0, 0}, 1);
    q2.add_term({0, 0, 1, 1, 0, 0}, 1);
    q2.add_term({0, 0, 0, 0, 1, 1}, 1);
    CompleteIntersectionData ci = extract_gammas(
        p5, e5, {default_jacobian(p5, "Q1", q1), default_jacobian(p5, "Q2", q2)});
    EvalReport rep = score_product(ring5, ci, {{rat(1)}, {rat(1)}, {rat(1)}});
    expect_eq(rep.value, 4, "two quadrics in P^5");
    expect_eq(ChowRing(p5).intersection_number({{1}, {1}, {1}, {2}, {2}}), 4,
              "oracle cross-check on P^5");
    expect(rep.warnings.empty(), "m = n-3 must not warn on the undeformed bundle");
}

void gamma_extraction() {
    std::mt19937 rng(9001);
    int successes = 0;
    std::vector<Fan> fans = {projective_space_fan(2), projective_space_fan(4),
                             projective_space_fan(5), p1xp1_fan(), hirzebruch1_fan()};
    for (const Fan& fan : fans) {
        ToricVariety v = ToricVariety::build(fan);
        DeformedEuler e = DeformedEuler::undeformed(v);
        std::uniform_int_distribution<int> pick(0, v.ray_count() - 1);
        for (int trial = 0; trial < 4; ++trial) {
            DivisorClass cls = class_add(v.ray_degree(pick(rng)), v.ray_degree(pick(rng)));
            Polynomial f = random_section(v, cls, rng);
            HypersurfaceData hyp = default_jacobian(v, "rand", f);
            WVector gamma = extract_gamma(v, e, hyp);
            expect(gamma == wvector_from_class(cls), "gamma equals class(f)");
            for (int a = 0; a < v.class_rank(); ++a) {
                Polynomial p_a(v.ray_count());
                for (int rho = 0; rho < v.ray_count(); ++rho)
                    p_a = p_a + hyp.J[rho] * e.row_component(rho, a);
                expect(p_a == f * gamma[a], "recomposition gamma*f = E(J)");
            }
            ++successes;
        }
    }
    expect(successes == 20, "20 random sections exercised");

    // constructed non-monad inputs
    ToricVariety p2 = P(2);
    DeformedEuler e2 = DeformedEuler::undeformed(p2);
    Polynomial f(3);
    f.add_term({1, 1, 0}, 1);
    f.add_term({0, 0, 2}, 1);
    std::vector<Polynomial> J = {Polynomial::monomial({0, 1, 0}, 1),
                                 Polynomial::monomial({1, 0, 0}, 1),
                                 Polynomial::monomial({0, 0, 1}, 1)};
    bool raised = false;
    try {
        extract_gamma(p2, e2, make_hypersurface(p2, "bad", f, J));
    } catch (const DivisibilityError&) {
        raised = true;
    }
    expect(raised, "non-monad input raises DivisibilityError");
}

void toric_cross_check() {
    ToricVariety p4 = P(4);
    DeformedEuler e4 = DeformedEuler::undeformed(p4);
    PolymologyRing ring4(p4, e4);
    CompleteIntersectionData ci = extract_gammas(
        p4, e4, {default_jacobian(p4, "H", Polynomial::monomial({1, 0, 0, 0, 0}, 1))});
    Rational via_score = score_product(ring4, ci, {{rat(1)}, {rat(1)}, {rat(1)}}).value;

    ToricVariety p3 = P(3);
    PolymologyRing ring3(p3, DeformedEuler::undeformed(p3));
    Rational direct = ring3.product({{rat(1)}, {rat(1)}, {rat(1)}});

    expect_eq(via_score, direct, "score on P^4 vs the standalone P^3 engine");
    expect_eq(direct, 1, "<H,H,H> on P^3");
}

void deformed_ring_properties() {
    std::mt19937 rng(9002);

    ToricVariety f0 = ToricVariety::build(p1xp1_fan());
    for (int trial = 0; trial < 20; ++trial) {
        DeformedEuler e = random_p1xp1_deformation(f0, rng);
        PolymologyRing ring(f0, e);
        expect(ring.quotient_dims() == f0.betti_numbers(), "P1xP1 dims = Betti");
        for (const auto& gen : ring.ideal().generators)
            for (const auto& m : monomials_of_degree(2, 2 - gen.degree()))
                expect(ring.eval_top(gen * SymElement(Polynomial::monomial(m, 1))) == 0,
                       "eval_top annihilates the ideal");
        WVector a = random_wvector(2, rng), b = random_wvector(2, rng),
                u = random_wvector(2, rng);
        expect(ring.product({a, b}) == ring.product({b, a}), "symmetry");
        Rational s = random_rational(rng), t = random_rational(rng);
        WVector combo = {s * a[0] + t * u[0], s * a[1] + t * u[1]};
        expect(ring.product({combo, b}) ==
                   s * ring.product({a, b}) + t * ring.product({u, b}),
               "multilinearity");
    }

    ToricVariety p3 = P(3);
    PolymologyRing base(p3, DeformedEuler::undeformed(p3));
    for (int trial = 0; trial < 20; ++trial) {
        DeformedEuler e = random_pn_deformation(p3, rng);
        PolymologyRing ring(p3, e);
        expect(ring.quotient_dims() == p3.betti_numbers(), "P^3 dims = Betti");
        std::vector<WVector> sigmas;
        for (int i = 0; i < 3; ++i) sigmas.push_back(random_wvector(1, rng));
        expect(ring.product(sigmas) == base.product(sigmas), "P^n deformation rigidity");
    }
}

void score_induction_consistency() {
    std::mt19937 rng(9003);
    ToricVariety p5 = P(5);
    Polynomial q1(6), q2(6);
    for (int i = 0; i < 6; ++i) {
        Monomial m(6, 0);
        m[i] = 2;
        q1.add_term(m, 1);
    }
    q2.add_term({1, 1, 0, 0, 0, 0}, 1);
    q2.add_term({0, 0, 1, 1, 0, 0}, 1);
    q2.add_term({0, 0, 0, 0, 1, 1}, 1);
    std::vector<WVector> hhh = {{rat(1)}, {rat(1)}, {rat(1)}};

    // undeformed bundle
    DeformedEuler e5 = DeformedEuler::undeformed(p5);
    PolymologyRing ring5(p5, e5);
    CompleteIntersectionData ci = extract_gammas(
        p5, e5, {default_jacobian(p5, "Q1", q1), default_jacobian(p5, "Q2", q2)});
    ConsistencyReport rep = restriction_consistency_check(ring5, ci, hhh);
    expect(rep.consistent, "undeformed P^5 stepwise = one-shot");
    expect_eq(rep.one_shot, 4, "undeformed P^5 value");

    // deformed bundle with a transported lift
    PnMonad monad = random_pn_monad(p5, rng);
    PolymologyRing dring(p5, monad.euler);
    CompleteIntersectionData dci = extract_gammas(
        p5, monad.euler,
        {make_hypersurface(p5, "Q1", q1, transported_jacobian(p5, monad.mix_inv, q1)),
         make_hypersurface(p5, "Q2", q2, transported_jacobian(p5, monad.mix_inv, q2))});
    ConsistencyReport drep = restriction_consistency_check(dring, dci, hhh);
    expect(drep.consistent, "deformed P^5 stepwise = one-shot");
    expect_eq(drep.one_shot, 4, "deformed P^5 value (P^n rigidity)");

    // hypersurface case on P^4
    ToricVariety p4 = P(4);
    DeformedEuler e4 = DeformedEuler::undeformed(p4);
    PolymologyRing ring4(p4, e4);
    Polynomial f(5);
    f.add_term({1, 1, 0, 0, 0}, 1);
    f.add_term({0, 0, 1, 1, 0}, 1);
    f.add_term({0, 0, 0, 0, 2}, 1);
    CompleteIntersectionData hci = extract_gammas(p4, e4, {default_jacobian(p4, "Q", f)});
    ConsistencyReport hrep =
        restriction_consistency_check(ring4, hci, {{rat(1)}, {rat(1)}, {rat(1)}});
    expect(hrep.consistent, "P^4 hypersurface stepwise = one-shot");
    expect_eq(hrep.one_shot, 2, "P^4 quadric value");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void cli_determinism() {
    if (g_cli.empty() || g_data.empty()) {
        note("CLI binary or data directory not supplied");
        return;
    }
    const char* files[] = {"p2_basic.json",    "p4_quadric.json",
                           "p5_two_quadrics.json", "p1xp1_deformed.json",
                           "f1_intersect.json",    "broken_fan.json",
                           "p4_two_hypersurfaces.json"};
    for (const char* name : files) {
        std::string input = g_data + "/" + name;
        std::string out1 = "acceptance_run1.json";
        std::string out2 = "acceptance_run2.json";
        int rc1 = std::system((g_cli + " run " + input + " > " + out1 + " 2>/dev/null").c_str());
        int rc2 = std::system((g_cli + " run " + input + " > " + out2 + " 2>/dev/null").c_str());
        expect(rc1 == rc2, std::string("exit codes agree for ") + name);
        std::string a = slurp(out1), b = slurp(out2);
        expect(!a.empty(), std::string("report produced for ") + name);
        expect(a == b, std::string("byte-identical reports for ") + name);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    if (argc > 2) g_data = argv[2];

    criterion(1, "classical intersection oracle suite", classical_oracle_suite);
    criterion(2, "undeformed product equals intersection numbers (exhaustive)",
              undeformed_equivalence);
    criterion(3, "restriction values for hypersurfaces and complete intersections",
              classical_restriction_values);
    criterion(4, "gamma extraction, recomposition, and non-monad rejection", gamma_extraction);
    criterion(5, "toric hypersurface cross-check (P^4 vs P^3)", toric_cross_check);
    criterion(6, "deformed-ring properties on random block-complete data",
              deformed_ring_properties);
    criterion(7, "stepwise insertion consistency, including deformed P^5",
              score_induction_consistency);
    criterion(8, "CLI determinism: byte-identical reports", cli_determinism);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
