#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchan/closedform.hpp"
#include "qchan/error.hpp"
#include "qchan/metrics.hpp"
#include "qchan/oracles.hpp"

#include <cmath>

using namespace qchan;

TEST_CASE("named constants") {
    CHECK(constants::werner_chsh_fw == doctest::Approx(0.780330).epsilon(1e-6));
    CHECK(constants::new_entangled_p == doctest::Approx(0.2917960).epsilon(1e-7));
    CHECK(constants::mems_chsh_c == doctest::Approx(0.707107).epsilon(1e-6));
    // The boundary p of the new state solves 4(1-p)^2 = 3p(p+2).
    const double p = constants::new_entangled_p;
    CHECK(std::abs(4 * (1 - p) * (1 - p) - 3 * p * (p + 2)) < 1e-13);
    CHECK(constants::new_slin_lo == doctest::Approx(new_cf(0.0).s_lin));
    CHECK(constants::new_slin_hi == doctest::Approx(new_cf(0.25).s_lin));
    CHECK(constants::table().size() >= 14);
}

TEST_CASE("Werner closed forms") {
    const auto b = werner_cf(constants::werner_chsh_fw);
    CHECK(std::abs(b.m_value - 1.0) < 1e-12);
    CHECK_FALSE(b.chsh_violated);
    const auto one = werner_cf(1.0);
    CHECK(one.f_opt == 1.0);
    CHECK(one.s_lin == doctest::Approx(0.0));
    const double fw = werner_fw_from_entropy(0.593);
    CHECK(werner_cf(fw).f_opt == doctest::Approx(0.818983).epsilon(5e-6));
    CHECK(werner_cf(0.4).f_opt == doctest::Approx(2.0 / 3.0));
    CHECK(werner_cf(0.4).concurrence == 0.0);
    CHECK_THROWS_AS(werner_cf(1.2), Error);
}

TEST_CASE("MEMS closed forms") {
    const auto b = mems_cf(2.0 / 3.0);
    CHECK(b.f_opt == doctest::Approx(7.0 / 9.0));
    CHECK(b.s_lin == doctest::Approx(16.0 / 27.0));
    const auto one = mems_cf(1.0);
    CHECK(one.f_opt == doctest::Approx(1.0));
    CHECK(one.s_lin == doctest::Approx(0.0));
    CHECK(one.m_value == doctest::Approx(2.0));
    CHECK(mems_cf(mems_c_from_entropy(0.593)).f_opt == doctest::Approx(0.777625).epsilon(5e-6));
    // Useful iff S_L < 22/27, i.e. C > 1/3.
    CHECK(mems_cf(0.34).useful);
    CHECK_FALSE(mems_cf(0.33).useful);
}

TEST_CASE("MEMS branch continuity at C = 2/3") {
    const double c = 2.0 / 3.0, below = std::nextafter(c, 0.0);
    const auto a = mems_cf(below), b = mems_cf(c);
    CHECK(std::abs(a.f_opt - b.f_opt) < 1e-12);
    CHECK(std::abs(a.s_lin - b.s_lin) < 1e-12);
    CHECK(std::abs(a.fef - b.fef) < 1e-12);
    CHECK(std::abs(a.m_value - b.m_value) < 1e-12);
}

TEST_CASE("MEMS printed correlation-matrix variant is recorded, not used") {
    const auto cf = mems_cf(0.6);
    REQUIRE(cf.printed_variant);
    CHECK(cf.printed_variant->t_diag[0] == doctest::Approx(1.0 / 3.0 + 0.6));
    CHECK(cf.printed_variant->m_value == doctest::Approx(1 + 2 * (9 * 0.36 + 1.8 - 4) / 9));
    CHECK(cf.m_value == doctest::Approx(std::max(2 * 0.36, 0.36 + 1.0 / 9.0)));
    // Definitional threshold C > 1/sqrt2 versus the printed (sqrt153 - 3)/18.
    CHECK_FALSE(mems_cf(0.70).chsh_violated);
    CHECK(mems_cf(0.71).chsh_violated);
    CHECK(mems_cf(0.6).printed_variant->chsh_violated);
    CHECK(mems_cf(0.75).printed_variant->m_value == doctest::Approx(13 * 0.5625 / 4));
    CHECK_FALSE(werner_cf(0.9).printed_variant);
}

TEST_CASE("Werner derivative closed forms") {
    for (double fw : {0.6, 0.8, 1.0}) CHECK(wd_cf(fw, 0.5).f_opt == doctest::Approx((2 * fw + 1) / 3));
    CHECK(wd_cf(0.96, 0.962437).f_opt == doctest::Approx(0.777775).epsilon(5e-6));
    const auto c3 = wd_cf(constants::werner_chsh_fw, 0.5);
    CHECK(std::abs(c3.m_value - 1.0) < 1e-12);
    CHECK(c3.bell_class->beta == 0.5);
    CHECK(c3.bell_class->gamma == 0.5);
    CHECK_THROWS_AS(wd_cf(0.5, 0.7), Error);
}

TEST_CASE("Werner derivative: mixedness is independent of a") {
    for (double fw : {0.6, 0.8, 0.95}) {
        const double ref = linear_entropy(make_state(WernerDerivative{fw, 0.5}));
        for (double a : oracle::grid(0.5, 1.0, 50))
            CHECK(std::abs(linear_entropy(make_state(WernerDerivative{fw, a})) - ref) < 1e-12);
    }
}

TEST_CASE("Werner derivative fidelity bracket and monotonicity in a") {
    for (double fw : oracle::grid(0.51, 1.0, 20)) {
        double prev = 2.0;
        for (double a : oracle::grid(0.5, 1.0, 200)) {
            const auto cf = wd_cf(fw, a);
            CHECK(cf.f_opt <= prev + 1e-15);
            prev = cf.f_opt;
            if (cf.entangled && cf.useful) {
                CHECK(cf.f_opt > 2.0 / 3.0);
                CHECK(cf.f_opt <= (2 * fw + 1) / 3 + 1e-15);
            }
        }
    }
}

TEST_CASE("new state closed forms") {
    const auto z = new_cf(0.0);
    CHECK(z.concurrence == doctest::Approx(2.0 / 3.0));
    CHECK(z.f_opt == doctest::Approx(7.0 / 9.0));
    CHECK(z.m_value == doctest::Approx(8.0 / 9.0));
    CHECK(new_cf(constants::new_entangled_p).concurrence < 1e-12);
    const auto one = new_cf(1.0);
    CHECK(one.m_value == doctest::Approx(1.0));
    CHECK(one.concurrence == 0.0);
    CHECK_FALSE(one.chsh_violated);
}

TEST_CASE("new state: entangled but not useful for 1/4 < p < 7 - 3 sqrt5") {
    for (double p : oracle::grid(0.2501, constants::new_entangled_p - 1e-4, 50)) {
        const auto cf = new_cf(p);
        CHECK(cf.entangled);
        CHECK_FALSE(cf.useful);
        CHECK(cf.f_opt == doctest::Approx(2.0 / 3.0));
    }
}

TEST_CASE("fidelity vs linear entropy") {
    CHECK(fidelity_vs_entropy("werner", 0.0) == 1.0);
    const double s = constants::mems_branch_slin;
    const double upper = 2.0 / 3.0 + std::sqrt(2.0 - 3.0 * s) / (3.0 * std::sqrt(2.0));
    const double lower = 5.0 / 9.0 + std::sqrt(8.0 - 9.0 * s) / (3.0 * std::sqrt(6.0));
    CHECK(std::abs(upper - 7.0 / 9.0) < 1e-12);
    CHECK(std::abs(lower - 7.0 / 9.0) < 1e-12);
    CHECK(fidelity_vs_entropy("mems", s) == doctest::Approx(7.0 / 9.0));
    CHECK(fidelity_vs_entropy("new", 0.593) == doctest::Approx(0.777603).epsilon(5e-6));
    CHECK(fidelity_vs_entropy("wd", 0.593, 0.82) == doctest::Approx(0.769726).epsilon(5e-6));
}

TEST_CASE("fidelity vs linear entropy domains") {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind([] { fidelity_vs_entropy("werner", 0.95); }) == ErrorKind::DomainError);
    CHECK(kind([] { fidelity_vs_entropy("mems", -0.1); }) == ErrorKind::DomainError);
    CHECK(kind([] { fidelity_vs_entropy("wd", 8.0 / 9.0, 0.7); }) == ErrorKind::DomainError);
    CHECK(kind([] { fidelity_vs_entropy("new", 0.5); }) == ErrorKind::DomainError);
    CHECK(kind([] { fidelity_vs_entropy("new", constants::new_slin_hi); }) == ErrorKind::DomainError);
    CHECK(kind([] { fidelity_vs_entropy("wd", 0.5); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind([] { fidelity_vs_entropy("ghz", 0.5); }) == ErrorKind::DomainError);
    CHECK_NOTHROW(fidelity_vs_entropy("new", constants::new_slin_lo));
}

TEST_CASE("entropy inversions round trip") {
    for (double fw : oracle::grid(0.5, 1.0, 20)) CHECK(werner_fw_from_entropy(werner_cf(fw).s_lin) == doctest::Approx(fw));
    for (double c : oracle::grid(0.0, 1.0, 41)) CHECK(mems_c_from_entropy(mems_cf(c).s_lin) == doctest::Approx(c).epsilon(1e-9));
    for (double p : oracle::grid(0.0, 0.5, 20)) CHECK(new_p_from_entropy(new_cf(p).s_lin) == doctest::Approx(p).epsilon(1e-9));
}

TEST_CASE("crossover") {
    const auto r = crossover(0.96, 0.962437);
    CHECK(r.feasible);
    CHECK(r.p_max > 5e-6);
    CHECK(r.p_max < 6e-6);
    for (double a : {0.6, 0.8, 0.95}) CHECK_FALSE(crossover(2.0 / 3.0, a).feasible);
    const auto lo = crossover(0.99, 0.5);
    CHECK_FALSE(lo.feasible);
    CHECK(lo.a_window[0] == doctest::Approx(0.969).epsilon(1e-3));
}

TEST_CASE("crossover soundness: below p_max the new state has larger N") {
    for (double fw : oracle::grid(0.67, 1.0, 20))
        for (double a : oracle::grid(0.5, 1.0, 50)) {
            const auto r = crossover(fw, a);
            if (!r.feasible) continue;
            for (double t : {0.0, 0.5, 0.99}) CHECK(new_cf(t * r.p_max).n_value > wd_cf(fw, a).n_value);
        }
}

TEST_CASE("Bell-CHSH classification of the Werner derivative") {
    CHECK(wd_bell_classify(0.97, 0.964903).label == WdBellCase::CaseII);
    CHECK(wd_cf(0.97, 0.964903).m_value > 1.0);
    CHECK(wd_bell_classify(constants::werner_chsh_fw, 0.5).label == WdBellCase::CaseIII);
    CHECK(wd_bell_classify(0.7, 0.6).label == WdBellCase::NotApplicable);
    // gamma(0.99) = 0.99315..., so a = 0.993147 lies just below gamma.
    const auto c = wd_bell_classify(0.99, 0.993147);
    CHECK(c.gamma == doctest::Approx(0.9931507).epsilon(1e-7));
    CHECK(c.label == WdBellCase::CaseII);
    CHECK(wd_bell_classify(0.99, 0.995).label == WdBellCase::CaseI);
    CHECK(wd_bell_classify(0.99, 1.0).label == WdBellCase::Separable);
}

TEST_CASE("classification agrees with sign(M - 1)") {
    for (double fw : oracle::grid(constants::werner_chsh_fw + 1e-6, 1.0, 30))
        for (double a : oracle::grid(0.5, 1.0, 100)) {
            const auto cf = wd_cf(fw, a);
            if (std::abs(cf.m_value - 1.0) < 1e-12) continue;
            const bool violates = cf.bell_class->label == WdBellCase::CaseII;
            CHECK(violates == (cf.m_value > 1.0));
        }
}
