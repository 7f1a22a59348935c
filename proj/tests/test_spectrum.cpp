#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "relbound/errors.hpp"
#include "relbound/reference_models.hpp"
#include "relbound/spectrum.hpp"

using namespace relbound;
using oracle::rel;

namespace {

const TwoBodySystem hydrogen(oracle::kElectron, oracle::kProton, 1, oracle::kAlpha);
const TwoBodySystem pionium(oracle::kPion, oracle::kPion, 1, oracle::kAlpha);

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("quantum numbers") {
    CHECK_THROWS_AS(QuantumNumbers(0, 0), DomainError);
    CHECK_THROWS_AS(QuantumNumbers(2, 2), DomainError);
    CHECK_THROWS_AS(QuantumNumbers(2, -1), DomainError);
    CHECK(QuantumNumbers(3, 1).n_r() == 1);
    CHECK(QuantumNumbers(1, 0).label() == "1S");
    CHECK(QuantumNumbers(4, 3).label() == "4F");
}

TEST_CASE("parsing branch and policy names") {
    CHECK(parse_branch("normal") == Branch::Normal);
    CHECK(parse_branch("abnormal") == Branch::Abnormal);
    CHECK(parse_d0_policy("freeze") == D0Policy::FreezeZero);
    CHECK(parse_d0_policy("full") == D0Policy::FullIteration);
    CHECK_THROWS_AS(parse_branch("weird"), DomainError);
}

TEST_CASE("zeroth-order sigma") {
    // extended-precision value of the closed form at Zα = 1/137.035999
    CHECK(rel(sigma_l_zeroth(0, 1.0 / 137.035999), 5.3254190594532549e-05) < 1e-12);
    for (int l = 0; l < 5; ++l) CHECK(sigma_l_zeroth(l, 0.0) == 0.0);
    CHECK_THROWS_AS(sigma_l_zeroth(0, 0.51), SupercriticalError);
    CHECK_THROWS_AS(sigma_l_zeroth(0, 0.5), SupercriticalError);
    CHECK_NOTHROW(sigma_l_zeroth(1, 0.51));
    try {
        sigma_l_zeroth(0, 0.6);
    } catch (const SupercriticalError& e) {
        CHECK(e.l() == 0);
        CHECK(e.zalpha() == 0.6);
        CHECK(e.critical_zalpha() == 0.5);
    }
}

TEST_CASE("hydrogen and pionium ground states against the high-precision oracle") {
    const auto h = solve_level(hydrogen, {1, 0}, Branch::Normal);
    const auto ho = oracle::level(oracle::kElectron, oracle::kProton, 1, oracle::kAlpha, 1, 0);
    CHECK(h.converged);
    CHECK(rel(h.binding(), -ho.Eprime) < 1e-9);
    CHECK(rel(h.beta, ho.beta) < 1e-15);
    CHECK(rel(h.d0, ho.d0) < 1e-12);
    CHECK(rel(h.D, ho.D) < 1e-12);
    CHECK(rel(h.E_n, ho.E) < 1e-15);
    // frozen values
    CHECK(rel(h.binding(), 1.3599192623159154e-05) < 1e-9);
    CHECK(rel(h.D, 5.4400982013155124e-04) < 1e-10);
    CHECK(rel(h.d0, 5.793851958910157e-08) < 1e-10);
    CHECK(rel(h.binding(), oracle::bohr(oracle::kElectron, oracle::kProton, 1, oracle::kAlpha, 1)) < 1e-4);

    const auto p = solve_level(pionium, {1, 0}, Branch::Normal);
    CHECK(rel(p.binding(), 1.8582079631526715e-03) < 1e-9);
    CHECK(rel(p.mu0, 69.785427276768516) < 1e-14);
    CHECK(rel(p.mu, 69.783569068805363) < 1e-14);
    CHECK(rel(p.m, 279.13892179203685) < 1e-15);
    CHECK(rel(p.d0, 2.6625322768672436e-05) < 1e-10);
    CHECK(rel(p.d0, oracle::kAlpha * oracle::kAlpha / 2) < 1e-3);
    CHECK(rel(p.binding(), oracle::bohr(oracle::kPion, oracle::kPion, 1, oracle::kAlpha, 1)) < 1e-3);
}

TEST_CASE("oracle agreement over many levels") {
    for (const auto* sys : {&hydrogen, &pionium}) {
        for (int n = 1; n <= 6; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto lv = solve_level(*sys, {n, l}, Branch::Normal);
                const auto o = oracle::level(sys->m01(), sys->m02(), 1, oracle::kAlpha, n, l);
                CHECK(rel(lv.binding(), -o.Eprime) < 1e-9);
                CHECK(rel(lv.sigma_l, o.sigma) < 1e-10);
            }
        }
    }
}

TEST_CASE("free limit") {
    oracle::Gen gen(3);
    for (int i = 0; i < 100; ++i) {
        const TwoBodySystem s(gen.mass(), gen.mass(), gen.integer(1, 90), 0.0);
        const int n = gen.integer(1, 6);
        const int l = gen.integer(0, n - 1);
        const auto lv = solve_level(s, {n, l}, Branch::Normal);
        CHECK(lv.E_n == s.m0());
        CHECK(lv.sigma_l == 0.0);
        CHECK(lv.binding() == 0.0);
        CHECK(energy_normal(s.m01(), s.m02(), 0.0, n) == s.m0());
        CHECK(energy_abnormal(s.m01(), s.m02(), 0.0, n) == doctest::Approx(std::abs(s.m01() - s.m02())));
    }
}

TEST_CASE("quadratic residual") {
    const auto p = solve_level(pionium, {1, 0}, Branch::Normal);
    const double za = pionium.zalpha();
    CHECK(p.residual_53 <= 1e-10);
    CHECK(residual_quadratic_53(p.binding(), p.mu0, za, p.beta) <= 1e-10);
    CHECK(residual_quadratic_53(1.01 * p.binding(), p.mu0, za, p.beta) > 1e-3);

    // both roots of the quadratic from the textbook formula
    const double a = za * za + p.beta * p.beta;
    const double b = -2.0 * p.mu0 * a;
    const double c = p.mu0 * p.mu0 * za * za;
    const double disc = std::sqrt(b * b - 4 * a * c);
    const double big = (-b + disc) / (2 * a);
    const double small = c / (a * big);
    CHECK(residual_quadratic_53(big, p.mu0, za, p.beta) <= 1e-12);
    CHECK(residual_quadratic_53(small, p.mu0, za, p.beta) <= 1e-12);
}

TEST_CASE("binding from beta") {
    for (const auto* sys : {&hydrogen, &pionium}) {
        for (int n = 1; n <= 4; ++n) {
            const auto lv = solve_level(*sys, {n, 0}, Branch::Normal);
            const double b = binding_from_beta(lv.mu, lv.mu0, sys->zalpha(), lv.beta);
            CHECK(rel(b, lv.binding()) < 1e-10);
            CHECK(std::abs(b - (sys->m0() - lv.m)) <= 4e-16 * sys->m0());
        }
    }
    const auto h = solve_level(hydrogen, {1, 0}, Branch::Normal);
    CHECK(binding_from_beta(h.mu, h.mu0, hydrogen.zalpha(), h.beta) * 1e6 == doctest::Approx(13.598).epsilon(1e-4));
    CHECK(binding_from_beta(1.0, 1.0, 0.007, 1e12) < 1e-20);
    CHECK_THROWS_AS(binding_from_beta(-1.0, 1.0, 0.007, 1.0), DomainError);
}

TEST_CASE("swap symmetry") {
    oracle::Gen gen(5);
    for (int i = 0; i < 200; ++i) {
        const TwoBodySystem s(gen.mass(), gen.mass(), gen.integer(1, 60), oracle::kAlpha);
        const int n = gen.integer(1, 6);
        const int l = gen.integer(0, n - 1);
        const auto branch = gen.integer(0, 1) ? Branch::Normal : Branch::Abnormal;
        const auto a = solve_level(s, {n, l}, branch);
        const auto b = solve_level(s.swapped(), {n, l}, branch);
        CHECK(rel(a.E_n, b.E_n) <= 1e-14);
    }
}

TEST_CASE("normal levels rise with n and abnormal levels fall") {
    for (const auto* sys : {&hydrogen, &pionium}) {
        for (int l = 0; l <= 2; ++l) {
            double prev_normal = 0.0;
            double prev_abnormal = 1e300;
            for (int n = l + 1; n <= 12; ++n) {
                const auto a = solve_level(*sys, {n, l}, Branch::Normal);
                const auto b = solve_level(*sys, {n, l}, Branch::Abnormal);
                CHECK(a.E_n > prev_normal);
                CHECK(b.E_n < prev_abnormal);
                CHECK(a.E_n < sys->m0());
                prev_normal = a.E_n;
                prev_abnormal = b.E_n;
            }
        }
    }
}

TEST_CASE("abnormal branch") {
    const auto a1 = solve_level(pionium, {1, 0}, Branch::Abnormal);
    const auto o = oracle::level(oracle::kPion, oracle::kPion, 1, oracle::kAlpha, 1, 0, true);
    CHECK(a1.d0 == 0.0);
    CHECK(a1.mu < 0.0);
    CHECK(a1.D < 0.0);
    CHECK(rel(a1.E_n, o.E) < 1e-12);
    CHECK(rel(a1.E_n, 1.0185282449188384) < 1e-12);
    CHECK(a1.residual_53 <= 1e-10);

    const auto a200 = solve_level(pionium, {200, 0}, Branch::Abnormal);
    CHECK(rel(200 * a200.E_n, oracle::kAlpha * oracle::kPion) < 1e-3);

    // the free-running variant must either converge or say why it did not
    SolverConfig full;
    full.abnormal_d0_policy = D0Policy::FullIteration;
    try {
        const auto f = solve_level(pionium, {1, 0}, Branch::Abnormal, full);
        CHECK(f.converged);
    } catch (const ConvergenceError& e) {
        CHECK(std::string(e.what()).size() > 0);
    } catch (const SupercriticalError& e) {
        CHECK(e.l() == 0);
    }
}

TEST_CASE("iteration converges quickly and beta matches the fixed-d0 closed form") {
    for (const auto* sys : {&hydrogen, &pionium}) {
        for (int n = 1; n <= 5; ++n) {
            for (int l = 0; l < n; ++l) {
                const auto lv = solve_level(*sys, {n, l}, Branch::Normal);
                CHECK(lv.iterations <= 10);
                const double b = beta_closed_form(l, sys->zalpha(), lv.d0, n - l - 1);
                CHECK(rel(b, lv.beta) < 1e-13);
                CHECK(rel(b, oracle::beta_fixed_d0(l, sys->zalpha(), lv.d0, n - l - 1)) < 1e-14);
            }
        }
    }
}

TEST_CASE("solver configuration") {
    SolverConfig bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.damping = 1.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    SolverConfig few;
    few.max_iter = 1;
    CHECK_THROWS_AS(solve_level(pionium, {1, 0}, Branch::Normal, few), ConvergenceError);
    SolverConfig damped;
    damped.damping = 0.5;
    const auto d = solve_level(pionium, {2, 1}, Branch::Normal, damped);
    const auto u = solve_level(pionium, {2, 1}, Branch::Normal);
    CHECK(rel(d.E_n, u.E_n) < 1e-15);
    CHECK(d.iterations > u.iterations);
}

TEST_CASE("supercritical threshold in Z") {
    const TwoBodySystem z68(oracle::kElectron, 193687.12, 68, oracle::kAlpha);
    const TwoBodySystem z69(oracle::kElectron, 193687.12, 69, oracle::kAlpha);
    CHECK_NOTHROW(solve_level(z68, {1, 0}, Branch::Normal));
    CHECK_THROWS_AS(solve_level(z69, {1, 0}, Branch::Normal), SupercriticalError);
    CHECK_NOTHROW(solve_level(z69, {2, 1}, Branch::Normal));
}

TEST_CASE("heavy partner reproduces the one-body level") {
    const double m = oracle::kElectron;
    const TwoBodySystem s(m, 1e8 * m, 1, oracle::kAlpha);
    for (auto [n, l] : std::initializer_list<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 2}}) {
        const auto lv = solve_level(s, {n, l}, Branch::Normal);
        CHECK(rel(lv.binding(), oracle::kg_binding(m, oracle::kAlpha, n, l)) < 1e-6);
    }
}

}
