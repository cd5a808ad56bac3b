/*
* Copyright (C) 2026 evsim contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "evsim/errors.hpp"
#include "evsim/validation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <string>

using namespace evsim;

namespace
{

// Independent RK4 reference with its own fixed step, no day-grid splitting.
double reference_rk4(double p, double q, double n, double t_end, double h)
{
    auto f = [&](double a) { return (p + q * a / n) * (n - a); };
    const auto steps = static_cast<long>(std::llround(t_end / h));
    double a = 0.0;
    for (long i = 0; i < steps; ++i) {
        const double k1 = f(a);
        const double k2 = f(a + 0.5 * h * k1);
        const double k3 = f(a + 0.5 * h * k2);
        const double k4 = f(a + h * k3);
        a += h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
    }
    return a;
}

double read_golden(const std::string& name)
{
    std::ifstream in(std::string(EVSIM_TEST_DATA_DIR) + "/golden/" + name);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            return std::stod(line);
        }
    }
    ADD_FAILURE() << "golden value missing: " << name;
    return 0.0;
}

BassParams params(double p, double q, double n, double years, double dt = 0.001)
{
    return BassParams{p, q, n, years, dt};
}

} // namespace

TEST(BassClosedForm, InitialCondition)
{
    EXPECT_EQ(bass_closed_form(params(0.03, 0.38, 500, 5), 0.0), 0.0);
}

TEST(BassClosedForm, PureInnovationHalfLife)
{
    const auto b = params(0.2, 0.0, 1000, 10);
    EXPECT_NEAR(bass_closed_form(b, std::log(2.0) / 0.2), 500.0, 1e-9);
    EXPECT_NEAR(bass_closed_form(b, 3.0), 1000.0 * (1 - std::exp(-0.6)), 1e-9);
}

TEST(BassClosedForm, RejectsZeroInnovation)
{
    EXPECT_THROW(bass_closed_form(params(0.0, 0.4, 500, 5), 1.0), DomainError);
}

TEST(BassClosedForm, GoldenValueAgreesWithIndependentRk4)
{
    const auto b = params(0.03, 0.38, 500, 5);
    const double a_star = bass_closed_form(b, 5.0);
    EXPECT_NEAR(a_star, read_golden("bass_p003_q038_n500_t5.txt"), 1e-9);
    EXPECT_LT(std::abs(reference_rk4(0.03, 0.38, 500, 5.0, 1e-4) - a_star), 1e-3 * 500);
}

TEST(BassOde, ZeroInnovationStaysAtZero)
{
    const auto traj = bass_ode(params(0.0, 0.5, 500, 3));
    ASSERT_EQ(traj.adopters.size(), day_samples(params(0.0, 0.5, 500, 3)));
    for (double a : traj.adopters) {
        EXPECT_EQ(a, 0.0);
    }
}

TEST(BassOde, MonotoneAndBounded)
{
    for (const auto& b : {params(0.011, 1.5, 500, 10), params(0.3, 0.1, 200, 20), params(0.03, 0.38, 500, 5)}) {
        const auto traj = bass_ode(b);
        double previous = 0.0;
        for (double a : traj.adopters) {
            EXPECT_GE(a, previous);
            EXPECT_LE(a, b.n_total + 1e-9);
            previous = a;
        }
    }
}

TEST(BassOde, AgreesWithClosedForm)
{
    for (const auto& b : {params(0.011, 1.5, 500, 10), params(0.03, 0.38, 500, 5), params(0.5, 0.0, 80, 4)}) {
        const auto ode = bass_ode(b);
        const auto exact = bass_closed_form_trajectory(b);
        ASSERT_EQ(ode.adopters.size(), exact.adopters.size());
        EXPECT_LT(compare_abm_to_sd(ode.adopters, exact.adopters), 1e-3 * b.n_total);
        for (std::size_t d = 0; d < ode.t_years.size(); ++d) {
            EXPECT_DOUBLE_EQ(ode.t_years[d], (d + 1) / 365.25);
        }
    }
}

TEST(BassOde, FourthOrderConvergence)
{
    // dt 0.001 and 0.0005 give 3 and 6 substeps per day; q is large enough
    // to keep the error above round-off.
    const auto coarse = params(0.011, 20, 500, 10, 0.001);
    auto fine = coarse;
    fine.dt = 0.0005;
    const auto exact = bass_closed_form_trajectory(coarse);
    const double e_coarse = compare_abm_to_sd(bass_ode(coarse).adopters, exact.adopters);
    const double e_fine = compare_abm_to_sd(bass_ode(fine).adopters, exact.adopters);
    ASSERT_GT(e_fine, 0.0);
    const double ratio = e_coarse / e_fine;
    EXPECT_GT(ratio, 12.0);
    EXPECT_LT(ratio, 20.0);
}

TEST(BassOde, InflectionAtPredictedTime)
{
    const auto b = params(0.03, 0.38, 500, 15);
    const auto exact = bass_closed_form_trajectory(b);
    const double t_star = std::log(b.q / b.p) / (b.p + b.q);
    // First day where the discrete second difference turns negative.
    std::size_t flip = 0;
    for (std::size_t d = 1; d + 1 < exact.adopters.size(); ++d) {
        const double second = exact.adopters[d + 1] - 2 * exact.adopters[d] + exact.adopters[d - 1];
        if (second < 0) {
            flip = d;
            break;
        }
    }
    ASSERT_GT(flip, 0u);
    EXPECT_NEAR(exact.t_years[flip], t_star, 2.0 / 365.25);
}

TEST(BassParams, Validation)
{
    EXPECT_THROW(bass_ode(params(0.1, 0.1, 100, 1, 0.02)), DomainError);
    EXPECT_THROW(bass_ode(params(-0.1, 0.1, 100, 1)), DomainError);
    EXPECT_THROW(bass_ode(params(0.1, 0.1, 100, 1, 0.0)), DomainError);
}

TEST(CompareAbmToSd, SupNorm)
{
    const std::vector<double> a{1, 2, 3, 4};
    EXPECT_EQ(compare_abm_to_sd(a, a), 0.0);
    const std::vector<double> shifted{3.5, 4.5, 5.5, 6.5};
    EXPECT_DOUBLE_EQ(compare_abm_to_sd(a, shifted), 2.5);
    const std::vector<double> spike{1, 2, 10, 4};
    EXPECT_DOUBLE_EQ(compare_abm_to_sd(a, spike), 7.0);
    const std::vector<double> short_grid{1, 2, 3};
    EXPECT_THROW(compare_abm_to_sd(a, short_grid), DomainError);
}
