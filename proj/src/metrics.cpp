// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "uavmimo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavmimo
{

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

LinkBudget LinkBudget::defaults()
{
    LinkBudget b;
    b.tx_power = dbm_to_watts(10.0);
    b.noise_psd = dbm_to_watts(-174.0);
    b.bandwidth = 1e6;
    b.noise_figure = db_to_linear(3.0);
    return b;
}

void LinkBudget::validate() const
{
    if (!(tx_power >= 0.0) || !std::isfinite(tx_power))
        throw std::invalid_argument("link budget: transmit power must be finite and non-negative");
    if (!(noise_psd > 0.0) || !(bandwidth > 0.0) || !(noise_figure > 0.0))
        throw std::invalid_argument("link budget: noise terms must be positive");
}

namespace
{

void require_finite(const ChannelMatrix &h, const char *what)
{
    if (!h.entries.allFinite())
        throw std::invalid_argument(std::string(what) + ": channel has non-finite entries");
}

} // namespace

double capacity(const ChannelMatrix &h, double rho)
{
    require_finite(h, "capacity");
    if (!(rho >= 0.0))
        throw std::invalid_argument("capacity: rho must be non-negative");
    const CMatrix gram = h.entries.adjoint() * h.entries;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
    double c = 0.0;
    for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
        c += std::log2(1.0 + rho * std::max(0.0, eig.eigenvalues()(k)));
    return c;
}

double single_user_bound(const ChannelMatrix &h, double rho)
{
    if (!(rho >= 0.0))
        throw std::invalid_argument("single_user_bound: rho must be non-negative");
    double c = 0.0;
    for (Eigen::Index n = 0; n < h.uavs(); ++n)
        c += std::log2(1.0 + rho * h.entries.col(n).squaredNorm());
    return c;
}

double gram_orthogonality_residual(const ChannelMatrix &h)
{
    const Eigen::Index n = h.uavs();
    if (n < 2)
        throw std::invalid_argument("gram_orthogonality_residual: needs at least two columns");
    const CMatrix gram = h.entries.adjoint() * h.entries;
    double diag = 0.0;
    double off = 0.0;
    for (Eigen::Index l = 0; l < n; ++l)
    {
        diag += gram(l, l).real();
        for (Eigen::Index k = 0; k < n; ++k)
            if (k != l)
                off = std::max(off, std::abs(gram(l, k)));
    }
    diag /= static_cast<double>(n);
    if (!(diag > 0.0))
        throw std::invalid_argument("gram_orthogonality_residual: zero channel");
    return off / diag;
}

namespace
{

void check_shapes(const ChannelMatrix &h_true, const ChannelMatrix &h_est, const char *what)
{
    if (h_true.antennas() != h_est.antennas() || h_true.uavs() != h_est.uavs())
        throw std::invalid_argument(std::string(what) + ": true and estimated channels differ in shape");
    require_finite(h_true, what);
    require_finite(h_est, what);
}

double sinr_for(const Eigen::VectorXcd &w, const ChannelMatrix &h_true, Eigen::Index n, const LinkBudget &budget)
{
    const double p = budget.tx_power;
    const double signal = p * std::norm(w.dot(h_true.entries.col(n)));
    double interference = 0.0;
    for (Eigen::Index i = 0; i < h_true.uavs(); ++i)
        if (i != n)
            interference += std::norm(w.dot(h_true.entries.col(i)));
    const double denom = budget.noise_power() * w.squaredNorm() + p * interference;
    return denom > 0.0 ? signal / denom : 0.0;
}

} // namespace

RateReport lmmse_sum_rate(const ChannelMatrix &h_true, const ChannelMatrix &h_est, const LinkBudget &budget)
{
    check_shapes(h_true, h_est, "lmmse_sum_rate");
    budget.validate();

    const Eigen::Index m = h_true.antennas();
    const Eigen::Index n_total = h_true.uavs();
    const double p = budget.tx_power;
    const double noise = budget.noise_power();

    // Full covariance once, then subtract the own-stream term per UAV.
    const CMatrix full =
        noise * CMatrix::Identity(m, m) + p * h_est.entries * h_est.entries.adjoint();

    RateReport rep;
    rep.per_stream_sinr.resize(static_cast<std::size_t>(n_total));
    for (Eigen::Index n = 0; n < n_total; ++n)
    {
        const Eigen::VectorXcd hn = h_est.entries.col(n);
        const CMatrix cov = full - p * hn * hn.adjoint();
        const Eigen::VectorXcd w = cov.ldlt().solve(hn);
        const double sinr = sinr_for(w, h_true, n, budget);
        rep.per_stream_sinr[static_cast<std::size_t>(n)] = sinr;
        rep.sum_rate += std::log2(1.0 + sinr);
    }

    const double rho = budget.rho();
    rep.capacity = capacity(h_true, rho);
    rep.single_user_bound = single_user_bound(h_true, rho);
    rep.gram_residual = n_total >= 2 ? gram_orthogonality_residual(h_true) : 0.0;
    return rep;
}

double matched_filter_sum_rate(const ChannelMatrix &h_true, const ChannelMatrix &h_est, const LinkBudget &budget)
{
    check_shapes(h_true, h_est, "matched_filter_sum_rate");
    budget.validate();
    double sum = 0.0;
    for (Eigen::Index n = 0; n < h_true.uavs(); ++n)
    {
        const Eigen::VectorXcd w = h_est.entries.col(n);
        sum += std::log2(1.0 + sinr_for(w, h_true, n, budget));
    }
    return sum;
}

UplinkDesign uplink_linear_design(const ChannelMatrix &h, const LinkBudget &budget)
{
    require_finite(h, "uplink_linear_design");
    const double fro = h.entries.norm();
    if (!(fro > 0.0))
        throw std::invalid_argument("uplink_linear_design: zero channel");
    UplinkDesign d;
    const Eigen::Index n = h.uavs();
    d.precoder = std::sqrt(budget.tx_power) * Eigen::MatrixXd::Identity(n, n);
    d.combiner = h.entries / (fro / static_cast<double>(h.antennas()));
    return d;
}

} // namespace uavmimo
