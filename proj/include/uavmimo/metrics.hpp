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


#pragma once

#include <vector>

#include "uavmimo/core_model.hpp"

namespace uavmimo
{

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

struct LinkBudget
{
    double tx_power = 0.01;         // W (10 dBm)
    double noise_psd = 0.0;         // W/Hz
    double bandwidth = 1e6;         // Hz
    double noise_figure = 1.0;      // linear

    double noise_power() const { return noise_psd * bandwidth * noise_figure; }
    double rho() const { return tx_power / noise_power(); }

    // -174 dBm/Hz, 1 MHz, 3 dB noise figure, 10 dBm transmit power.
    static LinkBudget defaults();
    void validate() const;
};

struct RateReport
{
    std::vector<double> per_stream_sinr;
    double sum_rate = 0.0;
    double capacity = 0.0;
    double single_user_bound = 0.0;
    double gram_residual = 0.0;
};

struct UplinkDesign
{
    Eigen::MatrixXd precoder; // N x N, diagonal
    CMatrix combiner;         // M x N
};

/// log2 det(I + rho H^H H), evaluated from the eigenvalues of the Gram matrix.
double capacity(const ChannelMatrix &h, double rho);

double single_user_bound(const ChannelMatrix &h, double rho);

/// max_{l != k} |G_lk| / mean_l G_ll with G = H^H H.
double gram_orthogonality_residual(const ChannelMatrix &h);

RateReport lmmse_sum_rate(const ChannelMatrix &h_true, const ChannelMatrix &h_est, const LinkBudget &budget);

/// Sum rate with the matched-filter combiner w_n = h_n^est.
double matched_filter_sum_rate(const ChannelMatrix &h_true, const ChannelMatrix &h_est, const LinkBudget &budget);

UplinkDesign uplink_linear_design(const ChannelMatrix &h, const LinkBudget &budget);

} // namespace uavmimo
