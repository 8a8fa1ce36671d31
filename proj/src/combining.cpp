// SPDX-License-Identifier: Apache-2.0
//
// mmwrx - mmWave receiver architecture trade-off simulator
// Copyright (C) 2026 The mmwrx authors
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

#include "mmwrx/combining.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mmwrx {

namespace {

double log2_det_hpd(const CMatrix &m)
{
    Eigen::LLT<CMatrix> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("log-determinant of a non positive-definite matrix");
    const auto diag = llt.matrixLLT().diagonal().real();
    return 2.0 * diag.array().log2().sum();
}

RateResult finish(double se, const LinkParams &link, RVector power, int streams)
{
    RateResult r;
    r.se_bpshz = se;
    r.rate_bps = se * link.bandwidth_hz;
    r.power_alloc = std::move(power);
    r.n_streams = streams;
    return r;
}

} // namespace

void LinkParams::validate() const
{
    if (!(tx_power > 0.0) || !std::isfinite(tx_power))
        throw std::invalid_argument("transmit power must be > 0");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw std::invalid_argument("noise power must be > 0");
    if (!(eta >= 0.0 && eta < 1.0))
        throw std::invalid_argument("eta must lie in [0, 1)");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw std::invalid_argument("bandwidth must be > 0");
}

Svd full_svd(const CMatrix &m)
{
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

RVector waterfill(std::span<const double> gains, double total_power, double noise_power)
{
    if (!(total_power > 0.0) || !(noise_power > 0.0))
        throw std::invalid_argument("waterfill: powers must be positive");

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < gains.size(); ++i)
    {
        if (!(gains[i] >= 0.0) || !std::isfinite(gains[i]))
            throw std::invalid_argument("waterfill: gains must be finite and >= 0");
        if (gains[i] > 0.0)
            order.push_back(i);
    }
    if (order.empty())
        throw RankZeroError();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });

    // Inverse gains along the sorted order; the active set is a prefix.
    RVector p = RVector::Zero(static_cast<Eigen::Index>(gains.size()));
    double inv_sum = 0.0;
    std::size_t active = 0;
    double level = 0.0;
    for (std::size_t m = 1; m <= order.size(); ++m)
    {
        inv_sum += noise_power / gains[order[m - 1]];
        const double mu = (total_power + inv_sum) / static_cast<double>(m);
        if (mu - noise_power / gains[order[m - 1]] <= 0.0)
            break;
        active = m;
        level = mu;
    }
    for (std::size_t m = 0; m < active; ++m)
        p(order[m]) = level - noise_power / gains[order[m]];
    return p;
}

RateResult quantized_mimo_rate(const Svd &svd, const LinkParams &link)
{
    link.validate();
    const Eigen::Index n = svd.u.rows();
    const Eigen::Index k = svd.s.size();

    const RVector gains = svd.s.array().square();
    RVector p = waterfill(std::span<const double>(gains.data(), gains.size()), link.tx_power,
                          link.noise_power);

    RVector signal = RVector::Zero(n);
    signal.head(k) = gains.cwiseProduct(p);
    const int streams = static_cast<int>((p.array() > 0.0).count());

    if (link.eta == 0.0)
    {
        const double se = (signal.array() / link.noise_power).log1p().sum() / std::log(2.0);
        return finish(se, link, std::move(p), streams);
    }

    // Per-branch received power: diag(U S R S^H U^H).
    const RVector branch = svd.u.cwiseAbs2() * signal;
    CMatrix noise = svd.u.adjoint() * (branch.cast<cplx>().asDiagonal() * svd.u);
    noise *= link.eta;
    noise.diagonal().array() += link.noise_power;
    noise = 0.5 * (noise + noise.adjoint()).eval();

    CMatrix total = noise;
    total.diagonal().real() += (1.0 - link.eta) * signal;

    const double se = log2_det_hpd(total) - log2_det_hpd(noise);
    return finish(std::max(se, 0.0), link, std::move(p), streams);
}

CombinerDesign design_dc(const CMatrix &h)
{
    Svd svd = full_svd(h);
    if (svd.s.size() == 0 || svd.s(0) == 0.0)
        throw RankZeroError();
    CombinerDesign d;
    d.arch = Architecture::DC;
    d.w_t = svd.v;
    d.w_bb = svd.u.adjoint();
    d.n_rf = static_cast<int>(h.rows());
    d.singular_values = svd.s;
    return d;
}

RateResult rate_dc(const CMatrix &h, const LinkParams &link)
{
    return quantized_mimo_rate(full_svd(h), link);
}

CMatrix constant_modulus_projection(const CMatrix &w, int n_rx)
{
    const double mag = 1.0 / std::sqrt(static_cast<double>(n_rx));
    return w.unaryExpr([mag](const cplx &z) { return std::polar(mag, std::arg(z)); });
}

CombinerDesign design_ac(const CMatrix &h)
{
    return design_ac(h, full_svd(h));
}

CombinerDesign design_ac(const CMatrix &h, const Svd &svd)
{
    if (svd.s.size() == 0 || svd.s(0) == 0.0)
        throw RankZeroError();
    const int n_rx = static_cast<int>(h.rows());
    const CVector w_r = constant_modulus_projection(svd.u.col(0), n_rx);
    CVector w_t = h.adjoint() * w_r;
    const double norm = w_t.norm();
    if (norm == 0.0)
        throw RankZeroError();
    w_t /= norm;

    CombinerDesign d;
    d.arch = Architecture::AC;
    d.w_t = w_t;
    d.w_rf = CMatrix(w_r);
    d.w_bb = CMatrix::Identity(1, 1);
    d.n_rf = 1;
    d.singular_values = svd.s;
    return d;
}

double beam_gain(const CMatrix &h, const CVector &w_r, const CVector &w_t)
{
    const cplx z = w_r.dot(h * w_t); // dot() conjugates the left operand
    return std::norm(z);
}

RateResult rate_single_beam(double gain, const LinkParams &link)
{
    link.validate();
    const double gp = gain * link.tx_power;
    const double sinr = (1.0 - link.eta) * gp / (link.noise_power + link.eta * gp);
    RVector p(1);
    p(0) = link.tx_power;
    return finish(std::log2(1.0 + sinr), link, std::move(p), gain > 0.0 ? 1 : 0);
}

RateResult rate_ac(const CMatrix &h, const CVector &w_r, const CVector &w_t, const LinkParams &link)
{
    return rate_single_beam(beam_gain(h, w_r, w_t), link);
}

namespace {

// Nearest semi-unitary matrix, W (W^H W)^(-1/2). Falls back to U V^H from an
// SVD when the Gram matrix is close to singular.
CMatrix polar_factor(const CMatrix &w)
{
    const CMatrix gram = w.adjoint() * w;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram);
    const RVector &lambda = eig.eigenvalues();
    if (eig.info() == Eigen::Success && lambda(0) > 1e-10 * lambda(lambda.size() - 1))
    {
        const CMatrix &q = eig.eigenvectors();
        const CMatrix inv_sqrt = q * lambda.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * q.adjoint();
        return w * inv_sqrt;
    }
    Eigen::JacobiSVD<CMatrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

} // namespace

HybridRfDesign design_hc_rf(const CMatrix &h, int n_rf, const AlternatingProjectionOptions &opts)
{
    return design_hc_rf(full_svd(h), n_rf, opts);
}

HybridRfDesign design_hc_rf(const Svd &svd_of_h, int n_rf, const AlternatingProjectionOptions &opts)
{
    const int n_rx = static_cast<int>(svd_of_h.u.rows());
    if (n_rf < 1 || n_rf > n_rx)
        throw std::invalid_argument("design_hc_rf: n_rf must lie in [1, n_rx]");
    if (opts.max_iter < 1 || !(opts.tol > 0.0))
        throw std::invalid_argument("design_hc_rf: max_iter >= 1 and tol > 0 required");

    HybridRfDesign out;
    CMatrix w = constant_modulus_projection(svd_of_h.u.leftCols(n_rf), n_rx);
    const double scale = w.norm();
    for (int it = 1; it <= opts.max_iter; ++it)
    {
        CMatrix next = constant_modulus_projection(polar_factor(w), n_rx);
        const double change = (next - w).norm() / scale;
        out.changes.push_back(change);
        w = std::move(next);
        out.iterations = it;
        if (change < opts.tol)
        {
            out.converged = true;
            break;
        }
    }
    out.w_rf = std::move(w);
    return out;
}

Svd equivalent_channel_svd(const CMatrix &h, const CMatrix &w_rf)
{
    return full_svd(w_rf.adjoint() * h);
}

RateResult rate_hc(const CMatrix &h, const CMatrix &w_rf, const LinkParams &link)
{
    return quantized_mimo_rate(equivalent_channel_svd(h, w_rf), link);
}

RateResult rate_hc_achievable(const Svd &equivalent, double ac_gain, const LinkParams &link)
{
    RateResult beam = rate_single_beam(ac_gain, link);
    RateResult joint;
    try
    {
        joint = quantized_mimo_rate(equivalent, link);
    }
    catch (const RankZeroError &)
    {
        if (ac_gain <= 0.0)
            throw;
        beam.single_beam_fallback = true;
        return beam;
    }
    if (beam.rate_bps > joint.rate_bps)
    {
        beam.single_beam_fallback = true;
        return beam;
    }
    return joint;
}

RateResult rate_hc_achievable(const CMatrix &h, const CMatrix &w_rf, const CombinerDesign &ac,
                              const LinkParams &link)
{
    const double gain = beam_gain(h, ac.w_rf->col(0), ac.w_t.col(0));
    return rate_hc_achievable(equivalent_channel_svd(h, w_rf), gain, link);
}

} // namespace mmwrx
