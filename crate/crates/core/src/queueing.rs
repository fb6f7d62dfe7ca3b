//! Closed-form steady-state delays for the three-stage pipeline.
//!
//! The pipeline is: SDN controller (M/D/1, deterministic transmission time
//! derived from the wireless channel), edge gateway (M/G/1), and one
//! M/G/n replica pool per function. All waits are mean steady-state values
//! under Poisson arrivals and non-preemptive FCFS service.
//!
//! Formulas in ASCII, with a = λ·b the offered load and S = Σ_{i=0}^{n-1} a^i/i!:
//!
//! * wireless rate      R  = B · log2(1 + G·w/σ²)
//! * M/G/1 wait         Wg = λ·b2 / (2(1 − a))                (Pollaczek-Khinchine)
//! * M/D/1 sojourn      TS = Wg|_{b2=b²} + b  with b = φ/R
//! * M/G/n wait         Wf = λ^n·b2·b^(n−1) / (2(n−1)!(n−a)²·[S + a^n/((n−1)!(n−a))])
//!
//! The M/G/n form is evaluated with a running-product recurrence
//! (term_i = a^i/i!), never with explicit factorials, so it stays in range
//! well past n = 64. With exponential moments (b2 = 2b²) it is algebraically
//! identical to the Erlang-C mean wait, and at n = 1 it reduces to the
//! M/G/1 wait; both reductions are pinned by tests.
//!
//! Stability uses a guard band: a stage is stable iff load/capacity ≤ 1 − 1e-9.
//! Outside it every operation returns [`QueueingError::Unstable`] instead of a
//! NaN or infinity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::workload::ServiceDistribution;

/// Relative margin below 1 that still counts as stable; closer to the
/// boundary the (n − a)² denominators lose all precision.
pub const STABILITY_MARGIN: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum QueueingError {
    #[error("unstable: offered load {offered_load} vs capacity {capacity}")]
    Unstable { offered_load: f64, capacity: f64 },
    #[error("no running replica (n = 0)")]
    NoReplica,
    #[error("no replica count up to {n_max} meets the threshold")]
    Infeasible { n_max: u32 },
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

/// Variant of the M/G/n mean-wait formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MgnMode {
    /// General two-moment form. With exponential moments this equals the
    /// textbook Erlang-C (M/M/n) mean wait. Default.
    Standard,
    /// Published exponential special case that evaluates to exactly half the
    /// standard M/M/n wait. It ignores the second moment (exponential service
    /// implied) and exists so result sets computed with that variant can be
    /// reproduced; reports label which mode was used.
    LiteralExp,
}

impl Default for MgnMode {
    fn default() -> Self {
        MgnMode::Standard
    }
}

impl MgnMode {
    pub fn label(&self) -> &'static str {
        match self {
            MgnMode::Standard => "standard",
            MgnMode::LiteralExp => "literal_exp",
        }
    }
}

/// Wireless channel between controller and edge gateway.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub bandwidth_hz: f64,
    /// Linear channel gain, ≥ 0.
    pub gain: f64,
    pub tx_power_w: f64,
    pub noise_power_w: f64,
    pub packet_size_bits: f64,
}

impl ChannelParams {
    pub fn new(
        bandwidth_hz: f64,
        gain: f64,
        tx_power_w: f64,
        noise_power_w: f64,
        packet_size_bits: f64,
    ) -> Result<Self, QueueingError> {
        let positive = [
            ("bandwidth_hz", bandwidth_hz),
            ("tx_power_w", tx_power_w),
            ("noise_power_w", noise_power_w),
            ("packet_size_bits", packet_size_bits),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(QueueingError::Invalid(format!("{name} must be positive, got {v}")));
            }
        }
        if !(gain >= 0.0) || !gain.is_finite() {
            return Err(QueueingError::Invalid(format!("gain must be >= 0, got {gain}")));
        }
        Ok(Self { bandwidth_hz, gain, tx_power_w, noise_power_w, packet_size_bits })
    }

    /// Shannon rate of the channel in bits/second.
    pub fn wireless_rate(&self) -> f64 {
        let snr = self.gain * self.tx_power_w / self.noise_power_w;
        self.bandwidth_hz * (1.0 + snr).log2()
    }
}

/// Controller service model derived from the channel: events are transmitted
/// one at a time, each taking the deterministic time φ/R, i.e. service rate
/// μ = R/φ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControllerModel {
    pub service_rate: f64,
    pub service_time_s: f64,
}

impl ControllerModel {
    pub fn from_channel(ch: &ChannelParams) -> Result<Self, QueueingError> {
        let rate_bits = ch.wireless_rate();
        if !(rate_bits > 0.0) {
            return Err(QueueingError::Invalid(format!(
                "channel rate {rate_bits} bit/s cannot carry events (gain/power too low)"
            )));
        }
        let service_rate = rate_bits / ch.packet_size_bits;
        Ok(Self { service_rate, service_time_s: 1.0 / service_rate })
    }
}

/// Mean M/G/1 queueing wait (Pollaczek-Khinchine).
pub fn mg1_wait(lambda: f64, sd: &ServiceDistribution) -> Result<f64, QueueingError> {
    if lambda < 0.0 {
        return Err(QueueingError::Invalid(format!("negative arrival rate {lambda}")));
    }
    let rho = lambda * sd.mean();
    if rho > 1.0 - STABILITY_MARGIN {
        return Err(QueueingError::Unstable { offered_load: rho, capacity: 1.0 });
    }
    Ok(lambda * sd.second_moment() / (2.0 * (1.0 - rho)))
}

/// Controller stage (M/D/1): returns `(wait, sojourn)`, the queueing wait and
/// the total time through the controller including transmission.
///
/// Deterministic service is the b2 = b² case of the M/G/1 wait, and the
/// computation goes through the same arithmetic, so the reduction identity is
/// exact.
pub fn controller_latency(lambda_total: f64, service_rate: f64) -> Result<(f64, f64), QueueingError> {
    if !(service_rate > 0.0) || !service_rate.is_finite() {
        return Err(QueueingError::Invalid(format!(
            "controller service rate must be positive, got {service_rate}"
        )));
    }
    let d = 1.0 / service_rate;
    let sd = ServiceDistribution::deterministic(d)
        .map_err(|e| QueueingError::Invalid(e.to_string()))?;
    let wait = mg1_wait(lambda_total, &sd)?;
    Ok((wait, wait + d))
}

/// Gateway sojourn time: M/G/1 wait plus the mean gateway service time.
pub fn gateway_response(lambda: f64, sd: &ServiceDistribution) -> Result<f64, QueueingError> {
    Ok(mg1_wait(lambda, sd)? + sd.mean())
}

/// Event processing time through the control path: controller sojourn plus
/// gateway sojourn.
pub fn event_processing_time(ts: f64, tg: f64) -> f64 {
    ts + tg
}

/// Mean M/G/n queueing wait for a replica pool of size `n`.
pub fn mgn_wait(
    lambda: f64,
    sd: &ServiceDistribution,
    n: u32,
    mode: MgnMode,
) -> Result<f64, QueueingError> {
    if n == 0 {
        return Err(QueueingError::NoReplica);
    }
    if lambda < 0.0 {
        return Err(QueueingError::Invalid(format!("negative arrival rate {lambda}")));
    }
    let servers = f64::from(n);
    let a = lambda * sd.mean();
    if a / servers > 1.0 - STABILITY_MARGIN {
        return Err(QueueingError::Unstable { offered_load: a, capacity: servers });
    }
    if lambda == 0.0 {
        return Ok(0.0);
    }
    // Running-product Erlang terms: term_i = a^i / i!.
    let mut term = 1.0;
    let mut partial_sum = 1.0;
    for i in 1..n {
        term *= a / f64::from(i);
        partial_sum += term;
    }
    // term = a^(n-1) / (n-1)!
    let tail = term * a / (servers - a);
    let denom = 2.0 * (servers - a) * (servers - a) * (partial_sum + tail);
    let wait = match mode {
        // numerator λ^n·b2·b^(n−1) = b2·λ·a^(n−1); divided through by (n−1)!.
        MgnMode::Standard => sd.second_moment() * lambda * term / denom,
        // numerator a^n·b (second moment ignored, exponential service implied)
        MgnMode::LiteralExp => sd.mean() * a * term / denom,
    };
    Ok(wait)
}

/// Function response time: pool wait plus the function's mean service time.
pub fn function_response(
    lambda: f64,
    sd: &ServiceDistribution,
    n: u32,
    mode: MgnMode,
) -> Result<f64, QueueingError> {
    Ok(mgn_wait(lambda, sd, n, mode)? + sd.mean())
}

/// End-to-end latency for one function: controller + gateway + pool.
pub fn total_latency(ts: f64, tg: f64, tf: f64) -> f64 {
    ts + tg + tf
}

/// Pool utilization, the mean fraction of busy replicas: λ/(n·μ).
pub fn function_utilization(lambda: f64, mu: f64, n: u32) -> Result<f64, QueueingError> {
    if n == 0 {
        return Err(QueueingError::NoReplica);
    }
    if !(mu > 0.0) {
        return Err(QueueingError::Invalid(format!("service rate must be positive, got {mu}")));
    }
    let u = lambda / (f64::from(n) * mu);
    if u > 1.0 - STABILITY_MARGIN {
        return Err(QueueingError::Unstable { offered_load: u, capacity: 1.0 });
    }
    Ok(u)
}

/// Smallest replica count n ≤ n_max whose mean pool wait is below the
/// threshold; the inverse form of the scale-up rule.
pub fn min_replicas_for_threshold(
    lambda: f64,
    sd: &ServiceDistribution,
    threshold_s: f64,
    n_max: u32,
    mode: MgnMode,
) -> Result<u32, QueueingError> {
    if !(threshold_s > 0.0) {
        return Err(QueueingError::Invalid(format!(
            "threshold must be positive, got {threshold_s}"
        )));
    }
    for n in 1..=n_max {
        match mgn_wait(lambda, sd, n, mode) {
            Ok(w) if w < threshold_s => return Ok(n),
            Ok(_) | Err(QueueingError::Unstable { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(QueueingError::Infeasible { n_max })
}

/// Per-function stage decomposition of the end-to-end latency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StageDelays {
    pub controller_ts: f64,
    pub gateway_wait: f64,
    pub gateway_tg: f64,
    pub function_wait: f64,
    pub function_tf: f64,
    pub total: f64,
}

impl StageDelays {
    pub fn compose(
        lambda_total: f64,
        controller: &ControllerModel,
        gateway: &ServiceDistribution,
        lambda_fn: f64,
        fn_service: &ServiceDistribution,
        n: u32,
        mode: MgnMode,
    ) -> Result<Self, QueueingError> {
        let (_, ts) = controller_latency(lambda_total, controller.service_rate)?;
        let wg = mg1_wait(lambda_total, gateway)?;
        let tg = wg + gateway.mean();
        let wf = mgn_wait(lambda_fn, fn_service, n, mode)?;
        let tf = wf + fn_service.mean();
        Ok(StageDelays {
            controller_ts: ts,
            gateway_wait: wg,
            gateway_tg: tg,
            function_wait: wf,
            function_tf: tf,
            total: total_latency(ts, tg, tf),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workload::ServiceDistribution;
    use proptest::prelude::*;

    fn exp_sd(b: f64) -> ServiceDistribution {
        ServiceDistribution::exponential(b).unwrap()
    }

    // Independent Erlang-C oracle with explicit factorials, used to pin the
    // running-product evaluation.
    fn factorial(n: u32) -> f64 {
        (1..=n).map(f64::from).product()
    }

    fn erlang_c_wait(lambda: f64, mu: f64, n: u32) -> f64 {
        let a = lambda / mu;
        let servers = f64::from(n);
        let mut sum = 0.0;
        for i in 0..n {
            sum += a.powi(i as i32) / factorial(i);
        }
        let tail = a.powi(n as i32) / (factorial(n - 1) * (servers - a));
        let c = tail / (sum + tail);
        c / (servers * mu - lambda)
    }

    #[test]
    fn wireless_rate_examples() {
        // unit SNR: log2(2) = 1
        let ch = ChannelParams::new(1e6, 1.0, 1.0, 1.0, 100.0).unwrap();
        assert_eq!(ch.wireless_rate(), 1e6);
        // zero gain: log2(1) = 0
        let ch = ChannelParams::new(1e6, 0.0, 1.0, 1.0, 100.0).unwrap();
        assert_eq!(ch.wireless_rate(), 0.0);
        // SNR 15: log2(16) = 4
        let ch = ChannelParams::new(2e7, 1.5, 1.0, 0.1, 100.0).unwrap();
        assert!((ch.wireless_rate() - 8e7).abs() < 1e-3);
        // non-positive bandwidth / noise rejected
        assert!(ChannelParams::new(0.0, 1.0, 1.0, 1.0, 100.0).is_err());
        assert!(ChannelParams::new(1e6, 1.0, 1.0, 0.0, 100.0).is_err());
    }

    #[test]
    fn controller_model_derivation() {
        let ch = ChannelParams::new(2e7, 1.5, 1.0, 0.1, 8e4).unwrap();
        let ctrl = ControllerModel::from_channel(&ch).unwrap();
        assert!((ctrl.service_rate - 1000.0).abs() < 1e-9);
        // dead channel cannot serve
        let dead = ChannelParams::new(2e7, 0.0, 1.0, 0.1, 8e4).unwrap();
        assert!(ControllerModel::from_channel(&dead).is_err());
    }

    #[test]
    fn controller_latency_examples() {
        // empty system: sojourn is just the transmission time
        let (w, ts) = controller_latency(0.0, 1000.0).unwrap();
        assert_eq!(w, 0.0);
        assert_eq!(ts, 0.001);
        // direct substitution at half load
        let (w, ts) = controller_latency(500.0, 1000.0).unwrap();
        assert!((w - 0.0005).abs() < 1e-15);
        assert!((ts - 0.0015).abs() < 1e-15);
        // boundary: lambda = mu
        assert!(matches!(
            controller_latency(1000.0, 1000.0),
            Err(QueueingError::Unstable { .. })
        ));
    }

    #[test]
    fn mg1_examples() {
        // exponential b=0.2, lambda=2.5 reduces to M/M/1: rho/(mu-lambda) = 0.2
        let w = mg1_wait(2.5, &exp_sd(0.2)).unwrap();
        assert!((w - 0.2).abs() < 1e-12);
        // empty queue
        assert_eq!(mg1_wait(0.0, &exp_sd(0.2)).unwrap(), 0.0);
        // deterministic service matches the controller waiting term exactly
        let det = ServiceDistribution::deterministic(0.001).unwrap();
        let (ctrl_wait, _) = controller_latency(500.0, 1000.0).unwrap();
        assert_eq!(mg1_wait(500.0, &det).unwrap(), ctrl_wait);
    }

    #[test]
    fn gateway_response_examples() {
        assert_eq!(gateway_response(0.0, &exp_sd(0.2)).unwrap(), 0.2);
        let tg = gateway_response(2.5, &exp_sd(0.2)).unwrap();
        assert!((tg - 0.4).abs() < 1e-12);
        // deterministic gateway at mu=1000 equals the controller sojourn
        let det = ServiceDistribution::deterministic(0.001).unwrap();
        let tg = gateway_response(500.0, &det).unwrap();
        let (_, ts) = controller_latency(500.0, 1000.0).unwrap();
        assert_eq!(tg, ts);
        assert!((tg - 0.0015).abs() < 1e-15);
    }

    #[test]
    fn event_processing_time_is_a_sum() {
        assert_eq!(event_processing_time(0.0015, 0.4), 0.4015);
        assert_eq!(event_processing_time(0.0, 0.0), 0.0);
        // substitution oracle at a stable grid point (ctrl mu=1000, gateway
        // exponential b=0.01, lambda=50)
        let (_, ts) = controller_latency(50.0, 1000.0).unwrap();
        let tg = gateway_response(50.0, &exp_sd(0.01)).unwrap();
        let expect_ts = 0.05 / (2.0 * 1000.0 * 0.95) + 0.001;
        let expect_tg = 50.0 * 2.0 * 0.01 * 0.01 / (2.0 * 0.5) + 0.01;
        assert!((event_processing_time(ts, tg) - (expect_ts + expect_tg)).abs() < 1e-12);
        // the same gateway at lambda=100 sits exactly on the rho = 1 boundary
        assert!(matches!(
            gateway_response(100.0, &exp_sd(0.01)),
            Err(QueueingError::Unstable { .. })
        ));
    }

    #[test]
    fn mgn_reduces_to_mg1_at_n1() {
        let grid = [(2.5, 0.2, 0.1), (1.0, 0.5, 0.9), (40.0, 0.02, 0.35)];
        for (lambda, b, _) in grid {
            let sd = exp_sd(b);
            let w1 = mgn_wait(lambda, &sd, 1, MgnMode::Standard).unwrap();
            let wg = mg1_wait(lambda, &sd).unwrap();
            assert!((w1 - wg).abs() <= 1e-12 * wg.max(1e-300), "{lambda} {b}");
        }
    }

    #[test]
    fn mgn_matches_erlang_c_worked_example() {
        // exponential mu=5, lambda=5, n=2: W = 1/15
        let w = mgn_wait(5.0, &exp_sd(0.2), 2, MgnMode::Standard).unwrap();
        assert!((w - 1.0 / 15.0).abs() < 1e-12, "{w}");
        assert!((w - erlang_c_wait(5.0, 5.0, 2)).abs() < 1e-12);
    }

    #[test]
    fn mgn_boundary_and_no_replica() {
        assert!(matches!(
            mgn_wait(10.0, &exp_sd(0.2), 2, MgnMode::Standard),
            Err(QueueingError::Unstable { .. })
        ));
        assert!(matches!(
            mgn_wait(1.0, &exp_sd(0.2), 0, MgnMode::Standard),
            Err(QueueingError::NoReplica)
        ));
    }

    #[test]
    fn literal_mode_is_half_the_standard_exponential_wait() {
        for n in 1..=10u32 {
            let lambda = 0.7 * f64::from(n) * 5.0;
            let sd = exp_sd(0.2);
            let std = mgn_wait(lambda, &sd, n, MgnMode::Standard).unwrap();
            let lit = mgn_wait(lambda, &sd, n, MgnMode::LiteralExp).unwrap();
            assert!((lit / std - 0.5).abs() < 1e-12, "n={n}: {lit} vs {std}");
        }
    }

    #[test]
    fn function_response_examples() {
        // worked pool example plus service mean
        let tf = function_response(5.0, &exp_sd(0.2), 2, MgnMode::Standard).unwrap();
        assert!((tf - (1.0 / 15.0 + 0.2)).abs() < 1e-12);
        // M/M/1 at rho = 0.5
        let tf = function_response(2.5, &exp_sd(0.2), 1, MgnMode::Standard).unwrap();
        assert!((tf - 0.4).abs() < 1e-12);
        // large pool: no queueing left, response tends to the service mean
        let tf = function_response(5.0, &exp_sd(0.2), 50, MgnMode::Standard).unwrap();
        assert!((tf - 0.2).abs() < 1e-15, "{tf}");
    }

    #[test]
    fn total_latency_examples() {
        assert_eq!(total_latency(0.0, 0.0, 1.25), 1.25);
        let t = total_latency(0.0015, 0.4, 0.2667);
        assert!((t - 0.6682) < 1e-12);
        assert!(total_latency(0.002, 0.4, 0.2667) > t);
        assert!(total_latency(0.0015, 0.41, 0.2667) > t);
        assert!(total_latency(0.0015, 0.4, 0.2668) > t);
    }

    #[test]
    fn utilization_examples() {
        assert_eq!(function_utilization(5.0, 5.0, 2).unwrap(), 0.5);
        assert_eq!(function_utilization(0.0, 5.0, 3).unwrap(), 0.0);
        assert!((function_utilization(4.5, 5.0, 3).unwrap() - 0.3).abs() < 1e-15);
        assert!(matches!(
            function_utilization(10.0, 5.0, 2),
            Err(QueueingError::Unstable { .. })
        ));
    }

    #[test]
    fn min_replicas_examples() {
        let sd = exp_sd(0.2);
        // threshold 50 ms at lambda 4.5: W(2) ~ 0.0508 > t, W(3) ~ 0.0067 < t
        assert_eq!(min_replicas_for_threshold(4.5, &sd, 0.05, 10, MgnMode::Standard).unwrap(), 3);
        let w2 = mgn_wait(4.5, &sd, 2, MgnMode::Standard).unwrap();
        let w3 = mgn_wait(4.5, &sd, 3, MgnMode::Standard).unwrap();
        assert!(w2 > 0.05 && (w2 - 0.0508).abs() < 5e-4);
        assert!(w3 < 0.05 && (w3 - 0.0067).abs() < 5e-4);
        // unbounded threshold: the smallest stable pool wins
        assert_eq!(
            min_replicas_for_threshold(4.5, &sd, f64::INFINITY, 10, MgnMode::Standard).unwrap(),
            1
        );
        assert_eq!(
            min_replicas_for_threshold(10.0, &sd, f64::INFINITY, 10, MgnMode::Standard).unwrap(),
            3
        );
        // zero arrivals: one replica suffices
        assert_eq!(min_replicas_for_threshold(0.0, &sd, 0.05, 10, MgnMode::Standard).unwrap(), 1);
        // infeasible cap
        assert!(matches!(
            min_replicas_for_threshold(100.0, &sd, 0.05, 10, MgnMode::Standard),
            Err(QueueingError::Infeasible { n_max: 10 })
        ));
    }

    // Monotonicity on the stable subset of the published grid: per-function
    // lambda 20..100 with b = 0.2 is stable only where lambda·b < n.
    #[test]
    fn mgn_monotone_on_stable_grid() {
        let sd = exp_sd(0.2);
        for n in 2..=10u32 {
            let mut prev: Option<f64> = None;
            for lambda_i in 20..=100u32 {
                let lambda = f64::from(lambda_i);
                match mgn_wait(lambda, &sd, n, MgnMode::Standard) {
                    Ok(w) => {
                        if let Some(p) = prev {
                            assert!(w > p, "n={n} lambda={lambda}: {w} <= {p}");
                        }
                        prev = Some(w);
                    }
                    Err(QueueingError::Unstable { .. }) => prev = None,
                    Err(e) => panic!("unexpected {e}"),
                }
            }
        }
        for lambda_i in (20..=100u32).step_by(20) {
            let lambda = f64::from(lambda_i);
            let mut prev: Option<f64> = None;
            for n in 2..=10u32 {
                if let Ok(w) = mgn_wait(lambda, &sd, n, MgnMode::Standard) {
                    if let Some(p) = prev {
                        assert!(w < p, "lambda={lambda} n={n}: {w} >= {p}");
                    }
                    prev = Some(w);
                }
            }
        }
    }

    #[test]
    fn large_pool_stays_finite() {
        // running-product evaluation keeps n = 64 and beyond in range
        let sd = exp_sd(0.2);
        let w = mgn_wait(300.0, &sd, 64, MgnMode::Standard).unwrap();
        assert!(w.is_finite() && w >= 0.0);
        let w = mgn_wait(600.0, &sd, 128, MgnMode::Standard).unwrap();
        assert!(w.is_finite() && w >= 0.0);
    }

    proptest! {
        // stable region never yields NaN/inf/negative waits
        #[test]
        fn stable_region_outputs_finite(lambda in 0.0f64..100.0, b in 0.001f64..1.0, n in 1u32..20) {
            let sd = exp_sd(b);
            match mgn_wait(lambda, &sd, n, MgnMode::Standard) {
                Ok(w) => prop_assert!(w.is_finite() && w >= 0.0),
                Err(QueueingError::Unstable { offered_load, capacity }) => {
                    prop_assert!(offered_load / capacity > 1.0 - STABILITY_MARGIN);
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }

        // n = 1 reduction holds across the admissible space
        #[test]
        fn mgn_n1_equals_mg1(lambda in 0.01f64..50.0, b_scale in 0.01f64..0.95) {
            let b = b_scale / lambda;
            let sd = exp_sd(b);
            let w1 = mgn_wait(lambda, &sd, 1, MgnMode::Standard).unwrap();
            let wg = mg1_wait(lambda, &sd).unwrap();
            prop_assert!((w1 - wg).abs() <= 1e-12 * wg.abs().max(1e-300));
        }
    }
}
