//! Workload generation: slotted Poisson arrivals and service-time laws.
//!
//! The horizon is a quasi-static grid of time slots; rates are constant within
//! a slot and may change between slots. Arrivals for each function are a
//! Poisson process with the slot's rate, generated from a dedicated
//! per-(function, slot) random stream so slots are statistically and
//! reproducibly independent of each other.

use std::sync::Arc;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::{self, Purpose};

#[derive(Debug, Error, PartialEq)]
pub enum WorkloadError {
    #[error("slot index {tau} outside 1..={slot_count}")]
    SlotOutOfRange { tau: u32, slot_count: u32 },
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

/// Slotted time horizon. Slot indices are 1-based: τ ∈ 1..=slot_count,
/// slot τ covering `[(τ-1)·slot_length, τ·slot_length)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeSlotGrid {
    pub slot_length_s: f64,
    pub slot_count: u32,
}

impl TimeSlotGrid {
    pub fn new(slot_length_s: f64, slot_count: u32) -> Result<Self, WorkloadError> {
        if !(slot_length_s > 0.0) || !slot_length_s.is_finite() {
            return Err(WorkloadError::Invalid(format!(
                "slot_length_s must be positive and finite, got {slot_length_s}"
            )));
        }
        if slot_count == 0 {
            return Err(WorkloadError::Invalid("slot_count must be >= 1".into()));
        }
        Ok(Self { slot_length_s, slot_count })
    }

    pub fn horizon_s(&self) -> f64 {
        self.slot_length_s * f64::from(self.slot_count)
    }

    pub fn check_slot(&self, tau: u32) -> Result<(), WorkloadError> {
        if tau == 0 || tau > self.slot_count {
            return Err(WorkloadError::SlotOutOfRange { tau, slot_count: self.slot_count });
        }
        Ok(())
    }

    /// Start time of slot τ.
    pub fn slot_start(&self, tau: u32) -> f64 {
        f64::from(tau - 1) * self.slot_length_s
    }

    /// End time of slot τ (exclusive).
    pub fn slot_end(&self, tau: u32) -> f64 {
        f64::from(tau) * self.slot_length_s
    }
}

/// Service-time law named by its kind and first two moments.
///
/// `b` is the mean, `b2` the second moment. Deterministic forces `b2 = b²`,
/// exponential forces `b2 = 2b²`. `GeneralTwoMoment` accepts any pair with
/// `b2 ≥ b²` and is sampled from a moment-matched mixture (see [`Sampler`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ServiceDistribution {
    kind: ServiceKind,
    b: f64,
    b2: f64,
    sampler: Sampler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ServiceKind {
    Deterministic,
    Exponential,
    GeneralTwoMoment,
}

/// Concrete sampling law behind a [`ServiceDistribution`].
///
/// For `GeneralTwoMoment` the law is chosen from the squared coefficient of
/// variation c² = (b2 − b²)/b²:
///
/// * c² ≤ 1: two-point law, atoms `b ± b·√c²` with probability ½ each;
/// * c² > 1: two-branch hyperexponential with balanced means,
///   `p = (1 + √((c²−1)/(c²+1)))/2`, branch rates `2p/b` and `2(1−p)/b`.
///
/// Both match the requested first two moments exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Sampler {
    Constant,
    Exponential,
    TwoPoint { lo: f64, hi: f64 },
    HyperExp { p_fast: f64, rate_fast: f64, rate_slow: f64 },
}

impl ServiceDistribution {
    pub fn deterministic(b: f64) -> Result<Self, WorkloadError> {
        check_mean(b)?;
        Ok(Self { kind: ServiceKind::Deterministic, b, b2: b * b, sampler: Sampler::Constant })
    }

    pub fn exponential(b: f64) -> Result<Self, WorkloadError> {
        check_mean(b)?;
        Ok(Self {
            kind: ServiceKind::Exponential,
            b,
            b2: 2.0 * b * b,
            sampler: Sampler::Exponential,
        })
    }

    pub fn general(b: f64, b2: f64) -> Result<Self, WorkloadError> {
        check_mean(b)?;
        if !b2.is_finite() || b2 < b * b {
            return Err(WorkloadError::Invalid(format!(
                "second moment {b2} violates b2 >= b^2 = {}",
                b * b
            )));
        }
        let scv = (b2 - b * b) / (b * b);
        let sampler = if scv <= 1.0 {
            let spread = b * scv.sqrt();
            Sampler::TwoPoint { lo: b - spread, hi: b + spread }
        } else {
            let t = ((scv - 1.0) / (scv + 1.0)).sqrt();
            let p_fast = (1.0 + t) / 2.0;
            Sampler::HyperExp {
                p_fast,
                rate_fast: 2.0 * p_fast / b,
                rate_slow: 2.0 * (1.0 - p_fast) / b,
            }
        };
        Ok(Self { kind: ServiceKind::GeneralTwoMoment, b, b2, sampler })
    }

    pub fn kind(&self) -> ServiceKind {
        self.kind
    }

    /// Mean service time.
    pub fn mean(&self) -> f64 {
        self.b
    }

    /// Second moment of the service time.
    pub fn second_moment(&self) -> f64 {
        self.b2
    }

    /// Draws one service time from the distribution's sampler.
    pub fn sample(&self, rng: &mut impl RngCore) -> f64 {
        match self.sampler {
            Sampler::Constant => self.b,
            Sampler::Exponential => rng::exp(rng, 1.0 / self.b),
            Sampler::TwoPoint { lo, hi } => {
                if rng::u01(rng) < 0.5 {
                    lo
                } else {
                    hi
                }
            }
            Sampler::HyperExp { p_fast, rate_fast, rate_slow } => {
                if rng::u01(rng) < p_fast {
                    rng::exp(rng, rate_fast)
                } else {
                    rng::exp(rng, rate_slow)
                }
            }
        }
    }
}

fn check_mean(b: f64) -> Result<(), WorkloadError> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(WorkloadError::Invalid(format!(
            "service mean must be positive and finite, got {b}"
        )));
    }
    Ok(())
}

/// One subscribed function class: identity, per-slot arrival rates, service
/// law and the topics it subscribes to. Events are published under the first
/// topic.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionClass {
    pub id: u32,
    pub topics: Vec<String>,
    pub lambda_per_slot: Vec<f64>,
    pub service: ServiceDistribution,
    /// Per-function packet size override; analytic models assume the common
    /// channel packet size and reports flag any mismatch.
    pub packet_size_bits: Option<f64>,
}

impl FunctionClass {
    /// Arrival rate of this class in slot τ.
    pub fn rate(&self, grid: &TimeSlotGrid, tau: u32) -> Result<f64, WorkloadError> {
        grid.check_slot(tau)?;
        Ok(self.lambda_per_slot[(tau - 1) as usize])
    }

    pub fn publish_topic(&self) -> Arc<str> {
        Arc::from(self.topics.first().map(String::as_str).unwrap_or(""))
    }
}

/// One event packet flowing through the pipeline.
///
/// `slot`/`seq` identify the packet within its generating stream; together
/// with the scenario seed they determine every random quantity attached to
/// the packet.
#[derive(Debug, Clone, PartialEq)]
pub struct EventPacket {
    pub arrival_time_s: f64,
    pub function_id: u32,
    pub topic: Arc<str>,
    pub size_bits: f64,
    pub slot: u32,
    pub seq: u32,
}

/// Generates the arrivals of one function class inside one slot, truncated at
/// `cutoff_s` (events at or after the cutoff are discarded).
pub fn slot_arrivals(
    fc: &FunctionClass,
    grid: &TimeSlotGrid,
    tau: u32,
    seed: u64,
    cutoff_s: f64,
    common_packet_bits: f64,
) -> Result<Vec<EventPacket>, WorkloadError> {
    let rate = fc.rate(grid, tau)?;
    let mut out = Vec::new();
    if rate <= 0.0 {
        return Ok(out);
    }
    let end = grid.slot_end(tau).min(cutoff_s);
    let topic = fc.publish_topic();
    let size = fc.packet_size_bits.unwrap_or(common_packet_bits);
    let mut rng = rng::substream(seed, Purpose::Arrival, fc.id, tau, 0);
    let mut t = grid.slot_start(tau);
    let mut seq = 0u32;
    loop {
        t += rng::exp(&mut rng, rate);
        if t >= end {
            break;
        }
        out.push(EventPacket {
            arrival_time_s: t,
            function_id: fc.id,
            topic: Arc::clone(&topic),
            size_bits: size,
            slot: tau,
            seq,
        });
        seq += 1;
        if seq > rng::MAX_STREAM_INDEX {
            return Err(WorkloadError::Invalid(format!(
                "more than {} arrivals in one slot for function {}",
                rng::MAX_STREAM_INDEX,
                fc.id
            )));
        }
    }
    Ok(out)
}

/// Generates the full arrival sequence of one function class over the grid.
///
/// Timestamps are strictly increasing, and identical `(fc, grid, seed)`
/// reproduce the identical sequence bit for bit.
pub fn sample_arrivals(
    fc: &FunctionClass,
    grid: &TimeSlotGrid,
    seed: u64,
) -> Result<Vec<EventPacket>, WorkloadError> {
    if fc.lambda_per_slot.len() != grid.slot_count as usize {
        return Err(WorkloadError::Invalid(format!(
            "function {} has {} rates for {} slots",
            fc.id,
            fc.lambda_per_slot.len(),
            grid.slot_count
        )));
    }
    let common = fc.packet_size_bits.unwrap_or(0.0);
    let mut out = Vec::new();
    for tau in 1..=grid.slot_count {
        out.extend(slot_arrivals(fc, grid, tau, seed, f64::INFINITY, common)?);
    }
    Ok(out)
}

/// Aggregate arrival rate over all classes in slot τ (the sum of the
/// per-function Poisson rates; the merged stream is again Poisson).
pub fn aggregate_rate(classes: &[FunctionClass], grid: &TimeSlotGrid, tau: u32) -> Result<f64, WorkloadError> {
    grid.check_slot(tau)?;
    let mut total = 0.0;
    for fc in classes {
        total += fc.rate(grid, tau)?;
    }
    Ok(total)
}
