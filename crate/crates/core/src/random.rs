//! Seeded random generators for states, channels, codes, and classical
//! channels, used by the property suite and the randomized acceptance
//! checks. Density matrices are sampled as GG†/Tr(GG†) with standard-normal
//! complex Ginibre factors, so samples are full rank almost surely.

use nalgebra::DVector;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::channel::QuantumChannel;
use crate::classical::{ClassicalChannel, Distribution};
use crate::codes::EncodingIsometry;
use crate::linalg::{CMat, CVec, C64};
use crate::registers::{DensityState, PureState, RegisterLayout};

/// Complex Ginibre matrix: independent standard-normal real and imaginary
/// parts.
pub fn random_ginibre<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Haar-distributed unitary via QR of a Ginibre matrix with the phase
/// convention fixed from the R diagonal.
pub fn random_unitary<R: Rng>(rng: &mut R, dim: usize) -> CMat {
    let g = random_ginibre(rng, dim, dim);
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    let mut u = q;
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..dim {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// First `cols` columns of a Haar unitary: a uniformly random isometry.
pub fn random_isometry<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    assert!(cols <= rows, "isometry needs rows >= cols");
    let u = random_unitary(rng, rows);
    CMat::from_fn(rows, cols, |i, j| u[(i, j)])
}

/// Full-rank random density state over the layout: GG†, trace-normalized.
pub fn random_density<R: Rng>(rng: &mut R, layout: RegisterLayout) -> DensityState {
    let d = layout.total_dim();
    let g = random_ginibre(rng, d, d);
    let mut rho = &g * g.adjoint();
    let trace = rho.trace().re;
    rho /= C64::new(trace, 0.0);
    DensityState::new(layout, rho).expect("Ginibre construction yields a valid state")
}

/// Haar-random pure state over the layout.
pub fn random_pure<R: Rng>(rng: &mut R, layout: RegisterLayout) -> PureState {
    let d = layout.total_dim();
    let mut v: CVec = DVector::from_fn(d, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let norm = v.norm();
    v /= C64::new(norm, 0.0);
    PureState::new(layout, v).expect("normalized vector is a valid pure state")
}

/// Random channel with the given Kraus rank, carved out of a Haar-random
/// dilation isometry (completeness holds by construction).
pub fn random_channel<R: Rng>(rng: &mut R, dim: usize, kraus_rank: usize) -> QuantumChannel {
    let v = random_isometry(rng, dim * kraus_rank, dim);
    let kraus: Vec<CMat> = (0..kraus_rank)
        .map(|k| CMat::from_fn(dim, dim, |i, j| v[(i * kraus_rank + k, j)]))
        .collect();
    QuantumChannel::new("random", kraus).expect("isometry slices form a valid channel")
}

/// Random ((n, k)) encoding isometry.
pub fn random_code<R: Rng>(rng: &mut R, k: usize, n: usize) -> EncodingIsometry {
    let matrix = random_isometry(rng, 1 << n, 1 << k);
    EncodingIsometry::new(k, n, matrix).expect("random isometry is a valid code")
}

/// Random probability distribution over `n` symbols (normalized uniforms).
pub fn random_distribution<R: Rng>(rng: &mut R, n: usize) -> Distribution {
    let mut probs: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-6).collect();
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    // compensate rounding so the sum is exactly 1
    let total: f64 = probs.iter().sum();
    probs[0] += 1.0 - total;
    Distribution::new(probs).expect("normalized positives form a distribution")
}

/// Random classical channel with the given alphabet sizes.
pub fn random_classical_channel<R: Rng>(
    rng: &mut R,
    inputs: usize,
    outputs: usize,
) -> ClassicalChannel {
    let rows: Vec<Vec<f64>> = (0..inputs)
        .map(|_| random_distribution(rng, outputs).probabilities().to_vec())
        .collect();
    ClassicalChannel::new(rows).expect("rows are distributions")
}
