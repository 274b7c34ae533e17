//! Seeded Monte-Carlo decoding harness over a binary-input AWGN channel.
//!
//! All-zero codewords are transmitted with antipodal mapping (bit 0 -> +1);
//! min-sum is sign-symmetric, so the measured rates are valid without an
//! encoder. Noise variance is derived from Eb/N0 using the design rate
//! `1 - m/n`; the convention is recorded in the result metadata.
//!
//! Every frame draws its noise from an RNG stream derived from the master
//! seed and the frame index by counter-based splitting, and frames are
//! aggregated in batches of fixed size, so results are bit-identical for any
//! worker count.

use crate::error::{Error, Result};
use crate::pcm::SparseBinMatrix;
use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Stop as soon as a SNR point has collected `target_frame_errors`, or after
/// `max_frames`, whichever comes first (checked at batch boundaries).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StopRule {
    pub target_frame_errors: u64,
    pub max_frames: u64,
}

/// Monte-Carlo configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Eb/N0 points in dB.
    pub snr_points_db: Vec<f64>,
    pub max_iterations: u32,
    /// Min-sum normalization factor in (0, 1].
    pub normalization_factor: f64,
    pub stop_rule: StopRule,
    pub seed: u64,
}

impl SimConfig {
    /// Standard settings: normalized min-sum with factor 0.75 and at most 50
    /// iterations.
    pub fn new(snr_points_db: Vec<f64>, seed: u64) -> Self {
        SimConfig {
            snr_points_db,
            max_iterations: 50,
            normalization_factor: 0.75,
            stop_rule: StopRule {
                target_frame_errors: 100,
                max_frames: 10_000,
            },
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.snr_points_db.is_empty() || self.snr_points_db.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidSimConfig(
                "snr_points_db must be non-empty and finite".into(),
            ));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidSimConfig(
                "max_iterations must be >= 1".into(),
            ));
        }
        if !(self.normalization_factor > 0.0 && self.normalization_factor <= 1.0) {
            return Err(Error::InvalidSimConfig(
                "normalization_factor must lie in (0, 1]".into(),
            ));
        }
        if self.stop_rule.target_frame_errors == 0 || self.stop_rule.max_frames == 0 {
            return Err(Error::InvalidSimConfig(
                "stop rule bounds must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Per-SNR-point tallies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimPoint {
    pub snr_db: f64,
    pub frames: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub ber: f64,
    pub fer: f64,
    pub converged_frames: u64,
    pub avg_iterations: f64,
    pub max_iterations_seen: u32,
}

/// Full simulation output with the conventions that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimResult {
    pub schema_version: u32,
    pub code_length: usize,
    pub num_checks: usize,
    /// `1 - m/n`; the true rate may be higher if the matrix is rank
    /// deficient.
    pub design_rate: f64,
    pub rate_convention: &'static str,
    pub decoder: &'static str,
    pub normalization_factor: f64,
    pub max_iterations: u32,
    pub seed: u64,
    pub points: Vec<SimPoint>,
}

impl SimResult {
    /// CSV export: one line per SNR point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("snr_db,frames,bit_errors,frame_errors,ber,fer\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{:e},{:e}\n",
                p.snr_db, p.frames, p.bit_errors, p.frame_errors, p.ber, p.fer
            ));
        }
        out
    }

    /// Gnuplot-ready curve data.
    pub fn to_gnuplot(&self) -> String {
        let mut out = String::from("# columns: snr_db ber fer\n");
        for p in &self.points {
            out.push_str(&format!("{} {:e} {:e}\n", p.snr_db, p.ber, p.fer));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Min-sum decoder
// ---------------------------------------------------------------------------

/// Edge-list topology shared by all frames.
struct DecoderTopo {
    n: usize,
    /// Edge e of check r sits in `edge_var[check_off[r]..check_off[r+1]]`.
    check_off: Vec<u32>,
    edge_var: Vec<u32>,
    /// Edges incident to each variable, indexing into the check-ordered
    /// arrays.
    var_off: Vec<u32>,
    var_edge: Vec<u32>,
}

impl DecoderTopo {
    fn new(h: &SparseBinMatrix) -> Self {
        let n = h.cols();
        let mut check_off = Vec::with_capacity(h.rows() + 1);
        let mut edge_var = Vec::with_capacity(h.num_edges());
        check_off.push(0u32);
        for r in 0..h.rows() {
            edge_var.extend_from_slice(h.row(r));
            check_off.push(edge_var.len() as u32);
        }
        let mut var_off = vec![0u32; n + 1];
        for &v in &edge_var {
            var_off[v as usize + 1] += 1;
        }
        for i in 0..n {
            var_off[i + 1] += var_off[i];
        }
        let mut cursor = var_off.clone();
        let mut var_edge = vec![0u32; edge_var.len()];
        for (e, &v) in edge_var.iter().enumerate() {
            var_edge[cursor[v as usize] as usize] = e as u32;
            cursor[v as usize] += 1;
        }
        DecoderTopo {
            n,
            check_off,
            edge_var,
            var_off,
            var_edge,
        }
    }

    fn num_checks(&self) -> usize {
        self.check_off.len() - 1
    }
}

struct Workspace {
    v2c: Vec<f64>,
    c2v: Vec<f64>,
    posterior: Vec<f64>,
    hard: Vec<u8>,
}

impl Workspace {
    fn new(topo: &DecoderTopo) -> Self {
        Workspace {
            v2c: vec![0.0; topo.edge_var.len()],
            c2v: vec![0.0; topo.edge_var.len()],
            posterior: vec![0.0; topo.n],
            hard: vec![0; topo.n],
        }
    }
}

fn syndrome_is_zero(topo: &DecoderTopo, hard: &[u8]) -> bool {
    (0..topo.num_checks()).all(|r| {
        let start = topo.check_off[r] as usize;
        let end = topo.check_off[r + 1] as usize;
        topo.edge_var[start..end]
            .iter()
            .fold(0u8, |acc, &v| acc ^ hard[v as usize])
            == 0
    })
}

/// Flooding-schedule normalized min-sum. Returns `(converged, iterations)`;
/// `ws.hard` holds the final decision.
fn decode_into(
    topo: &DecoderTopo,
    ws: &mut Workspace,
    llrs: &[f64],
    max_iterations: u32,
    alpha: f64,
) -> (bool, u32) {
    for (v, &llr) in llrs.iter().enumerate() {
        ws.hard[v] = u8::from(llr < 0.0);
    }
    if syndrome_is_zero(topo, &ws.hard) {
        return (true, 0);
    }
    for (e, &v) in topo.edge_var.iter().enumerate() {
        ws.v2c[e] = llrs[v as usize];
    }
    for iteration in 1..=max_iterations {
        // Check-node update.
        for r in 0..topo.num_checks() {
            let start = topo.check_off[r] as usize;
            let end = topo.check_off[r + 1] as usize;
            let mut sign_product = 1.0f64;
            let mut min1 = f64::INFINITY;
            let mut min2 = f64::INFINITY;
            let mut argmin = start;
            for e in start..end {
                let m = ws.v2c[e];
                if m < 0.0 {
                    sign_product = -sign_product;
                }
                let mag = m.abs();
                if mag < min1 {
                    min2 = min1;
                    min1 = mag;
                    argmin = e;
                } else if mag < min2 {
                    min2 = mag;
                }
            }
            for e in start..end {
                let mag = if e == argmin { min2 } else { min1 };
                let sign = if ws.v2c[e] < 0.0 {
                    -sign_product
                } else {
                    sign_product
                };
                ws.c2v[e] = alpha * sign * mag;
            }
        }
        // Variable-node update and hard decision.
        for (v, &llr) in llrs.iter().enumerate() {
            let start = topo.var_off[v] as usize;
            let end = topo.var_off[v + 1] as usize;
            let mut total = llr;
            for &e in &topo.var_edge[start..end] {
                total += ws.c2v[e as usize];
            }
            ws.posterior[v] = total;
            ws.hard[v] = u8::from(total < 0.0);
        }
        if syndrome_is_zero(topo, &ws.hard) {
            return (true, iteration);
        }
        for v in 0..topo.n {
            let start = topo.var_off[v] as usize;
            let end = topo.var_off[v + 1] as usize;
            for &e in &topo.var_edge[start..end] {
                ws.v2c[e as usize] = ws.posterior[v] - ws.c2v[e as usize];
            }
        }
    }
    (false, max_iterations)
}

/// Runs normalized min-sum on one LLR vector. Positive LLRs favor bit 0.
/// Returns the hard decision, whether the syndrome reached zero, and the
/// iterations used.
pub fn minsum_decode(
    h: &SparseBinMatrix,
    channel_llrs: &[f64],
    cfg: &SimConfig,
) -> Result<(Vec<u8>, bool, u32)> {
    if cfg.max_iterations == 0 {
        return Err(Error::InvalidSimConfig(
            "max_iterations must be >= 1".into(),
        ));
    }
    if !(cfg.normalization_factor > 0.0 && cfg.normalization_factor <= 1.0) {
        return Err(Error::InvalidSimConfig(
            "normalization_factor must lie in (0, 1]".into(),
        ));
    }
    if channel_llrs.len() != h.cols() {
        return Err(Error::DimensionMismatch {
            expected: h.cols(),
            got: channel_llrs.len(),
        });
    }
    let topo = DecoderTopo::new(h);
    let mut ws = Workspace::new(&topo);
    let (converged, iterations) = decode_into(
        &topo,
        &mut ws,
        channel_llrs,
        cfg.max_iterations,
        cfg.normalization_factor,
    );
    Ok((ws.hard.clone(), converged, iterations))
}

// ---------------------------------------------------------------------------
// Monte-Carlo loop
// ---------------------------------------------------------------------------

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based stream splitting: one independent seed per (point, frame).
fn frame_seed(master: u64, point_index: usize, frame_index: u64) -> u64 {
    let a = splitmix64(master ^ splitmix64(point_index as u64));
    splitmix64(a ^ frame_index)
}

struct FrameOutcome {
    bit_errors: u64,
    converged: bool,
    iterations: u32,
}

fn run_frame(
    topo: &DecoderTopo,
    ws: &mut Workspace,
    llr_buf: &mut [f64],
    seed: u64,
    sigma: f64,
    max_iterations: u32,
    alpha: f64,
) -> FrameOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let llr_scale = 2.0 / (sigma * sigma);
    let mut i = 0;
    while i < llr_buf.len() {
        // Box-Muller transform; u1 in (0, 1].
        let u1: f64 = 1.0 - rng.random::<f64>();
        let u2: f64 = rng.random::<f64>();
        let radius = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (2.0 * std::f64::consts::PI * u2).sin_cos();
        llr_buf[i] = llr_scale * (1.0 + sigma * radius * c);
        i += 1;
        if i < llr_buf.len() {
            llr_buf[i] = llr_scale * (1.0 + sigma * radius * s);
            i += 1;
        }
    }
    let (converged, iterations) = decode_into(topo, ws, llr_buf, max_iterations, alpha);
    let bit_errors = ws.hard.iter().map(|&b| u64::from(b)).sum();
    FrameOutcome {
        bit_errors,
        converged,
        iterations,
    }
}

/// Frames per deterministic aggregation batch. Stop conditions are evaluated
/// only at batch boundaries so the result does not depend on the worker
/// count.
const FRAME_BATCH: u64 = 128;

/// Simulates all-zero-codeword BPSK transmission over AWGN at every
/// configured SNR point, decoding with normalized min-sum. Deterministic for
/// a fixed config including the seed.
pub fn run_ber(h: &SparseBinMatrix, cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate()?;
    let topo = DecoderTopo::new(h);
    let n = h.cols();
    let design_rate = 1.0 - h.rows() as f64 / n as f64;
    if design_rate <= 0.0 {
        return Err(Error::InvalidSimConfig(
            "design rate 1 - m/n must be positive".into(),
        ));
    }
    let mut points = Vec::with_capacity(cfg.snr_points_db.len());
    for (point_index, &snr_db) in cfg.snr_points_db.iter().enumerate() {
        let ebn0 = 10f64.powf(snr_db / 10.0);
        let sigma = (1.0 / (2.0 * design_rate * ebn0)).sqrt();

        let mut frames = 0u64;
        let mut bit_errors = 0u64;
        let mut frame_errors = 0u64;
        let mut converged_frames = 0u64;
        let mut iteration_sum = 0u64;
        let mut max_iterations_seen = 0u32;

        while frames < cfg.stop_rule.max_frames && frame_errors < cfg.stop_rule.target_frame_errors
        {
            let batch = FRAME_BATCH.min(cfg.stop_rule.max_frames - frames);
            let outcomes: Vec<FrameOutcome> = (frames..frames + batch)
                .into_par_iter()
                .map_init(
                    || (Workspace::new(&topo), vec![0.0f64; n]),
                    |(ws, llr_buf), frame| {
                        run_frame(
                            &topo,
                            ws,
                            llr_buf,
                            frame_seed(cfg.seed, point_index, frame),
                            sigma,
                            cfg.max_iterations,
                            cfg.normalization_factor,
                        )
                    },
                )
                .collect();
            for o in outcomes {
                bit_errors += o.bit_errors;
                frame_errors += u64::from(o.bit_errors > 0);
                converged_frames += u64::from(o.converged);
                iteration_sum += u64::from(o.iterations);
                max_iterations_seen = max_iterations_seen.max(o.iterations);
            }
            frames += batch;
        }

        points.push(SimPoint {
            snr_db,
            frames,
            bit_errors,
            frame_errors,
            ber: bit_errors as f64 / (frames as f64 * n as f64),
            fer: frame_errors as f64 / frames as f64,
            converged_frames,
            avg_iterations: iteration_sum as f64 / frames as f64,
            max_iterations_seen,
        });
    }
    Ok(SimResult {
        schema_version: crate::SCHEMA_VERSION,
        code_length: n,
        num_checks: h.rows(),
        design_rate,
        rate_convention: "design rate 1 - m/n; Eb/N0 -> sigma^2 = 1/(2 R Eb/N0)",
        decoder: "normalized-min-sum",
        normalization_factor: cfg.normalization_factor,
        max_iterations: cfg.max_iterations,
        seed: cfg.seed,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{exponent_matrix, select_construction};
    use crate::pcm::expand;

    fn small_code() -> SparseBinMatrix {
        let ms = select_construction(7, 12).unwrap();
        let e = exponent_matrix(&ms).unwrap();
        expand(&e, 221).unwrap().matrix().clone()
    }

    #[test]
    fn noiseless_all_zero_is_a_fixed_point() {
        let h = small_code();
        let cfg = SimConfig::new(vec![1.0], 7);
        let llrs = vec![20.0; h.cols()];
        let (hard, converged, iters) = minsum_decode(&h, &llrs, &cfg).unwrap();
        assert!(hard.iter().all(|&b| b == 0));
        assert!(converged);
        assert!(iters <= 1);
    }

    #[test]
    fn corrects_a_single_strong_flip() {
        let h = small_code();
        let cfg = SimConfig::new(vec![1.0], 7);
        let mut llrs = vec![8.0; h.cols()];
        llrs[17] = -8.0;
        let (hard, converged, _) = minsum_decode(&h, &llrs, &cfg).unwrap();
        assert!(converged);
        assert!(hard.iter().all(|&b| b == 0));
    }

    #[test]
    fn rejects_invalid_inputs() {
        let h = small_code();
        let mut cfg = SimConfig::new(vec![1.0], 7);
        cfg.max_iterations = 0;
        let llrs = vec![1.0; h.cols()];
        assert!(matches!(
            minsum_decode(&h, &llrs, &cfg),
            Err(Error::InvalidSimConfig(_))
        ));

        let cfg = SimConfig::new(vec![1.0], 7);
        assert_eq!(
            minsum_decode(&h, &llrs[..10], &cfg).unwrap_err(),
            Error::DimensionMismatch {
                expected: h.cols(),
                got: 10
            }
        );

        let cfg = SimConfig::new(vec![], 7);
        assert!(matches!(run_ber(&h, &cfg), Err(Error::InvalidSimConfig(_))));
    }

    #[test]
    fn converged_frames_have_zero_syndrome() {
        let h = small_code();
        let cfg = SimConfig::new(vec![2.0], 99);
        let topo = DecoderTopo::new(&h);
        let mut ws = Workspace::new(&topo);
        let mut llrs = vec![0.0f64; h.cols()];
        let sigma = 0.9f64;
        for frame in 0..20u64 {
            let out = run_frame(
                &topo,
                &mut ws,
                &mut llrs,
                frame_seed(cfg.seed, 0, frame),
                sigma,
                cfg.max_iterations,
                cfg.normalization_factor,
            );
            if out.converged {
                assert!(h.syndrome_is_zero(&ws.hard));
            }
        }
    }

    #[test]
    fn reruns_are_bit_identical_across_worker_counts() {
        let h = small_code();
        let mut cfg = SimConfig::new(vec![1.5], 1234);
        cfg.stop_rule = StopRule {
            target_frame_errors: 8,
            max_frames: 64,
        };
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_ber(&h, &cfg).unwrap());
        let multi = rayon::ThreadPoolBuilder::new()
            .num_threads(2)
            .build()
            .unwrap()
            .install(|| run_ber(&h, &cfg).unwrap());
        assert_eq!(single, multi);
        let again = run_ber(&h, &cfg).unwrap();
        assert_eq!(single, again);
    }

    #[test]
    fn high_snr_is_error_free() {
        let h = small_code();
        let mut cfg = SimConfig::new(vec![12.0], 5);
        cfg.stop_rule = StopRule {
            target_frame_errors: 1,
            max_frames: 16,
        };
        let result = run_ber(&h, &cfg).unwrap();
        assert_eq!(result.points[0].bit_errors, 0);
        assert_eq!(result.points[0].frames, 16);
    }

    #[test]
    fn ber_improves_with_snr_at_fixed_seed() {
        let h = small_code();
        let mut cfg = SimConfig::new(vec![1.0, 3.0], 42);
        cfg.stop_rule = StopRule {
            target_frame_errors: 100,
            max_frames: 512,
        };
        let result = run_ber(&h, &cfg).unwrap();
        let p1 = &result.points[0];
        let p3 = &result.points[1];
        assert!(p1.frame_errors >= 100);
        assert!(p3.ber < p1.ber, "BER {} !< {}", p3.ber, p1.ber);
        let csv = result.to_csv();
        assert!(csv.starts_with("snr_db,frames,bit_errors,frame_errors,ber,fer\n"));
        assert_eq!(csv.lines().count(), 3);
    }
}
