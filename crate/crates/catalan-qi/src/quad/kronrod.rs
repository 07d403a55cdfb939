//! 15-point Gauss–Kronrod panels and the adaptive driver for semi-infinite
//! integrals with an algebraic origin singularity and algebraic decay.
//!
//! The driver substitutes t = s² first (healing the half-power the kernels
//! carry at the origin), then parameterizes s = (1−w)/w and integrates over
//! w ∈ (0, 1]. Working in w directly keeps split points representable even
//! when the certified truncation point T sits far beyond 1/ε. The truncation
//! tail is charged against the analytic bound ∫_T^∞ C·t^(−d) dt =
//! C·T^(1−d)/(d−1), and the run converges when panel error plus tail bound
//! drop below the relative target.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{Integrand, QuadOpts, QuadResult};

// QK15 nodes and weights. Odd-index abscissae carry the embedded 7-point
// Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// QUADPACK-style error rescaling for a single panel.
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut e = err.abs();
    if resasc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / resasc).powf(1.5);
        e = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * resabs);
    }
    e
}

/// One 15-point Gauss–Kronrod application on [lo, hi].
///
/// Returns the Kronrod value and the rescaled |Kronrod − Gauss| error
/// estimate. Costs exactly 15 evaluations; never touches the endpoints.
pub fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);

    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = resk.abs();
    let mut fv = [[0.0f64; 2]; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = [f1, f2];
        let sum = f1 + f2;
        resk += WGK[j] * sum;
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * sum;
        }
    }
    let reskh = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - reskh).abs();
    for (j, pair) in fv.iter().enumerate() {
        resasc += WGK[j] * ((pair[0] - reskh).abs() + (pair[1] - reskh).abs());
    }
    let value = resk * half;
    let err = rescale_error((resk - resg) * half, resabs * half.abs(), resasc * half.abs());
    (value, err)
}

struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

struct Workspace {
    active: BinaryHeap<Panel>,
    retired: Vec<Panel>,
    total: f64,
    err_sum: f64,
    evals: usize,
}

impl Workspace {
    fn add(&mut self, mapped: &impl Fn(f64) -> f64, lo: f64, hi: f64) {
        let (value, err) = kronrod_panel(mapped, lo, hi);
        self.evals += 15;
        self.total += value;
        self.err_sum += err;
        self.active.push(Panel { lo, hi, value, err });
    }

    /// Covers [from, to) with panels doubling away from `from`.
    fn seed(&mut self, mapped: &impl Fn(f64) -> f64, from: f64, to: f64) {
        let mut lo = from;
        while lo < to {
            let hi = if 2.0 * lo >= 0.5 * to { to } else { 2.0 * lo };
            self.add(mapped, lo, hi);
            lo = hi;
        }
    }
}

/// Number of doubling panels needed to cover [from, to).
fn seed_count(from: f64, to: f64) -> usize {
    (to / from).log2().ceil().max(1.0) as usize + 1
}

/// Integrates f over (0, ∞) to a relative tolerance.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    integrand: &Integrand<F>,
    opts: QuadOpts,
) -> QuadResult {
    let d = integrand.decay_exponent();
    let coeff = integrand.tail_coeff();

    // Integrand in w-space after t = s², s = (1−w)/w.
    let mapped = |w: f64| -> f64 {
        let s = (1.0 - w) / w;
        let t = s * s;
        if !t.is_finite() {
            return 0.0;
        }
        let v = integrand.eval(t);
        if !v.is_finite() {
            return 0.0;
        }
        2.0 * s * v / (w * w)
    };

    // Everything below w_lo is charged to the analytic tail bound at
    // T = s(w_lo)²; clamping T ≥ 1 keeps the bound's premise valid.
    let split_for = |tau: f64| -> f64 {
        let t_req = (coeff / ((d - 1.0) * tau))
            .powf(1.0 / (d - 1.0))
            .clamp(1.0, 1e300);
        1.0 / (1.0 + t_req.sqrt())
    };
    let tail_at = |w_lo: f64| -> f64 {
        let s = (1.0 - w_lo) / w_lo;
        coeff * (s * s).powf(1.0 - d) / (d - 1.0)
    };

    let mut ws = Workspace {
        active: BinaryHeap::new(),
        retired: Vec::new(),
        total: 0.0,
        err_sum: 0.0,
        evals: 0,
    };
    let mut stuck_err = 0.0;
    let mut w_lo = split_for(0.5 * opts.rel_tol.max(1e-15));
    ws.seed(&mapped, w_lo, 1.0);

    loop {
        let scale = ws.total.abs().max(f64::MIN_POSITIVE);
        let target = opts.rel_tol * scale;
        let tail = tail_at(w_lo);
        if ws.err_sum + stuck_err + tail <= target {
            break;
        }
        if ws.evals + 15 > opts.max_evals {
            break;
        }
        if tail > 0.5 * target {
            let mut new_lo = split_for(0.25 * target);
            if new_lo >= w_lo {
                new_lo = 0.25 * w_lo;
            }
            if new_lo < 1e-290 || ws.evals + 15 * seed_count(new_lo, w_lo) > opts.max_evals {
                // The tail cannot be certified any further.
                break;
            }
            ws.seed(&mapped, new_lo, w_lo);
            w_lo = new_lo;
        } else {
            let Some(worst) = ws.active.pop() else { break };
            let mid = 0.5 * (worst.lo + worst.hi);
            if mid <= worst.lo || mid >= worst.hi {
                // Panel narrower than f64 resolution; park it.
                stuck_err += worst.err;
                ws.err_sum -= worst.err;
                ws.retired.push(worst);
                continue;
            }
            ws.total -= worst.value;
            ws.err_sum -= worst.err;
            for (a, b) in [(worst.lo, mid), (mid, worst.hi)] {
                ws.add(&mapped, a, b);
            }
        }
    }

    // Recompute the final sums from scratch; the incremental bookkeeping
    // above only steered the refinement.
    let mut value = 0.0;
    let mut err = stuck_err + tail_at(w_lo);
    for p in ws.active.iter() {
        value += p.value;
        err += p.err;
    }
    for p in ws.retired.iter() {
        value += p.value; // their error already lives in stuck_err
    }
    let converged = err <= opts.rel_tol * value.abs().max(f64::MIN_POSITIVE);
    QuadResult {
        value,
        abs_error_estimate: err,
        evaluations: ws.evals,
        converged,
    }
}
