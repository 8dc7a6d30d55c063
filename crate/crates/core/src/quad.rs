//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands on a
//! real interval. 15-point Kronrod rule per panel, bisection of the worst
//! panel until the summed error bound meets the tolerance.

use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

// 15-point Kronrod abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights.
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

/// Panel budget independent of the bisection-depth limit; generous enough
/// for |Im t| ~ 1e4 oscillatory integrands.
const MAX_PANELS: usize = 1 << 15;

pub(crate) struct QuadOutcome {
    pub value: Complex64,
    pub err: f64,
    pub converged: bool,
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    /// rounding floor 50·eps·∫|f| for this panel; the estimate cannot be
    /// driven below it by further bisection
    floor: f64,
    depth: u32,
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

/// One Gauss–Kronrod 15 application on [a, b]; returns (integral, error
/// bound, rounding floor).
fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_kronrod = f_center * WGK[7];
    let mut res_gauss = f_center * WG[3];
    let mut res_abs = f_center.norm() * WGK[7];
    let mut fv = [Complex64::new(0.0, 0.0); 14];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[j + 7] = f2;
        let fsum = f1 + f2;
        res_kronrod += fsum * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            // odd Kronrod indices are the embedded Gauss nodes
            res_gauss += fsum * WG[j / 2];
        }
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = (f_center - mean).norm() * WGK[7];
    for j in 0..7 {
        res_asc += ((fv[j] - mean).norm() + (fv[j + 7] - mean).norm()) * WGK[j];
    }

    let value = res_kronrod * half;
    let raw_err = ((res_kronrod - res_gauss) * half).norm();
    res_abs *= half.abs();
    res_asc *= half.abs();

    // QUADPACK-style error sharpening
    let mut err = raw_err;
    if res_asc != 0.0 && raw_err != 0.0 {
        let scale = (200.0 * raw_err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(floor);
    }
    (value, err, floor)
}

/// Integrate `f` over the union of the intervals delimited by the sorted
/// breakpoint list, refining adaptively down to `max_depth` bisections per
/// initial panel.
pub(crate) fn adaptive_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    breakpoints: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_depth: u32,
) -> QuadOutcome {
    debug_assert!(breakpoints.len() >= 2);
    let mut heap = BinaryHeap::new();
    let mut done: Vec<Panel> = Vec::new();
    let mut value = Complex64::new(0.0, 0.0);
    let mut err_total = 0.0;
    for w in breakpoints.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let (v, e, fl) = gk15(f, w[0], w[1]);
        value += v;
        err_total += e;
        heap.push(Panel { a: w[0], b: w[1], value: v, err: e, floor: fl, depth: 0 });
    }

    let mut converged = true;
    loop {
        let tol = abs_tol.max(rel_tol * value.norm());
        if err_total <= tol {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break, // every panel is at its rounding floor
        };
        // splitting cannot reduce an estimate already at the floor
        if worst.err <= 2.0 * worst.floor {
            done.push(worst);
            continue;
        }
        if worst.depth >= max_depth || heap.len() + done.len() + 2 > MAX_PANELS {
            heap.push(worst);
            converged = false;
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            done.push(worst);
            continue;
        }
        let (v1, e1, f1) = gk15(f, worst.a, mid);
        let (v2, e2, f2) = gk15(f, mid, worst.b);
        value += v1 + v2 - worst.value;
        err_total += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1, floor: f1, depth: worst.depth + 1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2, floor: f2, depth: worst.depth + 1 });
    }

    // re-sum to clear incremental drift
    let mut v = Complex64::new(0.0, 0.0);
    let mut e = 0.0;
    for p in heap.iter().chain(done.iter()) {
        v += p.value;
        e += p.err;
    }
    QuadOutcome { value: v, err: e, converged }
}

/// Sorted, deduplicated breakpoint list clipped to [lo, hi].
pub(crate) fn clean_breakpoints(mut pts: Vec<f64>, lo: f64, hi: f64) -> Vec<f64> {
    pts.push(lo);
    pts.push(hi);
    pts.retain(|x| x.is_finite() && *x >= lo && *x <= hi);
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * (1.0 + a.abs()));
    if pts.len() < 2 {
        vec![lo, hi]
    } else {
        pts
    }
}
