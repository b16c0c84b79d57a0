//! Interval-subdividing Gauss-Kronrod (10/21) quadrature and a Beta-expectation driver that
//! removes the endpoint power laws by substitution.
//!
//! Integrands return `(value, inner_error)` so that errors from nested integrals are carried
//! through the outer rule.

use crate::error::Result;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_291_708,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// weights of the 10-point Gauss rule on XGK[1], XGK[3], …, XGK[9]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// Result of an adaptive run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Adaptive {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
}

fn gk21<G>(g: &mut G, a: f64, b: f64) -> Result<Segment>
where
    G: FnMut(f64) -> Result<(f64, f64)>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [0.0; 21];
    let mut inner = 0.0;
    let (fc, ec) = g(center)?;
    fv[20] = fc;
    inner += WGK[10] * ec;
    for j in 0..10 {
        let dx = half * XGK[j];
        let (f1, e1) = g(center - dx)?;
        let (f2, e2) = g(center + dx)?;
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        inner += WGK[j] * (e1 + e2);
    }
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs_sum = WGK[10] * fc.abs();
    for j in 0..10 {
        let pair = fv[2 * j] + fv[2 * j + 1];
        kronrod += WGK[j] * pair;
        abs_sum += WGK[j] * (fv[2 * j].abs() + fv[2 * j + 1].abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        asc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let roundoff = 50.0 * f64::EPSILON * res_abs;
    if roundoff > err {
        err = roundoff;
    }
    Ok(Segment {
        a,
        b,
        value,
        error: err + inner * half.abs(),
    })
}

/// Adaptive bisection until the summed error estimate is at most `tol`, or `max_segments`
/// segments exist, or `keep_going` returns false.
pub(crate) fn adaptive<G>(
    mut g: G,
    a: f64,
    b: f64,
    tol: impl Fn(f64) -> f64,
    max_segments: usize,
    keep_going: impl Fn() -> bool,
) -> Result<Adaptive>
where
    G: FnMut(f64) -> Result<(f64, f64)>,
{
    let mut segments = vec![gk21(&mut g, a, b)?];
    loop {
        let value: f64 = total(segments.iter().map(|s| s.value));
        let error: f64 = total(segments.iter().map(|s| s.error));
        if error <= tol(value) {
            return Ok(Adaptive { value, error, converged: true });
        }
        if segments.len() >= max_segments || !keep_going() {
            return Ok(Adaptive { value, error, converged: false });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("non-empty");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if !(mid > seg.a && mid < seg.b) {
            // cannot split further
            segments.push(seg);
            let value = total(segments.iter().map(|s| s.value));
            let error = total(segments.iter().map(|s| s.error));
            return Ok(Adaptive { value, error, converged: error <= tol(value) });
        }
        segments.push(gk21(&mut g, seg.a, mid)?);
        segments.push(gk21(&mut g, mid, seg.b)?);
        // keep left-to-right order so the summation is order independent of refinement history
        segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    }
}

/// Neumaier-compensated sum.
pub(crate) fn total(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `E[g(V)]` for `V ~ Beta(p, q)` by adaptive Gauss-Kronrod.
///
/// `[0, 1]` is split at `1/2`. On the left half `s = v^p` turns `v^{p−1} dv` into `ds / p`; on the
/// right half `w = (1 − v)^q` turns `(1 − v)^{q−1} dv` into `dw / q`. `g` is called with
/// `(v, 1 − v)`, both computed without cancellation.
pub(crate) fn beta_expectation<G>(
    mut g: G,
    p: f64,
    q: f64,
    abs_tol: f64,
    rel_tol: f64,
    keep_going: impl Fn() -> bool,
) -> Result<Adaptive>
where
    G: FnMut(f64, f64) -> Result<(f64, f64)>,
{
    let ln_b = crate::specfun::log_beta_any(&[p, q])?;
    let norm = (-ln_b).exp();
    // per-piece target in unnormalized units
    let tol = |v: f64| 0.5 * (abs_tol / norm).max(rel_tol * v.abs());
    const MAX_SEGMENTS: usize = 400;

    let left = if p == 1.0 {
        adaptive(
            |v| {
                let (val, err) = g(v, 1.0 - v)?;
                let wgt = (1.0 - v).powf(q - 1.0);
                Ok((val * wgt, err * wgt))
            },
            0.0,
            0.5,
            tol,
            MAX_SEGMENTS,
            &keep_going,
        )?
    } else {
        let upper = 0.5f64.powf(p);
        if upper > 0.0 {
            adaptive(
                |s| {
                    let v = s.powf(1.0 / p);
                    let (val, err) = g(v, 1.0 - v)?;
                    let wgt = (1.0 - v).powf(q - 1.0) / p;
                    Ok((val * wgt, err * wgt))
                },
                0.0,
                upper,
                tol,
                MAX_SEGMENTS,
                &keep_going,
            )?
        } else {
            Adaptive { value: 0.0, error: 0.0, converged: true }
        }
    };

    let right = if q == 1.0 {
        adaptive(
            |v| {
                let (val, err) = g(v, 1.0 - v)?;
                let wgt = v.powf(p - 1.0);
                Ok((val * wgt, err * wgt))
            },
            0.5,
            1.0,
            tol,
            MAX_SEGMENTS,
            &keep_going,
        )?
    } else {
        let upper = 0.5f64.powf(q);
        if upper > 0.0 {
            adaptive(
                |w| {
                    let c = w.powf(1.0 / q);
                    let v = 1.0 - c;
                    let (val, err) = g(v, c)?;
                    let wgt = v.powf(p - 1.0) / q;
                    Ok((val * wgt, err * wgt))
                },
                0.0,
                upper,
                tol,
                MAX_SEGMENTS,
                &keep_going,
            )?
        } else {
            Adaptive { value: 0.0, error: 0.0, converged: true }
        }
    };

    let value = (left.value + right.value) * norm;
    let error = (left.error + right.error) * norm;
    Ok(Adaptive {
        value,
        error,
        converged: left.converged && right.converged,
    })
}
