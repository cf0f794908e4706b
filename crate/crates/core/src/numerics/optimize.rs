//! Bracketed one-dimensional maximization.

use alloc::vec::Vec;

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for an interior maximum of `f` on `[a, b]`.
///
/// Fails with a bracket error when the search collapses onto an endpoint
/// whose value is not exceeded inside the bracket.
pub fn find_local_max<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, x_tol: f64) -> Result<f64> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("bracket must satisfy a < b"));
    }
    if !(x_tol > 0.0) {
        return Err(Error::Domain("x_tol must be positive"));
    }
    let (fa, fb) = (f(a), f(b));
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while hi - lo > x_tol && iterations < 500 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        iterations += 1;
    }
    let (x, fx) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    let near_edge = (x - a) <= 2.0 * x_tol || (b - x) <= 2.0 * x_tol;
    if near_edge && (fx <= fa || fx <= fb) {
        return Err(Error::Bracket("no interior maximum in bracket"));
    }
    if fx < fa.max(fb) {
        return Err(Error::Bracket("no interior maximum in bracket"));
    }
    Ok(x)
}

/// All interior local maxima of `f` on `[a, b]`: a uniform scan with
/// `samples` points locates candidates, each refined by golden section.
pub fn local_maxima<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    samples: usize,
    x_tol: f64,
) -> Result<Vec<f64>> {
    if samples < 3 {
        return Err(Error::Domain("at least three scan points are required"));
    }
    if !(a < b) {
        return Err(Error::Domain("bracket must satisfy a < b"));
    }
    let step = (b - a) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples).map(|i| a + i as f64 * step).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    let mut i = 1;
    while i + 1 < samples {
        if ys[i] > ys[i - 1] {
            // Walk across a flat top so plateaus are reported once.
            let mut j = i;
            while j + 1 < samples && ys[j + 1] == ys[j] {
                j += 1;
            }
            if j + 1 < samples && ys[j] > ys[j + 1] {
                if let Ok(x) = find_local_max(&f, xs[i - 1], xs[j + 1], x_tol) {
                    out.push(x);
                }
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    Ok(out)
}
