//! Bracketing root search for smooth functions of one variable.
//!
//! The interval is sampled uniformly. Samples whose magnitude falls inside a
//! relative zero band are treated as sign-less, so a run of them is skipped
//! over when looking for sign changes, and runs touching an endpoint (where
//! the function vanishes to high order) never produce interior roots. Sign
//! changes are bisected and then polished by one Newton step. Double roots
//! do not change sign; they are recovered as roots of the derivative at
//! which the function itself is negligible.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    pub samples: usize,
    pub xtol: f64,
    /// Samples with `|f| ≤ zero_band · max|f|` count as sign-less.
    pub zero_band: f64,
    /// A derivative root is a double root when `|f| ≤ double_tol · max|f|` there.
    pub double_tol: f64,
    pub include_endpoints: bool,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            samples: 4096,
            xtol: 1e-13,
            zero_band: 1e-12,
            double_tol: 1e-9,
            include_endpoints: false,
        }
    }
}

impl RootOptions {
    pub fn with_endpoints(mut self) -> Self {
        self.include_endpoints = true;
        self
    }
}

/// Bisection on a bracket with `f(lo)` and `f(hi)` of opposite signs.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, xtol: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn newton_polish<F, D>(f: &F, df: &D, x: f64, lo: f64, hi: f64) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let d = df(x);
    if d == 0.0 || !d.is_finite() {
        return x;
    }
    let fx = f(x);
    let x1 = x - fx / d;
    if x1 >= lo && x1 <= hi && f(x1).abs() <= fx.abs() {
        x1
    } else {
        x
    }
}

struct Sampled {
    xs: Vec<f64>,
    signs: Vec<i8>,
    scale: f64,
}

fn sample<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize, band: f64) -> Sampled {
    let xs: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cut = band * scale;
    let signs = vals
        .iter()
        .map(|&v| if v.abs() <= cut { 0 } else if v > 0.0 { 1 } else { -1 })
        .collect();
    Sampled { xs, signs, scale }
}

/// Brackets `(lo, hi)` between consecutive signed samples of opposite sign.
fn sign_change_brackets(s: &Sampled) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut prev: Option<usize> = None;
    for (j, &sg) in s.signs.iter().enumerate() {
        if sg == 0 {
            continue;
        }
        if let Some(i) = prev {
            if s.signs[i] != sg {
                out.push((s.xs[i], s.xs[j]));
            }
        }
        prev = Some(j);
    }
    out
}

/// All roots of `f` on `[a, b]`, sorted ascending.
pub fn find_roots<F, D>(f: F, df: D, a: f64, b: f64, opts: &RootOptions) -> Vec<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let sf = sample(&f, a, b, opts.samples, opts.zero_band);
    let mut roots = Vec::new();
    if sf.scale == 0.0 {
        return roots;
    }
    for (lo, hi) in sign_change_brackets(&sf) {
        let x = bisect(&f, lo, hi, opts.xtol);
        roots.push(newton_polish(&f, &df, x, lo, hi));
    }

    let sd = sample(&df, a, b, opts.samples, opts.zero_band);
    if sd.scale > 0.0 {
        for (lo, hi) in sign_change_brackets(&sd) {
            let x = bisect(&df, lo, hi, opts.xtol);
            if f(x).abs() <= opts.double_tol * sf.scale {
                roots.push(x);
            }
        }
    }

    let end_tol = 1e-12 * (b - a).abs().max(1.0);
    if opts.include_endpoints {
        for e in [a, b] {
            if f(e).abs() <= opts.zero_band * sf.scale {
                roots.push(e);
            }
        }
    } else {
        roots.retain(|&x| (x - a).abs() > end_tol && (x - b).abs() > end_tol);
    }

    roots.sort_by(f64::total_cmp);
    let merge = 1e-9 * (b - a).abs().max(1e-12);
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for x in roots {
        match out.last_mut() {
            Some(last) if (x - *last).abs() <= merge => {
                if f(x).abs() < f(*last).abs() {
                    *last = x;
                }
            }
            _ => out.push(x),
        }
    }
    out
}

/// Polynomial with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Polynomial { coeffs }
    }

    /// Real roots in `[-1, 1]`, endpoints included.
    pub fn roots_in_unit_interval(&self) -> Vec<f64> {
        let d = self.derivative();
        let opts = RootOptions::default().with_endpoints();
        find_roots(|x| self.eval(x), |x| d.eval(x), -1.0, 1.0, &opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots_of_sine() {
        let r = find_roots(|x: f64| x.sin(), |x: f64| x.cos(), 0.5, 10.0, &RootOptions::default());
        let want = [std::f64::consts::PI, 2.0 * std::f64::consts::PI, 3.0 * std::f64::consts::PI];
        assert_eq!(r.len(), 3);
        for (g, w) in r.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn double_root_found_through_derivative() {
        let r = find_roots(|x| (x - 0.3) * (x - 0.3), |x| 2.0 * (x - 0.3), 0.0, 1.0, &RootOptions::default());
        assert_eq!(r.len(), 1);
        assert!((r[0] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn endpoint_vanishing_is_not_an_interior_root() {
        let f = |x: f64| x.powi(6) * (x - 0.5);
        let df = |x: f64| 6.0 * x.powi(5) * (x - 0.5) + x.powi(6);
        let r = find_roots(f, df, 0.0, 1.0, &RootOptions::default());
        assert_eq!(r.len(), 1);
        assert!((r[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn polynomial_roots() {
        let p = Polynomial::new(vec![-1.0, 4.0, 4.0]);
        let r = p.roots_in_unit_interval();
        assert_eq!(r.len(), 1);
        assert!((r[0] - (2f64.sqrt() - 1.0) / 2.0).abs() < 1e-13);
    }
}
