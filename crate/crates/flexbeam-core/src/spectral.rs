//! Frequency equations (truncated and full), root scanning, mode-shape
//! construction/normalization, and the period/counting diagnostics for the
//! root distribution.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{Matrix4, Vector4};

use crate::model::{integrate, BeamSystem, QuadratureRule};
use crate::Error;

/// Truncated frequency equation
/// `Φ₀(μ) = 2·sin(μ(l−l0))·sin(μ·l0) − sin(μ·l)`.
pub fn phi0(mu: f64, l: f64, l0: f64) -> f64 {
    2.0 * libm::sin(mu * (l - l0)) * libm::sin(mu * l0) - libm::sin(mu * l)
}

/// Scaled 4×4 interface matrix G(μ) for the piecewise ansatz
/// `u_L = a1·sin(μx) + a2·sinh(μx)` on [0, l0],
/// `u_R = a3·sin(μ(l−x)) + a4·sinh(μ(l−x))` on [l0, l].
///
/// Rows: continuity of u, u′, u″ at l0 (each divided by its μ power) and the
/// shear-jump row `(κ − mω²)·u(l0) = EI(u_L‴ − u_R‴)(l0)` divided by
/// `EIμ³ + κ + mω²`. The sinh/cosh columns carry the factors
/// `e^{−μl0}` and `e^{−μ(l−l0)}`, so every entry stays bounded for all μ and
/// the determinant keeps the sign pattern of the unscaled system (the scaling
/// is a positive column/row rescale).
fn g_scaled(mu: f64, sys: &BeamSystem) -> Matrix4<f64> {
    let zl = mu * sys.l0;
    let zr = mu * (sys.l - sys.l0);
    let (sl, cl) = (libm::sin(zl), libm::cos(zl));
    let big_sl = (1.0 - libm::exp(-2.0 * zl)) / 2.0;
    let big_cl = (1.0 + libm::exp(-2.0 * zl)) / 2.0;
    let (sr, cr) = (libm::sin(zr), libm::cos(zr));
    let big_sr = (1.0 - libm::exp(-2.0 * zr)) / 2.0;
    let big_cr = (1.0 + libm::exp(-2.0 * zr)) / 2.0;
    let w2 = (sys.ei() / sys.rho) * mu * mu * mu * mu;
    let beta = sys.kappa - sys.m * w2;
    let eim3 = sys.ei() * mu * mu * mu;
    let s4 = eim3 + sys.kappa + sys.m * w2;
    Matrix4::new(
        sl,
        big_sl,
        -sr,
        -big_sr,
        cl,
        big_cl,
        cr,
        big_cr,
        -sl,
        big_sl,
        sr,
        -big_sr,
        (beta * sl + eim3 * cl) / s4,
        (beta * big_sl - eim3 * big_cl) / s4,
        (eim3 * cr) / s4,
        (-eim3 * big_cr) / s4,
    )
}

/// Full frequency equation: determinant of the scaled interface system.
/// Roots are the eigen-wavenumbers of the beam + shaker; the scaling keeps
/// the evaluation overflow-free for arbitrarily large μ (no pre-scaling
/// sinh(μl) is ever formed).
pub fn phi_full(mu: f64, sys: &BeamSystem) -> f64 {
    g_scaled(mu, sys).determinant()
}

/// Options for [`find_roots`]; `Default` matches the documented behavior.
#[derive(Debug, Clone, Copy)]
pub struct RootScanOptions {
    /// Bisection stops when the bracket is narrower than this (absolute in μ).
    pub bisect_tol: f64,
    /// Root pairs closer than this are flagged as suspected multiples.
    /// `None` = 1e-6 × (scan range).
    pub multiple_tol: Option<f64>,
    /// Grid points where |f| dips below `dip_rel × max|f|` without an adjacent
    /// sign change are reported as suspected tangential (even-multiplicity)
    /// roots.
    pub dip_rel: f64,
}

impl Default for RootScanOptions {
    fn default() -> Self {
        RootScanOptions {
            bisect_tol: 1e-12,
            multiple_tol: None,
            dip_rel: 1e-7,
        }
    }
}

/// Result of a root scan.
#[derive(Debug, Clone, Default)]
pub struct RootScan {
    /// Strictly increasing refined roots.
    pub roots: Vec<f64>,
    /// Consecutive root pairs closer than the multiple-root tolerance.
    pub near_multiple: Vec<(f64, f64)>,
    /// Grid points where |f| dipped below tolerance without a sign change.
    pub tangential: Vec<f64>,
    /// The multiple-root tolerance that was applied.
    pub multiple_tol: f64,
}

/// Scans `[mu_lo, mu_hi]` on a uniform grid for sign changes of `f` and
/// refines each bracket by bisection to `bisect_tol` absolute.
pub fn find_roots<F: FnMut(f64) -> f64>(
    f: F,
    mu_lo: f64,
    mu_hi: f64,
    grid_step: f64,
) -> RootScan {
    find_roots_with(f, mu_lo, mu_hi, grid_step, RootScanOptions::default())
}

/// [`find_roots`] with explicit options.
pub fn find_roots_with<F: FnMut(f64) -> f64>(
    mut f: F,
    mu_lo: f64,
    mu_hi: f64,
    grid_step: f64,
    opts: RootScanOptions,
) -> RootScan {
    assert!(grid_step > 0.0, "grid_step must be > 0");
    assert!(mu_lo < mu_hi, "mu_lo must be < mu_hi");
    let n = libm::ceil((mu_hi - mu_lo) / grid_step) as usize;
    let mut xs = Vec::with_capacity(n + 1);
    let mut fs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = if i == n {
            mu_hi
        } else {
            mu_lo + i as f64 * grid_step
        };
        xs.push(x);
        fs.push(f(x));
    }
    let fmax = fs.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));

    let mut roots = Vec::new();
    for i in 0..n {
        let (mut a, mut b) = (xs[i], xs[i + 1]);
        let (mut fa, fb) = (fs[i], fs[i + 1]);
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fa * fb < 0.0 {
            while b - a > opts.bisect_tol {
                let mid = 0.5 * (a + b);
                let fm = f(mid);
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                } else if fa * fm < 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
    }
    // exact zero at the right endpoint is otherwise missed
    if n > 0 && fs[n] == 0.0 && roots.last().is_none_or(|r| *r < xs[n]) {
        roots.push(xs[n]);
    }

    let multiple_tol = opts
        .multiple_tol
        .unwrap_or(1e-6 * (mu_hi - mu_lo));
    let mut near_multiple = Vec::new();
    for pair in roots.windows(2) {
        if pair[1] - pair[0] < multiple_tol {
            near_multiple.push((pair[0], pair[1]));
        }
    }

    // tangential dips: interior local minima of |f| below tolerance with the
    // same sign on both neighbors
    let mut tangential = Vec::new();
    if fmax > 0.0 {
        for i in 1..n {
            let v = libm::fabs(fs[i]);
            if v < opts.dip_rel * fmax
                && fs[i - 1] * fs[i + 1] > 0.0
                && fs[i] * fs[i - 1] > 0.0
                && v <= libm::fabs(fs[i - 1])
                && v <= libm::fabs(fs[i + 1])
            {
                tangential.push(xs[i]);
            }
        }
    }

    RootScan {
        roots,
        near_multiple,
        tangential,
        multiple_tol,
    }
}

/// Period of Φ₀ for rational l0/l = p1/p2:
/// `P = 2π/|2l0−l| · |2p1−p2| / gcd(p2, 2p1−p2)`.
///
/// The formula is scale-invariant in (p1, p2), so the fraction need not be in
/// lowest terms; it is rejected as degenerate when 2p1 = p2 (l0 = l/2).
pub fn period_phi0(l: f64, l0: f64, p1: u64, p2: u64) -> Result<f64, Error> {
    if p1 == 0 || p2 == 0 {
        return Err(Error::InvalidSystem(format!(
            "p1, p2 must be positive (got {p1}, {p2})"
        )));
    }
    if 2 * p1 == p2 {
        return Err(Error::DegeneratePeriod);
    }
    let ratio = p1 as f64 / p2 as f64;
    if libm::fabs(l0 / l - ratio) > 1e-9 {
        return Err(Error::InvalidSystem(format!(
            "l0/l = {} does not match p1/p2 = {ratio}",
            l0 / l
        )));
    }
    let diff = (2 * p1).abs_diff(p2);
    let g = gcd(p2, diff);
    Ok(2.0 * core::f64::consts::PI / libm::fabs(2.0 * l0 - l) * (diff as f64) / (g as f64))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `sinh(z)·e^{−zmax}`, overflow-free for 0 ≤ z ≤ zmax.
fn shs(z: f64, zmax: f64) -> f64 {
    (libm::exp(z - zmax) - libm::exp(-z - zmax)) / 2.0
}

/// `cosh(z)·e^{−zmax}`, overflow-free for 0 ≤ z ≤ zmax.
fn shc(z: f64, zmax: f64) -> f64 {
    (libm::exp(z - zmax) + libm::exp(-z - zmax)) / 2.0
}

/// A single mass-normalized eigenmode.
///
/// The piecewise shape is
/// `u_L(x) = a1·sin(μx) + a2·sinh(μx)` on [0, l0] and
/// `u_R(x) = a3·sin(μ(l−x)) + a4·sinh(μ(l−x))` on [l0, l];
/// internally the sinh coefficients are kept in growth-scaled form
/// (`a2·e^{μl0}`, `a4·e^{μ(l−l0)}`) so evaluation never forms a large sinh.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeShape {
    /// Wavenumber root of the full frequency equation.
    pub mu: f64,
    /// Angular frequency ω = sqrt(EI/ρ)·μ².
    pub omega: f64,
    /// Plain piecewise coefficients (a1, a2, a3, a4); a2, a4 underflow to 0
    /// for very large μ while the scaled internal form stays exact.
    pub coeffs: [f64; 4],
    l: f64,
    l0: f64,
    // scaled sinh coefficients: a2s = a2·e^{μl0}, a4s = a4·e^{μ(l−l0)}
    a1: f64,
    a2s: f64,
    a3: f64,
    a4s: f64,
}

impl ModeShape {
    /// Displacement shape φ(x).
    pub fn eval(&self, x: f64) -> f64 {
        let mu = self.mu;
        if x <= self.l0 {
            let zmax = mu * self.l0;
            self.a1 * libm::sin(mu * x) + self.a2s * shs(mu * x, zmax)
        } else {
            let zmax = mu * (self.l - self.l0);
            self.a3 * libm::sin(mu * (self.l - x)) + self.a4s * shs(mu * (self.l - x), zmax)
        }
    }

    /// First derivative φ′(x).
    pub fn eval_d1(&self, x: f64) -> f64 {
        let mu = self.mu;
        if x <= self.l0 {
            let zmax = mu * self.l0;
            mu * (self.a1 * libm::cos(mu * x) + self.a2s * shc(mu * x, zmax))
        } else {
            let zmax = mu * (self.l - self.l0);
            -mu * (self.a3 * libm::cos(mu * (self.l - x))
                + self.a4s * shc(mu * (self.l - x), zmax))
        }
    }

    /// Curvature φ″(x).
    pub fn eval_d2(&self, x: f64) -> f64 {
        let mu = self.mu;
        let mu2 = mu * mu;
        if x <= self.l0 {
            let zmax = mu * self.l0;
            mu2 * (-self.a1 * libm::sin(mu * x) + self.a2s * shs(mu * x, zmax))
        } else {
            let zmax = mu * (self.l - self.l0);
            mu2 * (-self.a3 * libm::sin(mu * (self.l - x))
                + self.a4s * shs(mu * (self.l - x), zmax))
        }
    }

    /// Third derivative φ‴(x); `side` selects the branch at x = l0 where the
    /// shear jumps.
    fn eval_d3(&self, x: f64, left: bool) -> f64 {
        let mu = self.mu;
        let mu3 = mu * mu * mu;
        if left {
            let zmax = mu * self.l0;
            mu3 * (-self.a1 * libm::cos(mu * x) + self.a2s * shc(mu * x, zmax))
        } else {
            let zmax = mu * (self.l - self.l0);
            mu3 * (self.a3 * libm::cos(mu * (self.l - x))
                - self.a4s * shc(mu * (self.l - x), zmax))
        }
    }

    /// Residuals of the defining conditions, relative to the largest scaled
    /// coefficient magnitude: continuity of u, u′, u″ at l0, the shear-jump
    /// condition, and mass normalization (|ρ∫φ² + mφ(l0)² − 1|).
    pub fn residuals(&self, sys: &BeamSystem, rule: &QuadratureRule) -> ModeResiduals {
        let scale = self
            .coeff_scale()
            .max(f64::MIN_POSITIVE);
        let ul = {
            let zmax = self.mu * self.l0;
            self.a1 * libm::sin(self.mu * self.l0) + self.a2s * shs(self.mu * self.l0, zmax)
        };
        let ur = {
            let zmax = self.mu * (self.l - self.l0);
            self.a3 * libm::sin(self.mu * (self.l - self.l0))
                + self.a4s * shs(self.mu * (self.l - self.l0), zmax)
        };
        let du_l = {
            let zmax = self.mu * self.l0;
            self.mu
                * (self.a1 * libm::cos(self.mu * self.l0)
                    + self.a2s * shc(self.mu * self.l0, zmax))
        };
        let du_r = {
            let zmax = self.mu * (self.l - self.l0);
            -self.mu
                * (self.a3 * libm::cos(self.mu * (self.l - self.l0))
                    + self.a4s * shc(self.mu * (self.l - self.l0), zmax))
        };
        let d2u_l = {
            let zmax = self.mu * self.l0;
            self.mu
                * self.mu
                * (-self.a1 * libm::sin(self.mu * self.l0)
                    + self.a2s * shs(self.mu * self.l0, zmax))
        };
        let d2u_r = {
            let zmax = self.mu * (self.l - self.l0);
            self.mu
                * self.mu
                * (-self.a3 * libm::sin(self.mu * (self.l - self.l0))
                    + self.a4s * shs(self.mu * (self.l - self.l0), zmax))
        };
        let mu3 = self.mu * self.mu * self.mu;
        let d3_l = self.eval_d3(self.l0, true);
        let d3_r = self.eval_d3(self.l0, false);
        let omega = sys.omega(self.mu);
        let w2 = omega * omega;
        let jump_lhs = (sys.kappa - sys.m * w2) * ul;
        let jump_rhs = sys.ei() * (d3_l - d3_r);
        let jump_scale = scale * (sys.ei() * mu3 + sys.kappa + sys.m * w2);
        let norm = sys.rho * integrate(|x| self.eval(x) * self.eval(x), rule)
            + sys.m * self.eval(sys.l0) * self.eval(sys.l0);
        ModeResiduals {
            continuity_u: libm::fabs(ul - ur) / scale,
            continuity_du: libm::fabs(du_l - du_r) / (scale * self.mu),
            continuity_d2u: libm::fabs(d2u_l - d2u_r) / (scale * self.mu * self.mu),
            jump: libm::fabs(jump_lhs - jump_rhs) / jump_scale,
            normalization: libm::fabs(norm - 1.0),
        }
    }

    fn coeff_scale(&self) -> f64 {
        libm::fabs(self.a1)
            .max(libm::fabs(self.a2s))
            .max(libm::fabs(self.a3))
            .max(libm::fabs(self.a4s))
    }
}

/// Relative residuals of the mode-defining conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeResiduals {
    pub continuity_u: f64,
    pub continuity_du: f64,
    pub continuity_d2u: f64,
    pub jump: f64,
    pub normalization: f64,
}

impl ModeResiduals {
    pub fn max(&self) -> f64 {
        self.continuity_u
            .max(self.continuity_du)
            .max(self.continuity_d2u)
            .max(self.jump)
            .max(self.normalization)
    }
}

/// Constructs the mass-normalized mode for a root `mu` of the full frequency
/// equation: null direction of G(μ) by smallest-singular-direction extraction,
/// normalized to `ρ∫φ² + mφ(l0)² = 1` with the sign fixed by φ′(0) ≥ 0.
pub fn mode_shape(mu: f64, sys: &BeamSystem, rule: &QuadratureRule) -> Result<ModeShape, Error> {
    let g = g_scaled(mu, sys);
    let det = g.determinant();
    if libm::fabs(det) > 1e-6 {
        return Err(Error::NotARoot {
            mu,
            residual: libm::fabs(det),
        });
    }
    let svd = g.svd(false, true);
    let sv = svd.singular_values;
    if sv[0] > 0.0 && sv[2] < 1e-8 * sv[0] {
        return Err(Error::NearMultipleRoot { mu });
    }
    let v_t = svd.v_t.ok_or(Error::EigenFailed)?;
    let a: Vector4<f64> = v_t.row(3).transpose();

    let mode = raw_mode(mu, sys, [a[0], a[1], a[2], a[3]]);
    let nrm2 = sys.rho * integrate(|x| mode.eval(x) * mode.eval(x), rule)
        + sys.m * mode.eval(sys.l0) * mode.eval(sys.l0);
    let mut scale = 1.0 / libm::sqrt(nrm2);
    // sign convention: φ'(0) = μ(a1 + a2) ≥ 0
    let d0 = mode.a1 + mode.a2s * shc(0.0, mu * sys.l0);
    if d0 < 0.0 {
        scale = -scale;
    }
    Ok(raw_mode(
        mu,
        sys,
        [a[0] * scale, a[1] * scale, a[2] * scale, a[3] * scale],
    ))
}

/// Builds a `ModeShape` from scaled coefficients (a1, a2s, a3, a4s).
fn raw_mode(mu: f64, sys: &BeamSystem, scaled: [f64; 4]) -> ModeShape {
    let [a1, a2s, a3, a4s] = scaled;
    let a2 = a2s * libm::exp(-mu * sys.l0);
    let a4 = a4s * libm::exp(-mu * (sys.l - sys.l0));
    ModeShape {
        mu,
        omega: sys.omega(mu),
        coeffs: [a1, a2, a3, a4],
        l: sys.l,
        l0: sys.l0,
        a1,
        a2s,
        a3,
        a4s,
    }
}

/// Sorted eigenbasis of the beam + shaker system with its scan metadata.
#[derive(Debug, Clone)]
pub struct ModalBasis {
    pub system: BeamSystem,
    pub modes: Vec<ModeShape>,
    pub mu_max: f64,
    /// Root pairs the scan flagged as suspected multiples; only the first
    /// member of each pair is kept in `modes`.
    pub flagged_pairs: Vec<(f64, f64)>,
    /// Suspected tangential roots (|Φ| dip without sign change).
    pub tangential: Vec<f64>,
    /// Quadrature rule matched to the basis (breakpoints at 0, l0, l and
    /// refinement resolving the highest retained mode).
    pub rule: QuadratureRule,
}

impl ModalBasis {
    /// Scans the full frequency equation on (0, mu_max], drops the later
    /// member of any near-multiple pair (recording the pair), and builds
    /// mass-normalized modes. `n_max` truncates the basis after construction.
    pub fn build(
        sys: &BeamSystem,
        mu_max: f64,
        grid_step: f64,
        n_max: Option<usize>,
    ) -> Result<ModalBasis, Error> {
        Self::build_with(sys, mu_max, grid_step, n_max, RootScanOptions::default())
    }

    /// `build` with explicit scan options (bisection tolerance etc.).
    pub fn build_with(
        sys: &BeamSystem,
        mu_max: f64,
        grid_step: f64,
        n_max: Option<usize>,
        opts: RootScanOptions,
    ) -> Result<ModalBasis, Error> {
        let report = crate::model::validate_system(sys, &[]);
        if !report.is_valid() {
            return Err(Error::InvalidSystem(report.describe()));
        }
        let lo = grid_step.max(1e-6);
        let scan = find_roots_with(|mu| phi_full(mu, sys), lo, mu_max, grid_step, opts);
        let mut kept: Vec<f64> = Vec::with_capacity(scan.roots.len());
        for &r in &scan.roots {
            match kept.last() {
                Some(&prev) if r - prev < scan.multiple_tol => {} // drop near-duplicate
                _ => kept.push(r),
            }
        }
        if let Some(n) = n_max {
            kept.truncate(n);
        }
        let mu_hi = kept.last().copied().unwrap_or(1.0);
        let refine = QuadratureRule::refine_for(sys.l, mu_hi);
        let rule = QuadratureRule::from_breakpoints(&[0.0, sys.l0, sys.l], 16, refine);
        let mut modes = Vec::with_capacity(kept.len());
        for mu in kept {
            modes.push(mode_shape(mu, sys, &rule)?);
        }
        Ok(ModalBasis {
            system: *sys,
            modes,
            mu_max,
            flagged_pairs: scan.near_multiple,
            tangential: scan.tangential,
            rule,
        })
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// Maximum deviation of the generalized Gram matrix
    /// `ρ∫φ_iφ_j + mφ_i(l0)φ_j(l0)` from the identity, over the first `n`
    /// modes.
    pub fn orthogonality_deviation(&self, n: usize) -> f64 {
        let n = n.min(self.modes.len());
        let s = &self.system;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let g = s.rho
                    * integrate(
                        |x| self.modes[i].eval(x) * self.modes[j].eval(x),
                        &self.rule,
                    )
                    + s.m * self.modes[i].eval(s.l0) * self.modes[j].eval(s.l0);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max(libm::fabs(g - target));
            }
        }
        worst
    }

    /// True when a scan-flagged near-multiple pair lands among the first `n`
    /// retained modes, i.e. the truncated basis cannot be trusted for
    /// certification.
    pub fn flagged_within(&self, n: usize) -> bool {
        if self.flagged_pairs.is_empty() || n == 0 {
            return false;
        }
        let cutoff = if self.modes.len() >= n {
            self.modes[n - 1].mu * (1.0 + 1e-12)
        } else {
            f64::INFINITY
        };
        self.flagged_pairs.iter().any(|p| p.0 <= cutoff)
    }

    /// Quadrature rule extended with the support edges of `actuators`
    /// (needed when integrating actuator profiles against the basis).
    pub fn quadrature_with(&self, actuators: &[crate::model::Actuator]) -> QuadratureRule {
        let mu_hi = self.modes.last().map_or(1.0, |m| m.mu);
        let refine = QuadratureRule::refine_for(self.system.l, mu_hi);
        QuadratureRule::for_system(&self.system, actuators, 16, refine)
    }
}

/// Least-squares linear fit μ_j ≈ a·j + b over the scanned roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthFit {
    pub a: f64,
    pub b: f64,
    /// ‖μ − (aj + b)‖₂ / ‖μ‖₂.
    pub rel_residual: f64,
    /// Mean consecutive spacing of the fitted roots.
    pub mean_spacing: f64,
}

impl GrowthFit {
    /// Fits a line through (j, μ_j), j = 1..n.
    pub fn fit(mus: &[f64]) -> GrowthFit {
        let n = mus.len() as f64;
        let (mut sj, mut sjj, mut sm, mut sjm) = (0.0, 0.0, 0.0, 0.0);
        for (idx, &mu) in mus.iter().enumerate() {
            let j = (idx + 1) as f64;
            sj += j;
            sjj += j * j;
            sm += mu;
            sjm += j * mu;
        }
        let det = n * sjj - sj * sj;
        let a = (n * sjm - sj * sm) / det;
        let b = (sjj * sm - sj * sjm) / det;
        let (mut res2, mut nrm2) = (0.0, 0.0);
        for (idx, &mu) in mus.iter().enumerate() {
            let j = (idx + 1) as f64;
            let r = mu - (a * j + b);
            res2 += r * r;
            nrm2 += mu * mu;
        }
        let mean_spacing = if mus.len() > 1 {
            (mus[mus.len() - 1] - mus[0]) / (mus.len() - 1) as f64
        } else {
            0.0
        };
        GrowthFit {
            a,
            b,
            rel_residual: libm::sqrt(res2 / nrm2),
            mean_spacing,
        }
    }
}

/// Linear fit of the basis root sequence (quadratic growth of ω_j follows
/// from ω = sqrt(EI/ρ)μ²). Requires at least 10 modes.
pub fn eigenvalue_growth_check(basis: &ModalBasis) -> Result<GrowthFit, Error> {
    if basis.modes.len() < 10 {
        return Err(Error::NotEnoughModes {
            requested: 10,
            available: basis.modes.len(),
        });
    }
    let mus: Vec<f64> = basis.modes.iter().map(|m| m.mu).collect();
    Ok(GrowthFit::fit(&mus))
}

/// Counting function Q′(x) = #{ n | μ_n² < x } for sorted roots.
pub fn counting_function(mus: &[f64], x: f64) -> usize {
    mus.iter().filter(|&&mu| mu * mu < x).count()
}

/// Window count Q[y, y+z) = Q′(y+z) − Q′(y).
pub fn window_count(mus: &[f64], y: f64, z: f64) -> usize {
    counting_function(mus, y + z) - counting_function(mus, y)
}
