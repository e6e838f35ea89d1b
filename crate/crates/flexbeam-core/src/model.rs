//! Physical parameters, validation, actuator profiles, and composite
//! Gauss–Legendre quadrature with kink-aware breakpoints.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Beam (E, I, rho, l) plus shaker (l0, m, kappa, alpha0) parameters.
///
/// Units are SI throughout; `e * i` (flexural rigidity EI) and `rho` enter the
/// dynamics only through `omega(mu) = sqrt(EI/rho) * mu^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSystem {
    /// Young modulus E (Pa, > 0).
    pub e: f64,
    /// Second moment of area I (m^4, > 0).
    pub i: f64,
    /// Linear mass density rho (kg/m, > 0).
    pub rho: f64,
    /// Beam length l (m, > 0).
    pub l: f64,
    /// Shaker attachment coordinate l0 (m, 0 < l0 < l).
    pub l0: f64,
    /// Shaker moving mass m (kg, > 0).
    pub m: f64,
    /// Shaker spring stiffness kappa (N/m, > 0).
    pub kappa: f64,
    /// Shaker velocity-feedback gain alpha0 (N·s/m, >= 0).
    pub alpha0: f64,
}

impl BeamSystem {
    /// Flexural rigidity EI.
    pub fn ei(&self) -> f64 {
        self.e * self.i
    }

    /// Angular frequency for wavenumber `mu`: omega = sqrt(EI/rho) * mu^2.
    pub fn omega(&self, mu: f64) -> f64 {
        libm::sqrt(self.ei() / self.rho) * mu * mu
    }
}

/// Distributed piezo actuator: raised-cosine curvature-influence profile
/// chi = psi'' with compact support, plus its feedback gain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Actuator {
    /// Support center (m).
    pub center: f64,
    /// Support width (m, > 0); support is [center - width/2, center + width/2].
    pub width: f64,
    /// Peak profile amplitude (1/m, > 0).
    pub height: f64,
    /// Feedback gain alpha_j (>= 0).
    pub alpha: f64,
}

impl Actuator {
    /// Left edge of the support interval.
    pub fn lo(&self) -> f64 {
        self.center - self.width / 2.0
    }

    /// Right edge of the support interval.
    pub fn hi(&self) -> f64 {
        self.center + self.width / 2.0
    }
}

/// A single violated constraint, with enough context to name it in reports.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// A scalar that must be strictly positive is not.
    NonPositive { name: &'static str, value: f64 },
    /// A gain that must be nonnegative is negative.
    NegativeGain { name: String, value: f64 },
    /// l0 lies outside the open interval (0, l).
    L0OutsideBeam { l0: f64, l: f64 },
    /// Actuator support escapes the open interval (0, l).
    SupportOutsideBeam { index: usize, lo: f64, hi: f64 },
    /// Actuator support contains the shaker attachment point.
    SupportContainsL0 { index: usize, lo: f64, hi: f64 },
    /// Actuator geometric parameter that must be strictly positive is not.
    ActuatorNonPositive {
        index: usize,
        field: &'static str,
        value: f64,
    },
    /// A parameter is NaN or infinite.
    NotFinite { name: String },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::NonPositive { name, value } => {
                write!(f, "{name} must be > 0 (got {value})")
            }
            Violation::NegativeGain { name, value } => {
                write!(f, "{name} must be >= 0 (got {value})")
            }
            Violation::L0OutsideBeam { l0, l } => {
                write!(f, "l0 outside (0, l): l0 = {l0}, l = {l}")
            }
            Violation::SupportOutsideBeam { index, lo, hi } => write!(
                f,
                "actuator {index}: support [{lo}, {hi}] escapes the open interval (0, l)"
            ),
            Violation::SupportContainsL0 { index, lo, hi } => write!(
                f,
                "actuator {index}: support [{lo}, {hi}] contains l0"
            ),
            Violation::ActuatorNonPositive {
                index,
                field,
                value,
            } => write!(f, "actuator {index}: {field} must be > 0 (got {value})"),
            Violation::NotFinite { name } => write!(f, "{name} is not finite"),
        }
    }
}

/// Result of `validate_system`: empty violation list means valid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One line per violation, for diagnostics.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&format!("{v}\n"));
        }
        out
    }
}

/// Checks every model constraint; returns the full list of violations
/// (empty = valid). Pure: identical inputs give identical reports.
pub fn validate_system(sys: &BeamSystem, actuators: &[Actuator]) -> ValidationReport {
    let mut violations = Vec::new();

    for (name, value) in [
        ("E", sys.e),
        ("I", sys.i),
        ("rho", sys.rho),
        ("l", sys.l),
        ("m", sys.m),
        ("kappa", sys.kappa),
    ] {
        if !value.is_finite() {
            violations.push(Violation::NotFinite { name: name.into() });
        } else if value <= 0.0 {
            violations.push(Violation::NonPositive { name, value });
        }
    }
    if !sys.alpha0.is_finite() {
        violations.push(Violation::NotFinite {
            name: "alpha0".into(),
        });
    } else if sys.alpha0 < 0.0 {
        violations.push(Violation::NegativeGain {
            name: "alpha0".into(),
            value: sys.alpha0,
        });
    }
    if !sys.l0.is_finite() {
        violations.push(Violation::NotFinite { name: "l0".into() });
    } else if !(sys.l0 > 0.0 && sys.l0 < sys.l) {
        violations.push(Violation::L0OutsideBeam {
            l0: sys.l0,
            l: sys.l,
        });
    }

    for (idx, a) in actuators.iter().enumerate() {
        let mut finite = true;
        for (field, value) in [
            ("center", a.center),
            ("width", a.width),
            ("height", a.height),
            ("alpha", a.alpha),
        ] {
            if !value.is_finite() {
                violations.push(Violation::NotFinite {
                    name: format!("actuator {idx} {field}"),
                });
                finite = false;
            }
        }
        if !finite {
            continue;
        }
        for (field, value) in [("width", a.width), ("height", a.height)] {
            if value <= 0.0 {
                violations.push(Violation::ActuatorNonPositive {
                    index: idx,
                    field,
                    value,
                });
            }
        }
        if a.alpha < 0.0 {
            violations.push(Violation::NegativeGain {
                name: format!("actuator {idx} alpha"),
                value: a.alpha,
            });
        }
        if a.width > 0.0 {
            let (lo, hi) = (a.lo(), a.hi());
            if lo <= 0.0 || hi >= sys.l {
                violations.push(Violation::SupportOutsideBeam { index: idx, lo, hi });
            }
            if lo <= sys.l0 && sys.l0 <= hi {
                violations.push(Violation::SupportContainsL0 { index: idx, lo, hi });
            }
        }
    }

    ValidationReport { violations }
}

/// Raised-cosine curvature influence chi(x) = height·(1 + cos(2π(x−center)/width))/2
/// on the support, zero outside; continuous, peaking at `height` at the center.
pub fn actuator_profile(a: &Actuator, x: f64) -> f64 {
    let t = x - a.center;
    if libm::fabs(t) <= a.width / 2.0 {
        a.height * (1.0 + libm::cos(2.0 * core::f64::consts::PI * t / a.width)) / 2.0
    } else {
        0.0
    }
}

/// Composite Gauss–Legendre rule over [breakpoints[0], breakpoints[last]],
/// split at every breakpoint (and `refine` uniform subpanels per panel) so
/// integrands with kinks at panel edges are integrated piecewise-smooth.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub breakpoints: Vec<f64>,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds a rule from arbitrary breakpoints (sorted and deduplicated here),
    /// `order` Gauss–Legendre points per subpanel, `refine` subpanels per panel.
    pub fn from_breakpoints(breakpoints: &[f64], order: usize, refine: usize) -> Self {
        let mut bps: Vec<f64> = breakpoints.to_vec();
        bps.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints must be finite"));
        bps.dedup();
        let refine = refine.max(1);
        let (gx, gw) = gauss_legendre(order.max(1));
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for pair in bps.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let h = (b - a) / refine as f64;
            for k in 0..refine {
                let lo = a + k as f64 * h;
                let mid = lo + h / 2.0;
                for (&x, &w) in gx.iter().zip(gw.iter()) {
                    nodes.push(mid + h / 2.0 * x);
                    weights.push(h / 2.0 * w);
                }
            }
        }
        QuadratureRule {
            breakpoints: bps,
            nodes,
            weights,
        }
    }

    /// Rule over [0, l] split at l0 and all actuator support edges.
    pub fn for_system(
        sys: &BeamSystem,
        actuators: &[Actuator],
        order: usize,
        refine: usize,
    ) -> Self {
        let mut bps = Vec::with_capacity(3 + 2 * actuators.len());
        bps.push(0.0);
        bps.push(sys.l0);
        bps.push(sys.l);
        for a in actuators {
            bps.push(a.lo());
            bps.push(a.hi());
        }
        Self::from_breakpoints(&bps, order, refine)
    }

    /// Subpanel count per panel resolving oscillations up to wavenumber `mu`:
    /// one subpanel per wavelength 2π/mu across the widest panel.
    pub fn refine_for(breakpoints_span: f64, mu: f64) -> usize {
        if mu <= 0.0 {
            return 1;
        }
        let panels = breakpoints_span * mu / (2.0 * core::f64::consts::PI);
        let n = libm::ceil(panels);
        if n < 1.0 {
            1
        } else {
            n as usize
        }
    }

    pub fn total_span(&self) -> f64 {
        self.breakpoints[self.breakpoints.len() - 1] - self.breakpoints[0]
    }
}

/// Composite quadrature of `f` under `rule`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, rule: &QuadratureRule) -> f64 {
    let mut acc = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        acc += w * f(x);
    }
    acc
}

/// Gauss–Legendre nodes/weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence (standard Golub-free construction; converges in a few
/// steps from the Chebyshev-like initial guess).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = alloc::vec![0.0; n];
    let mut w = alloc::vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut xi = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(xi) and derivative via the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = xi;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * xi * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (xi * p1 - p0) / (xi * xi - 1.0);
            let dx = p1 / dp;
            xi -= dx;
            if libm::fabs(dx) < 1e-15 {
                break;
            }
        }
        x[i] = -xi;
        x[n - 1 - i] = xi;
        let wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        // the middle node of odd rules is exactly 0
        x[n / 2] = 0.0;
    }
    (x, w)
}
