//! The seminorm systems of the function spaces, evaluated with exact
//! symbolic derivatives plus grid suprema and quadrature on `[−R, R]ⁿ`.
//!
//! Suprema use an equispaced grid clipped to the function's support, so
//! compactly supported fixtures are sampled at the same relative positions
//! at every dilation. Quadrature is composite trapezoid (default) or
//! Simpson; on smooth integrands that decay inside the truncated box the
//! trapezoid rule converges superalgebraically.

use crate::space::{Space, SpaceError, SpaceKind};
use crate::symbolic::{
    growth_profile, membership, DecayClass, GrowthRate, SymbolicError, SymbolicFunction,
};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRule {
    Trapezoid,
    Simpson,
}

/// Truncation radius, points per axis and quadrature rule for all numeric
/// evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub radius: f64,
    pub points: u32,
    pub rule: QuadRule,
}

impl GridSpec {
    pub fn new(radius: f64, points: u32, rule: QuadRule) -> Result<Self, SeminormError> {
        if !(radius > 0.0) {
            return Err(SeminormError::BadGrid(format!(
                "radius must be positive, got {radius}"
            )));
        }
        if points < 16 {
            return Err(SeminormError::BadGrid(format!(
                "need at least 16 points, got {points}"
            )));
        }
        Ok(GridSpec {
            radius,
            points,
            rule,
        })
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            radius: 6.0,
            points: 1024,
            rule: QuadRule::Trapezoid,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeminormError {
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("{function} is not in the ambient space {space}: {reason}")]
    NotInAmbient {
        function: String,
        space: String,
        reason: String,
    },
    #[error("support radius {support} exceeds the grid radius {radius}; refusing to truncate")]
    SupportExceedsGrid { support: f64, radius: f64 },
    #[error("not integrable: {0}")]
    NonIntegrable(String),
    #[error("grids support dimensions 1 and 2, got {0}")]
    UnsupportedDimension(u32),
    #[error("{0}")]
    Symbolic(#[from] SymbolicError),
    #[error("{0}")]
    Space(#[from] SpaceError),
    #[error("invalid seminorm: {0}")]
    BadSpec(String),
}

/// All multi-indices over ℝⁿ with `|α| ≤ max_order`, sorted by order.
pub fn multi_indices(dimension: u32, max_order: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; dimension as usize];
    loop {
        if current.iter().sum::<u32>() <= max_order {
            out.push(current.clone());
        }
        let mut axis = 0;
        loop {
            if axis == dimension as usize {
                out.sort_by_key(|a| (a.iter().sum::<u32>(), a.clone()));
                return out;
            }
            if current[axis] < max_order {
                current[axis] += 1;
                break;
            }
            current[axis] = 0;
            axis += 1;
        }
    }
}

fn grid_1d(radius: f64, points: u32) -> impl Iterator<Item = f64> {
    // an odd point count keeps 0 (and the box center) on the grid, where
    // many fixture maximizers sit
    let n = points.max(3) | 1;
    let step = 2.0 * radius / (n - 1) as f64;
    (0..n).map(move |i| -radius + i as f64 * step)
}

/// Applies `visit` to every grid point of `[−radius, radius]ⁿ`, n ≤ 2.
fn for_each_grid_point(
    dimension: u32,
    radius: f64,
    points: u32,
    mut visit: impl FnMut(&[f64]),
) -> Result<(), SeminormError> {
    match dimension {
        1 => {
            for x in grid_1d(radius, points) {
                visit(&[x]);
            }
            Ok(())
        }
        2 => {
            for x in grid_1d(radius, points) {
                for y in grid_1d(radius, points) {
                    visit(&[x, y]);
                }
            }
            Ok(())
        }
        other => Err(SeminormError::UnsupportedDimension(other)),
    }
}

/// Supremum of `|f|` over the grid on `[−radius, radius]ⁿ`, restricted to
/// points with `lo ≤ |x|₂ ≤ hi` when a shell is given.
fn sup_on_region(
    f: &SymbolicFunction,
    radius: f64,
    points: u32,
    shell: Option<(f64, f64)>,
) -> Result<f64, SeminormError> {
    let mut best: f64 = 0.0;
    for_each_grid_point(f.dimension(), radius, points, |x| {
        if let Some((lo, hi)) = shell {
            let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if r < lo || r > hi {
                return;
            }
        }
        best = best.max(f.evaluate(x).norm());
    })?;
    Ok(best)
}

/// Grid radius for suprema of `f`: the support radius when the function is
/// compactly supported (so dilates are sampled at the same relative points),
/// the grid's radius otherwise.
fn sup_radius(f: &SymbolicFunction, grid: &GridSpec) -> f64 {
    match f.support_radius() {
        Some(r) if r > 0.0 => r.min(grid.radius),
        Some(_) => grid.radius.min(1e-6),
        None => grid.radius,
    }
}

/// Supremum of `|f|` over `ℝⁿ`, approximated on the support-aware grid.
pub fn sup_norm(f: &SymbolicFunction, grid: &GridSpec) -> Result<f64, SeminormError> {
    sup_on_region(f, sup_radius(f, grid), grid.points, None)
}

/// Composite quadrature of a complex integrand over `[−radius, radius]ⁿ`.
pub fn integrate(
    dimension: u32,
    radius: f64,
    grid: &GridSpec,
    g: impl Fn(&[f64]) -> Complex64,
) -> Result<Complex64, SeminormError> {
    // odd point count = even interval count, as composite Simpson requires
    let n = grid.points.max(3) | 1;
    let h = 2.0 * radius / (n - 1) as f64;
    let w = |i: u32| -> f64 {
        match grid.rule {
            QuadRule::Trapezoid => {
                if i == 0 || i == n - 1 {
                    0.5
                } else {
                    1.0
                }
            }
            QuadRule::Simpson => {
                if i == 0 || i == n - 1 {
                    1.0 / 3.0
                } else if i % 2 == 1 {
                    4.0 / 3.0
                } else {
                    2.0 / 3.0
                }
            }
        }
    };
    let xs: Vec<f64> = grid_1d(radius, n).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    match dimension {
        1 => {
            for (i, &x) in xs.iter().enumerate() {
                acc += g(&[x]) * w(i as u32);
            }
            Ok(acc * h)
        }
        2 => {
            for (i, &x) in xs.iter().enumerate() {
                for (j, &y) in xs.iter().enumerate() {
                    acc += g(&[x, y]) * (w(i as u32) * w(j as u32));
                }
            }
            Ok(acc * h * h)
        }
        other => Err(SeminormError::UnsupportedDimension(other)),
    }
}

/// `‖f‖_p` by quadrature; `p = ∞` via the grid supremum.
pub fn lp_norm(f: &SymbolicFunction, p: f64, grid: &GridSpec) -> Result<f64, SeminormError> {
    if !(p >= 1.0) {
        return Err(SeminormError::BadSpec(format!(
            "p must be at least 1, got {p}"
        )));
    }
    let profile = growth_profile(f);
    if p.is_infinite() {
        if profile.decay > DecayClass::Bounded {
            return Err(SeminormError::NonIntegrable(
                "the function is unbounded, so its sup norm is infinite".to_string(),
            ));
        }
        return sup_norm(f, grid);
    }
    let integrable = match profile.decay {
        DecayClass::CompactSupport | DecayClass::RapidDecay => true,
        DecayClass::TendsToZero => {
            let net = match profile.rate {
                GrowthRate::Uniform { degree } => degree,
                GrowthRate::OrderDependent { base } => base,
            };
            (net as f64) * p < -(f.dimension() as f64)
        }
        DecayClass::Bounded | DecayClass::PolynomialGrowth => false,
    };
    if !integrable {
        return Err(SeminormError::NonIntegrable(format!(
            "decay class {:?} is not L^{p} over ℝ^{}",
            profile.decay,
            f.dimension()
        )));
    }
    let radius = match f.support_radius() {
        Some(r) => {
            if r > grid.radius {
                return Err(SeminormError::SupportExceedsGrid {
                    support: r,
                    radius: grid.radius,
                });
            }
            r
        }
        None => grid.radius,
    };
    let total = integrate(f.dimension(), radius, grid, |x| {
        Complex64::new(f.evaluate(x).norm().powf(p), 0.0)
    })?;
    Ok(total.re.max(0.0).powf(1.0 / p))
}

/// One seminorm of the function-space systems.
///
/// `DNorm` uses the sequence specializations `m_ν = m0 + ν` and
/// `ε_ν = ε0·2^{−ν}`; for supports inside the unit ball only the `ν = 0`
/// terms contribute, which the evaluation exploits exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum SeminormSpec {
    /// `sup_ν sup_{|x|≥ν, |α|≤m_ν} (1/ε_ν)|∂^α φ(x)|` on compactly supported φ.
    DNorm { m0: u32, eps0: f64 },
    /// `sup_{x, |α|≤m} |x^β ∂^α φ(x)|`.
    SNorm { m: u32, beta: Vec<u32> },
    /// `sup_{|α|≤m} ‖∂^α f‖_p`.
    DLpNorm { m: u32, p: f64 },
    /// `sup_{|α|≤m} ‖ψ·∂^α f‖_∞` with a rapidly decreasing weight ψ.
    OMNorm { m: u32, psi: SymbolicFunction },
    /// `sup_{|x|≤K, |α|≤m} |∂^α f(x)|`.
    ESeminorm { m: u32, radius: f64 },
}

impl SeminormSpec {
    /// True when the seminorm is in fact a norm on its ambient space: all of
    /// them dominate the sup norm except the `E` seminorms, which vanish on
    /// functions supported off the ball. `OMNorm` is asserted for the
    /// built-in strictly positive weights.
    pub fn is_norm(&self) -> bool {
        !matches!(self, SeminormSpec::ESeminorm { .. })
    }

    fn ambient(&self, dimension: u32) -> Result<Option<Space>, SeminormError> {
        Ok(match self {
            SeminormSpec::DNorm { .. } => Some(Space::plain(SpaceKind::D, dimension)),
            SeminormSpec::SNorm { .. } => Some(Space::plain(SpaceKind::S, dimension)),
            SeminormSpec::DLpNorm { p, .. } => Some(if p.is_infinite() {
                Space::plain(SpaceKind::DLInf, dimension)
            } else {
                Space::d_lp(*p, dimension)?
            }),
            SeminormSpec::OMNorm { .. } => Some(Space::plain(SpaceKind::OM, dimension)),
            SeminormSpec::ESeminorm { .. } => None,
        })
    }
}

/// Evaluates a seminorm of `f` on the grid.
pub fn eval_seminorm(
    spec: &SeminormSpec,
    f: &SymbolicFunction,
    grid: &GridSpec,
) -> Result<f64, SeminormError> {
    let dim = f.dimension();
    if let Some(ambient) = spec.ambient(dim)? {
        let (ok, reason) = membership(f, &ambient)?;
        if !ok {
            return Err(SeminormError::NotInAmbient {
                function: format!("a {}-term symbolic function", f.term_count()),
                space: ambient.token(),
                reason,
            });
        }
    }
    match spec {
        SeminormSpec::DNorm { m0, eps0 } => {
            if !(*eps0 > 0.0) {
                return Err(SeminormError::BadSpec("eps0 must be positive".to_string()));
            }
            let support = f
                .support_radius()
                .expect("membership in D guarantees support");
            if support > grid.radius {
                return Err(SeminormError::SupportExceedsGrid {
                    support,
                    radius: grid.radius,
                });
            }
            let radius = sup_radius(f, grid);
            let mut value: f64 = 0.0;
            let max_shell = support.floor() as u32;
            for nu in 0..=max_shell {
                let m_nu = m0 + nu;
                let eps_nu = eps0 / f64::powi(2.0, nu as i32);
                for alpha in multi_indices(dim, m_nu) {
                    let d = f.derivative(&alpha);
                    let sup =
                        sup_on_region(&d, radius, grid.points, Some((nu as f64, f64::INFINITY)))?;
                    value = value.max(sup / eps_nu);
                }
            }
            Ok(value)
        }
        SeminormSpec::SNorm { m, beta } => {
            if beta.len() != dim as usize {
                return Err(SeminormError::BadSpec(format!(
                    "beta has length {}, dimension is {dim}",
                    beta.len()
                )));
            }
            let monomial = SymbolicFunction::from_poly(beta_monomial(dim, beta));
            let radius = sup_radius(f, grid);
            let mut value: f64 = 0.0;
            for alpha in multi_indices(dim, *m) {
                let weighted = monomial.mul(&f.derivative(&alpha));
                value = value.max(sup_on_region(&weighted, radius, grid.points, None)?);
            }
            Ok(value)
        }
        SeminormSpec::DLpNorm { m, p } => {
            let mut value: f64 = 0.0;
            for alpha in multi_indices(dim, *m) {
                let d = f.derivative(&alpha);
                let norm = if p.is_infinite() {
                    sup_norm(&d, grid)?
                } else {
                    lp_norm(&d, *p, grid)?
                };
                value = value.max(norm);
            }
            Ok(value)
        }
        SeminormSpec::OMNorm { m, psi } => {
            let (ok, reason) = membership(psi, &Space::plain(SpaceKind::S, dim))?;
            if !ok {
                return Err(SeminormError::BadSpec(format!(
                    "the O_M weight must be rapidly decreasing: {reason}"
                )));
            }
            let mut value: f64 = 0.0;
            for alpha in multi_indices(dim, *m) {
                let weighted = psi.mul(&f.derivative(&alpha));
                value = value.max(sup_norm(&weighted, grid)?);
            }
            Ok(value)
        }
        SeminormSpec::ESeminorm { m, radius } => {
            if !(*radius > 0.0) {
                return Err(SeminormError::BadSpec("K must be positive".to_string()));
            }
            let mut value: f64 = 0.0;
            for alpha in multi_indices(dim, *m) {
                let d = f.derivative(&alpha);
                let sup = sup_on_region(&d, *radius, grid.points, Some((0.0, *radius)))?;
                value = value.max(sup);
            }
            Ok(value)
        }
    }
}

fn beta_monomial(dim: u32, beta: &[u32]) -> crate::symbolic::MultiPoly {
    use crate::symbolic::MultiPoly;
    let mut p = MultiPoly::one(dim);
    for (axis, &b) in beta.iter().enumerate() {
        for _ in 0..b {
            p = p.mul(&MultiPoly::coordinate(dim, axis));
        }
    }
    p
}

/// Parses a seminorm literal: `pS(m,β…)`, `pLp(m,p|inf)`, `pOM(m,ψ)`,
/// `pE(m,K)`, `pD(m0,eps0)`.
pub fn parse_seminorm(text: &str, dimension: u32) -> Result<SeminormSpec, SeminormError> {
    let text = text.trim();
    let (name, rest) = text
        .split_once('(')
        .ok_or_else(|| SeminormError::BadSpec(format!("malformed seminorm literal `{text}`")))?;
    let inner = rest
        .strip_suffix(')')
        .ok_or_else(|| SeminormError::BadSpec(format!("missing `)` in `{text}`")))?;
    let parts: Vec<&str> = split_top_level(inner);
    let nat = |s: &str| -> Result<u32, SeminormError> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| SeminormError::BadSpec(format!("expected a natural number, got `{s}`")))
    };
    let real = |s: &str| -> Result<f64, SeminormError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(f64::INFINITY);
        }
        t.parse::<f64>()
            .map_err(|_| SeminormError::BadSpec(format!("expected a number, got `{s}`")))
    };
    match name.trim() {
        "pS" => {
            if parts.len() != 1 + dimension as usize {
                return Err(SeminormError::BadSpec(format!(
                    "pS needs m and {dimension} beta entries"
                )));
            }
            let m = nat(parts[0])?;
            let beta = parts[1..]
                .iter()
                .map(|s| nat(s))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SeminormSpec::SNorm { m, beta })
        }
        "pLp" => {
            if parts.len() != 2 {
                return Err(SeminormError::BadSpec("pLp needs (m, p)".to_string()));
            }
            Ok(SeminormSpec::DLpNorm {
                m: nat(parts[0])?,
                p: real(parts[1])?,
            })
        }
        "pOM" => {
            if parts.len() != 2 {
                return Err(SeminormError::BadSpec("pOM needs (m, psi)".to_string()));
            }
            let psi = crate::symbolic::parse_function(parts[1], dimension)?;
            Ok(SeminormSpec::OMNorm {
                m: nat(parts[0])?,
                psi,
            })
        }
        "pE" => {
            if parts.len() != 2 {
                return Err(SeminormError::BadSpec("pE needs (m, K)".to_string()));
            }
            Ok(SeminormSpec::ESeminorm {
                m: nat(parts[0])?,
                radius: real(parts[1])?,
            })
        }
        "pD" => {
            if parts.len() != 2 {
                return Err(SeminormError::BadSpec("pD needs (m0, eps0)".to_string()));
            }
            Ok(SeminormSpec::DNorm {
                m0: nat(parts[0])?,
                eps0: real(parts[1])?,
            })
        }
        other => Err(SeminormError::BadSpec(format!(
            "unknown seminorm `{other}`"
        ))),
    }
}

/// Splits on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f64_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn s_norm_of_the_gaussian() {
        // sup |x² e^{−x²}| is attained at |x| = 1 with value 1/e
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let spec = SeminormSpec::SNorm {
            m: 0,
            beta: vec![2],
        };
        let v = eval_seminorm(&spec, &g, &GridSpec::default()).unwrap();
        f64_close(v, (-1.0f64).exp(), 1e-4);
    }

    #[test]
    fn l2_norm_of_the_gaussian() {
        // ∫ e^{−2x²} dx = √(π/2)
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let v = lp_norm(&g, 2.0, &GridSpec::default()).unwrap();
        f64_close(v, (std::f64::consts::PI / 2.0).powf(0.25), 1e-4);
    }

    #[test]
    fn sup_norms_of_the_families() {
        let grid = GridSpec::default();
        let b = SymbolicFunction::bump(1, 1.0).unwrap();
        f64_close(
            lp_norm(&b, f64::INFINITY, &grid).unwrap(),
            (-1.0f64).exp(),
            1e-6,
        );
        let c = SymbolicFunction::complex_exp(vec![3.0]);
        f64_close(lp_norm(&c, f64::INFINITY, &grid).unwrap(), 1.0, 1e-12);
    }

    #[test]
    fn dlinf_norm_of_complex_exp_is_c_to_the_m() {
        let grid = GridSpec::default();
        for c in [2.0f64, 3.0, 5.0] {
            let f = SymbolicFunction::complex_exp(vec![c]);
            for m in 0..=3u32 {
                let spec = SeminormSpec::DLpNorm {
                    m,
                    p: f64::INFINITY,
                };
                let v = eval_seminorm(&spec, &f, &grid).unwrap();
                f64_close(v, c.powi(m as i32), 1e-9);
            }
        }
    }

    #[test]
    fn e_seminorm_vanishes_off_the_support() {
        // a bump centered at 3 vanishes on the ball of radius 2 with all
        // derivatives
        let f = SymbolicFunction::bump(1, 1.0).unwrap().translate(&[3.0]);
        let spec = SeminormSpec::ESeminorm { m: 2, radius: 2.0 };
        let v = eval_seminorm(&spec, &f, &GridSpec::default()).unwrap();
        assert_eq!(v, 0.0);
        assert!(!spec.is_norm());
    }

    #[test]
    fn d_norm_on_unit_ball_support_reduces_to_order_zero_terms() {
        let b = SymbolicFunction::bump(1, 1.0).unwrap();
        let grid = GridSpec::default();
        let spec = SeminormSpec::DNorm { m0: 1, eps0: 0.5 };
        let v = eval_seminorm(&spec, &b, &grid).unwrap();
        // by hand: (1/eps0)·max(‖b‖∞, ‖b'‖∞)
        let sup0 = sup_norm(&b, &grid).unwrap();
        let sup1 = sup_norm(&b.derivative(&[1]), &grid).unwrap();
        f64_close(v, sup0.max(sup1) / 0.5, 1e-12);
        assert!(spec.is_norm());
    }

    #[test]
    fn d_norm_demands_compact_support_and_room() {
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let spec = SeminormSpec::DNorm { m0: 0, eps0: 1.0 };
        assert!(matches!(
            eval_seminorm(&spec, &g, &GridSpec::default()),
            Err(SeminormError::NotInAmbient { .. })
        ));
        let wide = SymbolicFunction::bump(1, 1.0).unwrap().translate(&[7.0]);
        assert!(matches!(
            eval_seminorm(&spec, &wide, &GridSpec::default()),
            Err(SeminormError::SupportExceedsGrid { .. })
        ));
    }

    #[test]
    fn lp_norm_rejects_growth() {
        let p =
            SymbolicFunction::polynomial(1, &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
        assert!(matches!(
            lp_norm(&p, 2.0, &GridSpec::default()),
            Err(SeminormError::NonIntegrable(_))
        ));
        assert!(matches!(
            lp_norm(&p, f64::INFINITY, &GridSpec::default()),
            Err(SeminormError::NonIntegrable(_))
        ));
    }

    #[test]
    fn om_norm_with_gaussian_weight() {
        let psi = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let f = SymbolicFunction::constant(1, Complex64::new(2.0, 0.0));
        let spec = SeminormSpec::OMNorm { m: 0, psi };
        let v = eval_seminorm(&spec, &f, &GridSpec::default()).unwrap();
        f64_close(v, 2.0, 1e-12);
    }

    #[test]
    fn grid_convergence_on_the_fixtures() {
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let coarse = GridSpec::default();
        let fine = GridSpec {
            points: 2048,
            ..coarse
        };
        let spec = SeminormSpec::SNorm {
            m: 0,
            beta: vec![2],
        };
        let a = eval_seminorm(&spec, &g, &coarse).unwrap();
        let b = eval_seminorm(&spec, &g, &fine).unwrap();
        assert!((a - b).abs() < 1e-3);
        let a = lp_norm(&g, 2.0, &coarse).unwrap();
        let b = lp_norm(&g, 2.0, &fine).unwrap();
        assert!((a - b).abs() < 1e-3);
    }

    #[test]
    fn monotone_in_the_derivative_order() {
        let f = SymbolicFunction::complex_exp(vec![3.0]);
        let grid = GridSpec::default();
        let mut last = 0.0;
        for m in 0..=4 {
            let v = eval_seminorm(
                &SeminormSpec::DLpNorm {
                    m,
                    p: f64::INFINITY,
                },
                &f,
                &grid,
            )
            .unwrap();
            assert!(v >= last);
            last = v;
        }
    }

    #[test]
    fn hoelder_spot_check_on_gaussians() {
        // ‖fg‖_r ≤ ‖f‖_p ‖g‖_s with 1/p + 1/s = 1/r
        let grid = GridSpec::default();
        for (a, b) in [(1.0, 1.0), (0.5, 2.0), (1.5, 0.7)] {
            let f = SymbolicFunction::gaussian(1, a).unwrap();
            let g = SymbolicFunction::gaussian(1, b).unwrap();
            let (p, s, r) = (2.0, 2.0, 1.0);
            let lhs = lp_norm(&f.mul(&g), r, &grid).unwrap();
            let rhs = lp_norm(&f, p, &grid).unwrap() * lp_norm(&g, s, &grid).unwrap();
            assert!(lhs <= rhs + 1e-9, "Hoelder violated: {lhs} > {rhs}");
        }
    }

    #[test]
    fn young_spot_check_on_gaussians() {
        // e^{−ax²} ∗ e^{−bx²} = √(π/(a+b)) e^{−abx²/(a+b)} in closed form
        let grid = GridSpec::default();
        for (a, b) in [(1.0, 1.0), (0.5, 2.0), (1.5, 0.7)] {
            let f = SymbolicFunction::gaussian(1, a).unwrap();
            let g = SymbolicFunction::gaussian(1, b).unwrap();
            let conv = SymbolicFunction::gaussian(1, a * b / (a + b))
                .unwrap()
                .scale(Complex64::new((std::f64::consts::PI / (a + b)).sqrt(), 0.0));
            // ‖f∗g‖_r ≤ ‖f‖_p ‖g‖_s with 1/p + 1/s = 1 + 1/r
            let (p, s, r) = (1.0, 2.0, 2.0);
            let lhs = lp_norm(&conv, r, &grid).unwrap();
            let rhs = lp_norm(&f, p, &grid).unwrap() * lp_norm(&g, s, &grid).unwrap();
            assert!(lhs <= rhs + 1e-9, "Young violated: {lhs} > {rhs}");
        }
    }

    #[test]
    fn simpson_agrees_with_trapezoid_on_smooth_decay() {
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let t = lp_norm(&g, 2.0, &GridSpec::default()).unwrap();
        let s = lp_norm(
            &g,
            2.0,
            &GridSpec {
                rule: QuadRule::Simpson,
                ..GridSpec::default()
            },
        )
        .unwrap();
        assert!((t - s).abs() < 1e-6);
    }

    #[test]
    fn seminorm_literals_parse() {
        assert_eq!(
            parse_seminorm("pS(0, 2)", 1).unwrap(),
            SeminormSpec::SNorm {
                m: 0,
                beta: vec![2]
            }
        );
        assert_eq!(
            parse_seminorm("pLp(3, inf)", 1).unwrap(),
            SeminormSpec::DLpNorm {
                m: 3,
                p: f64::INFINITY
            }
        );
        assert_eq!(
            parse_seminorm("pE(2, 1.5)", 1).unwrap(),
            SeminormSpec::ESeminorm { m: 2, radius: 1.5 }
        );
        assert_eq!(
            parse_seminorm("pD(1, 0.5)", 1).unwrap(),
            SeminormSpec::DNorm { m0: 1, eps0: 0.5 }
        );
        let om = parse_seminorm("pOM(2, gauss(1))", 1).unwrap();
        assert_eq!(
            om,
            SeminormSpec::OMNorm {
                m: 2,
                psi: SymbolicFunction::gaussian(1, 1.0).unwrap()
            }
        );
        assert!(parse_seminorm("pQ(1)", 1).is_err());
    }

    #[test]
    fn multi_index_enumeration() {
        assert_eq!(multi_indices(1, 2), vec![vec![0], vec![1], vec![2]]);
        let two = multi_indices(2, 1);
        assert_eq!(two, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }
}
