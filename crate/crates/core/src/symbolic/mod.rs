//! Closed-form function families with exact derivatives.
//!
//! A [`SymbolicFunction`] is a finite sum of terms `P(x)·Πⱼ Kⱼ(x)` where `P`
//! is a complex polynomial and each kernel `Kⱼ` is one of
//!
//! * `e^{−a|x|²}` (Gaussian),
//! * `e^{b·x}` (real exponential, only ever produced by translating a
//!   Gaussian),
//! * `e^{i c·x}` (complex exponential),
//! * `e^{i s|x|²}` (chirp),
//! * `e^{−s r²/(r²−|x−x₀|²)}` on `|x−x₀| < r`, `0` outside (bump core),
//! * `(r²−|x−x₀|²)^{−m}` (inverse bump weight, always accompanied by a bump
//!   core with the same ball),
//! * `(1 + w|x−x₀|²)^{−m}` (inverse quadratic weight).
//!
//! The family is closed under derivative, dilation `x ↦ f(cx)`, translation
//! `x ↦ f(x−x₀)`, products and sums, all computed exactly at the level of the
//! representation.

mod growth;
mod parse;
mod poly;

pub use growth::{growth_profile, membership, oc_exponent, DecayClass, GrowthProfile, GrowthRate};
pub use parse::parse_function;
pub use poly::MultiPoly;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymbolicError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: u32, got: u32 },
    #[error("{0}")]
    Invalid(String),
    #[error("membership is decided for function spaces only; {0} is a distribution space")]
    NotFunctionSpace(String),
}

/// One multiplicative kernel factor. Parameters use exact `f64` values; two
/// kernels merge only when their parameters are bitwise equal.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Gaussian {
        rate: f64,
    },
    RealExp {
        slope: Vec<f64>,
    },
    CExp {
        freq: Vec<f64>,
    },
    Chirp {
        scale: f64,
    },
    BumpCore {
        radius: f64,
        strength: f64,
        center: Vec<f64>,
    },
    InvBump {
        radius: f64,
        power: u32,
        center: Vec<f64>,
    },
    InvQuad {
        scale: f64,
        power: u32,
        center: Vec<f64>,
    },
}

impl Kernel {
    /// Sort key so a term's kernel list is canonical.
    fn sort_key(&self) -> (u8, Vec<u64>, u64, u64) {
        let enc = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<u64>>();
        match self {
            Kernel::Gaussian { rate } => (0, vec![], rate.to_bits(), 0),
            Kernel::RealExp { slope } => (1, enc(slope), 0, 0),
            Kernel::CExp { freq } => (2, enc(freq), 0, 0),
            Kernel::Chirp { scale } => (3, vec![], scale.to_bits(), 0),
            Kernel::BumpCore {
                radius,
                strength,
                center,
            } => (4, enc(center), radius.to_bits(), strength.to_bits()),
            Kernel::InvBump {
                radius,
                power,
                center,
            } => (5, enc(center), radius.to_bits(), *power as u64),
            Kernel::InvQuad {
                scale,
                power,
                center,
            } => (6, enc(center), scale.to_bits(), *power as u64),
        }
    }
}

/// `P(x) · Π kernels`.
#[derive(Debug, Clone, PartialEq)]
struct Term {
    poly: MultiPoly,
    kernels: Vec<Kernel>,
}

impl Term {
    fn normalize(&mut self) {
        self.kernels.sort_by_key(Kernel::sort_key);
        let mut out: Vec<Kernel> = Vec::with_capacity(self.kernels.len());
        for k in self.kernels.drain(..) {
            if let Some(last) = out.last_mut() {
                if merge_kernels(last, &k) {
                    continue;
                }
            }
            out.push(k);
        }
        out.retain(|k| !kernel_is_trivial(k));
        self.kernels = out;
        debug_assert!(self.invbumps_have_cores());
    }

    fn invbumps_have_cores(&self) -> bool {
        self.kernels.iter().all(|k| match k {
            Kernel::InvBump { radius, center, .. } => self.kernels.iter().any(|c| {
                matches!(c, Kernel::BumpCore { radius: r, center: ctr, .. }
                    if r == radius && ctr == center)
            }),
            _ => true,
        })
    }
}

fn kernel_is_trivial(k: &Kernel) -> bool {
    match k {
        Kernel::Gaussian { rate } => *rate == 0.0,
        Kernel::RealExp { slope } => slope.iter().all(|s| *s == 0.0),
        Kernel::CExp { freq } => freq.iter().all(|f| *f == 0.0),
        Kernel::Chirp { scale } => *scale == 0.0,
        Kernel::InvBump { power, .. } | Kernel::InvQuad { power, .. } => *power == 0,
        Kernel::BumpCore { .. } => false,
    }
}

/// Merges `b` into `a` when both describe the same kernel family with the
/// same geometry; returns true when merged.
fn merge_kernels(a: &mut Kernel, b: &Kernel) -> bool {
    match (a, b) {
        (Kernel::Gaussian { rate: ra }, Kernel::Gaussian { rate: rb }) => {
            *ra += rb;
            true
        }
        (Kernel::RealExp { slope: sa }, Kernel::RealExp { slope: sb }) => {
            for (x, y) in sa.iter_mut().zip(sb) {
                *x += y;
            }
            true
        }
        (Kernel::CExp { freq: fa }, Kernel::CExp { freq: fb }) => {
            for (x, y) in fa.iter_mut().zip(fb) {
                *x += y;
            }
            true
        }
        (Kernel::Chirp { scale: sa }, Kernel::Chirp { scale: sb }) => {
            *sa += sb;
            true
        }
        (
            Kernel::BumpCore {
                radius: ra,
                strength: sa,
                center: ca,
            },
            Kernel::BumpCore {
                radius: rb,
                strength: sb,
                center: cb,
            },
        ) if ra == rb && ca == cb => {
            *sa += sb;
            true
        }
        (
            Kernel::InvBump {
                radius: ra,
                power: pa,
                center: ca,
            },
            Kernel::InvBump {
                radius: rb,
                power: pb,
                center: cb,
            },
        ) if ra == rb && ca == cb => {
            *pa += pb;
            true
        }
        (
            Kernel::InvQuad {
                scale: wa,
                power: pa,
                center: ca,
            },
            Kernel::InvQuad {
                scale: wb,
                power: pb,
                center: cb,
            },
        ) if wa == wb && ca == cb => {
            *pa += pb;
            true
        }
        _ => false,
    }
}

/// A finite sum of polynomial-times-kernel terms over ℝⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicFunction {
    dimension: u32,
    terms: Vec<Term>,
}

impl SymbolicFunction {
    // -- constructors -------------------------------------------------------

    pub fn zero(dimension: u32) -> Self {
        SymbolicFunction {
            dimension,
            terms: Vec::new(),
        }
    }

    pub fn constant(dimension: u32, value: Complex64) -> Self {
        SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::constant(dimension, value),
                kernels: vec![],
            }],
        }
        .normalized()
    }

    /// `exp(−1/(1−|x/r|²))` on `|x| < r`, `0` outside.
    pub fn bump(dimension: u32, radius: f64) -> Result<Self, SymbolicError> {
        if !(radius > 0.0) {
            return Err(SymbolicError::Invalid(format!(
                "bump radius must be positive, got {radius}"
            )));
        }
        Ok(SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::one(dimension),
                kernels: vec![Kernel::BumpCore {
                    radius,
                    strength: 1.0,
                    center: vec![0.0; dimension as usize],
                }],
            }],
        })
    }

    /// `exp(−a|x|²)`.
    pub fn gaussian(dimension: u32, a: f64) -> Result<Self, SymbolicError> {
        if !(a > 0.0) {
            return Err(SymbolicError::Invalid(format!(
                "gaussian scale must be positive, got {a}"
            )));
        }
        Ok(SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::one(dimension),
                kernels: vec![Kernel::Gaussian { rate: a }],
            }],
        })
    }

    /// `exp(i c·x)`.
    pub fn complex_exp(freq: Vec<f64>) -> Self {
        let dimension = freq.len() as u32;
        SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::one(dimension),
                kernels: vec![Kernel::CExp { freq }],
            }],
        }
        .normalized()
    }

    /// `exp(i|x|²)`.
    pub fn chirp(dimension: u32) -> Self {
        SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::one(dimension),
                kernels: vec![Kernel::Chirp { scale: 1.0 }],
            }],
        }
    }

    /// Univariate polynomial `Σ coeffs[k] x₁^k`.
    pub fn polynomial(dimension: u32, coeffs: &[Complex64]) -> Self {
        SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::univariate(dimension, coeffs),
                kernels: vec![],
            }],
        }
        .normalized()
    }

    /// `(1 + w|x|²)^{−m}`.
    pub fn inv_quad(dimension: u32, w: f64, m: u32) -> Result<Self, SymbolicError> {
        if !(w > 0.0) {
            return Err(SymbolicError::Invalid(format!(
                "inverse-quadratic scale must be positive, got {w}"
            )));
        }
        Ok(SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly: MultiPoly::one(dimension),
                kernels: vec![Kernel::InvQuad {
                    scale: w,
                    power: m,
                    center: vec![0.0; dimension as usize],
                }],
            }],
        }
        .normalized())
    }

    pub fn from_poly(poly: MultiPoly) -> Self {
        let dimension = poly.dimension();
        SymbolicFunction {
            dimension,
            terms: vec![Term {
                poly,
                kernels: vec![],
            }],
        }
        .normalized()
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalized(mut self) -> Self {
        for t in &mut self.terms {
            t.normalize();
        }
        self.terms.retain(|t| !t.poly.is_zero());
        // fold terms with identical kernel signatures
        self.terms.sort_by(|a, b| {
            let ka: Vec<_> = a.kernels.iter().map(Kernel::sort_key).collect();
            let kb: Vec<_> = b.kernels.iter().map(Kernel::sort_key).collect();
            ka.cmp(&kb)
        });
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.kernels == t.kernels => {
                    last.poly = last.poly.add(&t.poly);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.poly.is_zero());
        self.terms = out;
        self
    }

    // -- algebra -------------------------------------------------------------

    pub fn add(&self, other: &SymbolicFunction) -> SymbolicFunction {
        assert_eq!(self.dimension, other.dimension);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        SymbolicFunction {
            dimension: self.dimension,
            terms,
        }
        .normalized()
    }

    pub fn scale(&self, factor: Complex64) -> SymbolicFunction {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                poly: t.poly.scale(factor),
                kernels: t.kernels.clone(),
            })
            .collect();
        SymbolicFunction {
            dimension: self.dimension,
            terms,
        }
        .normalized()
    }

    pub fn sub(&self, other: &SymbolicFunction) -> SymbolicFunction {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &SymbolicFunction) -> SymbolicFunction {
        assert_eq!(self.dimension, other.dimension);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut kernels = a.kernels.clone();
                kernels.extend(b.kernels.iter().cloned());
                terms.push(Term {
                    poly: a.poly.mul(&b.poly),
                    kernels,
                });
            }
        }
        SymbolicFunction {
            dimension: self.dimension,
            terms,
        }
        .normalized()
    }

    /// `∂/∂x_axis`, exact.
    pub fn derivative_axis(&self, axis: usize) -> SymbolicFunction {
        assert!(axis < self.dimension as usize);
        let dim = self.dimension;
        let mut terms: Vec<Term> = Vec::new();
        for t in &self.terms {
            // product rule: derivative of the polynomial factor
            let dp = t.poly.derivative(axis);
            if !dp.is_zero() {
                terms.push(Term {
                    poly: dp,
                    kernels: t.kernels.clone(),
                });
            }
            // then of each kernel in turn
            for (j, k) in t.kernels.iter().enumerate() {
                let (extra_poly, replacement) = kernel_derivative(k, axis, dim);
                if extra_poly.is_zero() {
                    continue;
                }
                let mut kernels: Vec<Kernel> = Vec::with_capacity(t.kernels.len() + 1);
                kernels.extend(t.kernels.iter().take(j).cloned());
                kernels.extend(replacement);
                kernels.extend(t.kernels.iter().skip(j + 1).cloned());
                terms.push(Term {
                    poly: t.poly.mul(&extra_poly),
                    kernels,
                });
            }
        }
        SymbolicFunction {
            dimension: dim,
            terms,
        }
        .normalized()
    }

    /// `∂^α`, exact.
    pub fn derivative(&self, alpha: &[u32]) -> SymbolicFunction {
        assert_eq!(alpha.len(), self.dimension as usize);
        let mut f = self.clone();
        for (axis, &k) in alpha.iter().enumerate() {
            for _ in 0..k {
                f = f.derivative_axis(axis);
            }
        }
        f
    }

    /// `x ↦ f(c·x)` for `c > 0`.
    pub fn dilate(&self, c: f64) -> Result<SymbolicFunction, SymbolicError> {
        if !(c > 0.0) {
            return Err(SymbolicError::Invalid(format!(
                "dilation factor must be positive, got {c}"
            )));
        }
        let dim = self.dimension;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut poly = t.poly.dilate(c);
                let mut kernels = Vec::with_capacity(t.kernels.len());
                for k in &t.kernels {
                    let (factor, nk) = dilate_kernel(k, c);
                    if factor != 1.0 {
                        poly = poly.scale(Complex64::new(factor, 0.0));
                    }
                    kernels.push(nk);
                }
                Term { poly, kernels }
            })
            .collect();
        Ok(SymbolicFunction {
            dimension: dim,
            terms,
        }
        .normalized())
    }

    /// `x ↦ f(x − shift)`.
    pub fn translate(&self, shift: &[f64]) -> SymbolicFunction {
        assert_eq!(shift.len(), self.dimension as usize);
        let dim = self.dimension;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut poly = t.poly.shift(shift);
                let mut kernels = Vec::new();
                for k in &t.kernels {
                    let (coeff, extra) = translate_kernel(k, shift);
                    if coeff != Complex64::new(1.0, 0.0) {
                        poly = poly.scale(coeff);
                    }
                    kernels.extend(extra);
                }
                Term { poly, kernels }
            })
            .collect();
        SymbolicFunction {
            dimension: dim,
            terms,
        }
        .normalized()
    }

    // -- evaluation ----------------------------------------------------------

    pub fn evaluate(&self, x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), self.dimension as usize);
        let mut acc = Complex64::new(0.0, 0.0);
        'term: for t in &self.terms {
            let mut re_exp = 0.0;
            let mut im_exp = 0.0;
            for k in &t.kernels {
                match k {
                    Kernel::Gaussian { rate } => {
                        re_exp -= rate * norm_sqr(x);
                    }
                    Kernel::RealExp { slope } => {
                        re_exp += dot(slope, x);
                    }
                    Kernel::CExp { freq } => {
                        im_exp += dot(freq, x);
                    }
                    Kernel::Chirp { scale } => {
                        im_exp += scale * norm_sqr(x);
                    }
                    Kernel::BumpCore {
                        radius,
                        strength,
                        center,
                    } => {
                        let t2 = radius * radius - dist_sqr(x, center);
                        if t2 <= 0.0 {
                            continue 'term;
                        }
                        re_exp -= strength * radius * radius / t2;
                    }
                    Kernel::InvBump {
                        radius,
                        power,
                        center,
                    } => {
                        let t2 = radius * radius - dist_sqr(x, center);
                        if t2 <= 0.0 {
                            continue 'term;
                        }
                        re_exp -= *power as f64 * t2.ln();
                    }
                    Kernel::InvQuad {
                        scale,
                        power,
                        center,
                    } => {
                        re_exp -= *power as f64 * (1.0 + scale * dist_sqr(x, center)).ln();
                    }
                }
            }
            if re_exp < -745.0 {
                continue;
            }
            let magnitude = re_exp.exp();
            let phase = Complex64::new(im_exp.cos(), im_exp.sin());
            acc += t.poly.eval(x) * magnitude * phase;
        }
        acc
    }

    /// Smallest `R` with `f ≡ 0` outside `[−R, R]ⁿ`, when the representation
    /// shows compact support.
    pub fn support_radius(&self) -> Option<f64> {
        let mut radius: f64 = 0.0;
        for t in &self.terms {
            let term_bound = t
                .kernels
                .iter()
                .filter_map(|k| match k {
                    Kernel::BumpCore { radius, center, .. } => {
                        let c = center.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                        Some(c + radius)
                    }
                    _ => None,
                })
                .fold(f64::INFINITY, f64::min);
            if term_bound.is_infinite() {
                return None;
            }
            radius = radius.max(term_bound);
        }
        Some(radius)
    }

    pub(crate) fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn terms_for_growth(&self) -> impl Iterator<Item = (&MultiPoly, &[Kernel])> {
        self.terms.iter().map(|t| (&t.poly, t.kernels.as_slice()))
    }
}

fn norm_sqr(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(u, v)| u * v).sum()
}

fn dist_sqr(x: &[f64], c: &[f64]) -> f64 {
    x.iter().zip(c).map(|(u, v)| (u - v) * (u - v)).sum()
}

/// `∂_axis K = extra_poly · Π replacement`; the replacement stands where `K`
/// stood, so it includes `K` itself whenever the factor survives.
fn kernel_derivative(k: &Kernel, axis: usize, dim: u32) -> (MultiPoly, Vec<Kernel>) {
    let coord = |center: Option<&[f64]>| {
        // x_axis − c_axis as a polynomial
        let base = MultiPoly::coordinate(dim, axis);
        match center {
            Some(c) if c[axis] != 0.0 => {
                base.add(&MultiPoly::constant(dim, Complex64::new(-c[axis], 0.0)))
            }
            _ => base,
        }
    };
    match k {
        Kernel::Gaussian { rate } => (
            coord(None).scale(Complex64::new(-2.0 * rate, 0.0)),
            vec![k.clone()],
        ),
        Kernel::RealExp { slope } => (
            MultiPoly::constant(dim, Complex64::new(slope[axis], 0.0)),
            vec![k.clone()],
        ),
        Kernel::CExp { freq } => (
            MultiPoly::constant(dim, Complex64::new(0.0, freq[axis])),
            vec![k.clone()],
        ),
        Kernel::Chirp { scale } => (
            coord(None).scale(Complex64::new(0.0, 2.0 * scale)),
            vec![k.clone()],
        ),
        Kernel::BumpCore {
            radius,
            strength,
            center,
        } => (
            coord(Some(center)).scale(Complex64::new(-2.0 * strength * radius * radius, 0.0)),
            vec![
                k.clone(),
                Kernel::InvBump {
                    radius: *radius,
                    power: 2,
                    center: center.clone(),
                },
            ],
        ),
        Kernel::InvBump {
            radius,
            power,
            center,
        } => (
            coord(Some(center)).scale(Complex64::new(2.0 * *power as f64, 0.0)),
            vec![Kernel::InvBump {
                radius: *radius,
                power: power + 1,
                center: center.clone(),
            }],
        ),
        Kernel::InvQuad {
            scale,
            power,
            center,
        } => (
            coord(Some(center)).scale(Complex64::new(-2.0 * scale * *power as f64, 0.0)),
            vec![Kernel::InvQuad {
                scale: *scale,
                power: power + 1,
                center: center.clone(),
            }],
        ),
    }
}

/// Kernel of `x ↦ K(cx)` together with a scalar factor pulled out front.
fn dilate_kernel(k: &Kernel, c: f64) -> (f64, Kernel) {
    match k {
        Kernel::Gaussian { rate } => (1.0, Kernel::Gaussian { rate: rate * c * c }),
        Kernel::RealExp { slope } => (
            1.0,
            Kernel::RealExp {
                slope: slope.iter().map(|s| s * c).collect(),
            },
        ),
        Kernel::CExp { freq } => (
            1.0,
            Kernel::CExp {
                freq: freq.iter().map(|f| f * c).collect(),
            },
        ),
        Kernel::Chirp { scale } => (
            1.0,
            Kernel::Chirp {
                scale: scale * c * c,
            },
        ),
        Kernel::BumpCore {
            radius,
            strength,
            center,
        } => (
            1.0,
            Kernel::BumpCore {
                radius: radius / c,
                strength: *strength,
                center: center.iter().map(|v| v / c).collect(),
            },
        ),
        Kernel::InvBump {
            radius,
            power,
            center,
        } => (
            c.powi(-2 * *power as i32),
            Kernel::InvBump {
                radius: radius / c,
                power: *power,
                center: center.iter().map(|v| v / c).collect(),
            },
        ),
        Kernel::InvQuad {
            scale,
            power,
            center,
        } => (
            1.0,
            Kernel::InvQuad {
                scale: scale * c * c,
                power: *power,
                center: center.iter().map(|v| v / c).collect(),
            },
        ),
    }
}

/// Kernels of `x ↦ K(x − shift)` with a complex factor pulled out front.
fn translate_kernel(k: &Kernel, shift: &[f64]) -> (Complex64, Vec<Kernel>) {
    let one = Complex64::new(1.0, 0.0);
    match k {
        Kernel::Gaussian { rate } => {
            // e^{−a|x−d|²} = e^{−a|x|²}·e^{2a d·x}·e^{−a|d|²}
            let slope: Vec<f64> = shift.iter().map(|d| 2.0 * rate * d).collect();
            let factor = (-rate * norm_sqr(shift)).exp();
            (
                Complex64::new(factor, 0.0),
                vec![Kernel::Gaussian { rate: *rate }, Kernel::RealExp { slope }],
            )
        }
        Kernel::RealExp { slope } => {
            let factor = (-dot(slope, shift)).exp();
            (Complex64::new(factor, 0.0), vec![k.clone()])
        }
        Kernel::CExp { freq } => {
            let phase = -dot(freq, shift);
            (Complex64::new(phase.cos(), phase.sin()), vec![k.clone()])
        }
        Kernel::Chirp { scale } => {
            // e^{is|x−d|²} = e^{is|x|²}·e^{−2is d·x}·e^{is|d|²}
            let freq: Vec<f64> = shift.iter().map(|d| -2.0 * scale * d).collect();
            let phase = scale * norm_sqr(shift);
            (
                Complex64::new(phase.cos(), phase.sin()),
                vec![Kernel::Chirp { scale: *scale }, Kernel::CExp { freq }],
            )
        }
        Kernel::BumpCore {
            radius,
            strength,
            center,
        } => (
            one,
            vec![Kernel::BumpCore {
                radius: *radius,
                strength: *strength,
                center: center.iter().zip(shift).map(|(c, d)| c + d).collect(),
            }],
        ),
        Kernel::InvBump {
            radius,
            power,
            center,
        } => (
            one,
            vec![Kernel::InvBump {
                radius: *radius,
                power: *power,
                center: center.iter().zip(shift).map(|(c, d)| c + d).collect(),
            }],
        ),
        Kernel::InvQuad {
            scale,
            power,
            center,
        } => (
            one,
            vec![Kernel::InvQuad {
                scale: *scale,
                power: *power,
                center: center.iter().zip(shift).map(|(c, d)| c + d).collect(),
            }],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    #[test]
    fn gaussian_values_and_derivatives() {
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        assert_close(g.evaluate(&[0.0]), re(1.0), 0.0);
        // g'' = (4x²−2)e^{−x²}; at 0 this is −2
        let g2 = g.derivative(&[2]);
        assert_close(g2.evaluate(&[0.0]), re(-2.0), 1e-12);
    }

    #[test]
    fn complex_exp_closed_form() {
        let f = SymbolicFunction::complex_exp(vec![2.0]);
        let v = f.evaluate(&[std::f64::consts::FRAC_PI_2]);
        assert_close(v, re(-1.0), 1e-12);
        // ∂ e^{icx} = ic e^{icx}
        let d = f.derivative(&[1]);
        assert_close(d.evaluate(&[0.0]), Complex64::new(0.0, 2.0), 1e-12);
    }

    #[test]
    fn derivative_of_order_zero_is_identity() {
        let f = SymbolicFunction::chirp(1);
        assert_eq!(f.derivative(&[0]), f);
    }

    #[test]
    fn chirp_first_derivative() {
        // ∂ e^{ix²} = 2ix e^{ix²}; cross-check by central differences
        let f = SymbolicFunction::chirp(1);
        let d = f.derivative(&[1]);
        for &x in &[0.3, 0.7, 1.1, -0.4, 1.9, -2.3, 0.05, 2.9, -1.7, 0.9] {
            let h = 1e-6;
            let fd = (f.evaluate(&[x + h]) - f.evaluate(&[x - h])) / (2.0 * h);
            assert!((d.evaluate(&[x]) - fd).norm() < 1e-6, "at {x}");
        }
        let expected = Complex64::new(0.0, 2.0 * 0.5) * f.evaluate(&[0.5]);
        assert_close(d.evaluate(&[0.5]), expected, 1e-12);
    }

    #[test]
    fn bump_support_and_values() {
        let b = SymbolicFunction::bump(1, 1.0).unwrap();
        assert_close(b.evaluate(&[0.0]), re((-1.0f64).exp()), 1e-15);
        assert_close(b.evaluate(&[1.0]), re(0.0), 0.0);
        assert_close(b.evaluate(&[1.5]), re(0.0), 0.0);
        assert_eq!(b.support_radius(), Some(1.0));
        // derivatives stay supported in the ball and finite at the boundary
        let d3 = b.derivative(&[3]);
        assert_close(d3.evaluate(&[1.0]), re(0.0), 0.0);
        assert!(d3.evaluate(&[0.999]).norm().is_finite());
    }

    #[test]
    fn dilate_bump_shrinks_support() {
        let b = SymbolicFunction::bump(1, 1.0).unwrap();
        let d = b.dilate(2.0).unwrap();
        assert_eq!(d.support_radius(), Some(0.5));
        // f(cx) at x agrees with f at cx
        for &x in &[0.0, 0.2, 0.4, 0.49] {
            assert_close(d.evaluate(&[x]), b.evaluate(&[2.0 * x]), 1e-15);
        }
    }

    #[test]
    fn dilation_chain_rule() {
        // ∂(f(c·))(0) = c·f'(0)
        let f = SymbolicFunction::gaussian(1, 1.0)
            .unwrap()
            .translate(&[0.3]);
        let c = 2.0;
        let lhs = f.dilate(c).unwrap().derivative(&[1]).evaluate(&[0.0]);
        let rhs = f.derivative(&[1]).evaluate(&[0.0]) * c;
        assert_close(lhs, rhs, 1e-12);
    }

    #[test]
    fn translate_moves_the_peak() {
        let b = SymbolicFunction::bump(1, 1.0).unwrap();
        let t = b.translate(&[2.5]);
        assert_close(t.evaluate(&[2.5]), b.evaluate(&[0.0]), 1e-15);
        assert_close(t.evaluate(&[0.0]), re(0.0), 0.0);
        assert_eq!(t.support_radius(), Some(3.5));
    }

    #[test]
    fn translated_gaussian_matches_pointwise() {
        let g = SymbolicFunction::gaussian(1, 0.7).unwrap();
        let t = g.translate(&[1.2]);
        for &x in &[-1.0, 0.0, 0.5, 2.0] {
            assert_close(t.evaluate(&[x]), g.evaluate(&[x - 1.2]), 1e-13);
        }
        // derivative still exact after translation
        let d = t.derivative(&[1]);
        let h = 1e-6;
        let fd = (t.evaluate(&[0.4 + h]) - t.evaluate(&[0.4 - h])) / (2.0 * h);
        assert!((d.evaluate(&[0.4]) - fd).norm() < 1e-7);
    }

    #[test]
    fn products_and_sums() {
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let c = SymbolicFunction::complex_exp(vec![3.0]);
        let p = g.mul(&c);
        let x = 0.8;
        assert_close(p.evaluate(&[x]), g.evaluate(&[x]) * c.evaluate(&[x]), 1e-14);
        let s = g.add(&c);
        assert_close(s.evaluate(&[x]), g.evaluate(&[x]) + c.evaluate(&[x]), 1e-14);
        // product of Gaussians merges the rates
        let gg = g.mul(&g);
        assert_eq!(gg.term_count(), 1);
        assert_close(
            gg.evaluate(&[x]),
            g.evaluate(&[x]) * g.evaluate(&[x]),
            1e-14,
        );
    }

    #[test]
    fn two_dimensional_evaluation() {
        let g = SymbolicFunction::gaussian(2, 1.0).unwrap();
        let v = g.evaluate(&[1.0, 1.0]);
        assert_close(v, re((-2.0f64).exp()), 1e-14);
        let dx = g.derivative(&[1, 0]);
        assert_close(dx.evaluate(&[1.0, 0.0]), re(-2.0 * (-1.0f64).exp()), 1e-13);
    }

    #[test]
    fn mixed_bump_chirp_derivatives_match_finite_differences() {
        // the oc-cauchy integrand family: chirp · dilated bump · inverse quad
        let f = SymbolicFunction::chirp(1)
            .mul(&SymbolicFunction::bump(1, 4.0).unwrap())
            .mul(&SymbolicFunction::inv_quad(1, 1.0, 2).unwrap());
        let d = f.derivative(&[1]);
        for &x in &[0.0, 0.5, 1.5, 3.0, 3.9] {
            let h = 1e-6;
            let fd = (f.evaluate(&[x + h]) - f.evaluate(&[x - h])) / (2.0 * h);
            let sym = d.evaluate(&[x]);
            let scale = 1.0 + sym.norm();
            assert!((sym - fd).norm() / scale < 1e-5, "at {x}: {sym} vs {fd}");
        }
    }
}
