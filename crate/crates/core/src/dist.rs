//! Finite formal distributions: sums of derivatives of point masses and of
//! function carriers, with evaluation pairing, convolution against point
//! masses, and dual seminorms over finite bounded sets.

use crate::seminorm::{integrate, GridSpec, SeminormError};
use crate::symbolic::{growth_profile, DecayClass, GrowthRate, SymbolicFunction};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DistError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(u32, u32),
    #[error("pairing is not absolutely integrable: {0}")]
    NonIntegrable(String),
    #[error("operation supports point-mass carriers only")]
    NotSupported,
    #[error("a distribution needs at least one term")]
    Empty,
    #[error("{0}")]
    Seminorm(#[from] SeminormError),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}

/// What a derivative is applied to: a Dirac mass at a point or a locally
/// integrable function.
#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    PointMass(Vec<f64>),
    FunctionCarrier(SymbolicFunction),
}

/// One `coeff·∂^α(carrier)` term.
#[derive(Debug, Clone, PartialEq)]
pub struct DistTerm {
    pub coeff: Complex64,
    pub alpha: Vec<u32>,
    pub carrier: Carrier,
}

/// `Σ coeff·∂^α(carrier)` with finitely many terms.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionRep {
    dimension: u32,
    terms: Vec<DistTerm>,
}

impl DistributionRep {
    pub fn new(dimension: u32, terms: Vec<DistTerm>) -> Result<Self, DistError> {
        if terms.is_empty() {
            return Err(DistError::Empty);
        }
        for t in &terms {
            if t.alpha.len() != dimension as usize {
                return Err(DistError::Dimension(t.alpha.len() as u32, dimension));
            }
            let carrier_dim = match &t.carrier {
                Carrier::PointMass(x) => x.len() as u32,
                Carrier::FunctionCarrier(f) => f.dimension(),
            };
            if carrier_dim != dimension {
                return Err(DistError::Dimension(carrier_dim, dimension));
            }
        }
        Ok(DistributionRep { dimension, terms })
    }

    fn single(dimension: u32, alpha: Vec<u32>, carrier: Carrier) -> Self {
        DistributionRep {
            dimension,
            terms: vec![DistTerm {
                coeff: Complex64::new(1.0, 0.0),
                alpha,
                carrier,
            }],
        }
    }

    /// `δ_{x0}`.
    pub fn dirac(location: Vec<f64>) -> Self {
        let dimension = location.len() as u32;
        DistributionRep::single(
            dimension,
            vec![0; dimension as usize],
            Carrier::PointMass(location),
        )
    }

    /// `∂^γ δ_{x0}`.
    pub fn dirac_derivative(gamma: Vec<u32>, location: Vec<f64>) -> Self {
        assert_eq!(gamma.len(), location.len());
        let dimension = location.len() as u32;
        DistributionRep::single(dimension, gamma, Carrier::PointMass(location))
    }

    /// The regular distribution defined by `f`.
    pub fn function(f: SymbolicFunction) -> Self {
        let dimension = f.dimension();
        DistributionRep::single(
            dimension,
            vec![0; dimension as usize],
            Carrier::FunctionCarrier(f),
        )
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn terms(&self) -> &[DistTerm] {
        &self.terms
    }

    pub fn add(&self, other: &DistributionRep) -> Result<Self, DistError> {
        if self.dimension != other.dimension {
            return Err(DistError::Dimension(self.dimension, other.dimension));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(DistributionRep {
            dimension: self.dimension,
            terms,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| DistTerm {
                coeff: t.coeff * factor,
                ..t.clone()
            })
            .collect();
        DistributionRep {
            dimension: self.dimension,
            terms,
        }
    }

    pub fn all_point_masses(&self) -> bool {
        self.terms
            .iter()
            .all(|t| matches!(t.carrier, Carrier::PointMass(_)))
    }
}

/// A finite bounded set `B` of test functions, standing in for the bounded
/// sets that define the dual seminorms `p_B`. For ambient `D`, all members
/// must share a compact support ball.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedSetSpec {
    pub members: Vec<SymbolicFunction>,
}

impl BoundedSetSpec {
    pub fn new(members: Vec<SymbolicFunction>) -> Self {
        BoundedSetSpec { members }
    }

    /// Common support ball radius, when every member is compactly supported.
    pub fn common_support_radius(&self) -> Option<f64> {
        self.members
            .iter()
            .map(|f| f.support_radius())
            .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)))
    }
}

/// `⟨φ, T⟩ = Σ coeff·(−1)^{|α|}·[∂^α φ(x₀)` for point masses, `∫ ∂^α φ · f`
/// for function carriers]`.
pub fn pair(
    phi: &SymbolicFunction,
    t: &DistributionRep,
    grid: &GridSpec,
) -> Result<Complex64, DistError> {
    if phi.dimension() != t.dimension {
        return Err(DistError::Dimension(phi.dimension(), t.dimension));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for term in &t.terms {
        let order: u32 = term.alpha.iter().sum();
        let sign = if order.is_multiple_of(2) { 1.0 } else { -1.0 };
        let d_phi = phi.derivative(&term.alpha);
        match &term.carrier {
            Carrier::PointMass(location) => {
                acc += term.coeff * d_phi.evaluate(location) * sign;
            }
            Carrier::FunctionCarrier(f) => {
                let product = d_phi.mul(f);
                let profile = growth_profile(&product);
                let integrable = match profile.decay {
                    DecayClass::CompactSupport | DecayClass::RapidDecay => true,
                    DecayClass::TendsToZero => {
                        let net = match profile.rate {
                            GrowthRate::Uniform { degree } => degree,
                            GrowthRate::OrderDependent { base } => base,
                        };
                        (net as f64) < -(t.dimension as f64)
                    }
                    _ => false,
                };
                if !integrable {
                    return Err(DistError::NonIntegrable(format!(
                        "the integrand has decay class {:?}",
                        profile.decay
                    )));
                }
                let radius = product
                    .support_radius()
                    .unwrap_or(grid.radius)
                    .min(grid.radius);
                let integral = integrate(t.dimension, radius, grid, |x| product.evaluate(x))?;
                acc += term.coeff * integral * sign;
            }
        }
    }
    Ok(acc)
}

/// `f ∗ T` for point-mass-only `T`: `Σ coeff·(∂^α f)(x − x₀)`, exact.
pub fn convolve_pointmass(
    f: &SymbolicFunction,
    t: &DistributionRep,
) -> Result<SymbolicFunction, DistError> {
    if f.dimension() != t.dimension {
        return Err(DistError::Dimension(f.dimension(), t.dimension));
    }
    let mut acc = SymbolicFunction::zero(f.dimension());
    for term in &t.terms {
        match &term.carrier {
            Carrier::PointMass(location) => {
                acc = acc.add(
                    &f.derivative(&term.alpha)
                        .translate(location)
                        .scale(term.coeff),
                );
            }
            Carrier::FunctionCarrier(_) => return Err(DistError::NotSupported),
        }
    }
    Ok(acc)
}

/// `S ∗ T` for two point-mass-only distributions:
/// `∂^α δ_a ∗ ∂^β δ_b = ∂^{α+β} δ_{a+b}`.
pub fn convolve_pointmasses(
    s: &DistributionRep,
    t: &DistributionRep,
) -> Result<DistributionRep, DistError> {
    if s.dimension != t.dimension {
        return Err(DistError::Dimension(s.dimension, t.dimension));
    }
    let mut terms = Vec::new();
    for a in &s.terms {
        for b in &t.terms {
            match (&a.carrier, &b.carrier) {
                (Carrier::PointMass(pa), Carrier::PointMass(pb)) => {
                    let gamma: Vec<u32> =
                        a.alpha.iter().zip(&b.alpha).map(|(x, y)| x + y).collect();
                    let loc: Vec<f64> = pa.iter().zip(pb).map(|(x, y)| x + y).collect();
                    terms.push(DistTerm {
                        coeff: a.coeff * b.coeff,
                        alpha: gamma,
                        carrier: Carrier::PointMass(loc),
                    });
                }
                _ => return Err(DistError::NotSupported),
            }
        }
    }
    DistributionRep::new(s.dimension, terms)
}

/// `p_B(T) = sup_{g∈B} |⟨g, T⟩|` over the finite set.
pub fn dual_seminorm(
    t: &DistributionRep,
    b: &BoundedSetSpec,
    grid: &GridSpec,
) -> Result<f64, DistError> {
    let mut best: f64 = 0.0;
    for g in &b.members {
        best = best.max(pair(g, t, grid)?.norm());
    }
    Ok(best)
}

/// Parses a distribution literal: `dirac(x0…)`, `d[γ…]dirac(x0…)`,
/// `fn(<function literal>)`, sums with `+`.
pub fn parse_distribution(text: &str, dimension: u32) -> Result<DistributionRep, DistError> {
    let mut pos = 0usize;
    let src = text;
    let mut rep: Option<DistributionRep> = None;
    loop {
        let rest = src[pos..].trim_start();
        pos = src.len() - rest.len();
        let err = |position: usize, message: &str| DistError::Syntax {
            position,
            message: message.to_string(),
        };
        let (term, consumed) = if let Some(after) = rest.strip_prefix("dirac") {
            let args = parse_paren_args(after, pos, dimension as usize)?;
            (DistributionRep::dirac(args.0), "dirac".len() + args.1)
        } else if rest.starts_with("d[") {
            let close = rest.find(']').ok_or_else(|| err(pos, "missing `]`"))?;
            let gamma: Vec<u32> = rest[2..close]
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(pos, "malformed multi-index"))?;
            if gamma.len() != dimension as usize {
                return Err(err(pos, "multi-index length must equal the dimension"));
            }
            let after = &rest[close + 1..];
            if !after.starts_with("dirac") {
                return Err(err(pos + close + 1, "expected `dirac` after d[...]"));
            }
            let args = parse_paren_args(&after["dirac".len()..], pos, dimension as usize)?;
            (
                DistributionRep::dirac_derivative(gamma, args.0),
                close + 1 + "dirac".len() + args.1,
            )
        } else if rest.starts_with("fn(") {
            let inner_start = 3;
            let mut depth = 1usize;
            let mut end = None;
            for (i, c) in rest[inner_start..].char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(inner_start + i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(|| err(pos, "missing `)`"))?;
            let f = crate::symbolic::parse_function(&rest[inner_start..end], dimension)
                .map_err(|e| err(pos, &e.to_string()))?;
            (DistributionRep::function(f), end + 1)
        } else {
            return Err(err(pos, "expected `dirac`, `d[...]dirac` or `fn(...)`"));
        };
        pos += consumed;
        rep = Some(match rep {
            None => term,
            Some(r) => r.add(&term)?,
        });
        let rest = src[pos..].trim_start();
        pos = src.len() - rest.len();
        if rest.is_empty() {
            break;
        }
        if let Some(stripped) = rest.strip_prefix('+') {
            pos = src.len() - stripped.len();
        } else {
            return Err(DistError::Syntax {
                position: pos,
                message: "expected `+` between distribution terms".to_string(),
            });
        }
    }
    rep.ok_or(DistError::Empty)
}

/// Parses `(a, b, …)` returning the numbers and the byte length consumed.
fn parse_paren_args(s: &str, at: usize, count: usize) -> Result<(Vec<f64>, usize), DistError> {
    let err = |message: &str| DistError::Syntax {
        position: at,
        message: message.to_string(),
    };
    let open = s.find('(').ok_or_else(|| err("expected `(`"))?;
    if !s[..open].trim().is_empty() {
        return Err(err("unexpected input before `(`"));
    }
    let close = s.find(')').ok_or_else(|| err("missing `)`"))?;
    let nums: Vec<f64> = s[open + 1..close]
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| err("malformed number"))?;
    if nums.len() != count {
        return Err(err(&format!(
            "expected {count} coordinate(s), got {}",
            nums.len()
        )));
    }
    Ok((nums, close + 1))
}
