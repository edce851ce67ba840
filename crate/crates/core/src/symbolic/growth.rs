//! Structural growth/decay analysis of symbolic functions, making the
//! quantifier difference between `O_C` ("one polynomial bound for all
//! derivative orders") and `O_M` ("a polynomial bound per derivative order")
//! mechanically decidable for the built-in families.

use super::{Kernel, SymbolicError, SymbolicFunction};
use crate::space::{Space, SpaceKind};

/// Behaviour at infinity of the function itself (order-zero derivatives).
/// Ordered from strongest to weakest decay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DecayClass {
    CompactSupport,
    RapidDecay,
    TendsToZero,
    Bounded,
    PolynomialGrowth,
}

/// Polynomial growth exponent as a function of the derivative order |α|.
///
/// `Uniform` families admit one degree bound for every order (differentiation
/// never raises the net degree); chirp factors raise the degree by one per
/// order, giving `OrderDependent` growth `base + |α|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthRate {
    Uniform { degree: i64 },
    OrderDependent { base: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthProfile {
    pub decay: DecayClass,
    pub rate: GrowthRate,
}

impl GrowthProfile {
    /// Smallest `k` such that `(1+|x|²)^{−k} ∂^α f ∈ C₀` for every `α`, when
    /// one exists (the `∃k ∀α` witness of very slow increase).
    pub fn uniform_quadratic_exponent(&self) -> Option<u32> {
        match self.rate {
            GrowthRate::OrderDependent { .. } => None,
            GrowthRate::Uniform { degree } => Some(match self.decay {
                DecayClass::CompactSupport | DecayClass::RapidDecay | DecayClass::TendsToZero => 0,
                DecayClass::Bounded => 1,
                DecayClass::PolynomialGrowth => (degree / 2 + 1).max(1) as u32,
            }),
        }
    }
}

/// Computes the profile by structural recursion over the term algebra; the
/// exponents come from the representation, never from sampling.
pub fn growth_profile(f: &SymbolicFunction) -> GrowthProfile {
    let mut decay = DecayClass::CompactSupport;
    let mut any_od = false;
    let mut max_degree: Option<i64> = None;
    for (poly, kernels) in f.terms_for_growth() {
        let has = |pred: &dyn Fn(&Kernel) -> bool| kernels.iter().any(pred);
        let compact = has(&|k| matches!(k, Kernel::BumpCore { .. }));
        let rapid = has(&|k| matches!(k, Kernel::Gaussian { .. }));
        let chirpy = has(&|k| matches!(k, Kernel::Chirp { .. }));
        let realexp = has(&|k| matches!(k, Kernel::RealExp { .. }));
        let inv_quad_decay: i64 = kernels
            .iter()
            .map(|k| match k {
                Kernel::InvQuad { power, .. } => 2 * *power as i64,
                _ => 0,
            })
            .sum();
        let (term_decay, term_rate) = if compact {
            (
                DecayClass::CompactSupport,
                GrowthRate::Uniform { degree: 0 },
            )
        } else if rapid {
            (DecayClass::RapidDecay, GrowthRate::Uniform { degree: 0 })
        } else {
            debug_assert!(!realexp, "real exponential kernel without a Gaussian");
            let net = poly.total_degree() as i64 - inv_quad_decay;
            let d = match net {
                n if n < 0 => DecayClass::TendsToZero,
                0 => DecayClass::Bounded,
                _ => DecayClass::PolynomialGrowth,
            };
            if chirpy {
                (d, GrowthRate::OrderDependent { base: net })
            } else {
                (d, GrowthRate::Uniform { degree: net })
            }
        };
        decay = decay.max(term_decay);
        let d = match term_rate {
            GrowthRate::OrderDependent { base } => {
                any_od = true;
                base
            }
            GrowthRate::Uniform { degree } => degree,
        };
        max_degree = Some(max_degree.map_or(d, |m: i64| m.max(d)));
    }
    let max_degree = max_degree.unwrap_or(0);
    GrowthProfile {
        decay,
        rate: if any_od {
            GrowthRate::OrderDependent { base: max_degree }
        } else {
            GrowthRate::Uniform { degree: max_degree }
        },
    }
}

/// Decides membership of `f` in a function space from its growth profile.
/// Returns the verdict together with the reason.
pub fn membership(f: &SymbolicFunction, space: &Space) -> Result<(bool, String), SymbolicError> {
    if !space.kind().is_function_space() {
        return Err(SymbolicError::NotFunctionSpace(space.token()));
    }
    if f.dimension() != space.dimension() {
        return Err(SymbolicError::Dimension {
            expected: space.dimension(),
            got: f.dimension(),
        });
    }
    let profile = growth_profile(f);
    let n = f.dimension() as f64;
    let decay = profile.decay;
    let uniform = matches!(profile.rate, GrowthRate::Uniform { .. });
    let net = match profile.rate {
        GrowthRate::Uniform { degree } => degree,
        GrowthRate::OrderDependent { base } => base,
    };
    let (ok, reason) = match space.kind() {
        SpaceKind::D => (
            decay == DecayClass::CompactSupport,
            format!("requires compact support; decay class is {decay:?}"),
        ),
        SpaceKind::S => (
            decay <= DecayClass::RapidDecay,
            format!("requires rapid decay of all x^β ∂^α f; decay class is {decay:?}"),
        ),
        SpaceKind::DLp => {
            let p = space.param().expect("D_Lp parameter");
            if decay <= DecayClass::RapidDecay {
                (true, format!("decay class {decay:?} puts every derivative in L^{p}"))
            } else if !uniform {
                (
                    false,
                    "derivative degrees grow with the order, so high derivatives leave L^p"
                        .to_string(),
                )
            } else if decay == DecayClass::TendsToZero && (net as f64) * p < -n {
                (true, format!("net decay degree {net} is p-integrable over ℝ^{}", f.dimension()))
            } else {
                (false, format!("net decay degree {net} is not p-integrable for p = {p}"))
            }
        }
        SpaceKind::BDot => (
            decay <= DecayClass::TendsToZero && uniform,
            format!(
                "requires every derivative in C₀; decay class {decay:?}, uniform degree bound: {uniform}"
            ),
        ),
        SpaceKind::DLInf => (
            decay <= DecayClass::Bounded && uniform,
            format!(
                "requires every derivative bounded; decay class {decay:?}, uniform degree bound: {uniform}"
            ),
        ),
        SpaceKind::OC => match profile.uniform_quadratic_exponent() {
            Some(k) => (true, format!("one weight (1+|x|²)^-{k} bounds all derivative orders")),
            None => (
                false,
                "derivative degrees grow with the order, so no single polynomial weight works"
                    .to_string(),
            ),
        },
        SpaceKind::OM => (
            true,
            "each derivative order admits its own polynomial weight for these families"
                .to_string(),
        ),
        SpaceKind::E => (true, "all built-in families are smooth".to_string()),
        _ => unreachable!("function-space kinds handled above"),
    };
    Ok((ok, reason))
}

/// The `∃k ∀α` witness exponent for membership in `O_C`, when there is one.
pub fn oc_exponent(f: &SymbolicFunction) -> Option<u32> {
    growth_profile(f).uniform_quadratic_exponent()
}
