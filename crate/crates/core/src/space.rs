//! The fourteen table spaces (plus `D_L∞`), their continuous-inclusion
//! partial order, strong duality and Fourier images.
//!
//! The inclusion order encodes exactly the two printed chains
//!
//! ```text
//! D ⊂ S ⊂ D_Lp ⊂ Ḃ ⊂ (D_L∞) ⊂ O_C ⊂ O_M ⊂ E
//! E' ⊂ O_M' ⊂ O_C' ⊂ D'_L1 ⊂ D'_Lq ⊂ S' ⊂ D'
//! ```
//!
//! together with the vertical inclusions `D ⊂ E'` and `E ⊂ D'`, and the
//! cross-parameter rule `D_Lp(p1) ⊆ D_Lp(p2)` for `p1 ≤ p2` (dually in `q`).
//! The cross-parameter rule is an extension over the single generic `p` of
//! the printed diagram; nothing here asserts strictness of those chains.

use serde::Serialize;
use thiserror::Error;

/// Identifies one of the modeled spaces, parameter left aside.
///
/// Order of variants follows the top chain, then `D_L∞`, then the bottom
/// chain; [`Space::table_spaces`] relies on this for the table row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// Smooth functions with compact support.
    D,
    /// Rapidly decreasing smooth functions.
    S,
    /// Smooth functions with all derivatives in `L^p`, `1 ≤ p < ∞`.
    DLp,
    /// Smooth functions with all derivatives tending to zero.
    BDot,
    /// Smooth functions with all derivatives bounded.
    DLInf,
    /// Very slowly increasing smooth functions (one polynomial bound for all
    /// derivative orders).
    OC,
    /// Slowly increasing smooth functions (a polynomial bound per derivative
    /// order).
    OM,
    /// All smooth functions.
    E,
    /// Distributions with compact support.
    EPrime,
    /// Very rapidly decreasing distributions.
    OMPrime,
    /// Rapidly decreasing distributions.
    OCPrime,
    /// Finite sums of derivatives of `L^1` functions.
    DPrimeL1,
    /// Finite sums of derivatives of `L^q` functions, `1 < q ≤ ∞`.
    DPrimeLq,
    /// Tempered distributions.
    SPrime,
    /// All distributions.
    DPrime,
}

pub const ALL_KINDS: [SpaceKind; 15] = [
    SpaceKind::D,
    SpaceKind::S,
    SpaceKind::DLp,
    SpaceKind::BDot,
    SpaceKind::DLInf,
    SpaceKind::OC,
    SpaceKind::OM,
    SpaceKind::E,
    SpaceKind::EPrime,
    SpaceKind::OMPrime,
    SpaceKind::OCPrime,
    SpaceKind::DPrimeL1,
    SpaceKind::DPrimeLq,
    SpaceKind::SPrime,
    SpaceKind::DPrime,
];

impl SpaceKind {
    /// Display/parse token of the kind, without parameter.
    pub fn token(self) -> &'static str {
        match self {
            SpaceKind::D => "D",
            SpaceKind::S => "S",
            SpaceKind::DLp => "D_Lp",
            SpaceKind::BDot => "Bdot",
            SpaceKind::DLInf => "D_Linf",
            SpaceKind::OC => "OC",
            SpaceKind::OM => "OM",
            SpaceKind::E => "E",
            SpaceKind::EPrime => "E'",
            SpaceKind::OMPrime => "OM'",
            SpaceKind::OCPrime => "OC'",
            SpaceKind::DPrimeL1 => "D'_L1",
            SpaceKind::DPrimeLq => "D'_Lq",
            SpaceKind::SPrime => "S'",
            SpaceKind::DPrime => "D'",
        }
    }

    pub fn is_parameterized(self) -> bool {
        matches!(self, SpaceKind::DLp | SpaceKind::DPrimeLq)
    }

    /// True for the seven function-space kinds plus `D_L∞`.
    pub fn is_function_space(self) -> bool {
        matches!(
            self,
            SpaceKind::D
                | SpaceKind::S
                | SpaceKind::DLp
                | SpaceKind::BDot
                | SpaceKind::DLInf
                | SpaceKind::OC
                | SpaceKind::OM
                | SpaceKind::E
        )
    }

    /// Direct edges of the inclusion diagram at kind level.
    fn direct_superkinds(self) -> &'static [SpaceKind] {
        match self {
            SpaceKind::D => &[SpaceKind::S, SpaceKind::EPrime],
            SpaceKind::S => &[SpaceKind::DLp],
            SpaceKind::DLp => &[SpaceKind::BDot],
            SpaceKind::BDot => &[SpaceKind::DLInf],
            SpaceKind::DLInf => &[SpaceKind::OC],
            SpaceKind::OC => &[SpaceKind::OM],
            SpaceKind::OM => &[SpaceKind::E],
            SpaceKind::E => &[SpaceKind::DPrime],
            SpaceKind::EPrime => &[SpaceKind::OMPrime],
            SpaceKind::OMPrime => &[SpaceKind::OCPrime],
            SpaceKind::OCPrime => &[SpaceKind::DPrimeL1],
            SpaceKind::DPrimeL1 => &[SpaceKind::DPrimeLq],
            SpaceKind::DPrimeLq => &[SpaceKind::SPrime],
            SpaceKind::SPrime => &[SpaceKind::DPrime],
            SpaceKind::DPrime => &[],
        }
    }

    /// Kind-level inclusion: reachability in the diagram, reflexively.
    pub fn included_in(self, other: SpaceKind) -> bool {
        if self == other {
            return true;
        }
        // The diagram is small enough for a depth-first walk.
        let mut stack = vec![self];
        let mut seen = [false; 15];
        while let Some(k) = stack.pop() {
            if k == other {
                return true;
            }
            let idx = k as usize;
            if seen[idx] {
                continue;
            }
            seen[idx] = true;
            stack.extend_from_slice(k.direct_superkinds());
        }
        false
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("parameter {0} out of range for {1} (need {2})")]
    InvalidParameter(f64, &'static str, &'static str),
    #[error("{0} carries no parameter")]
    UnexpectedParameter(&'static str),
    #[error("the Fourier transform of {0} is not among the modeled isomorphisms")]
    NotFourierMapped(String),
    #[error("unknown space token `{0}`")]
    UnknownToken(String),
}

/// One concrete space over `ℝⁿ`.
///
/// `param` is the `p` of `D_Lp` (`1 ≤ p < ∞`) or the `q` of `D'_Lq`
/// (`1 < q ≤ ∞`, with `f64::INFINITY` for `q = ∞`); all other kinds carry
/// none.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Space {
    kind: SpaceKind,
    param: Option<f64>,
    dimension: u32,
}

impl Serialize for Space {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.token())
    }
}

/// Deserializes from the token form; the wire format carries no dimension,
/// so this reads back over ℝ¹, which is where every serialized report lives.
impl<'de> serde::Deserialize<'de> for Space {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let token = String::deserialize(deserializer)?;
        Space::parse(&token, 1).map_err(serde::de::Error::custom)
    }
}

impl Space {
    pub fn new(kind: SpaceKind, param: Option<f64>, dimension: u32) -> Result<Self, SpaceError> {
        if dimension == 0 {
            return Err(SpaceError::InvalidDimension);
        }
        match (kind, param) {
            (SpaceKind::DLp, Some(p)) => {
                if !(p >= 1.0 && p.is_finite()) {
                    return Err(SpaceError::InvalidParameter(p, "D_Lp", "1 <= p < inf"));
                }
            }
            (SpaceKind::DPrimeLq, Some(q)) => {
                if !(q > 1.0) || q.is_nan() {
                    return Err(SpaceError::InvalidParameter(q, "D'_Lq", "1 < q <= inf"));
                }
            }
            (SpaceKind::DLp, None) => {
                return Err(SpaceError::InvalidParameter(
                    f64::NAN,
                    "D_Lp",
                    "1 <= p < inf",
                ))
            }
            (SpaceKind::DPrimeLq, None) => {
                return Err(SpaceError::InvalidParameter(
                    f64::NAN,
                    "D'_Lq",
                    "1 < q <= inf",
                ))
            }
            (k, Some(_)) => return Err(SpaceError::UnexpectedParameter(k.token())),
            (_, None) => {}
        }
        Ok(Space {
            kind,
            param,
            dimension,
        })
    }

    /// Shorthand for the unparameterized kinds.
    pub fn plain(kind: SpaceKind, dimension: u32) -> Self {
        Space::new(kind, None, dimension).expect("plain kind")
    }

    pub fn d_lp(p: f64, dimension: u32) -> Result<Self, SpaceError> {
        Space::new(SpaceKind::DLp, Some(p), dimension)
    }

    pub fn d_prime_lq(q: f64, dimension: u32) -> Result<Self, SpaceError> {
        Space::new(SpaceKind::DPrimeLq, Some(q), dimension)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn param(&self) -> Option<f64> {
        self.param
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Canonical token, with the parameter when the kind has one, e.g.
    /// `D_Lp[1.5]`, `D'_Lq[inf]`, `OC'`.
    pub fn token(&self) -> String {
        match self.param {
            Some(p) if p.is_infinite() => format!("{}[inf]", self.kind.token()),
            Some(p) => format!("{}[{}]", self.kind.token(), fmt_param(p)),
            None => self.kind.token().to_string(),
        }
    }

    /// Parses a space token. Bare `D_Lp` and `D'_Lq` default to parameter 2.
    pub fn parse(token: &str, dimension: u32) -> Result<Self, SpaceError> {
        let token = token.trim();
        if let Some(rest) = token.strip_prefix("D_Lp") {
            let p = parse_param(rest, 2.0, token)?;
            return Space::d_lp(p, dimension);
        }
        if let Some(rest) = token.strip_prefix("D'_Lq") {
            let q = parse_param(rest, 2.0, token)?;
            return Space::d_prime_lq(q, dimension);
        }
        let kind = match token {
            "D" => SpaceKind::D,
            "S" => SpaceKind::S,
            "Bdot" => SpaceKind::BDot,
            "D_Linf" => SpaceKind::DLInf,
            "OC" => SpaceKind::OC,
            "OM" => SpaceKind::OM,
            "E" => SpaceKind::E,
            "E'" => SpaceKind::EPrime,
            "OM'" => SpaceKind::OMPrime,
            "OC'" => SpaceKind::OCPrime,
            "D'_L1" => SpaceKind::DPrimeL1,
            "S'" => SpaceKind::SPrime,
            "D'" => SpaceKind::DPrime,
            other => return Err(SpaceError::UnknownToken(other.to_string())),
        };
        Space::new(kind, None, dimension)
    }

    fn check_dimension(&self, other: &Space) -> Result<(), SpaceError> {
        if self.dimension != other.dimension {
            return Err(SpaceError::DimensionMismatch(
                self.dimension,
                other.dimension,
            ));
        }
        Ok(())
    }

    /// Continuous inclusion `self ⊆ super_space` in the encoded diagram.
    pub fn includes_into(&self, super_space: &Space) -> Result<bool, SpaceError> {
        self.check_dimension(super_space)?;
        if self.kind == super_space.kind {
            return Ok(match (self.param, super_space.param) {
                (Some(a), Some(b)) => a <= b,
                _ => true,
            });
        }
        Ok(self.kind.included_in(super_space.kind))
    }

    /// The strong dual of the paired kinds; `None` where the pairing is not
    /// modeled (`D_L∞`, `D_L1`, `D'_L∞`).
    pub fn dual(&self) -> Option<Space> {
        let make = |kind, param| Space {
            kind,
            param,
            dimension: self.dimension,
        };
        match self.kind {
            SpaceKind::D => Some(make(SpaceKind::DPrime, None)),
            SpaceKind::DPrime => Some(make(SpaceKind::D, None)),
            SpaceKind::S => Some(make(SpaceKind::SPrime, None)),
            SpaceKind::SPrime => Some(make(SpaceKind::S, None)),
            SpaceKind::E => Some(make(SpaceKind::EPrime, None)),
            SpaceKind::EPrime => Some(make(SpaceKind::E, None)),
            SpaceKind::OC => Some(make(SpaceKind::OCPrime, None)),
            SpaceKind::OCPrime => Some(make(SpaceKind::OC, None)),
            SpaceKind::OM => Some(make(SpaceKind::OMPrime, None)),
            SpaceKind::OMPrime => Some(make(SpaceKind::OM, None)),
            SpaceKind::BDot => Some(make(SpaceKind::DPrimeL1, None)),
            SpaceKind::DPrimeL1 => Some(make(SpaceKind::BDot, None)),
            SpaceKind::DLp => {
                let p = self.param.expect("DLp parameter");
                if p > 1.0 {
                    Some(make(SpaceKind::DPrimeLq, Some(conjugate_exponent(p))))
                } else {
                    None
                }
            }
            SpaceKind::DPrimeLq => {
                let q = self.param.expect("D'Lq parameter");
                if q.is_finite() {
                    Some(make(SpaceKind::DLp, Some(conjugate_exponent(q))))
                } else {
                    None
                }
            }
            SpaceKind::DLInf => None,
        }
    }

    /// Fourier image among the six mapped kinds; errors elsewhere.
    pub fn fourier_image(&self) -> Result<Space, SpaceError> {
        let kind = match self.kind {
            SpaceKind::S => SpaceKind::S,
            SpaceKind::SPrime => SpaceKind::SPrime,
            SpaceKind::OM => SpaceKind::OCPrime,
            SpaceKind::OC => SpaceKind::OMPrime,
            SpaceKind::OCPrime => SpaceKind::OM,
            SpaceKind::OMPrime => SpaceKind::OC,
            _ => return Err(SpaceError::NotFourierMapped(self.token())),
        };
        Ok(Space {
            kind,
            param: None,
            dimension: self.dimension,
        })
    }

    /// The fourteen table spaces in row order (`D_L∞` excluded; parameterized
    /// rows use the representative `p = q = 2`).
    pub fn table_spaces(dimension: u32) -> Result<Vec<Space>, SpaceError> {
        if dimension == 0 {
            return Err(SpaceError::InvalidDimension);
        }
        let mut out = Vec::with_capacity(14);
        for kind in ALL_KINDS {
            if kind == SpaceKind::DLInf {
                continue;
            }
            let param = kind.is_parameterized().then_some(2.0);
            out.push(Space {
                kind,
                param,
                dimension,
            });
        }
        Ok(out)
    }

    /// Least common superspace among the modeled spaces, if the set of
    /// common superspaces has a unique minimum.
    pub fn least_common_superspace(&self, other: &Space) -> Result<Option<Space>, SpaceError> {
        self.check_dimension(other)?;
        let mut candidates: Vec<Space> = Vec::new();
        for kind in ALL_KINDS {
            if kind.is_parameterized() {
                for s in [self, other] {
                    if s.kind == kind {
                        candidates.push(*s);
                    }
                }
            } else {
                candidates.push(Space {
                    kind,
                    param: None,
                    dimension: self.dimension,
                });
            }
        }
        let commons: Vec<Space> = candidates
            .into_iter()
            .filter(|c| {
                self.includes_into(c).unwrap_or(false) && other.includes_into(c).unwrap_or(false)
            })
            .collect();
        let mut minima: Vec<Space> = Vec::new();
        'outer: for c in &commons {
            for d in &commons {
                if !std::ptr::eq(c, d)
                    && d.includes_into(c).unwrap_or(false)
                    && !c.includes_into(d).unwrap_or(false)
                {
                    continue 'outer;
                }
            }
            if !minima.iter().any(|m| m == c) {
                minima.push(*c);
            }
        }
        if minima.len() == 1 {
            Ok(Some(minima[0]))
        } else {
            Ok(None)
        }
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// `p ↦ p/(p−1)`, snapped to the nearest integer when within 1e-9 so that
/// conjugation is an exact involution on the usual exponents.
fn conjugate_exponent(p: f64) -> f64 {
    let q = p / (p - 1.0);
    if (q - q.round()).abs() < 1e-9 {
        q.round()
    } else {
        q
    }
}

fn fmt_param(p: f64) -> String {
    if p == p.trunc() && p.abs() < 1e15 {
        format!("{}", p as i64)
    } else {
        format!("{p}")
    }
}

fn parse_param(rest: &str, default: f64, token: &str) -> Result<f64, SpaceError> {
    if rest.is_empty() {
        return Ok(default);
    }
    let inner = rest
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| SpaceError::UnknownToken(token.to_string()))?;
    if inner.eq_ignore_ascii_case("inf") {
        return Ok(f64::INFINITY);
    }
    inner
        .trim()
        .parse::<f64>()
        .map_err(|_| SpaceError::UnknownToken(token.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(kind: SpaceKind) -> Space {
        Space::plain(kind, 1)
    }

    /// Every modeled space over ℝ¹, parameterized kinds at a few parameters.
    fn sample_spaces() -> Vec<Space> {
        let mut v: Vec<Space> = ALL_KINDS
            .iter()
            .filter(|k| !k.is_parameterized())
            .map(|&k| sp(k))
            .collect();
        for p in [1.0, 1.5, 2.0, 4.0] {
            v.push(Space::d_lp(p, 1).unwrap());
        }
        for q in [1.25, 2.0, 4.0, f64::INFINITY] {
            v.push(Space::d_prime_lq(q, 1).unwrap());
        }
        v
    }

    #[test]
    fn chain_inclusions_from_the_diagram() {
        let chain_top = [
            sp(SpaceKind::D),
            sp(SpaceKind::S),
            Space::d_lp(2.0, 1).unwrap(),
            sp(SpaceKind::BDot),
            sp(SpaceKind::DLInf),
            sp(SpaceKind::OC),
            sp(SpaceKind::OM),
            sp(SpaceKind::E),
        ];
        for w in chain_top.windows(2) {
            assert!(w[0].includes_into(&w[1]).unwrap(), "{} ⊆ {}", w[0], w[1]);
            assert!(!w[1].includes_into(&w[0]).unwrap(), "{} ⊄ {}", w[1], w[0]);
        }
        let chain_bottom = [
            sp(SpaceKind::EPrime),
            sp(SpaceKind::OMPrime),
            sp(SpaceKind::OCPrime),
            sp(SpaceKind::DPrimeL1),
            Space::d_prime_lq(2.0, 1).unwrap(),
            sp(SpaceKind::SPrime),
            sp(SpaceKind::DPrime),
        ];
        for w in chain_bottom.windows(2) {
            assert!(w[0].includes_into(&w[1]).unwrap());
            assert!(!w[1].includes_into(&w[0]).unwrap());
        }
        assert!(sp(SpaceKind::D)
            .includes_into(&sp(SpaceKind::EPrime))
            .unwrap());
        assert!(sp(SpaceKind::E)
            .includes_into(&sp(SpaceKind::DPrime))
            .unwrap());
    }

    #[test]
    fn includes_examples() {
        assert!(sp(SpaceKind::D).includes_into(&sp(SpaceKind::E)).unwrap());
        assert!(sp(SpaceKind::E)
            .includes_into(&sp(SpaceKind::DPrime))
            .unwrap());
        // the Gaussian lies in S but has noncompact support
        assert!(!sp(SpaceKind::S)
            .includes_into(&sp(SpaceKind::EPrime))
            .unwrap());
    }

    #[test]
    fn includes_rejects_dimension_mismatch() {
        let a = Space::plain(SpaceKind::D, 1);
        let b = Space::plain(SpaceKind::E, 2);
        assert!(matches!(
            a.includes_into(&b),
            Err(SpaceError::DimensionMismatch(1, 2))
        ));
    }

    #[test]
    fn cross_parameter_rule() {
        let p1 = Space::d_lp(1.5, 1).unwrap();
        let p2 = Space::d_lp(3.0, 1).unwrap();
        assert!(p1.includes_into(&p2).unwrap());
        assert!(!p2.includes_into(&p1).unwrap());
        let q1 = Space::d_prime_lq(1.5, 1).unwrap();
        let q2 = Space::d_prime_lq(f64::INFINITY, 1).unwrap();
        assert!(q1.includes_into(&q2).unwrap());
        assert!(!q2.includes_into(&q1).unwrap());
    }

    #[test]
    fn partial_order_laws_exhaustively() {
        let spaces = sample_spaces();
        for a in &spaces {
            assert!(a.includes_into(a).unwrap(), "reflexive at {a}");
        }
        for a in &spaces {
            for b in &spaces {
                for c in &spaces {
                    if a.includes_into(b).unwrap() && b.includes_into(c).unwrap() {
                        assert!(a.includes_into(c).unwrap(), "transitive {a} {b} {c}");
                    }
                }
            }
        }
        for a in &spaces {
            for b in &spaces {
                if a.includes_into(b).unwrap() && b.includes_into(a).unwrap() {
                    assert_eq!(a, b, "antisymmetric {a} {b}");
                }
            }
        }
    }

    #[test]
    fn duality_pairs() {
        assert_eq!(sp(SpaceKind::D).dual(), Some(sp(SpaceKind::DPrime)));
        assert_eq!(sp(SpaceKind::BDot).dual(), Some(sp(SpaceKind::DPrimeL1)));
        assert_eq!(sp(SpaceKind::DLInf).dual(), None);
        assert_eq!(Space::d_lp(1.0, 1).unwrap().dual(), None);
        assert_eq!(
            Space::d_lp(1.5, 1).unwrap().dual(),
            Some(Space::d_prime_lq(3.0, 1).unwrap())
        );
        // involution where the pairing exists
        for s in sample_spaces() {
            if let Some(d) = s.dual() {
                assert_eq!(d.dual(), Some(s), "dual(dual({s}))");
            }
        }
    }

    #[test]
    fn duality_reverses_inclusion() {
        let spaces = sample_spaces();
        for a in &spaces {
            for b in &spaces {
                if let (Some(da), Some(db)) = (a.dual(), b.dual()) {
                    if a.includes_into(b).unwrap() {
                        assert!(
                            db.includes_into(&da).unwrap(),
                            "dual({b}) ⊆ dual({a}) expected"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fourier_images() {
        assert_eq!(
            sp(SpaceKind::OC).fourier_image().unwrap(),
            sp(SpaceKind::OMPrime)
        );
        assert_eq!(
            sp(SpaceKind::OM).fourier_image().unwrap(),
            sp(SpaceKind::OCPrime)
        );
        assert_eq!(sp(SpaceKind::S).fourier_image().unwrap(), sp(SpaceKind::S));
        assert!(matches!(
            sp(SpaceKind::D).fourier_image(),
            Err(SpaceError::NotFourierMapped(_))
        ));
        for kind in [
            SpaceKind::S,
            SpaceKind::SPrime,
            SpaceKind::OM,
            SpaceKind::OC,
            SpaceKind::OMPrime,
            SpaceKind::OCPrime,
        ] {
            let s = sp(kind);
            assert_eq!(s.fourier_image().unwrap().fourier_image().unwrap(), s);
        }
    }

    #[test]
    fn table_spaces_order_and_count() {
        let spaces = Space::table_spaces(1).unwrap();
        assert_eq!(spaces.len(), 14);
        assert_eq!(spaces[0].kind(), SpaceKind::D);
        assert_eq!(spaces[1].kind(), SpaceKind::S);
        assert_eq!(spaces[2].kind(), SpaceKind::DLp);
        assert_eq!(spaces[3].kind(), SpaceKind::BDot);
        assert_eq!(spaces[13].kind(), SpaceKind::DPrime);
        let in_3d = Space::table_spaces(3).unwrap();
        assert!(in_3d.iter().all(|s| s.dimension() == 3));
        assert!(Space::table_spaces(0).is_err());
    }

    #[test]
    fn least_common_superspace_examples() {
        let d = sp(SpaceKind::D);
        assert_eq!(d.least_common_superspace(&d).unwrap(), Some(d));
        assert_eq!(
            sp(SpaceKind::E)
                .least_common_superspace(&sp(SpaceKind::DPrime))
                .unwrap(),
            Some(sp(SpaceKind::DPrime))
        );
        // In the encoded diagram the only common superspace of S and E' is D'
        // (the diagram's vertical inclusions are D ⊂ E' and E ⊂ D' only).
        assert_eq!(
            sp(SpaceKind::S)
                .least_common_superspace(&sp(SpaceKind::EPrime))
                .unwrap(),
            Some(sp(SpaceKind::DPrime))
        );
        assert_eq!(
            Space::d_lp(1.5, 1)
                .unwrap()
                .least_common_superspace(&Space::d_lp(3.0, 1).unwrap())
                .unwrap(),
            Some(Space::d_lp(3.0, 1).unwrap())
        );
    }

    #[test]
    fn token_round_trip() {
        for s in sample_spaces() {
            let parsed = Space::parse(&s.token(), 1).unwrap();
            assert_eq!(parsed, s, "round trip {}", s.token());
        }
        assert_eq!(
            Space::parse("D_Lp", 1).unwrap(),
            Space::d_lp(2.0, 1).unwrap()
        );
        assert_eq!(
            Space::parse("D'_Lq[inf]", 1).unwrap(),
            Space::d_prime_lq(f64::INFINITY, 1).unwrap()
        );
        assert!(Space::parse("B'", 1).is_err());
    }
}
