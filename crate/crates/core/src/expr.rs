//! Expression parsing and result-space/continuity inference.
//!
//! Grammar (whitespace-insensitive, left-associative binary operators):
//!
//! ```text
//! expr    := primary (('*' | 'conv') primary)*
//! primary := '(' name ':' SPACE ')'          atom with declared space
//!          | 'fourier' '(' expr ')'
//!          | 'd' '[' nat (',' nat)* ']' '(' expr ')'
//!          | '(' expr ')'
//! ```
//!
//! SPACE tokens are the serialization of [`Space`] (`D`, `S`, `D_Lp[1.5]`,
//! `OC'`, ...).

use crate::space::{Space, SpaceError, SpaceKind, ALL_KINDS};
use crate::table::{
    convolutor_space, exact_fact, known_continuous_maps, known_discontinuous_maps,
    multiplier_space, BilinearOp, ContinuityVerdict, PropRef, VerdictValue,
};
use serde::Serialize;
use thiserror::Error;

pub use crate::table::VerdictValue as Verdict;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Atom { name: String, declared: Space },
    Mul(Box<Expr>, Box<Expr>),
    Conv(Box<Expr>, Box<Expr>),
    Fourier(Box<Expr>),
    Derivative(Box<Expr>, Vec<u32>),
}

impl Expr {
    pub fn atom(name: &str, declared: Space) -> Expr {
        Expr::Atom {
            name: name.to_string(),
            declared,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn conv(a: Expr, b: Expr) -> Expr {
        Expr::Conv(Box::new(a), Box::new(b))
    }

    pub fn fourier(a: Expr) -> Expr {
        Expr::Fourier(Box::new(a))
    }

    pub fn derivative(a: Expr, index: Vec<u32>) -> Expr {
        Expr::Derivative(Box::new(a), index)
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expr::Atom { name, declared } => write!(f, "({name}:{declared})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Conv(a, b) => write!(f, "({a} conv {b})"),
            Expr::Fourier(a) => write!(f, "fourier({a})"),
            Expr::Derivative(a, idx) => {
                let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "d[{}]({a})", idx.join(","))
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InferError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{0}")]
    Space(#[from] SpaceError),
    #[error("no multiplier or convolutor condition admits {a} {op} {b}")]
    NotAdmissible { a: Space, b: Space, op: BilinearOp },
    #[error("multi-index length {got} does not match dimension {dim}")]
    BadMultiIndex { got: usize, dim: u32 },
    #[error("target {target} is not a superspace of the inferred result {natural}")]
    BadTarget { target: Space, natural: Space },
}

/// One applied inference step, for the trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub node: String,
    pub rule: String,
    pub reference: PropRef,
}

/// Result space and continuity verdict of a whole expression.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypedResult {
    pub space: Space,
    pub verdict: ContinuityVerdict,
    pub trace: Vec<TraceStep>,
}

// ---------------------------------------------------------------------------
// parsing

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    dimension: u32,
}

/// Parses an expression; `dimension` fixes the ambient ℝⁿ for every declared
/// space and multi-index.
pub fn parse(text: &str, dimension: u32) -> Result<Expr, InferError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        dimension,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> InferError {
        InferError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), InferError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{token}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr, InferError> {
        let mut lhs = self.primary()?;
        loop {
            if self.eat("*") {
                let rhs = self.primary()?;
                lhs = Expr::mul(lhs, rhs);
            } else {
                self.skip_ws();
                // `conv` must not swallow identifiers like `conv2`
                let r = self.rest();
                if r.starts_with("conv")
                    && !r[4..].starts_with(|c: char| c.is_alphanumeric() || c == '_')
                {
                    self.pos += 4;
                    let rhs = self.primary()?;
                    lhs = Expr::conv(lhs, rhs);
                } else {
                    break;
                }
            }
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<Expr, InferError> {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with("fourier") {
            self.pos += "fourier".len();
            self.expect("(")?;
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(Expr::fourier(inner));
        }
        if r.starts_with("d[") {
            self.pos += 1;
            self.expect("[")?;
            let idx = self.multi_index()?;
            self.expect("]")?;
            self.expect("(")?;
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(Expr::derivative(inner, idx));
        }
        if !self.eat("(") {
            return Err(self.err("expected `(`"));
        }
        // lookahead: `name :` means an atom, anything else a parenthesized
        // subexpression
        let save = self.pos;
        if let Some(atom) = self.try_atom()? {
            return Ok(atom);
        }
        self.pos = save;
        let inner = self.expr()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn try_atom(&mut self) -> Result<Option<Expr>, InferError> {
        self.skip_ws();
        let start = self.pos;
        let name_len = self
            .rest()
            .char_indices()
            .take_while(|(i, c)| {
                c.is_ascii_alphanumeric() || *c == '_' || (*i == 0 && c.is_ascii_alphabetic())
            })
            .count();
        if name_len == 0 {
            return Ok(None);
        }
        let name = &self.src[start..start + name_len];
        if !name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return Ok(None);
        }
        self.pos = start + name_len;
        if !self.eat(":") {
            self.pos = start;
            return Ok(None);
        }
        self.skip_ws();
        let token_start = self.pos;
        let token_len = self
            .rest()
            .find(')')
            .ok_or_else(|| self.err("unterminated atom"))?;
        let token = &self.src[token_start..token_start + token_len];
        let declared = Space::parse(token, self.dimension).map_err(|e| InferError::Syntax {
            position: token_start,
            message: e.to_string(),
        })?;
        self.pos = token_start + token_len;
        self.expect(")")?;
        Ok(Some(Expr::atom(name, declared)))
    }

    fn multi_index(&mut self) -> Result<Vec<u32>, InferError> {
        let mut idx = Vec::new();
        loop {
            self.skip_ws();
            let digits = self
                .rest()
                .chars()
                .take_while(|c| c.is_ascii_digit())
                .count();
            if digits == 0 {
                return Err(self.err("expected multi-index entry"));
            }
            let n: u32 = self.src[self.pos..self.pos + digits]
                .parse()
                .map_err(|_| self.err("multi-index entry out of range"))?;
            self.pos += digits;
            idx.push(n);
            if !self.eat(",") {
                break;
            }
        }
        Ok(idx)
    }
}

// ---------------------------------------------------------------------------
// admissibility and result-space placement

/// A certificate that `a op b` lands in `result`: either a table row whose
/// multiplier/convolutor condition covers the pair, or a proved map fact the
/// pair embeds into.
#[derive(Debug, Clone, Copy)]
struct Placement {
    result: Space,
    via_left: bool,
}

fn partner_space(t: &Space, op: BilinearOp) -> Space {
    match op {
        BilinearOp::Multiply => multiplier_space(t).expect("total"),
        BilinearOp::Convolve => convolutor_space(t).expect("total"),
    }
}

/// All table spaces `T` with `x ⊆ T` and `y ⊆ M(T)` (resp. `C(T)`), plus the
/// targets of proved facts the pair embeds into. Sound and monotone: any
/// certificate for `(a, b)` also certifies every componentwise subpair.
fn placements(a: &Space, b: &Space, op: BilinearOp) -> Result<Vec<Placement>, SpaceError> {
    let dim = a.dimension();
    a.includes_into(b).map(|_| ())?; // dimension check
    let mut out: Vec<Placement> = Vec::new();
    let push = |result: Space, via_left: bool, out: &mut Vec<Placement>| {
        if !out.iter().any(|p| p.result == result) {
            out.push(Placement { result, via_left });
        }
    };
    for kind in ALL_KINDS {
        let params: Vec<Option<f64>> = if kind.is_parameterized() {
            let mut ps: Vec<Option<f64>> = [a, b]
                .iter()
                .filter(|s| s.kind() == kind)
                .map(|s| s.param())
                .collect();
            if ps.is_empty() && kind == SpaceKind::DLp {
                ps.push(Some(1.0));
            }
            ps
        } else {
            vec![None]
        };
        for param in params {
            let t = match Space::new(kind, param, dim) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let m = partner_space(&t, op);
            if a.includes_into(&t)? && b.includes_into(&m)? {
                push(t, true, &mut out);
            }
            if b.includes_into(&t)? && a.includes_into(&m)? {
                push(t, false, &mut out);
            }
        }
    }
    for facts in [known_continuous_maps(), known_discontinuous_maps()] {
        for f in facts {
            if f.op != op {
                continue;
            }
            let (via_left, hit) = if f.a.admits_subspace(a) && f.b.admits_subspace(b) {
                (true, true)
            } else if f.a.admits_subspace(b) && f.b.admits_subspace(a) {
                (false, true)
            } else {
                (false, false)
            };
            if hit {
                let target = f.target.instantiate(&[a, b], dim);
                push(target, via_left, &mut out);
            }
        }
    }
    Ok(out)
}

/// The inferred result space: the ≤-least placement; among incomparable
/// minima the left operand's certificate wins, then table order.
fn natural_result(a: &Space, b: &Space, op: BilinearOp) -> Result<Option<Space>, SpaceError> {
    let all = placements(a, b, op)?;
    if all.is_empty() {
        return Ok(None);
    }
    let mut minima: Vec<Placement> = Vec::new();
    'outer: for c in &all {
        for d in &all {
            if d.result != c.result
                && d.result.includes_into(&c.result)?
                && !c.result.includes_into(&d.result)?
            {
                continue 'outer;
            }
        }
        minima.push(*c);
    }
    if let Some(p) = minima.iter().find(|p| p.via_left) {
        return Ok(Some(p.result));
    }
    Ok(minima.first().map(|p| p.result))
}

/// True when some multiplier/convolutor condition (or proved fact) covers
/// the pair.
pub fn admissible(a: &Space, b: &Space, op: BilinearOp) -> Result<bool, SpaceError> {
    Ok(!placements(a, b, op)?.is_empty())
}

// ---------------------------------------------------------------------------
// verdict lookup

/// Verdict of `a op b` into `target`: a discontinuity fact must match the
/// pair and target exactly; continuity flows along embeddings (`a ⊆ a₀`,
/// `b ⊆ b₀`, fact target ⊆ `target`); anything else is only known
/// hypocontinuous.
fn verdict_at(
    a: &Space,
    b: &Space,
    op: BilinearOp,
    target: &Space,
) -> Result<ContinuityVerdict, SpaceError> {
    if let Some(f) = exact_fact(known_discontinuous_maps(), a, b, op, target) {
        return Ok(ContinuityVerdict {
            value: VerdictValue::Discontinuous,
            target: *target,
            reference: f.reference,
        });
    }
    // exact pair matches first, then embeddings into a larger proved pair
    for exact_pass in [true, false] {
        for f in known_continuous_maps() {
            if f.op != op {
                continue;
            }
            let pair_ok = if exact_pass {
                (f.a.matches_exactly(a) && f.b.matches_exactly(b))
                    || (f.a.matches_exactly(b) && f.b.matches_exactly(a))
            } else {
                (f.a.admits_subspace(a) && f.b.admits_subspace(b))
                    || (f.a.admits_subspace(b) && f.b.admits_subspace(a))
            };
            if !pair_ok {
                continue;
            }
            let fact_target = f.target.instantiate(&[a, b], a.dimension());
            if fact_target.includes_into(target)? {
                return Ok(ContinuityVerdict {
                    value: VerdictValue::Continuous,
                    target: *target,
                    reference: f.reference,
                });
            }
        }
    }
    Ok(ContinuityVerdict {
        value: VerdictValue::HypocontinuousOnlyKnown,
        target: *target,
        reference: PropRef::Hypocontinuity,
    })
}

/// Outcome of [`classify_map`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyOutcome {
    pub a: Space,
    pub b: Space,
    pub op: BilinearOp,
    pub verdict: ContinuityVerdict,
}

/// Classifies the map `a × b -op-> target`. The target must be admissible
/// for the pair: a superspace of the inferred natural result.
pub fn classify_map(
    a: &Space,
    b: &Space,
    op: BilinearOp,
    target: &Space,
) -> Result<ClassifyOutcome, InferError> {
    let natural =
        natural_result(a, b, op)?.ok_or(InferError::NotAdmissible { a: *a, b: *b, op })?;
    if !natural.includes_into(target)? {
        return Err(InferError::BadTarget {
            target: *target,
            natural,
        });
    }
    Ok(ClassifyOutcome {
        a: *a,
        b: *b,
        op,
        verdict: verdict_at(a, b, op, target)?,
    })
}

/// Classifies at the natural result space.
pub fn classify_natural(
    a: &Space,
    b: &Space,
    op: BilinearOp,
) -> Result<ClassifyOutcome, InferError> {
    let natural =
        natural_result(a, b, op)?.ok_or(InferError::NotAdmissible { a: *a, b: *b, op })?;
    classify_map(a, b, op, &natural)
}

// ---------------------------------------------------------------------------
// inference over expression trees

/// Infers the result space and continuity verdict of an expression.
///
/// The tree verdict is continuous only if every binary node is continuous,
/// discontinuous as soon as one node's exact pair and target are proved
/// discontinuous, and only-hypocontinuous otherwise.
pub fn infer(e: &Expr) -> Result<TypedResult, InferError> {
    let mut trace = Vec::new();
    let (space, node_verdicts) = infer_node(e, &mut trace)?;
    let verdict = combine_verdicts(space, &node_verdicts);
    Ok(TypedResult {
        space,
        verdict,
        trace,
    })
}

fn combine_verdicts(root_space: Space, nodes: &[ContinuityVerdict]) -> ContinuityVerdict {
    if let Some(bad) = nodes
        .iter()
        .find(|v| v.value == VerdictValue::Discontinuous)
    {
        return bad.clone();
    }
    if nodes.is_empty() {
        return ContinuityVerdict {
            value: VerdictValue::Continuous,
            target: root_space,
            reference: PropRef::Structural,
        };
    }
    if nodes.iter().all(|v| v.value == VerdictValue::Continuous) {
        let root = nodes.last().expect("nonempty");
        return ContinuityVerdict {
            value: VerdictValue::Continuous,
            target: root_space,
            reference: root.reference,
        };
    }
    ContinuityVerdict {
        value: VerdictValue::HypocontinuousOnlyKnown,
        target: root_space,
        reference: PropRef::Hypocontinuity,
    }
}

fn infer_node(
    e: &Expr,
    trace: &mut Vec<TraceStep>,
) -> Result<(Space, Vec<ContinuityVerdict>), InferError> {
    match e {
        Expr::Atom { name, declared } => {
            trace.push(TraceStep {
                node: e.to_string(),
                rule: format!("atom {name} declared in {declared}"),
                reference: PropRef::Structural,
            });
            Ok((*declared, Vec::new()))
        }
        Expr::Mul(a, b) | Expr::Conv(a, b) => {
            let op = match e {
                Expr::Mul(..) => BilinearOp::Multiply,
                _ => BilinearOp::Convolve,
            };
            let (sa, mut va) = infer_node(a, trace)?;
            let (sb, vb) = infer_node(b, trace)?;
            let natural = natural_result(&sa, &sb, op)?.ok_or(InferError::NotAdmissible {
                a: sa,
                b: sb,
                op,
            })?;
            let verdict = verdict_at(&sa, &sb, op, &natural)?;
            trace.push(TraceStep {
                node: e.to_string(),
                rule: format!(
                    "{} of {sa} and {sb} lands in {natural}; {}",
                    op, verdict.value
                ),
                reference: verdict.reference,
            });
            va.extend(vb);
            va.push(verdict);
            Ok((natural, va))
        }
        Expr::Fourier(inner) => {
            let (s, v) = infer_node(inner, trace)?;
            let image = s.fourier_image()?;
            trace.push(TraceStep {
                node: e.to_string(),
                rule: format!("fourier isomorphism {s} -> {image}"),
                reference: PropRef::Structural,
            });
            Ok((image, v))
        }
        Expr::Derivative(inner, idx) => {
            let (s, v) = infer_node(inner, trace)?;
            if idx.len() != s.dimension() as usize {
                return Err(InferError::BadMultiIndex {
                    got: idx.len(),
                    dim: s.dimension(),
                });
            }
            trace.push(TraceStep {
                node: e.to_string(),
                rule: format!("derivative preserves {s}"),
                reference: PropRef::Structural,
            });
            Ok((s, v))
        }
    }
}

/// The fourteen audited bilinear maps in their Remark 5 numbering.
pub fn ehrenpreis_maps(dimension: u32) -> Vec<(u8, Space, Space, BilinearOp, Space)> {
    use BilinearOp::{Convolve as Conv, Multiply as Mul};
    use SpaceKind::*;
    let sp = |k| Space::plain(k, dimension);
    vec![
        (1, sp(D), sp(D), Conv, sp(D)),
        (2, sp(D), sp(EPrime), Conv, sp(EPrime)),
        (3, sp(EPrime), sp(EPrime), Conv, sp(EPrime)),
        (4, sp(D), sp(E), Conv, sp(E)),
        (5, sp(D), sp(DPrime), Conv, sp(E)),
        (6, sp(D), sp(EPrime), Conv, sp(D)),
        (7, sp(E), sp(EPrime), Conv, sp(E)),
        (8, sp(DPrime), sp(EPrime), Conv, sp(DPrime)),
        (9, sp(DPrime), sp(D), Conv, sp(DPrime)),
        (10, sp(E), sp(EPrime), Conv, sp(DPrime)),
        (11, sp(D), sp(D), Mul, sp(D)),
        (12, sp(E), sp(E), Mul, sp(E)),
        (13, sp(DPrime), sp(E), Mul, sp(DPrime)),
        (14, sp(D), sp(DPrime), Mul, sp(EPrime)),
    ]
}

/// Runs the Remark 5 audit; returns `(item, map, outcome)` rows.
pub fn audit_ehrenpreis(dimension: u32) -> Result<Vec<(u8, ClassifyOutcome)>, InferError> {
    ehrenpreis_maps(dimension)
        .into_iter()
        .map(|(item, a, b, op, target)| Ok((item, classify_map(&a, &b, op, &target)?)))
        .collect()
}
