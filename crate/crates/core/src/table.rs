//! The multiplier-convolutor table: `M(E)`, `C(E)`, the o/x joint-continuity
//! flags with their proposition numbers, and the full lists of maps proved
//! continuous or discontinuous, expanded to explicit per-pair entries.

use crate::space::{Space, SpaceError, SpaceKind};
use serde::{Deserialize, Serialize};

/// Multiplication or convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BilinearOp {
    Multiply,
    Convolve,
}

impl std::fmt::Display for BilinearOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BilinearOp::Multiply => write!(f, "mul"),
            BilinearOp::Convolve => write!(f, "conv"),
        }
    }
}

/// Where a continuity or discontinuity fact is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropRef {
    /// Proposition 1..=7.
    Prop(u8),
    Remark2,
    Remark3,
    /// One of the fourteen numbered maps of Remark 5.
    Remark5Item(u8),
    /// The extra continuous maps listed after Proposition 3.
    ExtraList,
    /// The blanket hypocontinuity statement covering every table map.
    Hypocontinuity,
    /// No bilinear node involved (atoms, unary nodes).
    Structural,
}

impl PropRef {
    pub fn label(&self) -> String {
        match self {
            PropRef::Prop(n) => format!("Prop {n}"),
            PropRef::Remark2 => "Remark 2".to_string(),
            PropRef::Remark3 => "Remark 3".to_string(),
            PropRef::Remark5Item(n) => format!("Remark 5 item {n}"),
            PropRef::ExtraList => "extra continuous list".to_string(),
            PropRef::Hypocontinuity => "hypocontinuous (blanket)".to_string(),
            PropRef::Structural => "structural".to_string(),
        }
    }
}

impl std::fmt::Display for PropRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl Serialize for PropRef {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// o/x flag of a table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flag {
    #[serde(rename = "o")]
    Continuous,
    #[serde(rename = "x")]
    Discontinuous,
}

/// Continuity classification of one bilinear map into a stated target.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContinuityVerdict {
    pub value: VerdictValue,
    /// Codomain at which the verdict is asserted.
    pub target: Space,
    pub reference: PropRef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictValue {
    Continuous,
    Discontinuous,
    /// Nothing proved either way for the exact pair and target; every table
    /// map is at least hypocontinuous.
    HypocontinuousOnlyKnown,
}

impl std::fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictValue::Continuous => write!(f, "continuous"),
            VerdictValue::Discontinuous => write!(f, "discontinuous"),
            VerdictValue::HypocontinuousOnlyKnown => write!(f, "hypocontinuous-only-known"),
        }
    }
}

/// One row of the table as emitted by [`emit_table`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub space: String,
    pub multiplier: String,
    pub mul_flag: Flag,
    pub mul_ref: u8,
    pub convolutor: String,
    pub conv_flag: Flag,
    pub conv_ref: u8,
}

/// Raw row data keyed by kind: (M(E), mul flag, mul prop, C(E), conv flag, conv prop).
fn row(kind: SpaceKind) -> Option<(SpaceKind, Flag, u8, SpaceKind, Flag, u8)> {
    use Flag::{Continuous as O, Discontinuous as X};
    use SpaceKind::*;
    let r = match kind {
        D => (E, X, 1, EPrime, X, 2),
        S => (OM, X, 2, OCPrime, X, 2),
        DLp => (DLInf, O, 3, DPrimeL1, X, 2),
        BDot => (DLInf, O, 3, DPrimeL1, X, 2),
        OC => (OC, X, 4, OCPrime, X, 2),
        OM => (OM, O, 5, OMPrime, X, 2),
        E => (E, O, 3, EPrime, X, 2),
        EPrime => (E, X, 6, EPrime, O, 3),
        OMPrime => (OM, X, 6, OMPrime, X, 4),
        OCPrime => (OC, X, 6, OCPrime, O, 5),
        DPrimeL1 => (DLInf, X, 6, DPrimeL1, O, 3),
        DPrimeLq => (DLInf, X, 6, DPrimeL1, O, 3),
        SPrime => (OM, X, 6, OCPrime, X, 6),
        DPrime => (E, X, 6, EPrime, X, 7),
        // multipliers and convolutors of D_L∞ are those of the D_Lp rows
        DLInf => (DLInf, O, 3, DPrimeL1, X, 2),
    };
    Some(r)
}

/// `M(e)`: the multiplier space of a table space (or `D_L∞`).
pub fn multiplier_space(e: &Space) -> Result<Space, SpaceError> {
    let (m, ..) = row(e.kind()).expect("total");
    Ok(Space::plain(m, e.dimension()))
}

/// `C(e)`: the convolutor space of a table space (or `D_L∞`).
pub fn convolutor_space(e: &Space) -> Result<Space, SpaceError> {
    let (_, _, _, c, _, _) = row(e.kind()).expect("total");
    Ok(Space::plain(c, e.dimension()))
}

/// The o/x flag of the table cell `(e, op)` with its proposition number.
///
/// `D_L∞` is accepted even though it has no printed row: its multiplication
/// is continuous with the `D_Lp` rows and its regularization shares their
/// discontinuity.
pub fn table_flag(e: &Space, op: BilinearOp) -> Result<ContinuityVerdict, SpaceError> {
    let (_, mul_flag, mul_ref, _, conv_flag, conv_ref) = row(e.kind()).expect("total");
    let (flag, prop) = match op {
        BilinearOp::Multiply => (mul_flag, mul_ref),
        BilinearOp::Convolve => (conv_flag, conv_ref),
    };
    Ok(ContinuityVerdict {
        value: match flag {
            Flag::Continuous => VerdictValue::Continuous,
            Flag::Discontinuous => VerdictValue::Discontinuous,
        },
        target: *e,
        reference: PropRef::Prop(prop),
    })
}

/// A space position in a fact pattern: a kind, optionally pinned to one
/// parameter (`D_L1` facts pin `p = 1`; generic `D_Lp` facts match any `p`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacePattern {
    pub kind: SpaceKind,
    pub param: Option<f64>,
}

impl SpacePattern {
    pub const fn of(kind: SpaceKind) -> Self {
        SpacePattern { kind, param: None }
    }

    pub const fn d_l1() -> Self {
        SpacePattern {
            kind: SpaceKind::DLp,
            param: Some(1.0),
        }
    }

    /// Exact match: same kind, and same parameter when the pattern pins one.
    pub fn matches_exactly(&self, s: &Space) -> bool {
        s.kind() == self.kind
            && match self.param {
                Some(p) => s.param() == Some(p),
                None => true,
            }
    }

    /// Embedding match: `s` is included in some instance of the pattern.
    /// For pinned parameters the instance is fixed; for generic `D_Lp` /
    /// `D'_Lq` any parameter is allowed, so kind-level inclusion decides.
    pub fn admits_subspace(&self, s: &Space) -> bool {
        match self.param {
            Some(p) => {
                let inst = Space::new(self.kind, Some(p), s.dimension()).expect("pattern instance");
                s.includes_into(&inst).unwrap_or(false)
            }
            None => {
                if s.kind() == self.kind {
                    return true;
                }
                s.kind().included_in(self.kind)
            }
        }
    }

    /// Concrete space for this pattern, taking the parameter from `from`
    /// when the kinds agree, from the pin otherwise, defaulting to the
    /// smallest modeled parameter.
    pub fn instantiate(&self, from: &[&Space], dimension: u32) -> Space {
        let param = if self.kind.is_parameterized() {
            self.param
                .or_else(|| {
                    from.iter()
                        .find(|s| s.kind() == self.kind)
                        .and_then(|s| s.param())
                })
                .or(Some(match self.kind {
                    SpaceKind::DLp => 1.0,
                    _ => 2.0,
                }))
        } else {
            None
        };
        Space::new(self.kind, param, dimension).expect("pattern instance")
    }
}

/// One proved continuity or discontinuity fact `a × b -op-> target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapFact {
    pub a: SpacePattern,
    pub b: SpacePattern,
    pub op: BilinearOp,
    pub target: SpacePattern,
    pub reference: PropRef,
}

const fn fact(
    a: SpaceKind,
    b: SpaceKind,
    op: BilinearOp,
    target: SpaceKind,
    reference: PropRef,
) -> MapFact {
    MapFact {
        a: SpacePattern::of(a),
        b: SpacePattern::of(b),
        op,
        target: SpacePattern::of(target),
        reference,
    }
}

/// Every map proved jointly continuous: the table's o cells, the extra maps
/// listed after Proposition 3, and the continuous Ehrenpreis items.
pub fn known_continuous_maps() -> &'static [MapFact] {
    use BilinearOp::{Convolve as Conv, Multiply as Mul};
    use SpaceKind::*;
    const D_L1: SpacePattern = SpacePattern::d_l1();
    static FACTS: [MapFact; 17] = [
        // table o cells
        fact(DLp, DLInf, Mul, DLp, PropRef::Prop(3)),
        fact(BDot, DLInf, Mul, BDot, PropRef::Prop(3)),
        fact(DLInf, DLInf, Mul, DLInf, PropRef::Prop(3)),
        fact(OM, OM, Mul, OM, PropRef::Prop(5)),
        fact(E, E, Mul, E, PropRef::Prop(3)),
        fact(EPrime, EPrime, Conv, EPrime, PropRef::Prop(3)),
        fact(OCPrime, OCPrime, Conv, OCPrime, PropRef::Prop(5)),
        fact(DPrimeL1, DPrimeL1, Conv, DPrimeL1, PropRef::Prop(3)),
        fact(DPrimeLq, DPrimeL1, Conv, DPrimeLq, PropRef::Prop(3)),
        // extra list after Proposition 3
        fact(S, S, Mul, S, PropRef::ExtraList),
        fact(BDot, BDot, Mul, BDot, PropRef::ExtraList),
        fact(DLp, DLp, Mul, DLp, PropRef::ExtraList),
        fact(S, S, Conv, S, PropRef::ExtraList),
        MapFact {
            a: D_L1,
            b: D_L1,
            op: Conv,
            target: D_L1,
            reference: PropRef::ExtraList,
        },
        // the continuous Ehrenpreis maps not already above
        fact(D, D, Mul, D, PropRef::Remark5Item(11)),
        fact(D, D, Conv, D, PropRef::Remark5Item(1)),
        fact(D, EPrime, Conv, EPrime, PropRef::Remark5Item(2)),
    ];
    &FACTS
}

/// Every map proved discontinuous, with the regularizations of Proposition 2
/// and the multiplications of Proposition 6 expanded into per-pair entries.
pub fn known_discontinuous_maps() -> &'static [MapFact] {
    use BilinearOp::{Convolve as Conv, Multiply as Mul};
    use SpaceKind::*;
    static FACTS: [MapFact; 24] = [
        fact(D, E, Mul, D, PropRef::Prop(1)),
        // Proposition 2: the master pair and the seven regularizations,
        // plus the D_L∞ regularization noted after the proof
        fact(D, EPrime, Conv, E, PropRef::Prop(2)),
        fact(D, EPrime, Conv, D, PropRef::Prop(2)),
        fact(S, OCPrime, Conv, S, PropRef::Prop(2)),
        fact(DLp, DPrimeL1, Conv, DLp, PropRef::Prop(2)),
        fact(BDot, DPrimeL1, Conv, BDot, PropRef::Prop(2)),
        fact(OC, OCPrime, Conv, OC, PropRef::Prop(2)),
        fact(OM, OMPrime, Conv, OM, PropRef::Prop(2)),
        fact(E, EPrime, Conv, E, PropRef::Prop(2)),
        fact(DLInf, DPrimeL1, Conv, DLInf, PropRef::Prop(2)),
        // S × O_M multiplication; Fourier-equivalent to the S row's
        // regularization and stated directly in Remark 2
        fact(S, OM, Mul, S, PropRef::Remark2),
        // Proposition 4
        fact(OC, OC, Mul, OC, PropRef::Prop(4)),
        fact(OMPrime, OMPrime, Conv, OMPrime, PropRef::Prop(4)),
        // Proposition 6: the master pair into D', the six multiplications
        // (with D'_Lq covering q = 1 as its own row) and the S' convolution
        fact(EPrime, DLInf, Mul, DPrime, PropRef::Prop(6)),
        fact(EPrime, E, Mul, EPrime, PropRef::Prop(6)),
        fact(OMPrime, OM, Mul, OMPrime, PropRef::Prop(6)),
        fact(OCPrime, OC, Mul, OCPrime, PropRef::Prop(6)),
        fact(DPrimeL1, DLInf, Mul, DPrimeL1, PropRef::Prop(6)),
        fact(DPrimeLq, DLInf, Mul, DPrimeLq, PropRef::Prop(6)),
        fact(SPrime, OM, Mul, SPrime, PropRef::Prop(6)),
        fact(DPrime, E, Mul, DPrime, PropRef::Prop(6)),
        fact(SPrime, OCPrime, Conv, SPrime, PropRef::Prop(6)),
        // Proposition 7
        fact(DPrime, EPrime, Conv, DPrime, PropRef::Prop(7)),
        // Remark 3 (Ehrenpreis item 4 cites it)
        fact(D, E, Conv, E, PropRef::Remark3),
    ];
    static EXTRA: [MapFact; 4] = [
        // the remaining discontinuous Ehrenpreis maps proved inline
        fact(D, DPrime, Conv, E, PropRef::Remark5Item(5)),
        fact(DPrime, D, Conv, DPrime, PropRef::Remark5Item(9)),
        fact(E, EPrime, Conv, DPrime, PropRef::Remark5Item(10)),
        fact(D, DPrime, Mul, EPrime, PropRef::Remark5Item(14)),
    ];
    static ALL: std::sync::OnceLock<Vec<MapFact>> = std::sync::OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = FACTS.to_vec();
        v.extend_from_slice(&EXTRA);
        v
    })
}

/// Looks up a fact whose pair matches `(a, b)` exactly (in either order) at
/// the exact target.
pub fn exact_fact<'f>(
    facts: &'f [MapFact],
    a: &Space,
    b: &Space,
    op: BilinearOp,
    target: &Space,
) -> Option<&'f MapFact> {
    facts.iter().find(|f| {
        f.op == op
            && f.target.matches_exactly(target)
            && ((f.a.matches_exactly(a) && f.b.matches_exactly(b))
                || (f.a.matches_exactly(b) && f.b.matches_exactly(a)))
    })
}

/// Looks up a fact whose pair admits `(a, b)` componentwise (in either
/// order); used to push continuity down along embeddings.
pub fn embedding_fact<'f>(
    facts: &'f [MapFact],
    a: &Space,
    b: &Space,
    op: BilinearOp,
) -> Option<&'f MapFact> {
    facts.iter().find(|f| {
        f.op == op
            && ((f.a.admits_subspace(a) && f.b.admits_subspace(b))
                || (f.a.admits_subspace(b) && f.b.admits_subspace(a)))
    })
}

/// Emits the fourteen table rows in paper order.
pub fn table_entries() -> Vec<TableEntry> {
    Space::table_spaces(1)
        .expect("dimension 1")
        .into_iter()
        .map(|s| {
            let (m, mul_flag, mul_ref, c, conv_flag, conv_ref) = row(s.kind()).expect("total");
            TableEntry {
                space: s.kind().token().to_string(),
                multiplier: m.token().to_string(),
                mul_flag,
                mul_ref,
                convolutor: c.token().to_string(),
                conv_flag,
                conv_ref,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
}

/// Renders the table; text output is fixed-width, JSON output is the stable
/// schema `{space, multiplier, mul_flag, mul_ref, convolutor, conv_flag,
/// conv_ref}`.
pub fn emit_table(format: TableFormat) -> String {
    let entries = table_entries();
    match format {
        TableFormat::Json => serde_json::to_string_pretty(&entries).expect("table serializes"),
        TableFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("{:<8}| {:<13}| {:<13}\n", "E", "M(E)", "C(E)"));
            out.push_str(&format!("{:-<8}+{:-<14}+{:-<14}\n", "", "", ""));
            for e in &entries {
                let flag = |f: Flag| match f {
                    Flag::Continuous => 'o',
                    Flag::Discontinuous => 'x',
                };
                out.push_str(&format!(
                    "{:<8}| {:<7}{}({}) | {:<7}{}({})\n",
                    e.space,
                    e.multiplier,
                    flag(e.mul_flag),
                    e.mul_ref,
                    e.convolutor,
                    flag(e.conv_flag),
                    e.conv_ref,
                ));
            }
            out
        }
    }
}
