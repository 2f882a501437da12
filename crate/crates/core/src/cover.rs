//! Euler-characteristic bookkeeping along chains of blow-ups, contractions,
//! cyclic covers and cyclic quotients.
//!
//! Branch and fixed loci enter only through their Euler characteristic.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceNode {
    pub label: String,
    pub euler: i64,
    #[serde(default)]
    pub notes: String,
}

impl SurfaceNode {
    pub fn new(label: impl Into<String>, euler: i64) -> Self {
        SurfaceNode {
            label: label.into(),
            euler,
            notes: String::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverStep {
    BlowUp { points: i64 },
    Contract { curves: i64 },
    /// Totally branched over a locus of Euler characteristic `branch_euler`.
    CyclicCover { degree: i64, branch_euler: i64 },
    /// Free away from a fixed locus of Euler characteristic `fixed_euler`.
    CyclicQuotient { degree: i64, fixed_euler: i64 },
}

impl std::fmt::Display for CoverStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverStep::BlowUp { points } => write!(f, "blow_up({points})"),
            CoverStep::Contract { curves } => write!(f, "contract({curves})"),
            CoverStep::CyclicCover { degree, branch_euler } => {
                write!(f, "cyclic_cover({degree}, {branch_euler})")
            }
            CoverStep::CyclicQuotient { degree, fixed_euler } => {
                write!(f, "cyclic_quotient({degree}, {fixed_euler})")
            }
        }
    }
}

fn step_euler(chi: i64, step: &CoverStep) -> std::result::Result<i64, String> {
    match *step {
        CoverStep::BlowUp { points: k } | CoverStep::Contract { curves: k } if k < 0 => {
            Err(format!("negative count {k}"))
        }
        CoverStep::BlowUp { points } => Ok(chi + points),
        CoverStep::Contract { curves } => Ok(chi - curves),
        CoverStep::CyclicCover { degree, .. } | CoverStep::CyclicQuotient { degree, .. } if degree < 2 => {
            Err(format!("degree {degree} < 2"))
        }
        CoverStep::CyclicCover { degree, branch_euler } => Ok(degree * (chi - branch_euler) + branch_euler),
        CoverStep::CyclicQuotient { degree, fixed_euler } => {
            let free = chi - fixed_euler;
            if free % degree != 0 {
                return Err(format!("χ − χ_R = {free} is not divisible by {degree}"));
            }
            Ok(free / degree + fixed_euler)
        }
    }
}

pub fn apply_step(s: &SurfaceNode, step: &CoverStep) -> Result<SurfaceNode> {
    let euler = step_euler(s.euler, step).map_err(|reason| Error::InconsistentChain { step: 0, reason })?;
    Ok(SurfaceNode {
        label: format!("{} / {step}", s.label),
        euler,
        notes: String::new(),
    })
}

/// Every intermediate node, starting with `start`.
pub fn run_chain(start: &SurfaceNode, steps: &[CoverStep]) -> Result<Vec<SurfaceNode>> {
    let mut out = vec![start.clone()];
    for (i, step) in steps.iter().enumerate() {
        let last = out.last().expect("nonempty");
        let next = apply_step(last, step).map_err(|e| match e {
            Error::InconsistentChain { reason, .. } => Error::InconsistentChain { step: i, reason },
            e => e,
        })?;
        out.push(next);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedChain {
    pub name: String,
    pub start: SurfaceNode,
    pub steps: Vec<CoverStep>,
    /// Expected Euler characteristic after each step.
    pub expected: Vec<i64>,
}

impl NamedChain {
    pub fn run(&self) -> Result<Vec<SurfaceNode>> {
        run_chain(&self.start, &self.steps)
    }

    pub fn eulers(&self) -> Result<Vec<i64>> {
        Ok(self.run()?.iter().skip(1).map(|n| n.euler).collect())
    }
}

fn chain(name: &str, start: SurfaceNode, steps: Vec<CoverStep>, expected: Vec<i64>) -> NamedChain {
    NamedChain {
        name: name.into(),
        start,
        steps,
        expected,
    }
}

use CoverStep::*;

/// Abelian surface, blown up in the 9 + 18 points over the fixed points of
/// an order-3 automorphism, divided out and contracted to a K3.
pub fn gkm_chain() -> NamedChain {
    chain(
        "gkm",
        SurfaceNode::new("A", 0),
        vec![
            BlowUp { points: 9 },
            BlowUp { points: 18 },
            CyclicQuotient { degree: 3, fixed_euler: 36 },
            Contract { curves: 9 },
        ],
        vec![9, 27, 33, 24],
    )
}

/// Triple cover of the K3 surface, ending at an abelian surface.
pub fn triple_cover_chain() -> NamedChain {
    chain(
        "triple-cover",
        SurfaceNode::new("X", 24),
        vec![
            BlowUp { points: 9 },
            CyclicCover { degree: 3, branch_euler: 36 },
            Contract { curves: 18 },
            Contract { curves: 9 },
        ],
        vec![33, 27, 9, 0],
    )
}

/// Double cover branched over 8 rational curves, ending at a K3 surface.
pub fn double_cover_chain() -> NamedChain {
    chain(
        "double-cover",
        SurfaceNode::new("X", 24),
        vec![
            CyclicCover { degree: 2, branch_euler: 16 },
            Contract { curves: 8 },
        ],
        vec![32, 24],
    )
}

/// Double cover of a Kummer surface branched over its 16 nodal curves:
/// an abelian surface blown up in 16 points.
pub fn kummer_cover_chain() -> NamedChain {
    chain(
        "kummer-cover",
        SurfaceNode::new("Km", 24),
        vec![
            CyclicCover { degree: 2, branch_euler: 32 },
            Contract { curves: 16 },
        ],
        vec![16, 0],
    )
}

pub fn named_chains() -> Vec<NamedChain> {
    vec![gkm_chain(), triple_cover_chain(), double_cover_chain(), kummer_cover_chain()]
}

/// Self-intersection of the image of a curve `C` with `C² = sq` when its
/// pullback is `m` times `C` under a degree-`d` map: `m²·sq/d`.
pub fn image_self_intersection(sq: i64, m: i64, d: i64) -> Result<BigRational> {
    if d < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!("need d ≥ 1 and m ≥ 1 (got d={d}, m={m})")));
    }
    Ok(BigRational::new(BigInt::from(m * m * sq), BigInt::from(d)))
}

/// `d·sq`
pub fn pullback_square(sq: i64, d: i64) -> i64 {
    d * sq
}
