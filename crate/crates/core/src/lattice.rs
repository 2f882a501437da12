//! Integral lattices given by Gram matrices: root lattices, sums, discriminant
//! groups, overlattices and bounds on the Artin invariant.
//!
//! Root lattices are negative definite, `U` is `[[0, 1], [1, 0]]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::valuation;
use crate::error::{Error, Result};
use crate::linalg::{
    det_exact, hermite_rows, int_to_rat, integer_kernel, inverse, smith_normal_form, RatMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl RootKind {
    pub fn rank(self) -> usize {
        match self {
            RootKind::A(n) | RootKind::D(n) => n,
            RootKind::E6 => 6,
            RootKind::E7 => 7,
            RootKind::E8 => 8,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            RootKind::A(0) => Err(Error::InvalidRootKind("A_n needs n ≥ 1".into())),
            RootKind::D(n) if n < 4 => Err(Error::InvalidRootKind(format!("D{n}: D_n needs n ≥ 4"))),
            k => Ok(k),
        }
    }

    /// Edges of the Dynkin diagram (0-based).
    fn edges(self) -> Vec<(usize, usize)> {
        let chain = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self {
            RootKind::A(n) => chain(n),
            RootKind::D(n) => {
                // chain 0 … n−2 with node n−1 attached to n−3
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            // chain 0 … n−2 with node n−1 attached to node 2
            RootKind::E6 | RootKind::E7 | RootKind::E8 => {
                let n = self.rank();
                let mut e = chain(n - 1);
                e.push((2, n - 1));
                e
            }
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A(n) => write!(f, "A{n}"),
            RootKind::D(n) => write!(f, "D{n}"),
            RootKind::E6 => write!(f, "E6"),
            RootKind::E7 => write!(f, "E7"),
            RootKind::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for RootKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRootKind(s.to_string());
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = tail.parse().map_err(|_| bad())?;
        let kind = match (head.to_ascii_uppercase().as_str(), n) {
            ("A", n) => RootKind::A(n),
            ("D", n) => RootKind::D(n),
            ("E", 6) => RootKind::E6,
            ("E", 7) => RootKind::E7,
            ("E", 8) => RootKind::E8,
            _ => return Err(bad()),
        };
        kind.validate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralLattice {
    pub label: String,
    pub gram: RatMatrix,
}

/// Finite abelian group `⊕ Z/d_i`, `d₁ | d₂ | …`, all `d_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscGroup {
    pub elementary_divisors: Vec<BigInt>,
}

impl DiscGroup {
    pub fn order(&self) -> BigInt {
        self.elementary_divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.elementary_divisors.is_empty()
    }
}

impl fmt::Display for DiscGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.elementary_divisors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `L*/L` with explicit generators in the coordinates of `L`.
#[derive(Clone, Debug)]
pub struct DiscForm {
    pub group: DiscGroup,
    /// `generators[i]` has order `group.elementary_divisors[i]`.
    pub generators: Vec<Vec<BigRational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub label: String,
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
}

impl IntegralLattice {
    pub fn new(label: impl Into<String>, gram: RatMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
        }
        gram.to_int_rows()?;
        Ok(IntegralLattice {
            label: label.into(),
            gram,
        })
    }

    pub fn from_i64(label: impl Into<String>, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(label, RatMatrix::from_i64_rows(rows)?)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).to_integer().is_even())
    }

    pub fn pairing(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        let gy = self.gram.mul_vec(y)?;
        Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    pub fn discriminant(&self) -> Result<BigInt> {
        let d = det_exact(&self.gram)?;
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(d.to_integer())
    }

    pub fn discriminant_group(&self) -> Result<DiscGroup> {
        Ok(self.discriminant_form()?.group)
    }

    /// `L* = V·D⁻¹·Zⁿ` from `U·G·V = D`.
    pub fn discriminant_form(&self) -> Result<DiscForm> {
        let snf = smith_normal_form(&self.gram)?;
        if snf.rank() < self.rank() {
            return Err(Error::Singular);
        }
        let mut group = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in snf.diag.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            let scale = BigRational::new(BigInt::one(), d.clone());
            generators.push(snf.right.column(i).iter().map(|x| x * &scale).collect());
            group.push(d.clone());
        }
        Ok(DiscForm {
            group: DiscGroup {
                elementary_divisors: group,
            },
            generators,
        })
    }

    /// Number of elementary divisors divisible by `p`.
    pub fn p_length(&self, p: u64) -> Result<usize> {
        let p = BigInt::from(p);
        Ok(self
            .discriminant_group()?
            .elementary_divisors
            .iter()
            .filter(|d| d.is_multiple_of(&p))
            .count())
    }

    pub fn to_json(&self) -> Result<LatticeJson> {
        let gram = self
            .gram
            .to_int_rows()?
            .into_iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        x.to_i64()
                            .ok_or_else(|| Error::InvalidParameter(format!("entry {x} exceeds i64")))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        Ok(LatticeJson {
            label: self.label.clone(),
            rank: self.rank(),
            gram,
        })
    }

    pub fn from_json(j: &LatticeJson) -> Result<Self> {
        if j.gram.len() != j.rank {
            return Err(Error::Dimension(format!(
                "rank {} but {} Gram rows",
                j.rank,
                j.gram.len()
            )));
        }
        Self::from_i64(j.label.clone(), &j.gram)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json()?)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

impl fmt::Display for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {})", self.label, self.rank())
    }
}

pub fn root_lattice(kind: RootKind) -> Result<IntegralLattice> {
    let kind = kind.validate()?;
    let n = kind.rank();
    let mut g = RatMatrix::zeros(n, n);
    for i in 0..n {
        g.set(i, i, BigRational::from_integer((-2).into()));
    }
    for (i, j) in kind.edges() {
        g.set(i, j, BigRational::one());
        g.set(j, i, BigRational::one());
    }
    IntegralLattice::new(kind.to_string(), g)
}

pub fn hyperbolic_u() -> IntegralLattice {
    IntegralLattice::from_i64("U", &[vec![0, 1], vec![1, 0]]).expect("valid Gram")
}

/// `⟨m⟩`
pub fn rank1(m: i64) -> IntegralLattice {
    IntegralLattice::from_i64(format!("<{m}>"), &[vec![m]]).expect("valid Gram")
}

pub fn direct_sum(parts: &[&IntegralLattice]) -> IntegralLattice {
    let blocks: Vec<&RatMatrix> = parts.iter().map(|l| &l.gram).collect();
    let label = parts.iter().map(|l| l.label.as_str()).collect::<Vec<_>>().join(" + ");
    IntegralLattice {
        label,
        gram: RatMatrix::block_diag(&blocks),
    }
}

/// `k` copies of `l`.
pub fn repeat(l: &IntegralLattice, k: usize) -> IntegralLattice {
    let parts: Vec<&IntegralLattice> = std::iter::repeat_n(l, k).collect();
    let mut out = direct_sum(&parts);
    out.label = format!("{k}{}", l.label);
    out
}

/// Elements of order 2 in `L*/L` with `x² ∈ 2Z`, as representatives in
/// the coordinates of `L`.
pub fn isotropic_order_two(l: &IntegralLattice) -> Result<Vec<Vec<BigRational>>> {
    let form = l.discriminant_form()?;
    let two = BigInt::from(2);
    let halves: Vec<Vec<BigRational>> = form
        .generators
        .iter()
        .zip(&form.group.elementary_divisors)
        .filter(|(_, d)| d.is_even())
        .map(|(g, d)| {
            let k = int_to_rat(&(d / &two));
            g.iter().map(|x| x * &k).collect()
        })
        .collect();
    if halves.len() > 24 {
        return Err(Error::InvalidParameter("2-rank of L*/L too large to enumerate".into()));
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << halves.len()) {
        let mut x = vec![BigRational::zero(); l.rank()];
        for (i, h) in halves.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, b) in x.iter_mut().zip(h) {
                    *a += b;
                }
            }
        }
        let q = l.pairing(&x, &x)?;
        if q.is_integer() && q.to_integer().is_even() {
            out.push(x);
        }
    }
    Ok(out)
}

/// Overlattice spanned by `L` and the glue vectors (coordinates in `L`).
/// Returns the new lattice in a Hermite-reduced basis and the index.
pub fn overlattice(l: &IntegralLattice, glue: &[Vec<BigRational>]) -> Result<(IntegralLattice, BigInt)> {
    let n = l.rank();
    if glue.is_empty() {
        return Ok((l.clone(), BigInt::one()));
    }
    for (gi, g) in glue.iter().enumerate() {
        if g.len() != n {
            return Err(Error::Dimension(format!("glue {gi} has length {}, rank is {n}", g.len())));
        }
        let gg = l.gram.mul_vec(g)?;
        if let Some((j, v)) = gg.iter().enumerate().find(|(_, v)| !v.is_integer()) {
            return Err(Error::NonIntegralGlue {
                glue: gi,
                other: format!("basis vector {j}"),
                value: v.clone(),
            });
        }
        let sq = l.pairing(g, g)?;
        if !sq.is_integer() || (l.is_even() && sq.to_integer().is_odd()) {
            return Err(Error::NonIntegralGlue {
                glue: gi,
                other: "itself".into(),
                value: sq,
            });
        }
        for (hi, h) in glue.iter().enumerate().take(gi) {
            let v = l.pairing(g, h)?;
            if !v.is_integer() {
                return Err(Error::NonIntegralGlue {
                    glue: gi,
                    other: format!("glue {hi}"),
                    value: v,
                });
            }
        }
    }
    let den = glue
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = int_to_rat(&den);
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { den.clone() } else { BigInt::zero() }).collect())
        .collect();
    rows.extend(glue.iter().map(|g| g.iter().map(|x| (x * &scale).to_integer()).collect()));
    let hnf = hermite_rows(&rows);
    let basis = RatMatrix::from_int_rows(&hnf)?.scale(&BigRational::new(BigInt::one(), den));
    let index = BigRational::one() / det_exact(&basis)?.abs();
    if !index.is_integer() {
        return Err(Error::Internal(format!("overlattice index {index} is not integral")));
    }
    let gram = basis.congruence(&l.gram)?;
    let out = IntegralLattice::new(format!("{}+glue", l.label), gram)?;
    Ok((out, index.to_integer()))
}

/// `v = k·w` for some integral `w`.
pub fn is_divisible(v: &[BigInt], k: &BigInt) -> bool {
    if k.is_zero() {
        return v.iter().all(Zero::is_zero);
    }
    v.iter().all(|x| x.is_multiple_of(k))
}

/// Lattice `Zⁿ / ker(G)` for a degenerate Gram matrix `G` on `n` generators.
pub fn quotient_by_kernel(label: impl Into<String>, gram: &RatMatrix) -> Result<IntegralLattice> {
    let n = gram.rows();
    let kernel = integer_kernel(gram)?;
    let k = kernel.len();
    if k == 0 {
        return IntegralLattice::new(label, gram.clone());
    }
    let snf = smith_normal_form(&RatMatrix::from_int_rows(&kernel)?)?;
    if snf.diag.iter().any(|d| !d.is_one()) {
        return Err(Error::Internal("kernel is not saturated".into()));
    }
    // rows of right⁻¹ form a basis of Zⁿ whose first k span the kernel
    let basis = inverse(&snf.right)?;
    let keep: Vec<usize> = (k..n).collect();
    let all: Vec<usize> = (0..n).collect();
    let complement = basis.submatrix(&keep, &all);
    IntegralLattice::new(label, complement.congruence(gram)?)
}

/// `⌊(22 − n)/2⌋`, valid when `p ∤ disc L`.
pub fn artin_bound(l: &IntegralLattice, p: u64) -> Result<u32> {
    let n = l.rank();
    if n > 22 {
        return Err(Error::InvalidParameter(format!("rank {n} exceeds 22")));
    }
    let disc = l.discriminant()?;
    if disc.is_multiple_of(&BigInt::from(p)) {
        return Err(Error::PrimeDividesDiscriminant { disc, p });
    }
    Ok(((22 - n) / 2) as u32)
}

/// `2σ ≤ e + max_{0≤t≤e} [(22 − n)(1 + 2t) − 2t]` with `e = ord_p(disc)`.
pub fn artin_bound_adjusted(n: usize, disc: &BigInt, p: u64) -> Result<u32> {
    if n > 22 {
        return Err(Error::InvalidParameter(format!("rank {n} exceeds 22")));
    }
    let e = valuation(disc, p).ok_or(Error::Singular)? as i64;
    let m = 22 - n as i64;
    let best = (0..=e).map(|t| m * (1 + 2 * t) - 2 * t).max().unwrap_or(m);
    Ok(((e + best) / 2) as u32)
}
