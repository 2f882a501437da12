//! The maximal order `O = End(E)` of a supersingular elliptic curve with
//! j-invariant 0 or 1728, driven by explicit multiplication tables.
//!
//! Elements are stored as four rational coordinates in a fixed Z-basis of
//! the order:
//!
//! * `J0`    (p ≡ 2 mod 3, `y² + y = x³`): `1, F, τ, η = (1+F)(2+τ)/3`
//! * `J1728` (p ≡ 3 mod 4, `y² = x³ − x`): `1, τ, (1+F)/2, η = τ(1+F)/2`
//!
//! where `F` is Frobenius and `τ` the automorphism of order 3 resp. 4. An
//! element lies in the order exactly when all four coordinates are integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::linalg::{det_exact, rat, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    J0,
    J1728,
}

impl CurveKind {
    pub fn basis_names(self) -> [&'static str; 4] {
        match self {
            CurveKind::J0 => ["1", "F", "τ", "η"],
            CurveKind::J1728 => ["1", "τ", "(1+F)/2", "η"],
        }
    }

    pub fn admits(self, p: u64) -> bool {
        is_prime(p)
            && match self {
                CurveKind::J0 => p % 3 == 2,
                CurveKind::J1728 => p % 4 == 3,
            }
    }

    /// Order of the automorphism τ.
    pub fn tau_order(self) -> u32 {
        match self {
            CurveKind::J0 => 3,
            CurveKind::J1728 => 4,
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::J0 => write!(f, "j0"),
            CurveKind::J1728 => write!(f, "j1728"),
        }
    }
}

impl std::str::FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "j0" | "0" => Ok(CurveKind::J0),
            "j1728" | "1728" => Ok(CurveKind::J1728),
            other => Err(Error::InvalidParameter(format!("unknown curve case {other:?}"))),
        }
    }
}

/// A curve case together with the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderCase {
    pub kind: CurveKind,
    pub p: u64,
}

impl OrderCase {
    pub fn new(kind: CurveKind, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InadmissiblePrime {
                p,
                reason: "not a prime".into(),
            });
        }
        if !kind.admits(p) {
            let reason = match kind {
                CurveKind::J0 => format!("j=0 needs p ≡ 2 mod 3, got p ≡ {} mod 3", p % 3),
                CurveKind::J1728 => format!("j=1728 needs p ≡ 3 mod 4, got p ≡ {} mod 4", p % 4),
            };
            return Err(Error::InadmissiblePrime { p, reason });
        }
        Ok(OrderCase { kind, p })
    }

    pub fn j0(p: u64) -> Result<Self> {
        Self::new(CurveKind::J0, p)
    }

    pub fn j1728(p: u64) -> Result<Self> {
        Self::new(CurveKind::J1728, p)
    }

    fn p_rat(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.p))
    }
}

impl fmt::Display for OrderCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/p={}", self.kind, self.p)
    }
}

type Coords = [BigRational; 4];

fn coords(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Coords {
    [a, b, c, d]
}

fn unit(i: usize) -> Coords {
    let mut c: Coords = Default::default();
    c[i] = BigRational::one();
    c
}

/// A table entry that the printed table gets wrong, with the value derived
/// from the stated relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableErratum {
    pub kind: CurveKind,
    pub row: usize,
    pub col: usize,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub derivation: &'static str,
}

pub fn table_errata(kind: CurveKind) -> Vec<TableErratum> {
    match kind {
        CurveKind::J0 => vec![],
        CurveKind::J1728 => vec![TableErratum {
            kind,
            row: 1,
            col: 3,
            printed: "τ·η = −η",
            corrected: "τ·η = −(1+F)/2",
            derivation: "τ·η = τ²·(1+F)/2 and τ² = −1",
        }],
    }
}

/// The 4×4 table of basis products `b_i · b_j`, each a coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTable {
    entries: Vec<Coords>,
}

impl MulTable {
    /// The table exactly as printed, including any known misprints.
    pub fn printed(case: OrderCase) -> Self {
        let p = case.p_rat();
        let third = |x: BigRational| x / rat(3);
        let quarter = |x: BigRational| x / rat(4);
        let r = rat;
        let entries = match case.kind {
            CurveKind::J0 => vec![
                // row 1
                unit(0),
                unit(1),
                unit(2),
                unit(3),
                // row F
                unit(1),
                coords(-p.clone(), r(0), r(0), r(0)),
                coords(r(-2), r(-2), r(-1), r(3)),
                coords(third(r(-2) * (&p + r(1))), r(0), third(-(r(1) + &p)), r(1)),
                // row τ
                unit(2),
                coords(r(2), r(1), r(1), r(-3)),
                coords(r(-1), r(0), r(-1), r(0)),
                coords(r(1), r(1), r(1), r(-2)),
                // row η
                unit(3),
                coords(third(r(2) - &p), r(1), third(&p + r(1)), r(-1)),
                coords(r(-1), r(-1), r(0), r(1)),
                coords(third(-(&p + r(1))), r(0), r(0), r(1)),
            ],
            CurveKind::J1728 => vec![
                // row 1
                unit(0),
                unit(1),
                unit(2),
                unit(3),
                // row τ
                unit(1),
                coords(r(-1), r(0), r(0), r(0)),
                unit(3),
                coords(r(0), r(0), r(0), r(-1)),
                // row (1+F)/2
                unit(2),
                coords(r(0), r(1), r(0), r(-1)),
                coords(quarter(-(r(1) + &p)), r(0), r(1), r(0)),
                coords(r(0), quarter(r(1) + &p), r(0), r(0)),
                // row η
                unit(3),
                coords(r(-1), r(0), r(1), r(0)),
                coords(r(0), quarter(-(r(1) + &p)), r(0), r(1)),
                coords(quarter(-(r(1) + &p)), r(0), r(0), r(0)),
            ],
        };
        MulTable { entries }
    }

    /// The printed table with [`table_errata`] applied.
    pub fn for_case(case: OrderCase) -> Self {
        let mut t = Self::printed(case);
        if case.kind == CurveKind::J1728 {
            // τ·η = −(1+F)/2
            t.entries[4 + 3] = coords(rat(0), rat(0), rat(-1), rat(0));
        }
        t
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coords {
        &self.entries[4 * i + j]
    }

    fn product(&self, x: &Coords, y: &Coords) -> Coords {
        let mut out: Coords = Default::default();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, e) in out.iter_mut().zip(self.entry(i, j)) {
                    if !e.is_zero() {
                        *o += &ab * e;
                    }
                }
            }
        }
        out
    }

    /// Basis triples `(i, j, k)` where `(b_i b_j) b_k ≠ b_i (b_j b_k)`.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let left = self.product(&self.product(&unit(i), &unit(j)), &unit(k));
                    let right = self.product(&unit(i), &self.product(&unit(j), &unit(k)));
                    if left != right {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Every basis product has integer coordinates.
    pub fn is_closed(&self) -> bool {
        self.entries.iter().flatten().all(BigRational::is_integer)
    }
}

/// Conjugates of the basis elements, from `F̄ = −F`, `τ̄ = τ⁻¹` and the
/// stated conjugate of `η`.
fn basis_conjugate(kind: CurveKind, i: usize) -> Coords {
    let r = rat;
    match (kind, i) {
        (_, 0) => unit(0),
        // F̄ = −F
        (CurveKind::J0, 1) => coords(r(0), r(-1), r(0), r(0)),
        // τ̄ = τ² = −1 − τ
        (CurveKind::J0, 2) => coords(r(-1), r(0), r(-1), r(0)),
        // η̄ = 1 − η
        (CurveKind::J0, 3) => coords(r(1), r(0), r(0), r(-1)),
        // τ̄ = τ³ = −τ
        (CurveKind::J1728, 1) => coords(r(0), r(-1), r(0), r(0)),
        // conj((1+F)/2) = (1−F)/2 = 1 − (1+F)/2
        (CurveKind::J1728, 2) => coords(r(1), r(0), r(-1), r(0)),
        // conj(τ(1+F)/2) = (1−F)/2 · τ̄ = −η
        (CurveKind::J1728, 3) => coords(r(0), r(0), r(0), r(-1)),
        _ => unreachable!("basis index out of range"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatElement {
    pub case: OrderCase,
    pub coords: Coords,
}

impl QuatElement {
    pub fn new(case: OrderCase, coords: [BigRational; 4]) -> Self {
        QuatElement { case, coords }
    }

    pub fn from_ints(case: OrderCase, c: [i64; 4]) -> Self {
        Self::new(case, c.map(rat))
    }

    pub fn zero(case: OrderCase) -> Self {
        Self::new(case, Default::default())
    }

    pub fn one(case: OrderCase) -> Self {
        Self::scalar(case, BigRational::one())
    }

    pub fn scalar(case: OrderCase, s: BigRational) -> Self {
        let mut c: Coords = Default::default();
        c[0] = s;
        Self::new(case, c)
    }

    pub fn basis(case: OrderCase, i: usize) -> Self {
        Self::new(case, unit(i))
    }

    pub fn basis_all(case: OrderCase) -> [Self; 4] {
        [0, 1, 2, 3].map(|i| Self::basis(case, i))
    }

    /// The automorphism τ.
    pub fn tau(case: OrderCase) -> Self {
        match case.kind {
            CurveKind::J0 => Self::basis(case, 2),
            CurveKind::J1728 => Self::basis(case, 1),
        }
    }

    /// Frobenius in the case basis; for `J1728` it is `2·(1+F)/2 − 1`.
    pub fn frobenius(case: OrderCase) -> Self {
        match case.kind {
            CurveKind::J0 => Self::basis(case, 1),
            CurveKind::J1728 => Self::from_ints(case, [-1, 0, 2, 0]),
        }
    }

    /// Parses four comma-separated rationals, e.g. `"1,0,-1/2,3"`.
    pub fn parse(case: OrderCase, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::InvalidParameter(format!(
                "expected 4 comma-separated coordinates, got {:?}",
                s
            )));
        }
        let mut c: Coords = Default::default();
        for (slot, part) in c.iter_mut().zip(parts) {
            *slot = part
                .parse::<BigRational>()
                .map_err(|e| Error::InvalidParameter(format!("bad coordinate {part:?}: {e}")))?;
        }
        Ok(Self::new(case, c))
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(BigRational::is_integer)
    }

    pub fn is_scalar(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.case, self.coords.clone().map(|c| c * s))
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&rat(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        quat_mul(self, other)
    }

    pub fn conj(&self) -> Self {
        quat_conj(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.case);
        for _ in 0..e {
            acc = quat_mul(&acc, self).expect("same case");
        }
        acc
    }

    /// Human-readable linear combination, e.g. `3η - 2F - τ - 2`.
    pub fn to_symbolic(&self) -> String {
        let names = self.case.kind.basis_names();
        let mut terms: Vec<(usize, &BigRational)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return "0".into();
        }
        // non-scalar terms first, constant last
        let lead_const = usize::from(terms[0].0 == 0);
        terms.rotate_left(lead_const);
        let mut out = String::new();
        for (k, (i, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(names[i]);
            } else {
                out.push_str(&format!("{mag}{}", names[i]));
            }
        }
        out
    }
}

impl fmt::Display for QuatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl Add for &QuatElement {
    type Output = QuatElement;

    fn add(self, rhs: &QuatElement) -> QuatElement {
        assert_eq!(self.case, rhs.case, "adding elements of different orders");
        let mut c = self.coords.clone();
        for (x, y) in c.iter_mut().zip(&rhs.coords) {
            *x += y;
        }
        QuatElement::new(self.case, c)
    }
}

impl Sub for &QuatElement {
    type Output = QuatElement;

    fn sub(self, rhs: &QuatElement) -> QuatElement {
        self + &(-rhs)
    }
}

impl Neg for &QuatElement {
    type Output = QuatElement;

    fn neg(self) -> QuatElement {
        QuatElement::new(self.case, self.coords.clone().map(|c| -c))
    }
}

fn check_case(x: &QuatElement, y: &QuatElement) -> Result<()> {
    if x.case != y.case {
        return Err(Error::CaseMismatch {
            left: x.case.to_string(),
            right: y.case.to_string(),
        });
    }
    Ok(())
}

pub fn quat_mul(x: &QuatElement, y: &QuatElement) -> Result<QuatElement> {
    check_case(x, y)?;
    let table = MulTable::for_case(x.case);
    Ok(QuatElement::new(x.case, table.product(&x.coords, &y.coords)))
}

pub fn quat_conj(x: &QuatElement) -> QuatElement {
    let mut out: Coords = Default::default();
    for (i, a) in x.coords.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(basis_conjugate(x.case.kind, i)) {
            *o += a * e;
        }
    }
    QuatElement::new(x.case, out)
}

/// `x + x̄` as a rational.
pub fn reduced_trace(x: &QuatElement) -> Result<BigRational> {
    let t = x + &quat_conj(x);
    if !t.is_scalar() {
        return Err(Error::Internal(format!("x + x̄ = {} is not scalar", t.to_symbolic())));
    }
    Ok(t.coords[0].clone())
}

/// `x · x̄` as a rational.
pub fn reduced_norm(x: &QuatElement) -> Result<BigRational> {
    let n = quat_mul(x, &quat_conj(x))?;
    if !n.is_scalar() {
        return Err(Error::Internal(format!("x·x̄ = {} is not scalar", n.to_symbolic())));
    }
    Ok(n.coords[0].clone())
}

/// Gram matrix `Trd(b_i · b̄_j)` of the trace form on the order basis.
pub fn trace_form(case: OrderCase) -> Result<RatMatrix> {
    let basis = QuatElement::basis_all(case);
    let mut m = RatMatrix::zeros(4, 4);
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            m.set(i, j, reduced_trace(&quat_mul(bi, &quat_conj(bj))?)?);
        }
    }
    Ok(m)
}

/// Reduced discriminant: the square root of `|det Trd(b_i b̄_j)|`.
pub fn order_reduced_discriminant(case: OrderCase) -> Result<BigInt> {
    let d = det_exact(&trace_form(case)?)?;
    if !d.is_integer() {
        return Err(Error::Internal(format!("trace-form determinant {d} not integral")));
    }
    let d = d.to_integer().abs();
    let root = d.sqrt();
    if &root * &root != d {
        return Err(Error::Internal(format!("trace-form determinant {d} is not a square")));
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn j0(p: u64) -> OrderCase {
        OrderCase::j0(p).unwrap()
    }

    fn j1728(p: u64) -> OrderCase {
        OrderCase::j1728(p).unwrap()
    }

    fn el(case: OrderCase, c: [i64; 4]) -> QuatElement {
        QuatElement::from_ints(case, c)
    }

    #[test]
    fn admissibility() {
        assert!(OrderCase::j0(2).is_ok());
        assert!(OrderCase::j0(7).is_err());
        assert!(OrderCase::j0(9).is_err());
        assert!(OrderCase::j1728(3).is_ok());
        assert!(OrderCase::j1728(5).is_err());
    }

    #[test]
    fn j0_table_entries() {
        let c = j0(5);
        let f = QuatElement::frobenius(c);
        let tau = QuatElement::tau(c);
        assert_eq!(f.mul(&f).unwrap(), el(c, [-5, 0, 0, 0]));
        assert_eq!(f.mul(&tau).unwrap(), el(c, [-2, -2, -1, 3]));
        assert_eq!(f.mul(&tau).unwrap().to_symbolic(), "-2F - τ + 3η - 2");
        let x = el(c, [3, -1, 4, 2]);
        assert_eq!(QuatElement::one(c).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&QuatElement::one(c)).unwrap(), x);
    }

    #[test]
    fn case_mismatch_is_an_error() {
        let a = QuatElement::one(j0(5));
        let b = QuatElement::one(j0(11));
        assert!(matches!(quat_mul(&a, &b), Err(Error::CaseMismatch { .. })));
    }

    #[test]
    fn conjugation() {
        let c = j0(11);
        let f = QuatElement::frobenius(c);
        assert_eq!(f.conj(), -&f);
        let eta = QuatElement::basis(c, 3);
        assert_eq!(eta.conj(), &QuatElement::one(c) - &eta);
        let x = el(c, [1, 2, -3, 5]);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn trace_and_norm() {
        let c = j0(5);
        assert_eq!(reduced_norm(&QuatElement::frobenius(c)).unwrap(), rat(5));
        assert_eq!(reduced_trace(&QuatElement::tau(c)).unwrap(), rat(-1));
        assert_eq!(reduced_trace(&QuatElement::one(c)).unwrap(), rat(2));
        let c = j1728(7);
        assert_eq!(reduced_norm(&QuatElement::frobenius(c)).unwrap(), rat(7));
        assert_eq!(reduced_trace(&QuatElement::tau(c)).unwrap(), rat(0));
        assert_eq!(reduced_norm(&QuatElement::basis(c, 2)).unwrap(), ratio(8, 4));
    }

    #[test]
    fn discriminants() {
        assert_eq!(order_reduced_discriminant(j0(5)).unwrap(), BigInt::from(5));
        assert_eq!(order_reduced_discriminant(j1728(7)).unwrap(), BigInt::from(7));
        assert_eq!(order_reduced_discriminant(j0(2)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn j0_table_is_associative_and_closed() {
        for p in [2, 5, 11, 17, 23] {
            let t = MulTable::for_case(j0(p));
            assert!(t.associativity_failures().is_empty(), "p = {p}");
            assert!(t.is_closed());
        }
    }

    #[test]
    fn printed_j1728_table_has_one_bad_entry() {
        for p in [3, 7, 11, 19] {
            let printed = MulTable::printed(j1728(p));
            let bad = printed.associativity_failures();
            assert_eq!(bad.len(), 10, "p = {p}");
            assert!(bad.contains(&(1, 1, 2)));
            assert!(MulTable::for_case(j1728(p)).associativity_failures().is_empty());
            let diff: Vec<(usize, usize)> = (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .filter(|&(i, j)| printed.entry(i, j) != MulTable::for_case(j1728(p)).entry(i, j))
                .collect();
            let e = &table_errata(CurveKind::J1728)[0];
            assert_eq!(diff, vec![(e.row, e.col)]);
        }
    }

    #[test]
    fn relations() {
        let c = j0(23);
        let tau = QuatElement::tau(c);
        let f = QuatElement::frobenius(c);
        assert_eq!(tau.pow(3), QuatElement::one(c));
        assert_eq!(f.mul(&tau).unwrap(), tau.pow(2).mul(&f).unwrap());
        assert_eq!(tau.conj(), tau.pow(2));

        let c = j1728(19);
        let tau = QuatElement::tau(c);
        let f = QuatElement::frobenius(c);
        assert_eq!(tau.pow(2), el(c, [-1, 0, 0, 0]));
        assert_eq!(tau.pow(4), QuatElement::one(c));
        assert_eq!(f.mul(&tau).unwrap(), tau.pow(3).mul(&f).unwrap());
        assert_eq!(f.mul(&f).unwrap(), el(c, [-19, 0, 0, 0]));
        // η = τ(1+F)/2
        assert_eq!(tau.mul(&QuatElement::basis(c, 2)).unwrap(), QuatElement::basis(c, 3));
    }

    #[test]
    fn eta_definition_j0() {
        // 3η = (1+F)(2+τ)
        let c = j0(11);
        let one = QuatElement::one(c);
        let lhs = QuatElement::basis(c, 3).scale_int(3);
        let rhs = (&one + &QuatElement::frobenius(c))
            .mul(&(&one.scale_int(2) + &QuatElement::tau(c)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_and_display() {
        let c = j0(5);
        let x = QuatElement::parse(c, "1, -1/2, 0, 3").unwrap();
        assert_eq!(x.coords[1], ratio(-1, 2));
        assert_eq!(x.to_string(), "1,-1/2,0,3");
        assert!(QuatElement::parse(c, "1,2,3").is_err());
        assert!(QuatElement::parse(c, "1,2,x,3").is_err());
    }
}
