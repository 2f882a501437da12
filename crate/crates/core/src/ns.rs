//! Néron–Severi lattices of `E × E` and of its `α_p`-quotient `A`, modelled
//! by 2×2 Hermitian matrices over the order `O`.
//!
//! A class corresponds to `[[α, β], [β̄, δ]]` with `α, δ ∈ Z` and `β ∈ O`, and
//!
//! ```text
//! L₁·L₂ = α₂δ₁ + α₁δ₂ − (β̄₁β₂ + β̄₂β₁)
//! ```
//!
//! The sublattice `H′` (`p | α`, `p | δ`, `β ∈ F·O`) is the image of `NS(A)`
//! under pullback, which multiplies intersection numbers by `p`; the
//! `NS(A)` pairing is therefore the `H` pairing scaled by `1/p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::exact_power_of;
use crate::error::{Error, Result};
use crate::linalg::{det_exact, int_to_rat, integer_kernel, rat, solve_rational, RatMatrix};
use crate::quat::{quat_conj, quat_mul, CurveKind, OrderCase, QuatElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermElement {
    pub case: OrderCase,
    pub alpha: BigInt,
    pub delta: BigInt,
    /// Upper-right entry; the lower-left is its conjugate.
    pub beta: QuatElement,
}

impl HermElement {
    pub fn new(case: OrderCase, alpha: BigInt, delta: BigInt, beta: QuatElement) -> Self {
        HermElement {
            case,
            alpha,
            delta,
            beta,
        }
    }

    pub fn diagonal(case: OrderCase, alpha: i64, delta: i64) -> Self {
        Self::new(case, alpha.into(), delta.into(), QuatElement::zero(case))
    }

    pub fn off_diagonal(beta: QuatElement) -> Self {
        Self::new(beta.case, BigInt::zero(), BigInt::zero(), beta)
    }

    /// `j(E₁) = diag(0, 1)`.
    pub fn e1(case: OrderCase) -> Self {
        Self::diagonal(case, 0, 1)
    }

    /// `j(E₂) = diag(1, 0)`.
    pub fn e2(case: OrderCase) -> Self {
        Self::diagonal(case, 1, 0)
    }

    pub fn in_h(&self) -> bool {
        self.beta.is_integral()
    }

    /// `p | α`, `p | δ` and `β ∈ F·O`.
    pub fn in_hprime(&self) -> bool {
        let p = BigInt::from(self.case.p);
        if !self.in_h() || !self.alpha.is_multiple_of(&p) || !self.delta.is_multiple_of(&p) {
            return false;
        }
        // F⁻¹ = F̄ / p
        let f = QuatElement::frobenius(self.case);
        let x = quat_mul(&quat_conj(&f), &self.beta)
            .expect("same case")
            .scale(&BigRational::new(BigInt::one(), p));
        x.is_integral()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.case,
            &self.alpha + &other.alpha,
            &self.delta + &other.delta,
            &self.beta + &other.beta,
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(
            self.case,
            &self.alpha * k,
            &self.delta * k,
            self.beta.scale(&int_to_rat(k)),
        )
    }

    /// `2·det` of the Hermitian matrix, i.e. `2(αδ − Nrd β)`.
    pub fn twice_det(&self) -> Result<BigRational> {
        let nrd = crate::quat::reduced_norm(&self.beta)?;
        Ok(rat(2) * (int_to_rat(&(&self.alpha * &self.delta)) - nrd))
    }

    /// `(α, δ, β₀, β₁, β₂, β₃)`.
    pub fn flatten(&self) -> Vec<BigRational> {
        let mut v = vec![int_to_rat(&self.alpha), int_to_rat(&self.delta)];
        v.extend(self.beta.coords.iter().cloned());
        v
    }

    pub fn to_matrix(&self) -> QuatMatrix2 {
        let s = |n: &BigInt| QuatElement::scalar(self.case, int_to_rat(n));
        QuatMatrix2 {
            e: [
                [s(&self.alpha), self.beta.clone()],
                [quat_conj(&self.beta), s(&self.delta)],
            ],
        }
    }
}

impl std::fmt::Display for HermElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.alpha,
            self.beta.to_symbolic(),
            quat_conj(&self.beta).to_symbolic(),
            self.delta
        )
    }
}

pub fn herm_pairing(l1: &HermElement, l2: &HermElement) -> Result<BigInt> {
    if l1.case != l2.case {
        return Err(Error::CaseMismatch {
            left: l1.case.to_string(),
            right: l2.case.to_string(),
        });
    }
    let cross = &quat_mul(&quat_conj(&l1.beta), &l2.beta)?
        + &quat_mul(&quat_conj(&l2.beta), &l1.beta)?;
    if !cross.is_scalar() {
        return Err(Error::Internal(format!(
            "γ₁β₂ + γ₂β₁ = {} is not scalar",
            cross.to_symbolic()
        )));
    }
    let value = int_to_rat(&(&l2.alpha * &l1.delta + &l1.alpha * &l2.delta)) - &cross.coords[0];
    if !value.is_integer() {
        return Err(Error::Internal(format!("intersection number {value} is not integral")));
    }
    Ok(value.to_integer())
}

/// A 2×2 matrix over the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatMatrix2 {
    pub e: [[QuatElement; 2]; 2],
}

impl QuatMatrix2 {
    pub fn diag(a: QuatElement, d: QuatElement) -> Self {
        let z = QuatElement::zero(a.case);
        QuatMatrix2 {
            e: [[a, z.clone()], [z, d]],
        }
    }

    pub fn identity(case: OrderCase) -> Self {
        Self::diag(QuatElement::one(case), QuatElement::one(case))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let entry = |i: usize, j: usize| -> Result<QuatElement> {
            Ok(&quat_mul(&self.e[i][0], &other.e[0][j])? + &quat_mul(&self.e[i][1], &other.e[1][j])?)
        };
        Ok(QuatMatrix2 {
            e: [[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]],
        })
    }

    /// `ᵗḡ`
    pub fn conj_transpose(&self) -> Self {
        QuatMatrix2 {
            e: [
                [quat_conj(&self.e[0][0]), quat_conj(&self.e[1][0])],
                [quat_conj(&self.e[0][1]), quat_conj(&self.e[1][1])],
            ],
        }
    }

    /// Reads the matrix back as a Hermitian class.
    pub fn to_herm(&self) -> Result<HermElement> {
        let [[a, b], [c, d]] = &self.e;
        let scalar_int = |x: &QuatElement, name: &str| -> Result<BigInt> {
            if x.is_scalar() && x.coords[0].is_integer() {
                Ok(x.coords[0].to_integer())
            } else {
                Err(Error::Internal(format!(
                    "diagonal entry {name} = {} is not an integer",
                    x.to_symbolic()
                )))
            }
        };
        if *c != quat_conj(b) {
            return Err(Error::Internal("matrix is not Hermitian".into()));
        }
        Ok(HermElement::new(a.case, scalar_int(a, "α")?, scalar_int(d, "δ")?, b.clone()))
    }
}

/// The pullback `g*L`, represented as `ᵗḡ · j(L) · g`.
pub fn pullback_action(g: &QuatMatrix2, l: &HermElement) -> Result<HermElement> {
    let out = g.conj_transpose().mul(&l.to_matrix())?.mul(g)?.to_herm()?;
    if !out.in_h() {
        return Err(Error::Internal("pullback left the lattice H".into()));
    }
    Ok(out)
}

/// `diag(τ, τ)`, the automorphism `τ × τ` of `E × E`.
pub fn tau_times_tau(case: OrderCase) -> QuatMatrix2 {
    QuatMatrix2::diag(QuatElement::tau(case), QuatElement::tau(case))
}

/// `E₁, E₂, D₁…D₄` with `j(D_i) = [[0, β_i], [β̄_i, 0]]` over the order basis.
pub fn h_basis(case: OrderCase) -> Vec<HermElement> {
    let mut b = vec![HermElement::e1(case), HermElement::e2(case)];
    b.extend(QuatElement::basis_all(case).into_iter().map(HermElement::off_diagonal));
    b
}

/// `diag(0, p)`, `diag(p, 0)` and `[[0, Fβ_i], [conj(Fβ_i), 0]]`.
pub fn hprime_basis(case: OrderCase) -> Vec<HermElement> {
    let p = case.p as i64;
    let f = QuatElement::frobenius(case);
    let mut b = vec![HermElement::diagonal(case, 0, p), HermElement::diagonal(case, p, 0)];
    b.extend(
        QuatElement::basis_all(case)
            .iter()
            .map(|bi| HermElement::off_diagonal(quat_mul(&f, bi).expect("same case"))),
    );
    b
}

/// A set of classes with their (scaled) intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsLattice {
    pub basis: Vec<HermElement>,
    pub gram: RatMatrix,
    pub scale: BigRational,
}

impl NsLattice {
    /// Gram matrix `scale · (b_i · b_j)`; it must come out integral.
    pub fn new(basis: Vec<HermElement>, scale: BigRational) -> Result<Self> {
        let n = basis.len();
        let mut gram = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = int_to_rat(&herm_pairing(&basis[i], &basis[j])?) * &scale;
                gram.set(i, j, v.clone());
                gram.set(j, i, v);
            }
        }
        gram.to_int_rows()?;
        Ok(NsLattice { basis, gram, scale })
    }

    pub fn h_pairing(basis: Vec<HermElement>) -> Result<Self> {
        Self::new(basis, BigRational::one())
    }

    /// The `NS(A)` pairing on classes of `H′`.
    pub fn ns_a_pairing(basis: Vec<HermElement>) -> Result<Self> {
        let p = basis
            .first()
            .map(|b| b.case.p)
            .ok_or_else(|| Error::InvalidParameter("empty basis".into()))?;
        Self::new(basis, BigRational::new(BigInt::one(), BigInt::from(p)))
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn det(&self) -> Result<BigInt> {
        Ok(det_exact(&self.gram)?.to_integer())
    }
}

/// Coordinates of `x` in a linearly independent family, or `None` when `x`
/// is outside its rational span.
pub fn coordinates_in(basis: &[HermElement], x: &HermElement) -> Option<Vec<BigRational>> {
    let cols: Vec<Vec<BigRational>> = basis.iter().map(HermElement::flatten).collect();
    let m = RatMatrix::from_rows(cols).ok()?.transpose();
    let c = solve_rational(&m, &x.flatten())?;
    // solve_rational zeroes free variables; confirm an exact hit
    (m.mul_vec(&c).ok()? == x.flatten()).then_some(c)
}

/// Every element of `xs` is an integral combination of `basis`.
pub fn contains_all(basis: &[HermElement], xs: &[HermElement]) -> bool {
    xs.iter().all(|x| {
        coordinates_in(basis, x).is_some_and(|c| c.iter().all(BigRational::is_integer))
    })
}

pub fn same_lattice(a: &[HermElement], b: &[HermElement]) -> bool {
    contains_all(a, b) && contains_all(b, a)
}

/// Matrix of `L ↦ g*L` on `basis`: column `j` holds the coordinates of the
/// image of `basis[j]`.
pub fn action_matrix(g: &QuatMatrix2, basis: &[HermElement]) -> Result<RatMatrix> {
    let n = basis.len();
    let mut m = RatMatrix::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        let image = pullback_action(g, b)?;
        let c = coordinates_in(basis, &image)
            .ok_or_else(|| Error::Internal(format!("image of basis element {j} left the span")))?;
        for (i, v) in c.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct InvariantLattice {
    pub case: OrderCase,
    /// Action of `τ × τ` on the `H′` basis.
    pub action: RatMatrix,
    /// Kernel of `action − I`, in `H′` coordinates.
    pub kernel: Vec<Vec<BigInt>>,
    /// Invariant classes with the `H` pairing.
    pub h: NsLattice,
    /// The same classes with the `NS(A)` pairing.
    pub ns_a: NsLattice,
}

/// Invariant sublattice `(H′)^⟨τ×τ⟩`, computed from the action matrix.
pub fn invariant_sublattice(case: OrderCase) -> Result<InvariantLattice> {
    let basis = hprime_basis(case);
    let action = action_matrix(&tau_times_tau(case), &basis)?;
    if !action.is_integral() {
        return Err(Error::Internal("τ × τ does not preserve H′".into()));
    }
    let kernel = integer_kernel(&action.sub(&RatMatrix::identity(basis.len()))?)?;
    if kernel.len() != 4 {
        return Err(Error::Internal(format!(
            "invariant sublattice has rank {}, expected 4",
            kernel.len()
        )));
    }
    let classes: Vec<HermElement> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .zip(&basis)
                .fold(HermElement::diagonal(case, 0, 0), |acc, (c, b)| acc.add(&b.scale(c)))
        })
        .collect();
    Ok(InvariantLattice {
        case,
        action,
        kernel,
        h: NsLattice::h_pairing(classes.clone())?,
        ns_a: NsLattice::ns_a_pairing(classes)?,
    })
}

/// The invariant generators as listed by hand for each case.
pub fn listed_invariant_basis(case: OrderCase) -> Vec<HermElement> {
    let p = case.p as i64;
    let tau = QuatElement::tau(case);
    let mut b = vec![
        HermElement::diagonal(case, 0, p),
        HermElement::diagonal(case, p, 0),
        HermElement::off_diagonal(QuatElement::scalar(case, rat(p))),
    ];
    let last = match case.kind {
        // 2p + pτ
        CurveKind::J0 => &QuatElement::scalar(case, rat(2 * p)) + &tau.scale_int(p),
        // pτ
        CurveKind::J1728 => tau.scale_int(p),
    };
    b.push(HermElement::off_diagonal(last));
    b
}

/// Integer kernel of `x ↦ τxτ − x` on the order, in order coordinates.
pub fn conjugation_fixed_space(case: OrderCase) -> Result<Vec<Vec<BigInt>>> {
    let tau = QuatElement::tau(case);
    let mut m = RatMatrix::zeros(4, 4);
    for (j, b) in QuatElement::basis_all(case).iter().enumerate() {
        let img = &quat_mul(&quat_mul(&tau, b)?, &tau)? - b;
        for (i, v) in img.coords.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    integer_kernel(&m)
}

/// `σ` with `|disc| = p^{2σ}`, if any.
pub fn artin_invariant_from_disc(disc: &BigInt, p: u64) -> Option<u32> {
    let e = exact_power_of(disc, p)?;
    (e % 2 == 0).then_some(e / 2)
}
