//! Elliptic surfaces over `P¹`: Kodaira fibers, Euler numbers, trivial
//! lattices and the Mordell–Weil height pairing.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{direct_sum, hyperbolic_u, quotient_by_kernel, root_lattice, IntegralLattice, RootKind};
use crate::linalg::{det_exact, int_to_rat, rank, rat, ratio, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiberType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl FiberType {
    pub fn euler(self) -> i64 {
        match self {
            FiberType::I(n) => n as i64,
            FiberType::IStar(n) => n as i64 + 6,
            FiberType::II => 2,
            FiberType::III => 3,
            FiberType::IV => 4,
            FiberType::IVStar => 8,
            FiberType::IIIStar => 9,
            FiberType::IIStar => 10,
        }
    }

    /// Lattice spanned by the non-identity components.
    pub fn root(self) -> Option<RootKind> {
        match self {
            FiberType::I(n) if n >= 2 => Some(RootKind::A(n as usize - 1)),
            FiberType::I(_) | FiberType::II => None,
            FiberType::IStar(n) => Some(RootKind::D(n as usize + 4)),
            FiberType::III => Some(RootKind::A(1)),
            FiberType::IV => Some(RootKind::A(2)),
            FiberType::IVStar => Some(RootKind::E6),
            FiberType::IIIStar => Some(RootKind::E7),
            FiberType::IIStar => Some(RootKind::E8),
        }
    }

    /// Number of irreducible components.
    pub fn components(self) -> usize {
        1 + self.root().map_or(0, RootKind::rank)
    }

    /// Number of simple (multiplicity one) components, which is also the
    /// order of the component group.
    pub fn simple_components(self) -> usize {
        match self {
            FiberType::I(n) => n.max(1) as usize,
            FiberType::IStar(_) => 4,
            FiberType::II | FiberType::IIStar => 1,
            FiberType::III | FiberType::IIIStar => 2,
            FiberType::IV | FiberType::IVStar => 3,
        }
    }

    /// Local height correction for sections meeting simple components `i`
    /// and `j` (`0` is the identity component).
    pub fn contribution(self, i: usize, j: usize) -> Result<BigRational> {
        let m = self.simple_components();
        for c in [i, j] {
            if c >= m {
                return Err(Error::InvalidComponent {
                    fiber: self.to_string(),
                    component: c,
                });
            }
        }
        if i == 0 || j == 0 {
            return Ok(BigRational::zero());
        }
        let (i, j) = (i.min(j), i.max(j));
        Ok(match self {
            FiberType::I(n) => ratio((i * (n as usize - j)) as i64, n as i64),
            FiberType::III => ratio(1, 2),
            FiberType::IIIStar => ratio(3, 2),
            FiberType::IV => {
                if i == j {
                    ratio(2, 3)
                } else {
                    ratio(1, 3)
                }
            }
            FiberType::IVStar => {
                if i == j {
                    ratio(4, 3)
                } else {
                    ratio(2, 3)
                }
            }
            // 1 is the near component, 2 and 3 the far ones
            FiberType::IStar(b) => {
                let b4 = ratio(b as i64, 4);
                match (i, j) {
                    (1, 1) => rat(1),
                    (1, _) => ratio(1, 2),
                    (a, c) if a == c => rat(1) + b4,
                    _ => ratio(1, 2) + b4,
                }
            }
            FiberType::II | FiberType::IIStar => unreachable!("only the identity component is simple"),
        })
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::I(n) => write!(f, "I{n}"),
            FiberType::IStar(n) => write!(f, "I{n}*"),
            FiberType::II => write!(f, "II"),
            FiberType::III => write!(f, "III"),
            FiberType::IV => write!(f, "IV"),
            FiberType::IIStar => write!(f, "II*"),
            FiberType::IIIStar => write!(f, "III*"),
            FiberType::IVStar => write!(f, "IV*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberConfig {
    pub fibers: Vec<FiberType>,
    /// Holomorphic Euler characteristic; 2 for a K3 surface.
    pub chi: i64,
    /// Wild ramification correction per fiber.
    pub wild: Vec<i64>,
}

impl FiberConfig {
    pub fn new(fibers: Vec<FiberType>, chi: i64) -> Result<Self> {
        let wild = vec![0; fibers.len()];
        Self::with_wild(fibers, chi, wild)
    }

    pub fn with_wild(fibers: Vec<FiberType>, chi: i64, wild: Vec<i64>) -> Result<Self> {
        if wild.len() != fibers.len() || wild.iter().any(|&w| w < 0) {
            return Err(Error::InvalidParameter("one nonnegative wild term per fiber".into()));
        }
        let c = FiberConfig { fibers, chi, wild };
        if c.euler_total() != 12 * chi {
            return Err(Error::InvalidParameter(format!(
                "fiber Euler numbers sum to {}, expected 12·{chi}",
                c.euler_total()
            )));
        }
        Ok(c)
    }

    pub fn euler_total(&self) -> i64 {
        self.fibers.iter().map(|f| f.euler()).sum::<i64>() + self.wild.iter().sum::<i64>()
    }

    pub fn is_k3(&self) -> bool {
        self.chi == 2
    }

    /// `χ − 1`, valid over `P¹` with vanishing irregularity.
    pub fn geometric_genus(&self) -> i64 {
        self.chi - 1
    }

    pub fn reducible(&self) -> impl Iterator<Item = (usize, RootKind)> + '_ {
        self.fibers.iter().enumerate().filter_map(|(i, f)| f.root().map(|r| (i, r)))
    }
}

impl fmt::Display for FiberConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: Vec<(FiberType, usize)> = Vec::new();
        for t in &self.fibers {
            match counts.iter_mut().find(|(u, _)| u == t) {
                Some((_, k)) => *k += 1,
                None => counts.push((*t, 1)),
            }
        }
        let parts: Vec<String> = counts
            .iter()
            .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{k}{t}") })
            .collect();
        write!(f, "{}", parts.join(" + "))?;
        let w: i64 = self.wild.iter().sum();
        if w > 0 {
            write!(f, " (wild {w})")?;
        }
        Ok(())
    }
}

/// `I_{2ℓ}` at `0`, `ℓ` fibers `I₁`, and `III` (`ℓ ≡ 3 mod 4`) or `III*`
/// (`ℓ ≡ 1 mod 4`) at `∞`. In characteristic 2 the `I₁` fibers disappear
/// into a wild term of `ℓ` at `∞`.
pub fn fiber_config_for_ell(ell: u32, char2: bool) -> Result<FiberConfig> {
    if ell < 3 || ell % 2 == 0 {
        return Err(Error::InvalidParameter(format!("ℓ = {ell} must be odd and ≥ 3")));
    }
    let mut fibers = vec![FiberType::I(2 * ell)];
    if !char2 {
        fibers.extend(std::iter::repeat_n(FiberType::I(1), ell as usize));
    }
    fibers.push(if ell % 4 == 3 { FiberType::III } else { FiberType::IIIStar });
    let mut wild = vec![0; fibers.len()];
    if char2 {
        *wild.last_mut().expect("nonempty") = ell as i64;
    }
    let e: i64 = fibers.iter().map(|f| f.euler()).sum::<i64>() + wild.iter().sum::<i64>();
    FiberConfig::with_wild(fibers, e / 12, wild)
}

pub fn euler_total(c: &FiberConfig) -> i64 {
    c.euler_total()
}

/// `⌊ℓ/4⌋`
pub fn geometric_genus_for_ell(ell: u32) -> i64 {
    (ell / 4) as i64
}

/// `U ⊕` root lattices of the reducible fibers, in fiber order.
pub fn trivial_lattice(c: &FiberConfig) -> Result<IntegralLattice> {
    let roots = c
        .reducible()
        .map(|(_, r)| root_lattice(r))
        .collect::<Result<Vec<_>>>()?;
    let u = hyperbolic_u();
    let mut parts = vec![&u];
    parts.extend(roots.iter());
    Ok(direct_sum(&parts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionData {
    pub name: String,
    /// `P·O`; for the zero section itself, `O·O = −χ`.
    pub po: i64,
    /// Fiber index ↦ simple component met; missing entries mean identity.
    pub meets: BTreeMap<usize, usize>,
    /// Intersection numbers with other sections, by name.
    pub cross: BTreeMap<String, i64>,
    #[serde(default)]
    pub zero: bool,
}

impl SectionData {
    pub fn new(name: impl Into<String>, po: i64) -> Self {
        SectionData {
            name: name.into(),
            po,
            meets: BTreeMap::new(),
            cross: BTreeMap::new(),
            zero: false,
        }
    }

    pub fn zero_section(c: &FiberConfig) -> Self {
        SectionData {
            zero: true,
            ..Self::new("O", -c.chi)
        }
    }

    pub fn meeting(mut self, fiber: usize, component: usize) -> Self {
        self.meets.insert(fiber, component);
        self
    }

    pub fn component(&self, fiber: usize) -> usize {
        self.meets.get(&fiber).copied().unwrap_or(0)
    }

    fn intersection_with(&self, other: &SectionData) -> i64 {
        if other.zero {
            self.po
        } else if self.zero {
            other.po
        } else {
            self.cross
                .get(&other.name)
                .or_else(|| other.cross.get(&self.name))
                .copied()
                .unwrap_or(0)
        }
    }

    pub fn validate(&self, c: &FiberConfig) -> Result<()> {
        if self.po < 0 && !self.zero {
            return Err(Error::InvalidParameter(format!("{}: P·O = {} < 0", self.name, self.po)));
        }
        for (&fi, &comp) in &self.meets {
            let fiber = c
                .fibers
                .get(fi)
                .ok_or_else(|| Error::InvalidParameter(format!("{}: no fiber {fi}", self.name)))?;
            if comp >= fiber.simple_components() {
                return Err(Error::InvalidComponent {
                    fiber: fiber.to_string(),
                    component: comp,
                });
            }
        }
        Ok(())
    }
}

fn correction(p: &SectionData, q: &SectionData, c: &FiberConfig) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (i, f) in c.fibers.iter().enumerate() {
        total += f.contribution(p.component(i), q.component(i))?;
    }
    Ok(total)
}

/// `h(P) = 2χ + 2(P·O) − Σ contr` for `P = Q`, otherwise
/// `⟨P, Q⟩ = χ + (P·O) + (Q·O) − (P·Q) − Σ contr`.
pub fn height_pairing(p: &SectionData, q: &SectionData, c: &FiberConfig) -> Result<BigRational> {
    p.validate(c)?;
    q.validate(c)?;
    let corr = correction(p, q, c)?;
    if p.name == q.name {
        return Ok(rat(2 * c.chi + 2 * p.po) - corr);
    }
    Ok(rat(c.chi + p.po + q.po - p.intersection_with(q)) - corr)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwGram {
    pub gram: RatMatrix,
    pub rank: usize,
    /// Indices of a maximal nonsingular principal minor.
    pub minor: Vec<usize>,
    /// Determinant of that minor.
    pub disc: BigRational,
}

pub fn mw_gram(sections: &[SectionData], c: &FiberConfig) -> Result<MwGram> {
    let n = sections.len();
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = height_pairing(&sections[i], &sections[j], c)?;
            gram.set(i, j, v.clone());
            gram.set(j, i, v);
        }
    }
    let r = rank(&gram);
    let mut minor: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial = minor.clone();
        trial.push(i);
        if rank(&gram.submatrix(&trial, &trial)) == trial.len() {
            minor = trial;
        }
    }
    if minor.len() != r {
        return Err(Error::Internal("no nonsingular principal minor of full rank".into()));
    }
    let disc = if minor.is_empty() {
        rat(1)
    } else {
        det_exact(&gram.submatrix(&minor, &minor))?
    };
    Ok(MwGram {
        gram,
        rank: r,
        minor,
        disc,
    })
}

/// `|disc Triv| · disc MW / |tors|²`
pub fn shioda_tate_disc(trivial_disc: &BigInt, mw_disc: &BigRational, torsion_order: u64) -> Result<BigRational> {
    if torsion_order == 0 {
        return Err(Error::InvalidParameter("torsion order must be ≥ 1".into()));
    }
    let t = BigInt::from(torsion_order);
    Ok(int_to_rat(&trivial_disc.abs()) * mw_disc / int_to_rat(&(&t * &t)))
}

/// The `ℓ = 7` configuration with the seven sections `P_j = τʲP`: each is
/// disjoint from `O`, meets the component next to the identity on `I₁₄` and
/// the non-identity component of `III`, and any two meet once.
pub fn seven_sections() -> Result<(FiberConfig, Vec<SectionData>)> {
    let c = fiber_config_for_ell(7, false)?;
    let iii = c.fibers.len() - 1;
    let names: Vec<String> = (0..7).map(|j| format!("P{j}")).collect();
    let sections = names
        .iter()
        .map(|name| {
            let mut s = SectionData::new(name.clone(), 0).meeting(0, 1).meeting(iii, 1);
            s.cross = names.iter().filter(|m| *m != name).map(|m| (m.clone(), 1)).collect();
            s
        })
        .collect();
    Ok((c, sections))
}

/// The two-torsion section `(0, 0)` of the `ℓ = 7` surface: disjoint from
/// `O`, meeting the middle component of `I₁₄` and the non-identity
/// component of `III`.
pub fn two_torsion_section(c: &FiberConfig) -> SectionData {
    let half = match c.fibers[0] {
        FiberType::I(n) => n as usize / 2,
        _ => 0,
    };
    SectionData::new("T", 0).meeting(0, half).meeting(c.fibers.len() - 1, 1)
}

/// `III*` at `∞`, `II` at `0`, `I₁` elsewhere.
pub fn ex75_rational_config() -> Result<FiberConfig> {
    FiberConfig::new(vec![FiberType::IIIStar, FiberType::II, FiberType::I(1)], 1)
}

/// After the base change `t = s¹³`: the `I₁` becomes `I₁₃`.
pub fn ex75_k3_config() -> Result<FiberConfig> {
    FiberConfig::new(vec![FiberType::IIIStar, FiberType::II, FiberType::I(13)], 2)
}

/// Generators: `A₄` chain (0–3), `A₄` chain (4–7), `A₉` chain (8–16),
/// then the two line classes.
fn ell5_generators(c1_at: usize, c3_at: usize) -> RatMatrix {
    let n = 19;
    let mut g = RatMatrix::zeros(n, n);
    let link = |g: &mut RatMatrix, i: usize, j: usize| {
        g.set(i, j, rat(1));
        g.set(j, i, rat(1));
    };
    for i in 0..n {
        g.set(i, i, rat(-2));
    }
    for (start, len) in [(0, 4), (4, 4), (8, 9)] {
        for i in start..start + len - 1 {
            link(&mut g, i, i + 1);
        }
    }
    let (c1, c3) = (17, 18);
    link(&mut g, c1, 0);
    link(&mut g, c1, 4);
    link(&mut g, c1, 8 + c1_at);
    link(&mut g, c3, 8 + c3_at);
    g
}

/// Components of `A₉` met by the two lines.
pub const ELL5_LINE_COMPONENTS: (usize, usize) = (0, 4);

/// Exceptional lattice of the three rational double points (`A₄, A₄, A₉`);
/// in characteristic 2 extended by the two line classes.
pub fn desingularization_lattice_ell5(char2: bool) -> Result<IntegralLattice> {
    if !char2 {
        let a4 = root_lattice(RootKind::A(4))?;
        let a9 = root_lattice(RootKind::A(9))?;
        return Ok(direct_sum(&[&a4, &a4, &a9]));
    }
    let (c1, c3) = ELL5_LINE_COMPONENTS;
    quotient_by_kernel("A4 + A4 + A9 + lines", &ell5_generators(c1, c3))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCandidate {
    /// Component of `A₉` met by the line through all three points.
    pub first_line: usize,
    /// Component of `A₉` met by the second line.
    pub second_line: usize,
    pub rank: usize,
    pub disc: BigInt,
    pub accepted: bool,
}

/// All 81 placements of the two lines on the `A₉` chain with the resulting
/// lattice; accepted iff rank 18 and discriminant −5.
pub fn line_incidence_candidates() -> Result<Vec<LineCandidate>> {
    let mut out = Vec::new();
    for a in 0..9 {
        for b in 0..9 {
            let l = quotient_by_kernel("candidate", &ell5_generators(a, b))?;
            let disc = det_exact(&l.gram)?.to_integer();
            let accepted = l.rank() == 18 && disc == BigInt::from(-5);
            out.push(LineCandidate {
                first_line: a,
                second_line: b,
                rank: l.rank(),
                disc,
                accepted,
            });
        }
    }
    Ok(out)
}
