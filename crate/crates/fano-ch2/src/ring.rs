//! Graded ring engine for cycle classes on modeled spaces.
//!
//! A [`SpaceModel`] carries a monomial basis per codimension, a rewrite
//! system that normalizes products into that basis, a degree functional on
//! the top graded piece, and declared effective-cone generators per cycle
//! dimension. All coefficients are exact rationals.
//!
//! Two ring backends exist. [`PolyRing`] covers the fully graded catalog
//! members (projective spaces, weighted projective spaces, complete
//! intersections, products, projective bundles): a quotient of a polynomial
//! ring by one power rule per variable. [`TableRing`] covers the truncated
//! members (Grassmannians, blow-ups), where products are stored explicitly
//! for the codimensions the model supports.

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector over the ring's variables.
pub type Monomial = Vec<u32>;

/// `var^cap = replacement` (empty replacement means zero).
#[derive(Debug, Clone)]
pub struct PowerRule {
    pub cap: u32,
    pub replacement: Vec<(Monomial, Rat)>,
}

impl PowerRule {
    pub fn nilpotent(cap: u32) -> Self {
        PowerRule { cap, replacement: Vec::new() }
    }
}

/// Quotient of `Q[vars]` by one power rule per variable.
///
/// The monomial basis in codimension `k` is the set of exponent vectors of
/// total degree `k` with every exponent strictly below its cap, ordered
/// lexicographically descending.
#[derive(Debug, Clone)]
pub struct PolyRing {
    vars: Vec<String>,
    rules: Vec<PowerRule>,
    basis: Vec<Vec<Monomial>>,
    index: BTreeMap<Monomial, (usize, usize)>,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, rules: Vec<PowerRule>) -> Self {
        assert_eq!(vars.len(), rules.len());
        let dim: usize = rules.iter().map(|r| (r.cap - 1) as usize).sum();
        let mut basis: Vec<Vec<Monomial>> = vec![Vec::new(); dim + 1];
        let caps: Vec<u32> = rules.iter().map(|r| r.cap).collect();
        let mut mono = vec![0u32; vars.len()];
        enumerate_bounded(&caps, 0, &mut mono, &mut |m: &Monomial| {
            let total: u32 = m.iter().sum();
            basis[total as usize].push(m.clone());
        });
        for level in basis.iter_mut() {
            level.sort_by(|a, b| b.cmp(a));
        }
        let mut index = BTreeMap::new();
        for (k, level) in basis.iter().enumerate() {
            for (i, m) in level.iter().enumerate() {
                index.insert(m.clone(), (k, i));
            }
        }
        PolyRing { vars, rules, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn basis(&self, codim: usize) -> &[Monomial] {
        &self.basis[codim]
    }

    pub fn label(&self, mono: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(mono.iter()) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn index_of(&self, mono: &Monomial) -> Option<(usize, usize)> {
        self.index.get(mono).copied()
    }

    /// Normalize `coeff * mono` into basis coordinates, accumulating.
    fn reduce_into(&self, mono: Monomial, coeff: Rat, acc: &mut BTreeMap<Monomial, Rat>) {
        if coeff.is_zero() {
            return;
        }
        if let Some(v) = (0..self.vars.len()).find(|&v| mono[v] >= self.rules[v].cap) {
            let rule = &self.rules[v];
            if rule.replacement.is_empty() {
                return;
            }
            let mut rest = mono;
            rest[v] -= rule.cap;
            for (rm, rc) in &rule.replacement {
                let mut m2 = rest.clone();
                for (slot, add) in m2.iter_mut().zip(rm.iter()) {
                    *slot += add;
                }
                self.reduce_into(m2, &coeff * rc, acc);
            }
        } else {
            let entry = acc.entry(mono).or_insert_with(Rat::zero);
            *entry += coeff;
        }
    }

    fn mul(&self, ka: usize, a: &[Rat], kb: usize, b: &[Rat]) -> Vec<Rat> {
        let k = ka + kb;
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let mut mono = self.basis[ka][i].clone();
                for (slot, add) in mono.iter_mut().zip(self.basis[kb][j].iter()) {
                    *slot += add;
                }
                self.reduce_into(mono, ai * bj, &mut acc);
            }
        }
        let mut out = vec![Rat::zero(); self.basis[k].len()];
        for (mono, c) in acc {
            let (kk, idx) = self.index[&mono];
            debug_assert_eq!(kk, k);
            out[idx] = c;
        }
        out
    }
}

fn enumerate_bounded(caps: &[u32], at: usize, mono: &mut Monomial, f: &mut impl FnMut(&Monomial)) {
    if at == caps.len() {
        f(mono);
        return;
    }
    for e in 0..caps[at] {
        mono[at] = e;
        enumerate_bounded(caps, at + 1, mono, f);
    }
    mono[at] = 0;
}

/// Explicit product table over labeled bases (truncated models).
#[derive(Debug, Clone)]
pub struct TableRing {
    basis: Vec<Vec<String>>,
    /// `(k1, i, k2, j) -> coords in codim k1+k2`, stored with `k1 <= k2`.
    products: BTreeMap<(usize, usize, usize, usize), Vec<Rat>>,
}

impl TableRing {
    pub fn new(
        basis: Vec<Vec<String>>,
        products: BTreeMap<(usize, usize, usize, usize), Vec<Rat>>,
    ) -> Self {
        TableRing { basis, products }
    }

    fn mul(&self, ka: usize, a: &[Rat], kb: usize, b: &[Rat]) -> Result<Vec<Rat>> {
        if ka == 0 {
            return Ok(b.iter().map(|x| x * &a[0]).collect());
        }
        if kb == 0 {
            return Ok(a.iter().map(|x| x * &b[0]).collect());
        }
        let k = ka + kb;
        let mut out = vec![Rat::zero(); self.basis[k].len()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let key = if ka <= kb { (ka, i, kb, j) } else { (kb, j, ka, i) };
                let coords = self.products.get(&key).ok_or_else(|| {
                    Error::Internal(format!("missing product table entry {key:?}"))
                })?;
                for (slot, c) in out.iter_mut().zip(coords.iter()) {
                    *slot += ai * bj * c;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub enum RingImpl {
    Poly(PolyRing),
    Table(TableRing),
}

/// Cone provenance: `Exact` only where the generator list is known to cut out
/// the actual effective cone (toric orbit closures, Schubert classes, powers
/// of the hyperplane class on projective space). Everything else is a
/// declared candidate and verdicts carry the flag outward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    Exact,
    Candidate,
}

impl Provenance {
    pub fn combine(self, other: Provenance) -> Provenance {
        if self == Provenance::Candidate || other == Provenance::Candidate {
            Provenance::Candidate
        } else {
            Provenance::Exact
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::Candidate => "candidate",
        }
    }
}

/// Declared effective cycle of some dimension `d`, given by its exact
/// pairings against the basis of `N^d`. When the model is fully graded the
/// generator also carries its own class (codimension `dim - d`).
#[derive(Debug, Clone)]
pub struct CycleGen {
    pub label: String,
    pub pairings: Vec<Rat>,
    pub class: Option<(usize, Vec<Rat>)>,
}

/// Effective-cone description for cycles of one fixed dimension.
#[derive(Debug, Clone)]
pub struct ConeSpec {
    pub cycle_dim: usize,
    pub generators: Vec<CycleGen>,
    pub provenance: Provenance,
}

/// Construction tag of a catalog member.
#[derive(Debug, Clone)]
pub enum Construction {
    Projective { n: usize },
    WeightedProjective { weights: Vec<i64> },
    Grassmannian { k: usize, n: usize },
    CompleteIntersection { ambient_dim: usize, weights: Option<Vec<i64>>, degrees: Vec<i64> },
    Product { left: Space, right: Space },
    ProjectiveBundle { base: Space, input_twists: Vec<i64>, twists: Vec<i64> },
    BlowupLinear { n: usize, m: usize },
}

/// A modeled space. Immutable after construction; share via [`Space`].
#[derive(Debug)]
pub struct SpaceModel {
    pub(crate) name: String,
    pub(crate) dim: usize,
    pub(crate) supported: usize,
    pub(crate) ring: RingImpl,
    pub(crate) degree: Option<Vec<Rat>>,
    pub(crate) cones: BTreeMap<usize, ConeSpec>,
    pub(crate) nef_divisors: Vec<(String, Vec<Rat>)>,
    pub(crate) h_index: Option<usize>,
    pub(crate) chern_truncation: usize,
    pub(crate) construction: Construction,
    pub(crate) notes: Vec<String>,
    pub(crate) pushforward_cn: Option<Vec<Rat>>,
}

/// Shared handle to an immutable [`SpaceModel`].
#[derive(Debug, Clone)]
pub struct Space(pub(crate) Arc<SpaceModel>);

impl Space {
    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Largest codimension with a declared basis.
    pub fn supported_codim(&self) -> usize {
        self.0.supported
    }

    pub fn is_fully_graded(&self) -> bool {
        self.0.supported == self.0.dim
    }

    pub fn construction(&self) -> &Construction {
        &self.0.construction
    }

    pub fn notes(&self) -> &[String] {
        &self.0.notes
    }

    pub fn chern_truncation(&self) -> usize {
        self.0.chern_truncation
    }

    /// Nef-cone generators in `N^1` (label, coordinates).
    pub fn nef_divisors(&self) -> &[(String, Vec<Rat>)] {
        &self.0.nef_divisors
    }

    /// Declared effective cone of cycles of dimension `d`, if any.
    pub fn cone(&self, cycle_dim: usize) -> Option<&ConeSpec> {
        self.0.cones.get(&cycle_dim)
    }

    pub fn cones(&self) -> impl Iterator<Item = &ConeSpec> {
        self.0.cones.values()
    }

    /// Pushforward class stored by the blow-up constructor, in `N^2` coords.
    pub fn pushforward_cn(&self) -> Option<&[Rat]> {
        self.0.pushforward_cn.as_deref()
    }

    /// Number of basis monomials in codimension `k`.
    ///
    /// `Some(0)` beyond the top degree (everything there is zero); `None`
    /// when the model is truncated below `k`.
    pub fn basis_size(&self, codim: usize) -> Option<usize> {
        if codim > self.0.dim {
            return Some(0);
        }
        if codim > self.0.supported {
            return None;
        }
        Some(match &self.0.ring {
            RingImpl::Poly(p) => p.basis(codim).len(),
            RingImpl::Table(t) => t.basis[codim].len(),
        })
    }

    pub fn basis_labels(&self, codim: usize) -> Vec<String> {
        if codim > self.0.supported {
            return Vec::new();
        }
        match &self.0.ring {
            RingImpl::Poly(p) => p.basis(codim).iter().map(|m| p.label(m)).collect(),
            RingImpl::Table(t) => t.basis[codim].clone(),
        }
    }

    pub fn class(&self, codim: usize, coords: Vec<Rat>) -> Result<CycleClass> {
        let want = self.basis_size(codim).ok_or_else(|| Error::UnsupportedCodim {
            space: self.name().to_string(),
            codim,
        })?;
        if coords.len() != want {
            return Err(Error::CodimMismatch(format!(
                "{} coordinates given for N^{codim} of `{}` (basis size {want})",
                coords.len(),
                self.name()
            )));
        }
        Ok(CycleClass { space: self.clone(), codim, coords })
    }

    pub fn zero(&self, codim: usize) -> CycleClass {
        let len = self.basis_size(codim).unwrap_or(0);
        CycleClass { space: self.clone(), codim, coords: vec![Rat::zero(); len] }
    }

    pub fn one(&self) -> CycleClass {
        CycleClass { space: self.clone(), codim: 0, coords: vec![rat(1)] }
    }

    /// The `idx`-th basis monomial of `N^codim` as a class.
    pub fn monomial(&self, codim: usize, idx: usize) -> Result<CycleClass> {
        let len = self.basis_size(codim).ok_or_else(|| Error::UnsupportedCodim {
            space: self.name().to_string(),
            codim,
        })?;
        if idx >= len {
            return Err(Error::Parameter(format!(
                "monomial index {idx} out of range for N^{codim} of `{}`",
                self.name()
            )));
        }
        let mut coords = vec![Rat::zero(); len];
        coords[idx] = rat(1);
        Ok(CycleClass { space: self.clone(), codim, coords })
    }

    /// The distinguished ample degree-1 class `h`, when the model has one.
    pub fn h(&self) -> Result<CycleClass> {
        let idx = self.0.h_index.ok_or_else(|| {
            Error::Unsupported(format!("`{}` has no distinguished degree-1 class", self.name()))
        })?;
        self.monomial(1, idx)
    }

    /// Degree of a top-codimension class.
    pub fn degree(&self, c: &CycleClass) -> Result<Rat> {
        self.check_same(&c.space)?;
        if c.codim != self.0.dim {
            return Err(Error::CodimMismatch(format!(
                "degree needs codim {} on `{}`, got {}",
                self.0.dim,
                self.name(),
                c.codim
            )));
        }
        let functional = self.0.degree.as_ref().ok_or_else(|| Error::UnsupportedCodim {
            space: self.name().to_string(),
            codim: self.0.dim,
        })?;
        let mut acc = Rat::zero();
        for (a, b) in c.coords.iter().zip(functional.iter()) {
            acc += a * b;
        }
        Ok(acc)
    }

    fn check_same(&self, other: &Space) -> Result<()> {
        if self.0.name == other.0.name {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(self.0.name.clone(), other.0.name.clone()))
        }
    }

    pub(crate) fn poly_ring(&self) -> Option<&PolyRing> {
        match &self.0.ring {
            RingImpl::Poly(p) => Some(p),
            RingImpl::Table(_) => None,
        }
    }

    /// Randomized rewrite self-test: commutativity and associativity of the
    /// normal form on random basis monomials. Run at construction time.
    pub fn validate(&self) -> Result<()> {
        let mut seed = 0u64;
        for b in self.0.name.bytes() {
            seed = seed.wrapping_mul(257).wrapping_add(b as u64);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max_k = self.0.supported;
        let pick = |rng: &mut ChaCha8Rng, space: &Space, k: usize| -> Result<CycleClass> {
            let len = space.basis_size(k).unwrap();
            space.monomial(k, rng.gen_range(0..len))
        };
        for _ in 0..40 {
            if max_k < 2 {
                break;
            }
            let k1 = rng.gen_range(1..max_k);
            let k2 = rng.gen_range(1..=(max_k - k1));
            let a = pick(&mut rng, self, k1)?;
            let b = pick(&mut rng, self, k2)?;
            let ab = a.mul(&b)?;
            let ba = b.mul(&a)?;
            if ab != ba {
                return Err(Error::Internal(format!(
                    "rewrite not commutative on `{}`",
                    self.name()
                )));
            }
            if max_k - k1 - k2 >= 1 {
                let k3 = rng.gen_range(1..=(max_k - k1 - k2));
                let c = pick(&mut rng, self, k3)?;
                let left = ab.mul(&c)?;
                let right = a.mul(&b.mul(&c)?)?;
                if left != right {
                    return Err(Error::Internal(format!(
                        "rewrite not associative on `{}`",
                        self.name()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A numerical cycle class of fixed codimension on a modeled space.
///
/// Classes with codimension above the space dimension are identically zero
/// (the documented top-overflow convention for truncated Chern calculus);
/// they carry an empty coordinate vector.
#[derive(Debug, Clone)]
pub struct CycleClass {
    space: Space,
    codim: usize,
    coords: Vec<Rat>,
}

impl PartialEq for CycleClass {
    fn eq(&self, other: &Self) -> bool {
        self.space.name() == other.space.name()
            && self.codim == other.codim
            && self.coords == other.coords
    }
}

impl Eq for CycleClass {}

impl CycleClass {
    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycleClass) -> Result<CycleClass> {
        self.space.check_same(&other.space)?;
        if self.codim != other.codim {
            return Err(Error::CodimMismatch(format!(
                "add needs equal codimensions, got {} and {}",
                self.codim, other.codim
            )));
        }
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycleClass { space: self.space.clone(), codim: self.codim, coords })
    }

    pub fn sub(&self, other: &CycleClass) -> Result<CycleClass> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycleClass {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, s: &Rat) -> CycleClass {
        CycleClass {
            space: self.space.clone(),
            codim: self.codim,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Normalized product in the monomial basis.
    ///
    /// Products past the top degree return the zero class of the overflow
    /// codimension; products into a codimension the (truncated) model does
    /// not carry are an error.
    pub fn mul(&self, other: &CycleClass) -> Result<CycleClass> {
        self.space.check_same(&other.space)?;
        let k = self.codim + other.codim;
        let model = &self.space.0;
        if k > model.dim {
            return Ok(CycleClass { space: self.space.clone(), codim: k, coords: Vec::new() });
        }
        if k > model.supported {
            return Err(Error::UnsupportedCodim { space: model.name.clone(), codim: k });
        }
        let coords = match &model.ring {
            RingImpl::Poly(p) => p.mul(self.codim, &self.coords, other.codim, &other.coords),
            RingImpl::Table(t) => t.mul(self.codim, &self.coords, other.codim, &other.coords)?,
        };
        Ok(CycleClass { space: self.space.clone(), codim: k, coords })
    }

    /// Intersection pairing `deg(self * other)` for complementary codimensions.
    pub fn pair(&self, other: &CycleClass) -> Result<Rat> {
        if self.codim + other.codim != self.space.dim() {
            return Err(Error::CodimMismatch(format!(
                "pairing needs complementary codimensions on `{}`: {} + {} != {}",
                self.space.name(),
                self.codim,
                other.codim,
                self.space.dim()
            )));
        }
        let prod = self.mul(other)?;
        self.space.degree(&prod)
    }

    /// Coefficient of a named basis monomial.
    pub fn coeff(&self, label: &str) -> Option<&Rat> {
        let labels = self.space.basis_labels(self.codim);
        labels.iter().position(|l| l == label).map(|i| &self.coords[i])
    }

    /// Render as ordered `(label, value)` pairs over the basis.
    pub fn rendered(&self) -> Vec<(String, String)> {
        self.space
            .basis_labels(self.codim)
            .into_iter()
            .zip(self.coords.iter().map(crate::rational::render_rat))
            .collect()
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (label, c) in self.space.basis_labels(self.codim).iter().zip(self.coords.iter()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if label == "1" {
                write!(f, "{}", crate::rational::render_rat(c))?;
            } else {
                write!(f, "({})*{}", crate::rational::render_rat(c), label)?;
            }
        }
        Ok(())
    }
}

/// Solve `sum_i x_i * cols[i] = target` exactly. Returns `None` when the
/// system is inconsistent; errors when the columns are linearly dependent.
pub(crate) fn solve_linear(cols: &[Vec<Rat>], target: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let rows = target.len();
    let n = cols.len();
    // augmented matrix, row-major
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..=n {
                    let delta = &m[rank][c] * &factor;
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rank < n {
        return Err(Error::Indeterminate(
            "linearly dependent generator set in exact solve".to_string(),
        ));
    }
    // inconsistent if any zero row has nonzero rhs
    for r in rank..rows {
        if !m[r][n].is_zero() {
            return Ok(None);
        }
    }
    let mut sol = vec![Rat::zero(); n];
    for (i, &col) in pivot_cols.iter().enumerate() {
        sol[col] = m[i][n].clone();
    }
    Ok(Some(sol))
}

/// Rank of an exact matrix given by rows.
pub(crate) fn rank_of(rows_in: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = rows_in.to_vec();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::spaces;

    #[test]
    fn add_is_linear_on_p3() {
        let p3 = spaces::projective_space(3).unwrap();
        let h = p3.h().unwrap();
        let two_h = h.add(&h).unwrap();
        assert_eq!(two_h, h.scale(&rat(2)));
        let zero = p3.zero(1);
        assert_eq!(h.add(&zero).unwrap(), h);
    }

    #[test]
    fn additive_identity_and_inverse() {
        let g25 = spaces::grassmannian(2, 5).unwrap();
        let c = g25.class(2, vec![ratio(3, 2), ratio(1, 2)]).unwrap();
        assert_eq!(c.add(&g25.zero(2)).unwrap(), c);

        let p4 = spaces::projective_space(4).unwrap();
        let h2 = p4.monomial(2, 0).unwrap().scale(&rat(2));
        assert!(h2.add(&h2.neg()).unwrap().is_zero());
    }

    #[test]
    fn mul_on_p2() {
        let p2 = spaces::projective_space(2).unwrap();
        let h = p2.h().unwrap();
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2, p2.monomial(2, 0).unwrap());
        // overflow past the top degree is the zero class
        let over = h2.mul(&h).unwrap();
        assert_eq!(over.codim(), 3);
        assert!(over.is_zero());
    }

    #[test]
    fn grothendieck_rewrite_on_rank_two_bundle() {
        // normalized twists (0,2): z*z -> 2 h*z
        let pb = spaces::projective_bundle(&spaces::projective_space(2).unwrap(), &[-2, 0]).unwrap();
        let z = pb.class(1, vec![rat(0), rat(1)]).unwrap();
        let z2 = z.mul(&z).unwrap();
        let labels = pb.basis_labels(2);
        assert_eq!(labels, vec!["h^2", "h*z"]);
        assert_eq!(z2.coords(), &[rat(0), rat(2)]);
    }

    #[test]
    fn pieri_square_on_g25() {
        let g = spaces::grassmannian(2, 5).unwrap();
        let s1 = g.monomial(1, 0).unwrap();
        let sq = s1.mul(&s1).unwrap();
        assert_eq!(sq.coords(), &[rat(1), rat(1)]);
    }

    #[test]
    fn pairings_on_catalog_spaces() {
        let p3 = spaces::projective_space(3).unwrap();
        let h = p3.h().unwrap();
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2.pair(&h).unwrap(), rat(1));

        // quadric threefold: top degree 2
        let q = spaces::complete_intersection_pn(4, &[2]).unwrap();
        let h = q.h().unwrap();
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2.pair(&h).unwrap(), rat(2));

        // weighted projective plane P(1,1,2): deg(h^2) = 1/2
        let wp = spaces::weighted_projective(&[1, 1, 2]).unwrap();
        let h = wp.h().unwrap();
        assert_eq!(h.pair(&h).unwrap(), ratio(1, 2));
    }

    #[test]
    fn pn_pairing_normalization() {
        let p5 = spaces::projective_space(5).unwrap();
        for k in 0..=5 {
            let a = p5.monomial(k, 0).unwrap();
            let b = p5.monomial(5 - k, 0).unwrap();
            assert_eq!(a.pair(&b).unwrap(), rat(1));
        }
    }

    #[test]
    fn mismatches_are_errors() {
        let p2 = spaces::projective_space(2).unwrap();
        let p3 = spaces::projective_space(3).unwrap();
        assert!(p2.h().unwrap().add(&p3.h().unwrap()).is_err());
        let h = p3.h().unwrap();
        let h2 = h.mul(&h).unwrap();
        assert!(h.add(&h2).is_err());
        assert!(h.pair(&h).is_err());
    }

    #[test]
    fn solve_linear_exactly() {
        let cols = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        let sol = solve_linear(&cols, &[rat(3), rat(2)]).unwrap().unwrap();
        assert_eq!(sol, vec![rat(1), rat(2)]);
        // inconsistent target
        let cols = vec![vec![rat(1), rat(1)]];
        assert!(solve_linear(&cols, &[rat(1), rat(2)]).unwrap().is_none());
        // dependent columns
        let cols = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(solve_linear(&cols, &[rat(1), rat(2)]).is_err());
    }
}
