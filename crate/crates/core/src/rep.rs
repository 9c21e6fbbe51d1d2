//! Representations of quivers, morphisms between them, and submodule points.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::homext::hom_basis;
use crate::linalg::{enumerate_subspaces, FieldSpec, Matrix, Scalar};
use crate::quiver::{DimVector, Quiver};

/// One vector space per vertex and one matrix per arrow. The matrix of
/// `a: i -> j` has shape `dims[j] x dims[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: FieldSpec,
    dims: DimVector,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, field: FieldSpec, dims: DimVector, matrices: Vec<Matrix>) -> Result<Self> {
        if dims.0.len() != quiver.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.0.len(),
                quiver.num_vertices()
            )));
        }
        if matrices.len() != quiver.num_arrows() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                matrices.len(),
                quiver.num_arrows()
            )));
        }
        for (m, a) in matrices.iter().zip(quiver.arrows()) {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            let want = (dims.0[a.target], dims.0[a.source]);
            if m.shape() != want {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.id,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            matrices,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: FieldSpec) -> Self {
        let dims = DimVector::zero(&quiver);
        Self::zero_maps(quiver, field, dims)
    }

    /// All arrow maps zero.
    pub fn zero_maps(quiver: Arc<Quiver>, field: FieldSpec, dims: DimVector) -> Self {
        let matrices = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims.0[a.target], dims.0[a.source]))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            matrices,
        }
    }

    /// The simple representation `S(v)`.
    pub fn simple(quiver: Arc<Quiver>, field: FieldSpec, v: &str) -> Result<Self> {
        let i = quiver.vertex_index(v)?;
        let dims = DimVector::unit(&quiver, i);
        Ok(Self::zero_maps(quiver, field, dims))
    }

    /// The indecomposable projective `P(v)`, with the paths starting at `v`
    /// as basis.
    pub fn projective(quiver: Arc<Quiver>, field: FieldSpec, v: &str) -> Result<Self> {
        let start = quiver.vertex_index(v)?;
        // paths as arrow-index sequences, grouped by end vertex
        let mut by_end: Vec<Vec<Vec<usize>>> = vec![Vec::new(); quiver.num_vertices()];
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, Vec::new())];
        while let Some((at, path)) = stack.pop() {
            for (ai, a) in quiver.arrows_out_of(at) {
                let mut next = path.clone();
                next.push(ai);
                stack.push((a.target, next));
            }
            by_end[at].push(path);
        }
        for paths in &mut by_end {
            paths.sort();
        }
        let dims = DimVector(by_end.iter().map(Vec::len).collect());
        let matrices = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(field, dims.0[a.target], dims.0[a.source]);
                for (col, path) in by_end[a.source].iter().enumerate() {
                    let mut ext = path.clone();
                    ext.push(ai);
                    let row = by_end[a.target].iter().position(|p| *p == ext).expect("extended path exists");
                    m.set(row, col, &field.one()).unwrap();
                }
                m
            })
            .collect();
        Representation::new(quiver, field, dims, matrices)
    }

    /// The indecomposable injective `I(v)`, the dual of `P(v)` on the opposite quiver.
    pub fn injective(quiver: Arc<Quiver>, field: FieldSpec, v: &str) -> Result<Self> {
        let op = Arc::new(quiver.opposite());
        Ok(Representation::projective(op, field, v)?.dual())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims.0[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix {
        &self.matrices[arrow]
    }

    pub fn matrix_by_id(&self, id: &str) -> Result<&Matrix> {
        Ok(&self.matrices[self.quiver.arrow_index(id)?])
    }

    pub(crate) fn same_category(&self, other: &Representation) -> Result<()> {
        if !Arc::ptr_eq(&self.quiver, &other.quiver) && *self.quiver != *other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.same_category(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| Matrix::block_diag(a, b))
            .collect::<Result<_>>()?;
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.add(&other.dims),
            matrices,
        })
    }

    /// `self^k`, the direct sum of `k` copies (the zero representation for `k = 0`).
    pub fn power(&self, k: usize) -> Representation {
        let id = Matrix::identity(self.field, k);
        Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.scale(k),
            matrices: self.matrices.iter().map(|m| id.kron(m).unwrap()).collect(),
        }
    }

    /// Restriction to the full subquiver on `keep`.
    pub fn restrict(&self, keep: &[&str]) -> Result<Representation> {
        let (q, kept, arrows) = self.quiver.full_subquiver(keep)?;
        Representation::new(
            Arc::new(q),
            self.field,
            DimVector(kept.iter().map(|&v| self.dims.0[v]).collect()),
            arrows.iter().map(|&a| self.matrices[a].clone()).collect(),
        )
    }

    /// Restriction to the subquiver with all vertices and only the listed arrows.
    pub fn restrict_arrows(&self, keep: &[&str]) -> Result<Representation> {
        let (q, arrows) = self.quiver.arrow_subquiver(keep)?;
        Representation::new(
            Arc::new(q),
            self.field,
            self.dims.clone(),
            arrows.iter().map(|&a| self.matrices[a].clone()).collect(),
        )
    }

    /// The dual representation on the opposite quiver (transposed matrices).
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field,
            dims: self.dims.clone(),
            matrices: self.matrices.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Transports the structure along invertible vertex maps `g`:
    /// `M'_a = g_t M_a g_s^{-1}`.
    pub fn change_basis(&self, g: &[Matrix]) -> Result<Representation> {
        let inv = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::InvalidInput("base change is not invertible".into())))
            .collect::<Result<Vec<_>>>()?;
        let matrices = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.matrices)
            .map(|(a, m)| g[a.target].mul(m)?.mul(&inv[a.source]))
            .collect::<Result<_>>()?;
        Representation::new(self.quiver.clone(), self.field, self.dims.clone(), matrices)
    }

    /// Uniformly random matrices over `F_p`; entries in `[-3, 3]` over `Q`.
    pub fn random<R: Rng>(quiver: Arc<Quiver>, field: FieldSpec, dims: DimVector, rng: &mut R) -> Result<Self> {
        let matrices = quiver
            .arrows()
            .iter()
            .map(|a| random_matrix(field, dims.0[a.target], dims.0[a.source], rng))
            .collect();
        Representation::new(quiver, field, dims, matrices)
    }

    /// The subrepresentation cut out by `pt` and its inclusion.
    pub fn sub_representation(&self, pt: &SubmodulePoint) -> Result<(Representation, Morphism)> {
        pt.check_shape(self)?;
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.matrices) {
            let src = &pt.subspaces[a.source];
            let dst = &pt.subspaces[a.target];
            // images of the source basis, one per row
            let images = src.mul(&m.transpose())?;
            let coords = coordinates_in(dst, &images).ok_or_else(|| Error::NotASubmodule(a.id.clone()))?;
            matrices.push(coords.transpose());
        }
        let sub = Representation::new(self.quiver.clone(), self.field, pt.dims(), matrices)?;
        let incl = Morphism {
            maps: pt.subspaces.iter().map(Matrix::transpose).collect(),
        };
        debug_assert!(incl.check(&sub, self).is_ok());
        Ok((sub, incl))
    }

    /// The quotient by `pt` and its projection. Quotient coordinates are the
    /// non-pivot columns of each subspace basis.
    pub fn quotient_representation(&self, pt: &SubmodulePoint) -> Result<(Representation, Morphism)> {
        pt.check_shape(self)?;
        // Stability is what makes the quotient maps well defined.
        self.sub_representation(pt)?;
        let mut proj = Vec::new();
        let mut lift = Vec::new();
        for (v, basis) in pt.subspaces.iter().enumerate() {
            let n = self.dims.0[v];
            let r = basis.rref();
            let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
            // pi(x) = x minus its pivot-coordinate combination of basis rows, read on free coordinates
            let mut pi = Matrix::zeros(self.field, free.len(), n);
            for (qi, &fc) in free.iter().enumerate() {
                pi.set(qi, fc, &self.field.one())?;
            }
            for (row, &pc) in r.pivots.iter().enumerate() {
                for (qi, &fc) in free.iter().enumerate() {
                    let v = self.field.neg(&r.reduced.get(row, fc));
                    pi.set(qi, pc, &v)?;
                }
            }
            let mut l = Matrix::zeros(self.field, n, free.len());
            for (qi, &fc) in free.iter().enumerate() {
                l.set(fc, qi, &self.field.one())?;
            }
            proj.push(pi);
            lift.push(l);
        }
        let matrices = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.matrices)
            .map(|(a, m)| proj[a.target].mul(m)?.mul(&lift[a.source]))
            .collect::<Result<Vec<_>>>()?;
        let dims = DimVector(proj.iter().map(Matrix::rows).collect());
        let quot = Representation::new(self.quiver.clone(), self.field, dims, matrices)?;
        let pi = Morphism { maps: proj };
        debug_assert!(pi.check(self, &quot).is_ok());
        Ok((quot, pi))
    }

    /// Image of a morphism out of `source` into `self` as a submodule point.
    pub fn image_point(&self, f: &Morphism) -> Result<SubmodulePoint> {
        SubmodulePoint::new(self, f.maps.iter().map(Matrix::transpose).collect())
    }
}

pub(crate) fn random_matrix<R: Rng>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    match field {
        FieldSpec::Prime(p) => Matrix::from_fn(field, rows, cols, |_, _| rng.gen_range(0..p as i64)),
        FieldSpec::Rational => Matrix::from_fn(field, rows, cols, |_, _| rng.gen_range(-3..=3)),
    }
}

/// Coordinates of the rows of `vectors` in the RREF basis `basis`, one row of
/// coefficients per vector. `None` if some vector lies outside the span.
pub(crate) fn coordinates_in(basis: &Matrix, vectors: &Matrix) -> Option<Matrix> {
    let pivots = basis.rref().pivots;
    debug_assert_eq!(pivots.len(), basis.rows());
    let coords = vectors.select_cols(&pivots);
    let rebuilt = coords.mul(basis).ok()?;
    if rebuilt != *vectors {
        return None;
    }
    Some(coords)
}

/// Vertex-indexed linear maps `f_v: M_v -> N_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    /// Validates shapes and the intertwining relation `N_a f_i = f_j M_a`.
    pub fn new(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> Result<Self> {
        let f = Morphism { maps };
        f.check(source, target)?;
        Ok(f)
    }

    pub fn check(&self, source: &Representation, target: &Representation) -> Result<()> {
        source.same_category(target)?;
        if self.maps.len() != source.quiver.num_vertices() {
            return Err(Error::DimensionMismatch("one map per vertex required".into()));
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.shape() != (target.dims.0[v], source.dims.0[v]) {
                return Err(Error::DimensionMismatch(format!("map at vertex {v} has the wrong shape")));
            }
        }
        for (ai, a) in source.quiver.arrows().iter().enumerate() {
            let lhs = target.matrices[ai].mul(&self.maps[a.source])?;
            let rhs = self.maps[a.target].mul(&source.matrices[ai])?;
            if lhs != rhs {
                return Err(Error::NotAMorphism(a.id.clone()));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism {
            maps: m.dims.0.iter().map(|&d| Matrix::identity(m.field, d)).collect(),
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Morphism {
            maps: source
                .dims
                .0
                .iter()
                .zip(&target.dims.0)
                .map(|(&s, &t)| Matrix::zeros(source.field, t, s))
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        Ok(Morphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.mul(b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    /// `Σ c_i basis_i`; `basis` must be non-empty.
    pub fn combination(basis: &[Morphism], coeffs: &[Scalar]) -> Morphism {
        assert_eq!(basis.len(), coeffs.len());
        let mut maps: Vec<Matrix> = basis[0].maps.iter().map(|m| Matrix::zeros(m.field(), m.rows(), m.cols())).collect();
        for (b, c) in basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (acc, m) in maps.iter_mut().zip(&b.maps) {
                *acc = acc.add(&m.scale(c)).unwrap();
            }
        }
        Morphism { maps }
    }
}

/// A tuple of subspaces (canonical RREF bases, one per vertex) closed under
/// every arrow of a parent representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubmodulePoint {
    pub subspaces: Vec<Matrix>,
}

impl SubmodulePoint {
    /// Canonicalizes the spanning sets and checks arrow-stability.
    pub fn new(parent: &Representation, spanning: Vec<Matrix>) -> Result<Self> {
        let pt = SubmodulePoint {
            subspaces: spanning.iter().map(Matrix::row_space).collect(),
        };
        parent.sub_representation(&pt)?;
        Ok(pt)
    }

    pub(crate) fn from_canonical(subspaces: Vec<Matrix>) -> Self {
        SubmodulePoint { subspaces }
    }

    pub fn full(parent: &Representation) -> Self {
        SubmodulePoint {
            subspaces: parent.dims.0.iter().map(|&d| Matrix::identity(parent.field, d)).collect(),
        }
    }

    pub fn zero(parent: &Representation) -> Self {
        SubmodulePoint {
            subspaces: parent.dims.0.iter().map(|&d| Matrix::zeros(parent.field, 0, d)).collect(),
        }
    }

    pub fn dims(&self) -> DimVector {
        DimVector(self.subspaces.iter().map(Matrix::rows).collect())
    }

    fn check_shape(&self, parent: &Representation) -> Result<()> {
        if self.subspaces.len() != parent.quiver.num_vertices() {
            return Err(Error::DimensionMismatch("one subspace per vertex required".into()));
        }
        for (v, s) in self.subspaces.iter().enumerate() {
            if s.cols() != parent.dims.0[v] || s.field() != parent.field {
                return Err(Error::DimensionMismatch(format!("subspace at vertex {v} has the wrong ambient space")));
            }
            if s.rank() != s.rows() {
                return Err(Error::InvalidInput(format!("subspace basis at vertex {v} is dependent")));
            }
        }
        Ok(())
    }
}

/// Whether some element of `Hom(m1, m2)` is invertible at every vertex.
///
/// Rejects on dimension vectors and on `dim End`/`dim Hom` in both
/// directions, then searches `Hom(m1, m2)`:
/// * over `F_p` with `p^h <= limits.iso_exhaustive` (h = dim Hom) the whole
///   space is scanned up to scalars, so the answer is exact;
/// * otherwise `limits.random_trials` seeded random combinations are tried.
///   If an isomorphism exists, the invertible elements form a non-empty
///   Zariski-open subset, so each trial succeeds with probability at least the
///   unit density of `End(m1)`; for rationals the coefficients are drawn from
///   201 values and each trial fails with probability at most `dim/201`;
/// * if the random phase fails and `p^h <= limits.budget`, a final exhaustive
///   scan decides. Otherwise the answer is [`Error::Inconclusive`].
pub fn is_isomorphic(m1: &Representation, m2: &Representation, limits: &Limits) -> Result<bool> {
    m1.same_category(m2)?;
    if m1.dims != m2.dims {
        return Ok(false);
    }
    if m1.is_zero() {
        return Ok(true);
    }
    if m1 == m2 {
        return Ok(true);
    }
    let hom12 = hom_basis(m1, m2)?;
    let h = hom12.basis.len();
    if h == 0 {
        return Ok(false);
    }
    let end1 = hom_basis(m1, m1)?.basis.len();
    if end1 != h || hom_basis(m2, m2)?.basis.len() != h || hom_basis(m2, m1)?.basis.len() != h {
        return Ok(false);
    }
    Ok(search_hom(&hom12.basis, m1.field, limits, Morphism::is_isomorphism)?.is_some())
}

/// Looks for an element of `span(basis)` satisfying `pred`, scaling-invariant
/// predicates only. `Ok(None)` means provably none (exhaustive scan),
/// [`Error::Inconclusive`] means the budgets ran out first.
pub(crate) fn search_hom<P>(basis: &[Morphism], field: FieldSpec, limits: &Limits, pred: P) -> Result<Option<Morphism>>
where
    P: Fn(&Morphism) -> bool,
{
    let h = basis.len();
    if h == 0 {
        return Ok(None);
    }
    let size = field.order().map(|p| (p as u128).saturating_pow(h as u32));
    let exhaustive = |cap: u64| -> Option<Result<Option<Morphism>>> {
        let size = size?;
        if size > cap as u128 {
            return None;
        }
        let lines = match enumerate_subspaces(h, 1, field, u64::MAX) {
            Ok(l) => l,
            Err(e) => return Some(Err(e)),
        };
        for line in lines {
            let f = Morphism::combination(basis, &line.scalars());
            if pred(&f) {
                return Some(Ok(Some(f)));
            }
        }
        Some(Ok(None))
    };
    if let Some(r) = exhaustive(limits.iso_exhaustive) {
        return r;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    for _ in 0..limits.random_trials {
        let coeffs: Vec<Scalar> = (0..h)
            .map(|_| match field {
                FieldSpec::Prime(p) => field.scalar(rng.gen_range(0..p as i64)),
                FieldSpec::Rational => field.scalar(rng.gen_range(-100..=100)),
            })
            .collect();
        let f = Morphism::combination(basis, &coeffs);
        if pred(&f) {
            return Ok(Some(f));
        }
    }
    exhaustive(limits.budget).unwrap_or(Err(Error::Inconclusive))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn k2() -> Arc<Quiver> {
        Arc::new(Quiver::kronecker(2).unwrap())
    }

    #[test]
    fn direct_sum_examples() {
        let q = k2();
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        let s = s1.direct_sum(&s2).unwrap();
        assert_eq!(s.dims().0, vec![1, 1]);
        assert!(s.matrices().iter().all(Matrix::is_zero));
        let z = Representation::zero(q.clone(), f5());
        assert_eq!(s.direct_sum(&z).unwrap(), s);
        assert_eq!(s.power(2), s.direct_sum(&s).unwrap());
        let other = Representation::zero(Arc::new(Quiver::kronecker(3).unwrap()), f5());
        assert_eq!(s.direct_sum(&other), Err(Error::QuiverMismatch));
    }

    #[test]
    fn projectives_and_injectives_of_kronecker() {
        let q = k2();
        let p1 = Representation::projective(q.clone(), f5(), "1").unwrap();
        assert_eq!(p1.dims().0, vec![1, 2]);
        let p2 = Representation::projective(q.clone(), f5(), "2").unwrap();
        assert_eq!(p2, Representation::simple(q.clone(), f5(), "2").unwrap());
        let i2 = Representation::injective(q.clone(), f5(), "2").unwrap();
        assert_eq!(i2.dims().0, vec![2, 1]);
        assert_eq!(i2.quiver(), q.as_ref());
        let i1 = Representation::injective(q.clone(), f5(), "1").unwrap();
        assert_eq!(i1, Representation::simple(q, f5(), "1").unwrap());
    }

    #[test]
    fn dual_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = Arc::new(Quiver::from_edges(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]).unwrap());
        let m = Representation::random(q.clone(), f5(), DimVector(vec![2, 1, 3]), &mut rng).unwrap();
        assert_eq!(m.dual().dual(), m);
        let s = Representation::simple(q.clone(), f5(), "2").unwrap();
        let ds = s.dual();
        assert_eq!(ds.dims(), s.dims());
        assert!(ds.quiver().is_source(1));
    }

    #[test]
    fn restrict_to_all_vertices_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let q = Arc::new(Quiver::kronecker(3).unwrap());
        let m = Representation::random(q, f5(), DimVector(vec![2, 2]), &mut rng).unwrap();
        assert_eq!(m.restrict(&["1", "2"]).unwrap(), m);
        assert!(matches!(m.restrict(&["7"]), Err(Error::UnknownVertex(_))));
        let r = m.restrict_arrows(&["a1", "a2"]).unwrap();
        assert_eq!(r.quiver(), &Quiver::kronecker(2).unwrap());
    }

    #[test]
    fn sub_and_quotient_of_full_and_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = Representation::random(k2(), f5(), DimVector(vec![2, 3]), &mut rng).unwrap();
        let (sub, incl) = m.sub_representation(&SubmodulePoint::full(&m)).unwrap();
        assert_eq!(sub, m);
        assert_eq!(incl, Morphism::identity(&m));
        let (zero, _) = m.sub_representation(&SubmodulePoint::zero(&m)).unwrap();
        assert!(zero.is_zero());
        let (q, _) = m.quotient_representation(&SubmodulePoint::zero(&m)).unwrap();
        assert_eq!(q, m);
        let (q, _) = m.quotient_representation(&SubmodulePoint::full(&m)).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn unstable_tuple_is_rejected() {
        let p1 = Representation::projective(k2(), f5(), "1").unwrap();
        let f = f5();
        let pt = SubmodulePoint {
            subspaces: vec![Matrix::identity(f, 1), Matrix::from_i64(f, 1, 2, &[1, 0])],
        };
        assert!(matches!(p1.sub_representation(&pt), Err(Error::NotASubmodule(_))));
        assert!(matches!(p1.quotient_representation(&pt), Err(Error::NotASubmodule(_))));
    }

    #[test]
    fn sub_plus_quotient_dims() {
        let p1 = Representation::projective(k2(), f5(), "1").unwrap();
        let f = f5();
        let pt = SubmodulePoint::new(&p1, vec![Matrix::zeros(f, 0, 1), Matrix::from_i64(f, 1, 2, &[1, 3])]).unwrap();
        let (sub, incl) = p1.sub_representation(&pt).unwrap();
        let (quot, proj) = p1.quotient_representation(&pt).unwrap();
        assert_eq!(sub.dims().add(quot.dims()), *p1.dims());
        assert!(incl.is_injective());
        assert!(proj.is_surjective());
        assert!(proj.compose(&incl).unwrap().is_zero());
    }

    #[test]
    fn isomorphism_basics() {
        let l = Limits::default();
        let q = k2();
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        assert!(is_isomorphic(&s1, &s1, &l).unwrap());
        assert!(!is_isomorphic(&s1, &s2, &l).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = Representation::random(q.clone(), f5(), DimVector(vec![2, 2]), &mut rng).unwrap();
        let g = vec![
            Matrix::from_i64(f5(), 2, 2, &[1, 2, 0, 1]),
            Matrix::from_i64(f5(), 2, 2, &[3, 0, 1, 1]),
        ];
        let n = m.change_basis(&g).unwrap();
        assert!(is_isomorphic(&m, &n, &l).unwrap());
        assert!(is_isomorphic(&n, &m, &l).unwrap());
        let different = Representation::zero_maps(q, f5(), DimVector(vec![2, 2]));
        assert_eq!(is_isomorphic(&m, &different, &l).unwrap(), m == different);
    }
}
