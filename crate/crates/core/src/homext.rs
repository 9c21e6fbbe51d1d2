//! Hom and Ext¹ for path algebras of acyclic quivers.
//!
//! Both come from the same differential
//! `d⁰: ⊕_v Hom(M_v, N_v) -> ⊕_{a: i->j} Hom(M_i, N_j)`,
//! `d⁰(f)_a = N_a f_i - f_j M_a`. Path algebras of acyclic quivers are
//! hereditary, so `Hom(M, N) = ker d⁰` and `Ext¹(M, N) = coker d⁰`.

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{search_hom, Morphism, Representation};

#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: Representation,
    pub target: Representation,
    pub basis: Vec<Morphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Arrow-indexed matrices `ε_a: M_{s(a)} -> N_{t(a)}` representing a class in
/// `Ext¹(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtCocycle {
    pub components: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Cocycles whose classes form a basis of `Ext¹`.
    pub cocycles: Vec<ExtCocycle>,
}

fn vertex_offsets(m: &Representation, n: &Representation) -> Vec<usize> {
    let mut off = Vec::with_capacity(m.dims().0.len() + 1);
    let mut acc = 0;
    for (a, b) in m.dims().0.iter().zip(&n.dims().0) {
        off.push(acc);
        acc += a * b;
    }
    off.push(acc);
    off
}

fn arrow_offsets(m: &Representation, n: &Representation) -> Vec<usize> {
    let mut off = Vec::new();
    let mut acc = 0;
    for a in m.quiver().arrows() {
        off.push(acc);
        acc += n.dim_at(a.target) * m.dim_at(a.source);
    }
    off.push(acc);
    off
}

/// The matrix of `d⁰` for `Hom(m, n)`. Columns: `f_v` entries row-major,
/// vertex by vertex. Rows: arrow blocks `N_j x M_i` row-major.
pub fn differential(m: &Representation, n: &Representation) -> Result<Matrix> {
    m.same_category(n)?;
    let field = m.field();
    let voff = vertex_offsets(m, n);
    let aoff = arrow_offsets(m, n);
    let mut d = Matrix::zeros(field, *aoff.last().unwrap(), *voff.last().unwrap());
    for (ai, a) in m.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, mj, ni) = (m.dim_at(i), m.dim_at(j), n.dim_at(i));
        let (ma, na) = (m.matrix(ai), n.matrix(ai));
        for r in 0..n.dim_at(j) {
            for c in 0..mi {
                let row = aoff[ai] + r * mi + c;
                for k in 0..ni {
                    d.set(row, voff[i] + k * mi + c, &na.get(r, k))?;
                }
                for k in 0..mj {
                    d.set(row, voff[j] + r * mj + k, &field.neg(&ma.get(k, c)))?;
                }
            }
        }
    }
    Ok(d)
}

/// A basis of `Hom(m, n)`, read off the RREF kernel of `d⁰`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<HomBasis> {
    let d = differential(m, n)?;
    let voff = vertex_offsets(m, n);
    let ker = d.kernel_basis();
    let basis = (0..ker.rows())
        .map(|r| Morphism {
            maps: (0..m.quiver().num_vertices())
                .map(|v| {
                    let (rows, cols) = (n.dim_at(v), m.dim_at(v));
                    let flat = ker.submatrix(r..r + 1, voff[v]..voff[v + 1]);
                    Matrix::from_scalars(m.field(), rows, cols, flat.scalars()).unwrap()
                })
                .collect(),
        })
        .collect();
    Ok(HomBasis {
        source: m.clone(),
        target: n.clone(),
        basis,
    })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let d = differential(m, n)?;
    Ok(d.cols() - d.rank())
}

/// `Ext¹(m, n)` as the cokernel of `d⁰`. The cocycle basis consists of the
/// unit vectors at the coordinates that are not pivots of the RREF of the
/// image, so it is canonical.
pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    let d = differential(m, n)?;
    let image = d.transpose().rref();
    let free: Vec<usize> = (0..d.rows()).filter(|c| !image.pivots.contains(c)).collect();
    let aoff = arrow_offsets(m, n);
    let cocycles = free
        .iter()
        .map(|&coord| ExtCocycle {
            components: m
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    let (rows, cols) = (n.dim_at(a.target), m.dim_at(a.source));
                    Matrix::from_fn(m.field(), rows, cols, |r, c| (aoff[ai] + r * cols + c == coord) as i64)
                })
                .collect(),
        })
        .collect();
    Ok(Ext1 {
        dim: free.len(),
        cocycles,
    })
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let d = differential(m, n)?;
    Ok(d.rows() - d.rank())
}

fn flatten_cocycle(m: &Representation, n: &Representation, e: &ExtCocycle) -> Result<Matrix> {
    let aoff = arrow_offsets(m, n);
    let mut v = Matrix::zeros(m.field(), *aoff.last().unwrap(), 1);
    for (ai, a) in m.quiver().arrows().iter().enumerate() {
        let comp = &e.components[ai];
        if comp.shape() != (n.dim_at(a.target), m.dim_at(a.source)) {
            return Err(Error::DimensionMismatch(format!("cocycle component at `{}`", a.id)));
        }
        for r in 0..comp.rows() {
            for c in 0..comp.cols() {
                v.set(aoff[ai] + r * comp.cols() + c, 0, &comp.get(r, c))?;
            }
        }
    }
    Ok(v)
}

/// Whether the cocycle lies in the image of `d⁰` (represents the zero class).
pub fn is_coboundary(m: &Representation, n: &Representation, e: &ExtCocycle) -> Result<bool> {
    let d = differential(m, n)?;
    let v = flatten_cocycle(m, n, e)?;
    Ok(d.solve(&v)?.is_some())
}

/// Linear combination of cocycles with integer coefficients.
pub fn combine_cocycles(field: FieldSpec, cocycles: &[ExtCocycle], coeffs: &[i64]) -> ExtCocycle {
    let mut comps: Vec<Matrix> = cocycles[0]
        .components
        .iter()
        .map(|c| Matrix::zeros(field, c.rows(), c.cols()))
        .collect();
    for (e, &k) in cocycles.iter().zip(coeffs) {
        for (acc, c) in comps.iter_mut().zip(&e.components) {
            *acc = acc.add(&c.scale(&field.scalar(k))).unwrap();
        }
    }
    ExtCocycle { components: comps }
}

/// `⟨d, e⟩ = Σ_v d_v e_v - Σ_{a: i->j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> Result<i64> {
    let n = q.num_vertices();
    if d.0.len() != n || e.0.len() != n {
        return Err(Error::DimensionMismatch("dimension vectors do not match the quiver".into()));
    }
    let diag: i64 = d.0.iter().zip(&e.0).map(|(a, b)| (a * b) as i64).sum();
    let off: i64 = q.arrows().iter().map(|a| (d.0[a.source] * e.0[a.target]) as i64).sum();
    Ok(diag - off)
}

/// `End(m) = k`.
pub fn is_brick(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    Ok(hom_dim(m, m)? == 1)
}

pub fn are_orthogonal_bricks(x: &Representation, y: &Representation) -> Result<bool> {
    x.same_category(y)?;
    if x.is_zero() || y.is_zero() {
        return Ok(false);
    }
    Ok(is_brick(x)? && is_brick(y)? && hom_dim(x, y)? == 0 && hom_dim(y, x)? == 0)
}

/// A brick without self-extensions.
pub fn is_exceptional(m: &Representation) -> Result<bool> {
    Ok(is_brick(m)? && ext1_dim(m, m)? == 0)
}

/// Whether the brick `y` is a direct summand of `m`. Since `End(y) = k`, this
/// holds iff some composite `y -> m -> y` is non-zero, i.e. iff the pairing
/// `Hom(m, y) x Hom(y, m) -> End(y)` does not vanish on basis pairs.
pub fn has_brick_summand(m: &Representation, y: &Representation) -> Result<bool> {
    m.same_category(y)?;
    if !is_brick(y)? {
        return Err(Error::NotABrick);
    }
    let to_y = hom_basis(m, y)?.basis;
    let from_y = hom_basis(y, m)?.basis;
    let v = y.dims().0.iter().position(|&d| d > 0).expect("bricks are non-zero");
    for f in &to_y {
        for g in &from_y {
            let c = f.maps[v].mul(&g.maps[v])?.get(0, 0);
            if !c.is_zero() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A Kronecker representation is reduced iff its arrow maps have no common
/// kernel vector (no summand isomorphic to the simple injective at the source).
pub fn is_reduced_kronecker(n: &Representation) -> Result<bool> {
    let (s, _) = n.quiver().kronecker_ends()?;
    let stacked = n
        .matrices()
        .iter()
        .skip(1)
        .try_fold(n.matrix(0).clone(), |acc, m| acc.vstack(m))?;
    Ok(stacked.rank() == n.dim_at(s))
}

/// Indecomposability via Fitting's lemma: `m` decomposes iff some
/// endomorphism has a power that is neither zero nor invertible. Bricks are
/// accepted immediately; otherwise `End(m)` is scanned under [`Limits`].
pub fn is_indecomposable(m: &Representation, limits: &Limits) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = hom_basis(m, m)?;
    if end.dim() == 1 {
        return Ok(true);
    }
    let total = m.total_dim();
    let field = m.field();
    let splits = |f: &Morphism| {
        let mut power = f.clone();
        for _ in 1..total {
            power = power.compose(f).unwrap();
        }
        let rank: usize = power.ranks().iter().sum();
        rank != 0 && rank != total
    };
    let found = match field {
        FieldSpec::Prime(_) => search_exact(&end.basis, field, limits, splits)?,
        FieldSpec::Rational => return Err(Error::NeedsPrimeField),
    };
    Ok(found.is_none())
}

/// Exhaustive scan (up to scalars) bounded by `limits.budget`.
fn search_exact<P>(basis: &[Morphism], field: FieldSpec, limits: &Limits, pred: P) -> Result<Option<Morphism>>
where
    P: Fn(&Morphism) -> bool,
{
    let exact = Limits {
        iso_exhaustive: limits.budget,
        random_trials: 0,
        ..limits.clone()
    };
    search_hom(basis, field, &exact, pred)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    #[test]
    fn simples_on_kronecker() {
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        assert_eq!(hom_basis(&s1, &s1).unwrap().dim(), 1);
        assert_eq!(hom_basis(&s1, &s2).unwrap().dim(), 0);
        // S(2) is simple projective
        assert_eq!(ext1(&s2, &s1).unwrap().dim, 0);
        assert_eq!(ext1(&s2, &s2).unwrap().dim, 0);
        assert_eq!(ext1(&s1, &s2).unwrap().dim, 2);
    }

    #[test]
    fn ext_of_simples_on_a2() {
        // d⁰: Hom(k,0) ⊕ Hom(0,k) = 0 -> Hom(S1_1, S2_2) = k, so coker = k
        let q = Arc::new(Quiver::path(2).unwrap());
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        let e = ext1(&s1, &s2).unwrap();
        assert_eq!(e.dim, 1);
        assert_eq!(e.cocycles[0].components[0], Matrix::identity(f5(), 1));
        assert!(!is_coboundary(&s1, &s2, &e.cocycles[0]).unwrap());
    }

    #[test]
    fn euler_form_values() {
        let k3 = Quiver::kronecker(3).unwrap();
        let one = DimVector(vec![1, 1]);
        assert_eq!(euler_form(&k3, &one, &one).unwrap(), -1);
        assert_eq!(euler_form(&k3, &DimVector(vec![1, 0]), &DimVector(vec![1, 0])).unwrap(), 1);
        assert_eq!(euler_form(&k3, &DimVector(vec![2, 2]), &DimVector(vec![2, 2])).unwrap(), -4);
        assert!(euler_form(&k3, &DimVector(vec![1]), &one).is_err());
    }

    #[test]
    fn brick_predicates() {
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        assert!(is_brick(&s1).unwrap());
        assert!(!is_brick(&s1.power(2)).unwrap());
        assert!(!are_orthogonal_bricks(&s1, &s1).unwrap());
        assert!(is_exceptional(&s2).unwrap());
        assert_eq!(is_brick(&Representation::zero(q, f5())), Err(Error::ZeroRepresentation));
    }

    #[test]
    fn summand_detection() {
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let p1 = Representation::projective(q.clone(), f5(), "1").unwrap();
        let sum = s1.direct_sum(&p1).unwrap();
        assert!(has_brick_summand(&sum, &s1).unwrap());
        assert!(!has_brick_summand(&p1, &s1).unwrap());
        assert_eq!(has_brick_summand(&p1, &s1.power(2)), Err(Error::NotABrick));
    }

    #[test]
    fn reduced_kronecker() {
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let f = f5();
        let bristle = Representation::new(
            q.clone(),
            f,
            DimVector(vec![1, 1]),
            vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)],
        )
        .unwrap();
        assert!(is_reduced_kronecker(&bristle).unwrap());
        let s1 = Representation::simple(q, f, "1").unwrap();
        assert!(!is_reduced_kronecker(&s1).unwrap());
        let a3 = Representation::zero(Arc::new(Quiver::path(3).unwrap()), f);
        assert!(matches!(is_reduced_kronecker(&a3), Err(Error::NotKronecker(_))));
    }

    #[test]
    fn indecomposability() {
        let l = Limits::default();
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let s1 = Representation::simple(q.clone(), f5(), "1").unwrap();
        let s2 = Representation::simple(q.clone(), f5(), "2").unwrap();
        assert!(is_indecomposable(&s1, &l).unwrap());
        assert!(!is_indecomposable(&s1.direct_sum(&s2).unwrap(), &l).unwrap());
        // regular module with a Jordan block: End = k[t]/t^2, local but not a brick
        let f = f5();
        let jordan = Representation::new(
            q,
            f,
            DimVector(vec![2, 2]),
            vec![Matrix::identity(f, 2), Matrix::from_i64(f, 2, 2, &[0, 1, 0, 0])],
        )
        .unwrap();
        assert_eq!(hom_dim(&jordan, &jordan).unwrap(), 2);
        assert!(is_indecomposable(&jordan, &l).unwrap());
        assert!(!is_indecomposable(&jordan.power(2), &l).unwrap());
    }
}
