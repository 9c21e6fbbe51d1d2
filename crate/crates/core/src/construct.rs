//! The module families and the functor `η: mod kK(n) -> E(Y, X)`, together
//! with checkers for condition (C), the two submodule lemmas, fullness of
//! `η` and the bristle bijection.
//!
//! Kronecker convention: for `N` on `K(n)` the source space `V₁` carries the
//! `Y`-multiplicity `b` and the sink space `V₂` the `X`-multiplicity `a`, so
//! `(ηN)_v = (X_v ⊗ V₂) ⊕ (Y_v ⊗ V₁)` and
//!
//! ```text
//! (ηN)_α = [ X_α ⊗ I_a   Σᵢ εᵢ,α ⊗ γᵢ ]
//!          [ 0           Y_α ⊗ I_b    ]
//! ```
//!
//! with `εᵢ` the canonical basis of `Ext¹(Y, X)`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::grassmann::{count_submodules, enumerate_submodules};
use crate::homext::{
    are_orthogonal_bricks, ext1, ext1_dim, has_brick_summand, hom_basis, hom_dim, is_exceptional,
    is_indecomposable, is_reduced_kronecker, ExtCocycle,
};
use crate::json::{dimvec_to_json, point_to_json, rep_to_json};
use crate::linalg::{FieldSpec, Matrix};
use crate::par;
use crate::quiver::{DimVector, Quiver};
use crate::rep::{is_isomorphic, search_hom, Morphism, Representation, SubmodulePoint};

fn check_lambdas(lambdas: &[i64], field: FieldSpec) -> Result<Vec<i64>> {
    let n = lambdas.len();
    if let Some(p) = field.order() {
        if p as usize <= n {
            return Err(Error::FieldTooSmall(format!(
                "{n} distinct non-zero scalars do not exist in F_{p}"
            )));
        }
    }
    let reduced: Vec<_> = lambdas.iter().map(|&l| field.scalar(l)).collect();
    if reduced.iter().any(|s| s.is_zero()) {
        return Err(Error::InvalidInput("the scalars λ must be non-zero".into()));
    }
    for i in 0..n {
        if reduced[i + 1..].contains(&reduced[i]) {
            return Err(Error::DistinctnessViolated);
        }
    }
    Ok(lambdas.to_vec())
}

fn diag(field: FieldSpec, values: &[i64]) -> Matrix {
    Matrix::from_fn(field, values.len(), values.len(), |i, j| if i == j { values[i] } else { 0 })
}

/// `X = (kⁿ, kⁿ; I, diag(λ), C)` on `K(3)`, `C` the cyclic shift `e_i ↦ e_{i+1}`.
pub fn case2_x(lambdas: &[i64], field: FieldSpec) -> Result<Representation> {
    if lambdas.len() < 2 {
        return Err(Error::InvalidInput("case 2 needs n >= 2 scalars".into()));
    }
    let l = check_lambdas(lambdas, field)?;
    let n = l.len();
    let cyc = Matrix::from_fn(field, n, n, |r, c| i64::from(r == (c + 1) % n));
    Representation::new(
        Arc::new(Quiver::kronecker(3)?),
        field,
        DimVector(vec![n, n]),
        vec![Matrix::identity(field, n), diag(field, &l), cyc],
    )
}

/// `Y = (k, k; 1, 0, 0)` on `K(3)`.
pub fn case2_y(field: FieldSpec) -> Representation {
    Representation::new(
        Arc::new(Quiver::kronecker(3).expect("K(3)")),
        field,
        DimVector(vec![1, 1]),
        vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1), Matrix::zeros(field, 1, 1)],
    )
    .expect("shapes are fixed")
}

/// `X′ = (k², k²; I, diag(l1, l2), N)` with `N e₁ = e₂`, `N e₂ = 0`.
pub fn remark_xprime(l1: i64, l2: i64, field: FieldSpec) -> Result<Representation> {
    check_lambdas(&[l1, l2], field)?;
    let nil = Matrix::from_i64(field, 2, 2, &[0, 0, 1, 0]);
    Representation::new(
        Arc::new(Quiver::kronecker(3)?),
        field,
        DimVector(vec![2, 2]),
        vec![Matrix::identity(field, 2), diag(field, &[l1, l2]), nil],
    )
}

/// The exceptional `K(2)`-module of dimension vector `(m, m+1)`.
pub fn kronecker_preprojective(m: usize, field: FieldSpec) -> Representation {
    let upper = Matrix::from_fn(field, m + 1, m, |r, c| i64::from(r == c));
    let lower = Matrix::from_fn(field, m + 1, m, |r, c| i64::from(r == c + 1));
    Representation::new(
        Arc::new(Quiver::kronecker(2).expect("K(2)")),
        field,
        DimVector(vec![m, m + 1]),
        vec![upper, lower],
    )
    .expect("shapes are fixed")
}

#[derive(Clone, Debug)]
pub struct Case1Pair {
    pub x: Representation,
    pub y: Representation,
    pub n: usize,
    /// False when `x` is a brick with self-extensions; the pair is still usable.
    pub x_exceptional: bool,
}

/// Extends `x_on_qprime` by zero to `q` and pairs it with `Y = S(ω)`.
pub fn case1_pair(q: &Quiver, omega: &str, x_on_qprime: &Representation) -> Result<Case1Pair> {
    let w = q.vertex_index(omega)?;
    if !q.is_source(w) {
        return Err(Error::NotASource(omega.to_string()));
    }
    let sub = x_on_qprime.quiver();
    let expected = q.delete_vertex(w);
    if expected.vertices() != sub.vertices() || expected.arrows().len() != sub.arrows().len() {
        return Err(Error::QuiverMismatch);
    }
    let q = Arc::new(q.clone());
    let field = x_on_qprime.field();
    let dims = DimVector(
        q.vertices()
            .iter()
            .map(|v| sub.vertex_index(v).map_or(0, |i| x_on_qprime.dim_at(i)))
            .collect(),
    );
    let mut mats = Vec::new();
    for a in q.arrows() {
        mats.push(if a.source == w {
            Matrix::zeros(field, dims.0[a.target], 0)
        } else {
            x_on_qprime.matrix_by_id(&a.id)?.clone()
        });
    }
    let x = Representation::new(q.clone(), field, dims, mats)?;
    let y = Representation::simple(q.clone(), field, omega)?;
    if !are_orthogonal_bricks(&x, &y)? {
        return Err(Error::NotOrthogonalBricks);
    }
    let n = ext1_dim(&y, &x)?;
    let heads: usize = q.arrows_out_of(w).map(|(_, a)| x.dim_at(a.target)).sum();
    assert_eq!(n, heads, "Ext¹(S(ω), X) must count the arrows out of ω weighted by dim X");
    Ok(Case1Pair {
        x_exceptional: is_exceptional(&x)?,
        x,
        y,
        n,
    })
}

#[derive(Clone, Debug)]
pub struct EtaContext {
    pub x: Representation,
    pub y: Representation,
    pub n: usize,
    pub cocycles: Vec<ExtCocycle>,
    pub xdim: DimVector,
    pub ydim: DimVector,
}

pub fn make_eta_context(x: &Representation, y: &Representation) -> Result<EtaContext> {
    if !are_orthogonal_bricks(x, y)? {
        return Err(Error::NotOrthogonalBricks);
    }
    let e = ext1(y, x)?;
    if e.dim == 0 {
        return Err(Error::ZeroExt);
    }
    Ok(EtaContext {
        x: x.clone(),
        y: y.clone(),
        n: e.dim,
        cocycles: e.cocycles,
        xdim: x.dims().clone(),
        ydim: y.dims().clone(),
    })
}

#[derive(Clone, Debug)]
pub struct EtaWitness {
    pub m: Representation,
    pub a: usize,
    pub b: usize,
    /// `X^a -> M`, with `X^a` laid out as `power(a)`.
    pub mu: Morphism,
    /// `M -> Y^b`, with `Y^b` laid out as `power(b)`.
    pub pi: Morphism,
}

/// Permutation taking `power(k)` coordinates `(copy j, index i)` to the
/// tensor layout `i * k + j`.
fn shuffle(field: FieldSpec, d: usize, k: usize) -> Matrix {
    Matrix::from_fn(field, d * k, d * k, |r, c| i64::from(r == (c % d) * k + c / d))
}

pub fn build_eta(ctx: &EtaContext, n_rep: &Representation) -> Result<EtaWitness> {
    let field = ctx.x.field();
    if n_rep.field() != field {
        return Err(Error::FieldMismatch);
    }
    let (s, t) = n_rep.quiver().kronecker_ends()?;
    if n_rep.quiver().num_arrows() != ctx.n {
        return Err(Error::NotKronecker(format!(": expected K({}) for this context", ctx.n)));
    }
    let (b, a) = (n_rep.dim_at(s), n_rep.dim_at(t));
    let q = ctx.x.quiver_arc().clone();
    let (ia, ib) = (Matrix::identity(field, a), Matrix::identity(field, b));
    let mut mats = Vec::with_capacity(q.num_arrows());
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (xs, xt) = (ctx.xdim.0[arrow.source], ctx.xdim.0[arrow.target]);
        let (ys, yt) = (ctx.ydim.0[arrow.source], ctx.ydim.0[arrow.target]);
        let mut off = Matrix::zeros(field, xt * a, ys * b);
        for (eps, gamma) in ctx.cocycles.iter().zip(n_rep.matrices()) {
            off = off.add(&eps.components[k].kron(gamma)?)?;
        }
        let top = ctx.x.matrix(k).kron(&ia)?.hstack(&off)?;
        let bottom = Matrix::zeros(field, yt * b, xs * a).hstack(&ctx.y.matrix(k).kron(&ib)?)?;
        mats.push(top.vstack(&bottom)?);
    }
    let dims = ctx.xdim.scale(a).add(&ctx.ydim.scale(b));
    let m = Representation::new(q, field, dims, mats)?;
    let xa = ctx.x.power(a);
    let yb = ctx.y.power(b);
    let mut mu = Vec::new();
    let mut pi = Vec::new();
    for v in 0..m.quiver().num_vertices() {
        let (xv, yv) = (ctx.xdim.0[v] * a, ctx.ydim.0[v] * b);
        mu.push(shuffle(field, ctx.xdim.0[v], a).vstack(&Matrix::zeros(field, yv, xv))?);
        let back = shuffle(field, ctx.ydim.0[v], b).transpose();
        pi.push(Matrix::zeros(field, yv, xv).hstack(&back)?);
    }
    let mu = Morphism::new(&xa, &m, mu)?;
    let pi = Morphism::new(&m, &yb, pi)?;
    Ok(EtaWitness { m, a, b, mu, pi })
}

/// Indecomposable, of dimension vector `x + y`, and an extension of `Y` by `X`.
pub fn is_e_bristle(ctx: &EtaContext, u: &Representation, limits: &Limits) -> Result<bool> {
    ctx.x.same_category(u)?;
    if *u.dims() != ctx.xdim.add(&ctx.ydim) || !is_indecomposable(u, limits)? {
        return Ok(false);
    }
    let hom = hom_basis(&ctx.x, u)?;
    let good = |f: &Morphism| {
        f.is_injective()
            && u.image_point(f)
                .and_then(|pt| u.quotient_representation(&pt))
                .and_then(|(quot, _)| is_isomorphic(&quot, &ctx.y, limits))
                .unwrap_or(false)
    };
    Ok(search_hom(&hom.basis, u.field(), limits, good)?.is_some())
}

#[derive(Clone, Debug)]
pub struct ConditionCReport {
    pub holds: bool,
    pub checked: usize,
    pub violations: Vec<SubmodulePoint>,
    pub parent: Representation,
}

impl ConditionCReport {
    pub fn to_json(&self) -> Value {
        let q = self.parent.quiver();
        json!({
            "holds": self.holds,
            "checked": self.checked,
            "violations": self.violations.iter().map(|p| point_to_json(q, p)).collect::<Vec<_>>(),
        })
    }
}

pub fn check_condition_c(ctx: &EtaContext, witness: &EtaWitness, limits: &Limits) -> Result<ConditionCReport> {
    if has_brick_summand(&witness.m, &ctx.y)? {
        return Err(Error::NotReduced);
    }
    let m = &witness.m;
    let d = ctx.xdim.add(&ctx.ydim);
    let report = enumerate_submodules(m, &d, limits)?;
    let flags = par::try_map(report.points.iter().collect::<Vec<_>>(), limits.parallel, |pt| {
        let (u, _) = m.sub_representation(pt)?;
        is_e_bristle(ctx, &u, limits)
    })?;
    let violations: Vec<SubmodulePoint> = report
        .points
        .into_iter()
        .zip(flags)
        .filter(|(_, ok)| !ok)
        .map(|(p, _)| p)
        .collect();
    Ok(ConditionCReport {
        holds: violations.is_empty(),
        checked: report.count,
        violations,
        parent: m.clone(),
    })
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub holds: bool,
    /// One entry per dimension vector examined: `(d, points, failures)`.
    pub rows: Vec<(DimVector, usize, Vec<SubmodulePoint>)>,
    pub parent: Representation,
}

impl LemmaReport {
    pub fn to_json(&self) -> Value {
        let q = self.parent.quiver();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(d, count, failures)| {
                json!({
                    "dimvec": dimvec_to_json(q, d),
                    "count": count,
                    "failures": failures.iter().map(|p| point_to_json(q, p)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"holds": self.holds, "rows": rows})
    }
}

/// Points of `G_d(parent)` whose submodule is not isomorphic to `expect`.
fn non_isomorphic(parent: &Representation, d: &DimVector, expect: &Representation, limits: &Limits) -> Result<(usize, Vec<SubmodulePoint>)> {
    let report = enumerate_submodules(parent, d, limits)?;
    let flags = par::try_map(report.points.iter().collect::<Vec<_>>(), limits.parallel, |pt| {
        let (w, _) = parent.sub_representation(pt)?;
        is_isomorphic(&w, expect, limits)
    })?;
    let bad = report.points.into_iter().zip(flags).filter(|(_, ok)| !ok).map(|(p, _)| p).collect();
    Ok((report.count, bad))
}

/// Every submodule of `X^a` with dimension vector `dim X` is isomorphic to `X`.
pub fn check_lemma1(x: &Representation, a: usize, limits: &Limits) -> Result<LemmaReport> {
    if a == 0 {
        return Err(Error::InvalidInput("a must be at least 1".into()));
    }
    let xa = x.power(a);
    let (count, failures) = non_isomorphic(&xa, x.dims(), x, limits)?;
    Ok(LemmaReport {
        holds: failures.is_empty(),
        rows: vec![(x.dims().clone(), count, failures)],
        parent: xa,
    })
}

/// Every `(w, w)`-submodule of `X^a` is isomorphic to `X^s` with `w = s n`;
/// none exist when `n` does not divide `w`.
pub fn check_lemma2(x: &Representation, a: usize, limits: &Limits) -> Result<LemmaReport> {
    let n = x.dim_at(0);
    if x.dims().0 != [n, n] || n == 0 {
        return Err(Error::InvalidInput("expected a module of dimension vector (n, n)".into()));
    }
    let xa = x.power(a);
    let mut rows = Vec::new();
    let mut holds = true;
    for w in 0..=a * n {
        let d = DimVector(vec![w, w]);
        if w % n != 0 {
            let count = count_submodules(&xa, &d, limits)? as usize;
            holds &= count == 0;
            rows.push((d, count, Vec::new()));
            continue;
        }
        let (count, failures) = non_isomorphic(&xa, &d, &x.power(w / n), limits)?;
        holds &= failures.is_empty();
        rows.push((d, count, failures));
    }
    Ok(LemmaReport { holds, rows, parent: xa })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FullnessReport {
    pub hom_eta: usize,
    pub hom_kronecker: usize,
    pub equal: bool,
}

pub fn check_eta_fullness(ctx: &EtaContext, n1: &Representation, n2: &Representation) -> Result<FullnessReport> {
    let e1 = build_eta(ctx, n1)?;
    let e2 = build_eta(ctx, n2)?;
    let hom_eta = hom_dim(&e1.m, &e2.m)?;
    let hom_kronecker = hom_dim(n1, n2)?;
    Ok(FullnessReport {
        hom_eta,
        hom_kronecker,
        equal: hom_eta == hom_kronecker,
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct BijectionReport {
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

/// Compares `|G_(1,1)(N)|` with `|G_{x+y}(ηN)|`.
pub fn check_bijection(ctx: &EtaContext, n_rep: &Representation, limits: &Limits) -> Result<BijectionReport> {
    if !is_reduced_kronecker(n_rep)? {
        return Err(Error::NotReduced);
    }
    let q = n_rep.quiver();
    let lhs = count_submodules(n_rep, &DimVector(vec![1; q.num_vertices()]), limits)?;
    let m = build_eta(ctx, n_rep)?.m;
    let rhs = count_submodules(&m, &ctx.xdim.add(&ctx.ydim), limits)?;
    Ok(BijectionReport { lhs, rhs, equal: lhs == rhs })
}

/// The indecomposable reduced `K(2)`-module with source dimension `b` and
/// sink dimension 2, for `b` in `1..=3`.
pub fn remark_kronecker_module(b: usize, field: FieldSpec) -> Result<Representation> {
    let (g1, g2) = match b {
        1 => (vec![1, 0], vec![0, 1]),
        2 => (vec![1, 0, 0, 1], vec![0, 1, 0, 0]),
        3 => (vec![1, 0, 0, 0, 1, 0], vec![0, 1, 0, 0, 0, 1]),
        _ => return Err(Error::InvalidInput("b must be 1, 2 or 3".into())),
    };
    Representation::new(
        Arc::new(Quiver::kronecker(2)?),
        field,
        DimVector(vec![b, 2]),
        vec![Matrix::from_i64(field, 2, b, &g1), Matrix::from_i64(field, 2, b, &g2)],
    )
}

#[derive(Clone, Debug)]
pub struct RemarkReport {
    pub b: usize,
    pub witness: SubmodulePoint,
    pub witness_is_e_bristle: bool,
    pub witness_among_violations: bool,
    pub condition_c: ConditionCReport,
    pub bijection: BijectionReport,
}

impl RemarkReport {
    /// The remark is reproduced when (C) fails through the explicit witness
    /// and the bristle count embeds properly.
    pub fn reproduced(&self) -> bool {
        !self.witness_is_e_bristle
            && self.witness_among_violations
            && !self.condition_c.holds
            && self.bijection.lhs < self.bijection.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "b": self.b,
            "witness": point_to_json(self.condition_c.parent.quiver(), &self.witness),
            "witness_is_e_bristle": self.witness_is_e_bristle,
            "witness_among_violations": self.witness_among_violations,
            "condition_c": self.condition_c.to_json(),
            "bijection": self.bijection,
            "module": rep_to_json(&self.condition_c.parent),
        })
    }
}

/// Builds `M = η(N)` from `X′` and `Y` and exhibits `X ⊕ V ⊂ X² ⊂ M` as a
/// `(3,3)`-submodule that is not an E-bristle.
pub fn remark_counterexample_demo(field: FieldSpec, l1: i64, l2: i64, b: usize, limits: &Limits) -> Result<RemarkReport> {
    if field.order().is_some_and(|p| p < 3) {
        return Err(Error::FieldTooSmall("the remark needs p >= 3".into()));
    }
    let x = remark_xprime(l1, l2, field)?;
    let ctx = make_eta_context(&x, &case2_y(field))?;
    let n_rep = remark_kronecker_module(b, field)?;
    let witness = build_eta(&ctx, &n_rep)?;
    let v_points = enumerate_submodules(&x, &DimVector(vec![1, 1]), limits)?;
    if v_points.count != 1 {
        return Err(Error::InvalidInput(format!("X′ has {} submodules of dimension (1,1), expected one", v_points.count)));
    }
    let v = &v_points.points[0];
    // X ⊕ V inside X² = power(2): first copy full, second copy V
    let mut spans = Vec::new();
    for vert in 0..x.quiver().num_vertices() {
        let d = x.dim_at(vert);
        let first = Matrix::identity(field, d).hstack(&Matrix::zeros(field, d, d))?;
        let second = Matrix::zeros(field, 1, d).hstack(&v.subspaces[vert])?;
        let inside = first.vstack(&second)?;
        spans.push(witness.mu.maps[vert].mul(&inside.transpose())?.transpose());
    }
    let point = SubmodulePoint::new(&witness.m, spans)?;
    let (u, _) = witness.m.sub_representation(&point)?;
    let witness_is_e_bristle = is_e_bristle(&ctx, &u, limits)?;
    let condition_c = check_condition_c(&ctx, &witness, limits)?;
    let witness_among_violations = condition_c.violations.contains(&point);
    let bijection = check_bijection(&ctx, &n_rep, limits)?;
    Ok(RemarkReport {
        b,
        witness: point,
        witness_is_e_bristle,
        witness_among_violations,
        condition_c,
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homext::is_brick;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn k2(field: FieldSpec, dims: [usize; 2], a: &[i64], b: &[i64]) -> Representation {
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        Representation::new(
            q,
            field,
            DimVector(dims.to_vec()),
            vec![
                Matrix::from_i64(field, dims[1], dims[0], a),
                Matrix::from_i64(field, dims[1], dims[0], b),
            ],
        )
        .unwrap()
    }

    #[test]
    fn case2_family_shapes() {
        let f = fp(5);
        let x = case2_x(&[1, 2], f).unwrap();
        assert_eq!(x.matrix(0), &Matrix::identity(f, 2));
        assert_eq!(x.matrix(1), &Matrix::from_i64(f, 2, 2, &[1, 0, 0, 2]));
        assert_eq!(x.matrix(2), &Matrix::from_i64(f, 2, 2, &[0, 1, 1, 0]));
        assert!(is_brick(&x).unwrap());
        assert_eq!(case2_x(&[1, 1], f).unwrap_err(), Error::DistinctnessViolated);
        assert_eq!(case2_x(&[1, 6], f).unwrap_err(), Error::DistinctnessViolated);
        assert!(matches!(case2_x(&[1, 2, 3], fp(3)), Err(Error::FieldTooSmall(_))));
        assert!(case2_x(&[0, 2], f).is_err());
        let n3 = case2_x(&[1, 2, 3], f).unwrap();
        assert_eq!(n3.matrix(2), &Matrix::from_i64(f, 3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn preprojectives_are_exceptional() {
        for m in 0..4 {
            let x = kronecker_preprojective(m, fp(3));
            assert_eq!(x.dims().0, vec![m, m + 1]);
            assert!(is_exceptional(&x).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn eta_on_simples_and_bristles() {
        let f = fp(3);
        let ctx = make_eta_context(&case2_x(&[1, 2], f).unwrap(), &case2_y(f)).unwrap();
        assert_eq!(ctx.n, 2);
        let q = Arc::new(Quiver::kronecker(2).unwrap());
        let l = Limits::default();
        let sink = Representation::simple(q.clone(), f, "2").unwrap();
        let src = Representation::simple(q.clone(), f, "1").unwrap();
        assert!(is_isomorphic(&build_eta(&ctx, &sink).unwrap().m, &ctx.x, &l).unwrap());
        assert!(is_isomorphic(&build_eta(&ctx, &src).unwrap().m, &ctx.y, &l).unwrap());
        let bristle = k2(f, [1, 1], &[1], &[0]);
        let w = build_eta(&ctx, &bristle).unwrap();
        assert!(is_e_bristle(&ctx, &w.m, &l).unwrap());
        let split = ctx.x.direct_sum(&ctx.y).unwrap();
        assert!(!is_e_bristle(&ctx, &split, &l).unwrap());
    }

    #[test]
    fn witness_is_exact() {
        let f = fp(5);
        let ctx = make_eta_context(&case2_x(&[1, 2], f).unwrap(), &case2_y(f)).unwrap();
        let n = k2(f, [2, 3], &[1, 0, 0, 1, 0, 0], &[0, 0, 1, 0, 0, 1]);
        let w = build_eta(&ctx, &n).unwrap();
        assert_eq!((w.a, w.b), (3, 2));
        assert!(w.pi.compose(&w.mu).unwrap().is_zero());
        assert!(w.mu.is_injective() && w.pi.is_surjective());
        for v in 0..2 {
            assert_eq!(w.mu.ranks()[v] + w.pi.ranks()[v], w.m.dim_at(v));
        }
        assert!(!has_brick_summand(&w.m, &ctx.y).unwrap());
    }

    #[test]
    fn context_errors() {
        let f = fp(3);
        let q = Arc::new(Quiver::kronecker(3).unwrap());
        let s = Representation::simple(q, f, "1").unwrap();
        assert_eq!(make_eta_context(&s, &s).unwrap_err(), Error::NotOrthogonalBricks);
        let ctx = make_eta_context(&case2_x(&[1, 2], f).unwrap(), &case2_y(f)).unwrap();
        let wrong = Representation::simple(Arc::new(Quiver::kronecker(3).unwrap()), f, "1").unwrap();
        assert!(build_eta(&ctx, &wrong).is_err());
    }

    #[test]
    fn case1_pair_counts_arrows_out_of_omega() {
        let f = fp(3);
        let x = kronecker_preprojective(1, f);
        for (head, n) in [("2", 2), ("1", 1)] {
            let q = Quiver::from_edges(&["1", "2", "w"], &[("a1", "1", "2"), ("a2", "1", "2"), ("c", "w", head)]).unwrap();
            let pair = case1_pair(&q, "w", &x).unwrap();
            assert_eq!(pair.n, n);
            assert!(pair.x_exceptional);
            assert_eq!(hom_dim(&pair.y, &pair.x).unwrap(), 0);
        }
        let q = Quiver::from_edges(&["1", "2", "w"], &[("a1", "1", "2"), ("a2", "1", "2"), ("c", "2", "w")]).unwrap();
        assert!(matches!(case1_pair(&q, "w", &x), Err(Error::NotASource(_))));
    }

    #[test]
    fn lemma2_small() {
        let x = case2_x(&[1, 2], fp(3)).unwrap();
        let r = check_lemma2(&x, 1, &Limits::default()).unwrap();
        assert!(r.holds);
        let counts: Vec<usize> = r.rows.iter().map(|row| row.1).collect();
        assert_eq!(counts, vec![1, 0, 1]);
        let r = check_lemma1(&x, 1, &Limits::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.rows[0].1, 1);
    }

    #[test]
    fn remark_small_b() {
        let r = remark_counterexample_demo(fp(3), 1, 2, 1, &Limits::default()).unwrap();
        assert!(!r.witness_is_e_bristle);
        assert!(r.reproduced(), "{:?}", r.bijection);
        assert!(matches!(
            remark_counterexample_demo(fp(2), 1, 2, 1, &Limits::default()),
            Err(Error::FieldTooSmall(_))
        ));
    }
}
