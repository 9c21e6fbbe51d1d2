//! Quiver Grassmannians `G_d(M)` over prime fields, by exhaustive search.
//!
//! Vertices are visited in topological order. At vertex `j` the images of the
//! already chosen subspaces span a space `S_j` that every candidate must
//! contain, so only the subspaces of `M_j / S_j` of the missing dimension are
//! enumerated (RREF cells on the non-pivot coordinates of `S_j`). Rows of a
//! cell are filled one at a time; after each row the images pushed forward to
//! the successors are accumulated, and the branch dies as soon as one of
//! those spans exceeds the target dimension there.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::field::{Arith, Fp};
use crate::linalg::{pivot_sets, FieldSpec, Matrix};
use crate::par;
use crate::quiver::DimVector;
use crate::rep::{Representation, SubmodulePoint};

#[derive(Clone, Debug)]
pub struct GrassmannianReport {
    pub parent: Representation,
    pub dimvec: DimVector,
    pub points: Vec<SubmodulePoint>,
    pub count: usize,
    pub field: FieldSpec,
}

/// Fully reduced echelon basis over `F_p`, rows in insertion order.
#[derive(Clone, Debug)]
struct Echelon {
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, f: &Fp, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    fn insert(&mut self, f: &Fp, mut v: Vec<u32>) -> bool {
        self.reduce(f, &mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(&v[pc]);
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    fn to_matrix(&self, p: u32) -> Matrix {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        let data = idx.iter().flat_map(|&i| self.rows[i].iter().copied()).collect();
        Matrix::from_prime_vec(p, self.rows.len(), self.n, data)
    }
}

fn apply(f: &Fp, m: &[u32], rows: usize, cols: usize, v: &[u32]) -> Vec<u32> {
    (0..rows)
        .map(|r| {
            m[r * cols..(r + 1) * cols]
                .iter()
                .zip(v)
                .fold(0, |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
        })
        .collect()
}

#[derive(Clone)]
struct State {
    chosen: Vec<Option<Echelon>>,
    /// Span of the images arriving at each vertex from processed vertices.
    pending: Vec<Echelon>,
}

/// One RREF row of a cell, in ambient coordinates.
struct RowTemplate {
    pivot: usize,
    free: Vec<usize>,
}

struct Search<'a> {
    f: Fp,
    p: u32,
    mats: Vec<Vec<u32>>,
    dims: &'a [usize],
    target: &'a [usize],
    order: &'a [usize],
    arrows: Vec<(usize, usize)>,
    nodes: AtomicU64,
    budget: u64,
}

/// A starting point for an independent piece of the search: a pivot cell at
/// the first vertex together with a fixed assignment of its first row.
struct Task {
    cell: Vec<usize>,
    first_row: Vec<u32>,
}

impl<'a> Search<'a> {
    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                what: "submodule search",
                needed: n as u128,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Pushes the images of `v in M_j` to the successors; false if a target
    /// dimension is exceeded.
    fn push_images(&self, state: &mut State, j: usize, v: &[u32]) -> bool {
        for (ai, &(s, t)) in self.arrows.iter().enumerate() {
            if s != j {
                continue;
            }
            let w = apply(&self.f, &self.mats[ai], self.dims[t], self.dims[j], v);
            if state.pending[t].insert(&self.f, w) && state.pending[t].dim() > self.target[t] {
                return false;
            }
        }
        true
    }

    /// Prepares vertex `order[pos]`: the forced span, its pushed images, and
    /// the free coordinates of the quotient.
    fn enter(&self, pos: usize, mut state: State) -> Option<(State, Echelon, Vec<usize>, usize)> {
        let j = self.order[pos];
        let forced = state.pending[j].clone();
        if forced.dim() > self.target[j] {
            return None;
        }
        for row in &forced.rows {
            if !self.push_images(&mut state, j, row) {
                return None;
            }
        }
        let coords: Vec<usize> = (0..self.dims[j]).filter(|c| !forced.pivots.contains(c)).collect();
        let k = self.target[j] - forced.dim();
        Some((state, forced, coords, k))
    }

    fn templates(coords: &[usize], cell: &[usize]) -> Vec<RowTemplate> {
        let mut rows: Vec<RowTemplate> = cell
            .iter()
            .map(|&pc| RowTemplate {
                pivot: coords[pc],
                free: (pc + 1..coords.len())
                    .filter(|c| !cell.contains(c))
                    .map(|c| coords[c])
                    .collect(),
            })
            .collect();
        // fewest free entries first: cheapest rows before the pruning kicks in
        rows.sort_by_key(|r| r.free.len());
        rows
    }

    fn row_vector(&self, j: usize, t: &RowTemplate, digits: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.dims[j]];
        v[t.pivot] = 1;
        for (&c, &d) in t.free.iter().zip(digits) {
            v[c] = d;
        }
        v
    }

    fn visit(&self, pos: usize, state: State, emit: &mut dyn FnMut(&State)) -> Result<()> {
        if pos == self.order.len() {
            emit(&state);
            return Ok(());
        }
        let Some((state, forced, coords, k)) = self.enter(pos, state) else {
            return Ok(());
        };
        for cell in pivot_sets(coords.len(), k) {
            let rows = Self::templates(&coords, &cell);
            self.fill(pos, &rows, 0, state.clone(), forced.clone(), emit)?;
        }
        Ok(())
    }

    fn fill(
        &self,
        pos: usize,
        rows: &[RowTemplate],
        at: usize,
        state: State,
        basis: Echelon,
        emit: &mut dyn FnMut(&State),
    ) -> Result<()> {
        let j = self.order[pos];
        if at == rows.len() {
            let mut state = state;
            state.chosen[j] = Some(basis);
            return self.visit(pos + 1, state, emit);
        }
        let t = &rows[at];
        let mut digits = vec![0u32; t.free.len()];
        loop {
            self.try_row(pos, rows, at, &state, &basis, &digits, emit)?;
            if !odometer(&mut digits, self.p) {
                return Ok(());
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn try_row(
        &self,
        pos: usize,
        rows: &[RowTemplate],
        at: usize,
        state: &State,
        basis: &Echelon,
        digits: &[u32],
        emit: &mut dyn FnMut(&State),
    ) -> Result<()> {
        self.tick()?;
        let j = self.order[pos];
        let v = self.row_vector(j, &rows[at], digits);
        let mut next = state.clone();
        if !self.push_images(&mut next, j, &v) {
            return Ok(());
        }
        let mut b = basis.clone();
        let grew = b.insert(&self.f, v);
        debug_assert!(grew);
        self.fill(pos, rows, at + 1, next, b, emit)
    }

    fn initial(&self) -> State {
        State {
            chosen: vec![None; self.dims.len()],
            pending: self.dims.iter().map(|&n| Echelon::new(n)).collect(),
        }
    }

    fn tasks(&self) -> Vec<Task> {
        let Some((_, _, coords, k)) = self.enter(0, self.initial()) else {
            return Vec::new();
        };
        if k == 0 {
            return vec![Task {
                cell: Vec::new(),
                first_row: Vec::new(),
            }];
        }
        let mut out = Vec::new();
        for cell in pivot_sets(coords.len(), k) {
            let rows = Self::templates(&coords, &cell);
            let mut digits = vec![0u32; rows[0].free.len()];
            loop {
                out.push(Task {
                    cell: cell.clone(),
                    first_row: digits.clone(),
                });
                if !odometer(&mut digits, self.p) {
                    break;
                }
            }
        }
        out
    }

    fn run(&self, task: &Task, emit: &mut dyn FnMut(&State)) -> Result<()> {
        let Some((state, forced, coords, k)) = self.enter(0, self.initial()) else {
            return Ok(());
        };
        if k == 0 {
            return self.fill(0, &[], 0, state, forced, emit);
        }
        let rows = Self::templates(&coords, &task.cell);
        self.try_row(0, &rows, 0, &state, &forced, &task.first_row, emit)
    }
}

/// Advances a base-`p` counter, last digit fastest; false after wrapping.
fn odometer(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

fn prepare(m: &Representation, d: &DimVector) -> Result<u32> {
    let FieldSpec::Prime(p) = m.field() else {
        return Err(Error::NeedsPrimeField);
    };
    if d.0.len() != m.quiver().num_vertices() {
        return Err(Error::DimensionMismatch("dimension vector does not match the quiver".into()));
    }
    if !d.le(m.dims()) {
        return Err(Error::InvalidInput(format!(
            "dimension vector {:?} exceeds dim M = {:?}",
            d.0,
            m.dims().0
        )));
    }
    Ok(p)
}

fn with_search<T>(m: &Representation, d: &DimVector, limits: &Limits, body: impl FnOnce(&Search) -> Result<T>) -> Result<T> {
    let p = prepare(m, d)?;
    let search = Search {
        f: Fp::new(p),
        p,
        mats: m.matrices().iter().map(|x| x.prime_data().unwrap().to_vec()).collect(),
        dims: &m.dims().0,
        target: &d.0,
        order: m.quiver().topological_order(),
        arrows: m.quiver().arrows().iter().map(|a| (a.source, a.target)).collect(),
        nodes: AtomicU64::new(0),
        budget: limits.budget,
    };
    body(&search)
}

fn point_key(pt: &SubmodulePoint, order: &[usize]) -> Vec<(Vec<usize>, Vec<u32>)> {
    order
        .iter()
        .map(|&v| {
            let m = &pt.subspaces[v];
            (m.rref().pivots, m.prime_data().unwrap().to_vec())
        })
        .collect()
}

/// All submodules of `m` with dimension vector `d`, as canonical points.
pub fn enumerate_submodules(m: &Representation, d: &DimVector, limits: &Limits) -> Result<GrassmannianReport> {
    let points = with_search(m, d, limits, |s| {
        let parts = par::try_map(s.tasks(), limits.parallel, |task| {
            let mut found = Vec::new();
            s.run(&task, &mut |st: &State| {
                found.push(SubmodulePoint::from_canonical(
                    st.chosen.iter().map(|e| e.as_ref().unwrap().to_matrix(s.p)).collect(),
                ))
            })?;
            Ok::<_, Error>(found)
        })?;
        Ok(parts.into_iter().flatten().collect::<Vec<_>>())
    })?;
    let order = m.quiver().topological_order();
    let mut keyed: Vec<_> = points.into_iter().map(|p| (point_key(&p, order), p)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let points: Vec<SubmodulePoint> = keyed.into_iter().map(|(_, p)| p).collect();
    Ok(GrassmannianReport {
        parent: m.clone(),
        dimvec: d.clone(),
        count: points.len(),
        points,
        field: m.field(),
    })
}

/// `|G_d(m)(F_p)|` without materializing points.
pub fn count_submodules(m: &Representation, d: &DimVector, limits: &Limits) -> Result<u64> {
    with_search(m, d, limits, |s| {
        let counts = par::try_map(s.tasks(), limits.parallel, |task| {
            let mut n = 0u64;
            s.run(&task, &mut |_: &State| n += 1)?;
            Ok::<_, Error>(n)
        })?;
        Ok(counts.into_iter().sum())
    })
}

/// The bristle variety: `(1,1)`-submodules of a Kronecker representation on
/// which some arrow acts non-trivially.
pub fn bristle_points(n: &Representation, limits: &Limits) -> Result<GrassmannianReport> {
    let (s, t) = n.quiver().kronecker_ends()?;
    let mut d = DimVector::zero(n.quiver());
    d.0[s] = 1;
    d.0[t] = 1;
    if !d.le(n.dims()) {
        return Ok(GrassmannianReport {
            parent: n.clone(),
            dimvec: d,
            points: Vec::new(),
            count: 0,
            field: n.field(),
        });
    }
    let mut report = enumerate_submodules(n, &d, limits)?;
    report.points.retain(|pt| {
        let line = pt.subspaces[s].transpose();
        n.matrices().iter().any(|a| !a.mul(&line).unwrap().is_zero())
    });
    report.count = report.points.len();
    Ok(report)
}

impl GrassmannianReport {
    /// `{dimvec, count, points: [{vertex: basis}]}`; `count_only` omits points.
    pub fn to_json(&self, count_only: bool) -> serde_json::Value {
        let q = self.parent.quiver();
        let mut out = serde_json::json!({
            "dimvec": crate::json::dimvec_to_json(q, &self.dimvec),
            "count": self.count,
        });
        if !count_only {
            out["points"] = self.points.iter().map(|p| crate::json::point_to_json(q, p)).collect();
        }
        out
    }
}
