//! Finite acyclic quivers and dimension vectors.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite acyclic directed multigraph. Vertices and arrows are addressed by
/// index internally and by string id at the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    order: Vec<usize>,
}

impl Quiver {
    /// Validates ids and acyclicity.
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (id, from, to) in arrows {
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateId(id));
            }
            let source = *index.get(&from).ok_or(Error::UnknownVertex(from))?;
            let target = *index.get(&to).ok_or(Error::UnknownVertex(to))?;
            out.push(Arrow { id, source, target });
        }
        let order = topological_order(&vertices, &out).ok_or(Error::CyclicQuiver)?;
        Ok(Quiver {
            vertices,
            arrows: out,
            order,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_edges(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Quiver::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    /// The Kronecker quiver `K(n)`: vertices `1`, `2` and arrows `a1..an: 1 -> 2`.
    pub fn kronecker(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("K(n) needs n >= 1".into()));
        }
        Quiver::new(
            ["1", "2"],
            (1..=n).map(|i| (format!("a{i}"), "1".to_string(), "2".to_string())),
        )
    }

    /// Linearly oriented path `1 -> 2 -> ... -> n`.
    pub fn path(n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Quiver::new(
            names.clone(),
            (1..n).map(|i| (format!("b{i}"), names[i - 1].clone(), names[i].clone())),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.id == id)
            .ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    /// Vertices ordered by depth (longest path from a source), ties by id.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v)
    }

    pub fn arrows_out_of(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v)
    }

    /// Connectedness of the underlying undirected graph. The empty quiver
    /// counts as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                let w = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same vertices and arrow ids with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                source: a.target,
                target: a.source,
            })
            .collect();
        let order = topological_order(&self.vertices, &arrows).expect("opposite of acyclic is acyclic");
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
            order,
        }
    }

    /// Full subquiver on the kept vertices (in original order). Returns the
    /// subquiver plus the kept vertex indices and kept arrow indices.
    pub fn full_subquiver(&self, keep: &[&str]) -> Result<(Quiver, Vec<usize>, Vec<usize>)> {
        let mut kept = Vec::new();
        for k in keep {
            kept.push(self.vertex_index(k)?);
        }
        kept.sort_unstable();
        kept.dedup();
        let arrows: Vec<usize> = (0..self.arrows.len())
            .filter(|&i| kept.contains(&self.arrows[i].source) && kept.contains(&self.arrows[i].target))
            .collect();
        let q = Quiver::new(
            kept.iter().map(|&v| self.vertices[v].clone()),
            arrows.iter().map(|&i| {
                let a = &self.arrows[i];
                (a.id.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone())
            }),
        )?;
        Ok((q, kept, arrows))
    }

    /// Same vertices, only the listed arrows.
    pub fn arrow_subquiver(&self, keep: &[&str]) -> Result<(Quiver, Vec<usize>)> {
        let mut idx = Vec::new();
        for k in keep {
            idx.push(self.arrow_index(k)?);
        }
        idx.sort_unstable();
        idx.dedup();
        let q = Quiver::new(
            self.vertices.clone(),
            idx.iter().map(|&i| {
                let a = &self.arrows[i];
                (a.id.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone())
            }),
        )?;
        Ok((q, idx))
    }

    /// Removes one vertex and its incident arrows.
    pub fn delete_vertex(&self, v: usize) -> Quiver {
        let keep: Vec<&str> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, s)| s.as_str())
            .collect();
        self.full_subquiver(&keep).expect("vertex ids are valid").0
    }

    /// Number of arrows between each unordered vertex pair, as a symmetric matrix.
    pub fn edge_multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
            m[a.target][a.source] += 1;
        }
        m
    }

    /// Recognizes `K(n)`-shaped quivers: two vertices and n >= 1 arrows, all
    /// pointing the same way. Returns `(source, sink)`.
    pub fn kronecker_ends(&self) -> Result<(usize, usize)> {
        if self.vertices.len() != 2 || self.arrows.is_empty() {
            return Err(Error::NotKronecker(String::new()));
        }
        let s = self.arrows[0].source;
        let t = self.arrows[0].target;
        if self.arrows.iter().any(|a| a.source != s || a.target != t) {
            return Err(Error::NotKronecker(": arrows point both ways".into()));
        }
        Ok((s, t))
    }
}

fn topological_order(vertices: &[String], arrows: &[Arrow]) -> Option<Vec<usize>> {
    let n = vertices.len();
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut depth = vec![0usize; n];
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut visited = 0;
    while let Some(v) = ready.pop() {
        visited += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            depth[a.target] = depth[a.target].max(depth[v] + 1);
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                ready.push(a.target);
            }
        }
    }
    if visited != n {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| depth[a].cmp(&depth[b]).then_with(|| vertices[a].cmp(&vertices[b])));
    Some(order)
}

/// Non-negative integer vector indexed by vertex position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(q: &Quiver) -> Self {
        DimVector(vec![0; q.num_vertices()])
    }

    pub fn unit(q: &Quiver, v: usize) -> Self {
        let mut d = Self::zero(q);
        d.0[v] = 1;
        d
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: usize) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Vertex-wise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Builds from `(vertex id, value)` pairs; every vertex must appear exactly once.
    pub fn from_pairs<'a>(q: &Quiver, pairs: impl IntoIterator<Item = (&'a str, usize)>) -> Result<Self> {
        let mut out = vec![None; q.num_vertices()];
        for (k, v) in pairs {
            let i = q.vertex_index(k)?;
            if out[i].replace(v).is_some() {
                return Err(Error::DuplicateId(k.to_string()));
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::InvalidInput(format!("dimension vector misses vertex `{}`", q.vertices()[i])))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }
}
