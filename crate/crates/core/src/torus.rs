//! Toroidal meshes `C_{n_1} x ... x C_{n_r}`.
//!
//! Vertices are coordinate tuples, stored internally as row-major indices
//! (the first axis is the most significant). Edges are canonical: an edge is
//! named by its base vertex and the axis along which it steps `+1`. On an
//! axis of length 2 the two neighbors coincide, so only bases with
//! coordinate 0 on that axis are canonical and the axis contributes a single
//! edge per pair of vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of a toroidal mesh, as its coordinate tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub Vec<usize>);

impl Vertex {
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Vertex(coords.into())
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> From<[usize; N]> for Vertex {
    fn from(coords: [usize; N]) -> Self {
        Vertex(coords.to_vec())
    }
}

/// Canonical unordered edge `{base, base + e_axis}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub base: Vertex,
    pub axis: usize,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+e{}", self.base, self.axis)
    }
}

/// The dimension vector of a toroidal mesh.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusShape {
    dims: Vec<usize>,
    strides: Vec<usize>,
    vertex_count: usize,
    // First edge id of each axis, plus the total edge count at the end.
    axis_offsets: Vec<usize>,
}

impl TorusShape {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyDims);
        }
        if let Some((index, &value)) = dims.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(Error::DimTooSmall { index, value, min: 2 });
        }
        let rank = dims.len();
        let mut strides = vec![1; rank];
        for k in (0..rank - 1).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        let vertex_count = strides[0] * dims[0];
        let mut axis_offsets = Vec::with_capacity(rank + 1);
        let mut total = 0;
        for &n in dims {
            axis_offsets.push(total);
            total += if n == 2 { vertex_count / 2 } else { vertex_count };
        }
        axis_offsets.push(total);
        Ok(TorusShape {
            dims: dims.to_vec(),
            strides,
            vertex_count,
            axis_offsets,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.axis_offsets[self.rank()]
    }

    /// Range of edge ids lying along `axis`.
    pub fn axis_edges(&self, axis: usize) -> std::ops::Range<usize> {
        self.axis_offsets[axis]..self.axis_offsets[axis + 1]
    }

    /// The shape of `self □ other`, with `self`'s axes first.
    pub fn concat(&self, other: &TorusShape) -> TorusShape {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        TorusShape::new(&dims).expect("concatenation of valid shapes is valid")
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.0.len() == self.rank() && v.0.iter().zip(&self.dims).all(|(&c, &n)| c < n)
    }

    fn check(&self, v: &Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::CoordOutOfRange(format!("{v} in shape {:?}", self.dims)))
        }
    }

    pub fn index_of(&self, v: &Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(v.0.iter().zip(&self.strides).map(|(c, s)| c * s).sum())
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex((0..self.rank()).map(|k| self.coord(index, k)).collect())
    }

    #[inline]
    pub fn coord(&self, index: usize, axis: usize) -> usize {
        (index / self.strides[axis]) % self.dims[axis]
    }

    /// Neighbor of `index` one step forward (`+1`) or backward along `axis`.
    #[inline]
    pub fn step(&self, index: usize, axis: usize, forward: bool) -> usize {
        let n = self.dims[axis];
        let s = self.strides[axis];
        let c = self.coord(index, axis);
        let next = if forward { (c + 1) % n } else { (c + n - 1) % n };
        index - c * s + next * s
    }

    /// Id of the edge leaving `index` forward or backward along `axis`.
    #[inline]
    pub fn edge_at(&self, index: usize, axis: usize, forward: bool) -> usize {
        let n = self.dims[axis];
        let s = self.strides[axis];
        let off = self.axis_offsets[axis];
        if n == 2 {
            // Base has coordinate 0 on this axis; ids skip the other half.
            let c = self.coord(index, axis);
            let base = index - c * s;
            return off + (base / (2 * s)) * s + base % s;
        }
        let base = if forward { index } else { self.step(index, axis, false) };
        off + base
    }

    /// Id of the edge joining two adjacent vertices, if they are adjacent.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.rank()).find_map(|axis| {
            if self.step(a, axis, true) == b {
                Some(self.edge_at(a, axis, true))
            } else if self.step(a, axis, false) == b {
                Some(self.edge_at(a, axis, false))
            } else {
                None
            }
        })
    }

    pub fn edge_id(&self, e: &Edge) -> Result<usize> {
        if e.axis >= self.rank() {
            return Err(Error::CoordOutOfRange(format!(
                "axis {} in shape {:?}",
                e.axis, self.dims
            )));
        }
        let idx = self.index_of(&e.base)?;
        if self.dims[e.axis] == 2 && e.base.0[e.axis] != 0 {
            return Err(Error::CoordOutOfRange(format!(
                "edge {e} is not canonical: axis {} has length 2",
                e.axis
            )));
        }
        Ok(self.edge_at(idx, e.axis, true))
    }

    /// Axis of an edge id.
    pub fn edge_axis(&self, id: usize) -> usize {
        debug_assert!(id < self.edge_count());
        self.axis_offsets[1..].partition_point(|&end| end <= id)
    }

    /// Base vertex index of an edge id.
    pub fn edge_base(&self, id: usize) -> usize {
        let axis = self.edge_axis(id);
        let local = id - self.axis_offsets[axis];
        if self.dims[axis] == 2 {
            let s = self.strides[axis];
            (local / s) * 2 * s + local % s
        } else {
            local
        }
    }

    pub fn edge(&self, id: usize) -> Edge {
        Edge {
            base: self.vertex(self.edge_base(id)),
            axis: self.edge_axis(id),
        }
    }

    /// Endpoints of an edge id as vertex indices `(base, base + e_axis)`.
    pub fn edge_endpoints(&self, id: usize) -> (usize, usize) {
        let axis = self.edge_axis(id);
        let base = self.edge_base(id);
        (base, self.step(base, axis, true))
    }

    /// All canonical edges in id order: axis-major, then base in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count()).map(move |id| self.edge(id))
    }

    #[inline]
    pub fn distance_idx(&self, a: usize, b: usize) -> usize {
        (0..self.rank())
            .map(|k| {
                let n = self.dims[k];
                let d = self.coord(a, k).abs_diff(self.coord(b, k));
                d.min(n - d)
            })
            .sum()
    }

    pub fn distance(&self, u: &Vertex, v: &Vertex) -> Result<usize> {
        Ok(self.distance_idx(self.index_of(u)?, self.index_of(v)?))
    }

    /// Sum of `floor(n_k / 2)`.
    pub fn diameter(&self) -> usize {
        self.dims.iter().map(|n| n / 2).sum()
    }

    /// Pushes `(next, edge)` for every neighbor of `from` one step closer to `to`,
    /// in ascending axis order with the forward step first.
    #[inline]
    pub fn geodesic_steps(&self, from: usize, to: usize, out: &mut Vec<(usize, usize)>) {
        for axis in 0..self.rank() {
            let n = self.dims[axis];
            let delta = (self.coord(to, axis) + n - self.coord(from, axis)) % n;
            if delta == 0 {
                continue;
            }
            if 2 * delta <= n {
                out.push((self.step(from, axis, true), self.edge_at(from, axis, true)));
            }
            if 2 * delta >= n && n > 2 {
                out.push((self.step(from, axis, false), self.edge_at(from, axis, false)));
            }
        }
    }

    pub fn geodesic_successors(&self, u: &Vertex, v: &Vertex) -> Result<Vec<Vertex>> {
        let a = self.index_of(u)?;
        let b = self.index_of(v)?;
        if a == b {
            return Err(Error::SameVertex);
        }
        let mut steps = Vec::new();
        self.geodesic_steps(a, b, &mut steps);
        Ok(steps.into_iter().map(|(w, _)| self.vertex(w)).collect())
    }
}
