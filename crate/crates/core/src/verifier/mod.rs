//! Strong rainbow verification.
//!
//! For every unordered vertex pair we search for a geodesic whose edge
//! colors are pairwise distinct. The search walks the geodesic DAG towards
//! the target (only distance-decreasing steps) depth first, carrying the set
//! of colors used so far, and remembers `(vertex, color set)` states that are
//! known dead ends for the current pair.

mod tables;

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::coloring::{Color, Coloring};
use crate::torus::Vertex;

pub use tables::{verify_table_paths, TableReport, TableRowReport};

/// Color set used during the search.
pub(crate) trait ColorBits: Clone + Eq + Hash + Send {
    fn empty(palette: usize) -> Self;
    fn contains(&self, c: Color) -> bool;
    fn insert(&mut self, c: Color);
    fn remove(&mut self, c: Color);
}

impl ColorBits for u64 {
    fn empty(_: usize) -> Self {
        0
    }
    #[inline]
    fn contains(&self, c: Color) -> bool {
        self >> c & 1 == 1
    }
    #[inline]
    fn insert(&mut self, c: Color) {
        *self |= 1 << c;
    }
    #[inline]
    fn remove(&mut self, c: Color) {
        *self &= !(1 << c);
    }
}

impl ColorBits for u128 {
    fn empty(_: usize) -> Self {
        0
    }
    #[inline]
    fn contains(&self, c: Color) -> bool {
        self >> c & 1 == 1
    }
    #[inline]
    fn insert(&mut self, c: Color) {
        *self |= 1 << c;
    }
    #[inline]
    fn remove(&mut self, c: Color) {
        *self &= !(1 << c);
    }
}

/// Bit set for palettes wider than 128 colors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct WideBits(Vec<u64>);

impl ColorBits for WideBits {
    fn empty(palette: usize) -> Self {
        WideBits(vec![0; palette.div_ceil(64)])
    }
    fn contains(&self, c: Color) -> bool {
        self.0[c as usize / 64] >> (c % 64) & 1 == 1
    }
    fn insert(&mut self, c: Color) {
        self.0[c as usize / 64] |= 1 << (c % 64);
    }
    fn remove(&mut self, c: Color) {
        self.0[c as usize / 64] &= !(1 << (c % 64));
    }
}

/// Flat neighbor tables for one coloring, shared by all pair searches.
struct Nav {
    rank: usize,
    dims: Vec<u32>,
    // [vertex * rank + axis]
    coords: Vec<u32>,
    // (neighbor, edge color) one step forward / backward
    fwd: Vec<(u32, Color)>,
    bwd: Vec<(u32, Color)>,
}

impl Nav {
    fn distance(&self, a: usize, b: usize) -> usize {
        let r = self.rank;
        (0..r)
            .map(|k| {
                let d = self.coords[a * r + k].abs_diff(self.coords[b * r + k]);
                d.min(self.dims[k] - d) as usize
            })
            .sum()
    }

    fn new(coloring: &Coloring) -> Self {
        let shape = coloring.shape();
        let rank = shape.rank();
        let n = shape.vertex_count();
        let mut coords = Vec::with_capacity(n * rank);
        let mut fwd = Vec::with_capacity(n * rank);
        let mut bwd = Vec::with_capacity(n * rank);
        for v in 0..n {
            for axis in 0..rank {
                coords.push(shape.coord(v, axis) as u32);
                fwd.push((
                    shape.step(v, axis, true) as u32,
                    coloring.color(shape.edge_at(v, axis, true)),
                ));
                bwd.push((
                    shape.step(v, axis, false) as u32,
                    coloring.color(shape.edge_at(v, axis, false)),
                ));
            }
        }
        Nav {
            rank,
            dims: shape.dims().iter().map(|&d| d as u32).collect(),
            coords,
            fwd,
            bwd,
        }
    }
}

const MEMO_MIN_REMAINING: usize = 5;

struct Search<'a, B> {
    nav: &'a Nav,
    target: usize,
    // Geodesic length in edges.
    length: usize,
    used: B,
    path: Vec<usize>,
    dead: FxHashSet<(usize, B)>,
}

impl<B: ColorBits> Search<'_, B> {
    #[inline]
    fn try_step(&mut self, (next, c): (u32, Color)) -> bool {
        if self.used.contains(c) {
            return false;
        }
        self.used.insert(c);
        self.path.push(next as usize);
        if self.walk(next as usize) {
            return true;
        }
        self.path.pop();
        self.used.remove(c);
        false
    }

    fn walk(&mut self, at: usize) -> bool {
        if at == self.target {
            return true;
        }
        if !self.dead.is_empty() && self.dead.contains(&(at, self.used.clone())) {
            return false;
        }
        let nav = self.nav;
        let r = nav.rank;
        for axis in 0..r {
            let n = nav.dims[axis];
            let delta = (nav.coords[self.target * r + axis] + n - nav.coords[at * r + axis]) % n;
            if delta == 0 {
                continue;
            }
            if 2 * delta <= n && self.try_step(nav.fwd[at * r + axis]) {
                return true;
            }
            if 2 * delta >= n && n > 2 && self.try_step(nav.bwd[at * r + axis]) {
                return true;
            }
        }
        // Near the target a rescan is cheaper than a memo entry.
        let remaining = self.length + 1 - self.path.len();
        if remaining >= MEMO_MIN_REMAINING {
            self.dead.insert((at, self.used.clone()));
        }
        false
    }
}

fn search<B: ColorBits>(nav: &Nav, palette: usize, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut s = Search {
        nav,
        target: to,
        length: nav.distance(from, to),
        used: B::empty(palette),
        path: vec![from],
        dead: FxHashSet::default(),
    };
    s.walk(from).then_some(s.path)
}

fn search_any(nav: &Nav, palette: usize, from: usize, to: usize) -> Option<Vec<usize>> {
    match palette {
        0..=64 => search::<u64>(nav, palette, from, to),
        65..=128 => search::<u128>(nav, palette, from, to),
        _ => search::<WideBits>(nav, palette, from, to),
    }
}

/// A rainbow geodesic between two vertex indices, as a vertex index sequence
/// starting at `from`.
pub fn rainbow_geodesic_idx(coloring: &Coloring, from: usize, to: usize) -> Option<Vec<usize>> {
    search_any(&Nav::new(coloring), coloring.palette_size(), from, to)
}

/// A geodesic from `u` to `v` with pairwise distinct edge colors, if one exists.
/// For `u == v` this is the one-vertex path.
pub fn rainbow_geodesic(coloring: &Coloring, u: &Vertex, v: &Vertex) -> crate::Result<Option<Vec<Vertex>>> {
    let shape = coloring.shape();
    let a = shape.index_of(u)?;
    let b = shape.index_of(v)?;
    Ok(rainbow_geodesic_idx(coloring, a, b).map(|p| p.into_iter().map(|x| shape.vertex(x)).collect()))
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// How many passing pairs keep their witness geodesic.
    pub witness_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { witness_cap: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub u: Vertex,
    pub v: Vertex,
    pub path: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub dims: Vec<usize>,
    pub palette_size: usize,
    pub pairs_checked: usize,
    pub pass: bool,
    pub failing_pairs: Vec<(Vertex, Vertex)>,
    pub witnesses: Vec<Witness>,
}

/// Checks every unordered pair. Pairs are swept in parallel by source vertex;
/// the report lists pairs in row-major order regardless of scheduling.
pub fn is_strong_rainbow(coloring: &Coloring) -> VerificationReport {
    is_strong_rainbow_with(coloring, &VerifyOptions::default())
}

pub fn is_strong_rainbow_with(coloring: &Coloring, opts: &VerifyOptions) -> VerificationReport {
    let shape = coloring.shape();
    let n = shape.vertex_count();
    let cap = opts.witness_cap;
    let nav = Nav::new(coloring);
    let palette = coloring.palette_size();

    // Per source: failing targets and up to `cap` witness paths.
    let partial: Vec<(Vec<usize>, Vec<Vec<usize>>)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut fails = Vec::new();
            let mut found = Vec::new();
            for b in a + 1..n {
                match search_any(&nav, palette, a, b) {
                    Some(p) if found.len() < cap => found.push(p),
                    Some(_) => {}
                    None => fails.push(b),
                }
            }
            (fails, found)
        })
        .collect();

    let mut failing_pairs = Vec::new();
    let mut witnesses = Vec::new();
    for (a, (fails, found)) in partial.into_iter().enumerate() {
        for b in fails {
            failing_pairs.push((shape.vertex(a), shape.vertex(b)));
        }
        for p in found {
            if witnesses.len() == cap {
                break;
            }
            witnesses.push(Witness {
                u: shape.vertex(p[0]),
                v: shape.vertex(*p.last().unwrap()),
                path: p.iter().map(|&x| shape.vertex(x)).collect(),
            });
        }
    }

    VerificationReport {
        dims: shape.dims().to_vec(),
        palette_size: coloring.palette_size(),
        pairs_checked: n * (n - 1) / 2,
        pass: failing_pairs.is_empty(),
        failing_pairs,
        witnesses,
    }
}

/// True when `path` is a walk along edges of the shape, has length
/// `distance(first, last)`, and uses pairwise distinct colors.
pub fn is_rainbow_geodesic(coloring: &Coloring, path: &[Vertex]) -> bool {
    let shape = coloring.shape();
    let Ok(idx) = path
        .iter()
        .map(|v| shape.index_of(v))
        .collect::<crate::Result<Vec<_>>>()
    else {
        return false;
    };
    let (Some(&first), Some(&last)) = (idx.first(), idx.last()) else {
        return false;
    };
    if shape.distance_idx(first, last) != idx.len() - 1 {
        return false;
    }
    let mut seen = HashSet::new();
    idx.windows(2).all(|w| match shape.edge_between(w[0], w[1]) {
        Some(e) => seen.insert(coloring.color(e)),
        None => false,
    })
}
