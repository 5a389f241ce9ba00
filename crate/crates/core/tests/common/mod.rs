//! Test-side reference implementations. These recompute coordinates,
//! adjacency, distances and geodesics from scratch instead of going through
//! the library's shape arithmetic.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use torus_rainbow::{Coloring, Edge, TorusShape, Vertex};

pub fn coords_of(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut c = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        c[k] = idx % dims[k];
        idx /= dims[k];
    }
    c
}

pub fn index_of(dims: &[usize], c: &[usize]) -> usize {
    c.iter().zip(dims).fold(0, |acc, (&x, &n)| acc * n + x)
}

pub fn neighbors(dims: &[usize], idx: usize) -> Vec<usize> {
    let c = coords_of(dims, idx);
    let mut out = Vec::new();
    for k in 0..dims.len() {
        for delta in [1, dims[k] - 1] {
            let mut d = c.clone();
            d[k] = (c[k] + delta) % dims[k];
            let j = index_of(dims, &d);
            if !out.contains(&j) {
                out.push(j);
            }
        }
    }
    out
}

pub fn bfs(dims: &[usize], src: usize) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let mut dist = vec![usize::MAX; total];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for y in neighbors(dims, x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// The canonical `{base, axis}` name of the edge joining adjacent `a` and `b`.
pub fn edge_name(dims: &[usize], a: usize, b: usize) -> Option<Edge> {
    let ca = coords_of(dims, a);
    let cb = coords_of(dims, b);
    let diff: Vec<usize> = (0..dims.len()).filter(|&k| ca[k] != cb[k]).collect();
    let [k] = diff[..] else { return None };
    let n = dims[k];
    let base = if n == 2 {
        if ca[k] == 0 {
            ca
        } else {
            cb
        }
    } else if (ca[k] + 1) % n == cb[k] {
        ca
    } else if (cb[k] + 1) % n == ca[k] {
        cb
    } else {
        return None;
    };
    Some(Edge {
        base: Vertex(base),
        axis: k,
    })
}

/// Reference check that `path` is a rainbow geodesic under `c`.
pub fn is_rainbow_geodesic_ref(c: &Coloring, path: &[Vertex]) -> bool {
    let dims = c.shape().dims();
    let idx: Vec<usize> = path.iter().map(|v| index_of(dims, &v.0)).collect();
    let (Some(&first), Some(&last)) = (idx.first(), idx.last()) else {
        return false;
    };
    if bfs(dims, first)[last] != idx.len() - 1 {
        return false;
    }
    let mut seen = HashSet::new();
    idx.windows(2).all(|w| match edge_name(dims, w[0], w[1]) {
        Some(e) => seen.insert(c.color_of(&e).unwrap()),
        None => false,
    })
}

/// Every shortest path from `a` to `b`, as vertex index sequences.
pub fn all_geodesics(dims: &[usize], a: usize, b: usize) -> Vec<Vec<usize>> {
    let to_b = bfs(dims, b);
    let mut out = Vec::new();
    let mut path = vec![a];
    extend(dims, &to_b, &mut path, &mut out);
    out
}

fn extend(dims: &[usize], to_b: &[usize], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let at = *path.last().unwrap();
    if to_b[at] == 0 {
        out.push(path.clone());
        return;
    }
    for y in neighbors(dims, at) {
        if to_b[y] + 1 == to_b[at] {
            path.push(y);
            extend(dims, to_b, path, out);
            path.pop();
        }
    }
}

/// Exhaustive answer to "does some geodesic from `a` to `b` use distinct colors".
pub fn has_rainbow_geodesic_ref(c: &Coloring, a: usize, b: usize) -> bool {
    let dims = c.shape().dims();
    all_geodesics(dims, a, b).iter().any(|p| {
        let mut seen = HashSet::new();
        p.windows(2)
            .all(|w| seen.insert(c.color_of(&edge_name(dims, w[0], w[1]).unwrap()).unwrap()))
    })
}

/// Every ordered tuple with `1..=4` entries in `2..=9` and at most 500 vertices.
pub fn acceptance_grid() -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == 4 {
            return;
        }
        for n in 2..=9 {
            if prefix.iter().product::<usize>() * n <= 500 {
                prefix.push(n);
                grow(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), &mut out);
    out
}

pub fn random_coloring(dims: &[usize], palette: usize, seed: u64) -> Coloring {
    let shape = TorusShape::new(dims).unwrap();
    let mut rng = StdRng::seed_from_u64(seed);
    let colors = (0..shape.edge_count())
        .map(|_| rng.gen_range(0..palette as u32))
        .collect();
    Coloring::new(shape, palette, colors).unwrap()
}

/// The planner's coloring of `dims` with `mutations` random single-edge recolors.
pub fn mutated_plan_coloring(dims: &[usize], mutations: usize, seed: u64) -> Coloring {
    let (_, mut c, _) = torus_rainbow::plan_and_color(dims).unwrap();
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..mutations {
        let id = rng.gen_range(0..c.shape().edge_count());
        let color = rng.gen_range(0..c.palette_size() as u32);
        c = c.recolored(id, color).unwrap();
    }
    c
}

/// Dims with `1..=max_rank` entries in `2..=max_n` and at most `max_vertices` vertices.
pub fn dims_strategy(max_rank: usize, max_n: usize, max_vertices: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(2..=max_n, 1..=max_rank).prop_filter("too many vertices", move |d| {
        d.iter().product::<usize>() <= max_vertices
    })
}

/// A mix of planner colorings (intact or lightly mutated) and uniformly random ones,
/// so both verdicts show up.
pub fn coloring_strategy(max_rank: usize, max_n: usize, max_vertices: usize) -> impl Strategy<Value = Coloring> {
    (
        dims_strategy(max_rank, max_n, max_vertices),
        0usize..4,
        1usize..=6,
        any::<u64>(),
    )
        .prop_map(|(dims, mode, palette, seed)| match mode {
            0 => mutated_plan_coloring(&dims, 0, seed),
            1 | 2 => mutated_plan_coloring(&dims, mode, seed),
            _ => random_coloring(&dims, palette, seed),
        })
}
