//! Exact strong rainbow connection numbers of tiny meshes by backtracking.
//!
//! All geodesics of every vertex pair are enumerated up front as edge lists.
//! Edges are then colored one at a time, most-used edges first; a pair stays
//! alive while at least one of its geodesics has pairwise distinct colors on
//! its already colored edges. A branch dies as soon as some pair touching the
//! edge just colored has no live geodesic left. Color symmetry is broken by
//! only allowing a fresh color `c` once colors `0..c` have all appeared.

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::torus::TorusShape;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_edges: usize,
    pub max_colors: usize,
    /// Hard cap on search nodes, if any.
    pub max_nodes: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 18,
            max_colors: 5,
            max_nodes: None,
        }
    }
}

impl SearchBudget {
    fn admit(&self, shape: &TorusShape, k: usize) -> Result<()> {
        if self.max_edges == 0 || self.max_colors == 0 || self.max_nodes == Some(0) {
            return Err(Error::BudgetExceeded("budget limits must be positive".into()));
        }
        if shape.edge_count() > self.max_edges {
            return Err(Error::BudgetExceeded(format!(
                "{} edges > max_edges {}",
                shape.edge_count(),
                self.max_edges
            )));
        }
        if k > self.max_colors || k > 64 {
            return Err(Error::BudgetExceeded(format!(
                "{k} colors > max_colors {}",
                self.max_colors.min(64)
            )));
        }
        Ok(())
    }
}

/// Every geodesic from `a` to `b`, each as its list of edge ids.
pub(crate) fn all_geodesics(shape: &TorusShape, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn go(shape: &TorusShape, at: usize, to: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == to {
            out.push(path.clone());
            return;
        }
        let mut steps = Vec::new();
        shape.geodesic_steps(at, to, &mut steps);
        for (next, e) in steps {
            path.push(e);
            go(shape, next, to, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, a, b, &mut Vec::new(), &mut out);
    out
}

const UNSET: Color = Color::MAX;

struct Backtrack<'a> {
    k: usize,
    order: Vec<usize>,
    // pair -> geodesics (edge lists)
    geodesics: Vec<Vec<Vec<usize>>>,
    // edge -> pairs with a geodesic through it
    touching: Vec<Vec<usize>>,
    colors: Vec<Color>,
    nodes: u64,
    budget: &'a SearchBudget,
}

impl Backtrack<'_> {
    fn alive(&self, pair: usize) -> bool {
        self.geodesics[pair].iter().any(|g| {
            let mut seen = 0u64;
            g.iter().all(|&e| {
                let c = self.colors[e];
                if c == UNSET {
                    return true;
                }
                let bit = 1u64 << c;
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    fn run(&mut self, depth: usize, max_used: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes > cap {
                return Err(Error::BudgetExceeded(format!("search nodes > {cap}")));
            }
        }
        let e = self.order[depth];
        // Colors 0..max_used have appeared; max_used itself is the one fresh choice.
        let limit = (max_used + 1).min(self.k);
        for c in 0..limit {
            self.colors[e] = c as Color;
            let ok = self.touching[e].iter().all(|&p| self.alive(p));
            if ok && self.run(depth + 1, max_used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.colors[e] = UNSET;
        Ok(false)
    }
}

/// A strong rainbow coloring of `shape` with colors in `[0, k)`, if one exists.
/// The witness may leave some of the `k` colors unused.
pub fn is_src_achievable(shape: &TorusShape, k: usize, budget: &SearchBudget) -> Result<Option<Coloring>> {
    budget.admit(shape, k)?;
    let n = shape.vertex_count();
    if n == 1 || shape.edge_count() == 0 {
        return Ok(Some(Coloring::new(
            shape.clone(),
            k.max(1),
            vec![0; shape.edge_count()],
        )?));
    }
    if k == 0 || shape.diameter() > k {
        return Ok(None);
    }
    let mut geodesics = Vec::new();
    let mut touching = vec![Vec::new(); shape.edge_count()];
    let mut weight = vec![0usize; shape.edge_count()];
    for a in 0..n {
        for b in a + 1..n {
            let pair = geodesics.len();
            let gs = all_geodesics(shape, a, b);
            let mut edges: Vec<usize> = gs.iter().flatten().copied().collect();
            for &e in &edges {
                weight[e] += 1;
            }
            edges.sort_unstable();
            edges.dedup();
            for e in edges {
                touching[e].push(pair);
            }
            geodesics.push(gs);
        }
    }
    let mut order: Vec<usize> = (0..shape.edge_count()).collect();
    order.sort_by(|&x, &y| weight[y].cmp(&weight[x]).then(x.cmp(&y)));

    let mut bt = Backtrack {
        k,
        order,
        geodesics,
        touching,
        colors: vec![UNSET; shape.edge_count()],
        nodes: 0,
        budget,
    };
    if bt.run(0, 0)? {
        Ok(Some(Coloring::new(shape.clone(), k, bt.colors)?))
    } else {
        Ok(None)
    }
}

/// Smallest `k` with a strong rainbow `k`-coloring, searching upward from the diameter.
pub fn exact_src(shape: &TorusShape, budget: &SearchBudget) -> Result<(usize, Coloring)> {
    budget.admit(shape, shape.diameter())?;
    for k in shape.diameter().max(1)..=budget.max_colors {
        if let Some(c) = is_src_achievable(shape, k, budget)? {
            return Ok((k, c));
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no strong rainbow coloring with at most {} colors",
        budget.max_colors
    )))
}
