//! Bound formulas and the planner that assembles a coloring of
//! `C_{n_1} x ... x C_{n_r}` within the improved upper bound.
//!
//! The planner pairs even cycles with odd cycles (each pair is colored as a
//! lift of a prism and saves one color against the plain product), colors
//! the unpaired cycles jointly with [`s7_plan`], and takes the product of
//! everything. The composition is recorded as a [`Plan`] tree which is then
//! realized into a [`Coloring`].

use serde::{Deserialize, Serialize};

use crate::coloring::{relabel, Coloring, PaletteInjection};
use crate::constructions::{cycle_coloring, lift_coloring, prism_coloring, product_coloring};
use crate::error::{Error, Result};
use crate::torus::TorusShape;

/// Composition tree. Every node records the palette size of its coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum Plan {
    Cycle {
        n: usize,
        claimed_k: usize,
    },
    Prism {
        n: usize,
        claimed_k: usize,
    },
    Product {
        children: Vec<Plan>,
        claimed_k: usize,
    },
    Lift {
        prism: Box<Plan>,
        base: Box<Plan>,
        n: usize,
        claimed_k: usize,
    },
    Embed {
        child: Box<Plan>,
        claimed_k: usize,
    },
}

impl Plan {
    pub fn cycle(n: usize) -> Plan {
        let claimed_k = if n <= 3 { 1 } else { n.div_ceil(2) };
        Plan::Cycle { n, claimed_k }
    }

    pub fn prism(n: usize) -> Plan {
        Plan::Prism {
            n,
            claimed_k: (n + 1).div_ceil(2),
        }
    }

    /// Product of the children in order; a single child is returned as is.
    pub fn product(mut children: Vec<Plan>) -> Plan {
        if children.len() == 1 {
            return children.pop().unwrap();
        }
        let claimed_k = children.iter().map(Plan::claimed_k).sum();
        Plan::Product { children, claimed_k }
    }

    pub fn lift(prism: Plan, base: Plan, n: usize) -> Plan {
        let claimed_k = if n == 3 {
            prism.claimed_k() + 1
        } else {
            prism.claimed_k() + (n - 2).div_ceil(2)
        };
        Plan::Lift {
            prism: Box::new(prism),
            base: Box::new(base),
            n,
            claimed_k,
        }
    }

    pub fn embed(child: Plan, target: usize) -> Plan {
        Plan::Embed {
            child: Box::new(child),
            claimed_k: target,
        }
    }

    pub fn claimed_k(&self) -> usize {
        match self {
            Plan::Cycle { claimed_k, .. }
            | Plan::Prism { claimed_k, .. }
            | Plan::Product { claimed_k, .. }
            | Plan::Lift { claimed_k, .. }
            | Plan::Embed { claimed_k, .. } => *claimed_k,
        }
    }

    /// Axis lengths of the shape this plan colors, in composition order.
    pub fn dims(&self) -> Vec<usize> {
        match self {
            Plan::Cycle { n, .. } => vec![*n],
            Plan::Prism { n, .. } => vec![*n, 2],
            Plan::Product { children, .. } => children.iter().flat_map(Plan::dims).collect(),
            Plan::Lift { base, n, .. } => {
                let mut d = base.dims();
                d.push(*n);
                d
            }
            Plan::Embed { child, .. } => child.dims(),
        }
    }

    /// Builds the coloring, checking every node's claimed palette size.
    pub fn realize(&self) -> Result<Coloring> {
        let c = match self {
            Plan::Cycle { n, .. } => cycle_coloring(*n)?,
            Plan::Prism { n, .. } => prism_coloring(*n)?,
            Plan::Product { children, .. } => {
                let mut parts = children.iter().map(Plan::realize);
                let first = parts
                    .next()
                    .ok_or_else(|| Error::ShapeMismatch("empty product".into()))??;
                parts.try_fold(first, |acc, next| Ok::<_, Error>(product_coloring(&acc, &next?)))?
            }
            Plan::Lift { prism, base, n, .. } => lift_coloring(&prism.realize()?, &base.realize()?, *n)?,
            Plan::Embed { child, claimed_k } => {
                let c = child.realize()?;
                relabel(&c, &PaletteInjection::identity(c.palette_size(), *claimed_k)?)?
            }
        };
        if c.palette_size() != self.claimed_k() {
            return Err(Error::PlanMismatch {
                claimed: self.claimed_k(),
                actual: c.palette_size(),
            });
        }
        Ok(c)
    }

    /// One-line rendering, e.g. `Lift(Prism(3), Cycle(3), 4)`.
    pub fn summary(&self) -> String {
        match self {
            Plan::Cycle { n, .. } => format!("Cycle({n})"),
            Plan::Prism { n, .. } => format!("Prism({n})"),
            Plan::Product { children, .. } => {
                let parts: Vec<_> = children.iter().map(Plan::summary).collect();
                format!("Product({})", parts.join(", "))
            }
            Plan::Lift { prism, base, n, .. } => {
                format!("Lift({}, {}, {n})", prism.summary(), base.summary())
            }
            Plan::Embed { child, claimed_k } => format!("Embed({}, {claimed_k})", child.summary()),
        }
    }
}

fn validate(dims: &[usize]) -> Result<()> {
    TorusShape::new(dims).map(|_| ())
}

pub fn count_even(dims: &[usize]) -> usize {
    dims.iter().filter(|&&n| n % 2 == 0).count()
}

/// `(sum floor(n_k/2), sum ceil(n_k/2))`.
pub fn old_bounds(dims: &[usize]) -> (usize, usize) {
    (
        dims.iter().map(|n| n / 2).sum(),
        dims.iter().map(|n| n.div_ceil(2)).sum(),
    )
}

/// The improved upper bound on the strong rainbow connection number.
///
/// With `mu` even entries among `r` cycles and `S = sum n_k`:
/// `ceil((S - mu) / 2)` when `mu <= floor(r/2)`, otherwise
/// `ceil((S - r + mu) / 2)`.
pub fn theorem_bound(dims: &[usize]) -> usize {
    let r = dims.len();
    let mu = count_even(dims);
    let total: usize = dims.iter().sum();
    if mu <= r / 2 {
        (total - mu).div_ceil(2)
    } else {
        (total - r + mu).div_ceil(2)
    }
}

/// Plan for the recursive construction meeting `ceil(sum n_k / 2)`.
pub fn s7_plan(dims: &[usize]) -> Result<Plan> {
    validate(dims)?;
    let twos = dims.iter().filter(|&&n| n == 2).count();
    let rest: Vec<usize> = dims.iter().copied().filter(|&n| n != 2).collect();
    if twos > 0 {
        let mut parts = Vec::new();
        let mut spare = twos;
        match rest.as_slice() {
            [] => {}
            &[n] => {
                // One C_2 fuses with the lone long cycle into a prism.
                parts.push(Plan::prism(n));
                spare -= 1;
            }
            _ => parts.push(s7_plan(&rest)?),
        }
        parts.extend((0..spare).map(|_| Plan::cycle(2)));
        return Ok(Plan::product(parts));
    }
    if let Some(pos) = rest.iter().position(|n| n % 2 == 0) {
        let mut others = rest.clone();
        let even = others.remove(pos);
        if others.is_empty() {
            return Ok(Plan::cycle(even));
        }
        return Ok(Plan::product(vec![s7_plan(&others)?, Plan::cycle(even)]));
    }
    odd_chain(&rest)
}

/// All entries odd and at least 3; the produced axis order equals `dims`.
fn odd_chain(dims: &[usize]) -> Result<Plan> {
    match dims {
        [] => Err(Error::EmptyDims),
        &[n] => Ok(Plan::cycle(n)),
        &[a, b] => Ok(Plan::lift(Plan::prism(a), Plan::cycle(a), b)),
        _ => {
            let r = dims.len();
            let prism_like = Plan::product(vec![odd_chain(&dims[..r - 2])?, Plan::prism(dims[r - 2])]);
            let base = odd_chain(&dims[..r - 1])?;
            Ok(Plan::lift(prism_like, base, dims[r - 1]))
        }
    }
}

pub fn s7_coloring(dims: &[usize]) -> Result<Coloring> {
    s7_plan(dims)?.realize()
}

/// Plan for `C_odd x C_even` (odd axis first) with `(even + odd - 1) / 2` colors.
pub fn pair_plan(n_even: usize, n_odd: usize) -> Result<Plan> {
    if !n_even.is_multiple_of(2) || n_odd % 2 != 1 || n_even < 2 || n_odd < 3 {
        return Err(Error::ParityMismatch {
            even: n_even,
            odd: n_odd,
        });
    }
    if n_even == 2 {
        Ok(Plan::prism(n_odd))
    } else {
        Ok(Plan::lift(Plan::prism(n_odd), Plan::cycle(n_odd), n_even))
    }
}

pub fn pair_coloring(n_even: usize, n_odd: usize) -> Result<Coloring> {
    pair_plan(n_even, n_odd)?.realize()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub dims: Vec<usize>,
    pub mu: usize,
    pub diameter_lower: usize,
    pub old_upper: usize,
    pub new_upper: usize,
    pub achieved_k: Option<usize>,
    /// Axis `i` of the produced coloring is axis `axis_order[i]` of `dims`.
    pub axis_order: Vec<usize>,
}

impl BoundsReport {
    pub fn for_dims(dims: &[usize]) -> Result<Self> {
        validate(dims)?;
        let (diameter_lower, old_upper) = old_bounds(dims);
        Ok(BoundsReport {
            dims: dims.to_vec(),
            mu: count_even(dims),
            diameter_lower,
            old_upper,
            new_upper: theorem_bound(dims),
            achieved_k: None,
            axis_order: (0..dims.len()).collect(),
        })
    }
}

/// The planner's composition tree for `dims`; depends only on the multiset of entries.
pub fn plan(dims: &[usize]) -> Result<Plan> {
    validate(dims)?;
    let mut evens: Vec<usize> = dims.iter().copied().filter(|n| n % 2 == 0).collect();
    let mut odds: Vec<usize> = dims.iter().copied().filter(|n| n % 2 == 1).collect();
    evens.sort_unstable_by(|a, b| b.cmp(a));
    odds.sort_unstable_by(|a, b| b.cmp(a));
    let pairs = evens.len().min(odds.len());
    let mut parts = Vec::new();
    for (&e, &o) in evens.iter().zip(&odds) {
        parts.push(pair_plan(e, o)?);
    }
    let leftover: Vec<usize> = evens[pairs..].iter().chain(&odds[pairs..]).copied().collect();
    if !leftover.is_empty() {
        parts.push(s7_plan(&leftover)?);
    }
    Ok(Plan::product(parts))
}

/// Maps each axis of `produced` to a distinct axis of `dims` with the same length.
pub fn axis_order(dims: &[usize], produced: &[usize]) -> Result<Vec<usize>> {
    let mut used = vec![false; dims.len()];
    let order = produced
        .iter()
        .map(|&n| {
            let k = (0..dims.len()).find(|&k| !used[k] && dims[k] == n)?;
            used[k] = true;
            Some(k)
        })
        .collect::<Option<Vec<_>>>();
    match order {
        Some(o) if o.len() == dims.len() => Ok(o),
        _ => Err(Error::ShapeMismatch(format!(
            "{produced:?} is not a permutation of {dims:?}"
        ))),
    }
}

/// Plans, realizes, and reports. The coloring's axes follow the plan's
/// composition order; `report.axis_order` maps them back to `dims`.
pub fn plan_and_color(dims: &[usize]) -> Result<(Plan, Coloring, BoundsReport)> {
    let p = plan(dims)?;
    let coloring = p.realize()?;
    let mut report = BoundsReport::for_dims(dims)?;
    report.achieved_k = Some(coloring.palette_size());
    report.axis_order = axis_order(dims, coloring.shape().dims())?;
    Ok((p, coloring, report))
}

/// [`plan_and_color`] with the coloring's axes permuted back into `dims` order.
pub fn color_in_input_order(dims: &[usize]) -> Result<(Plan, Coloring, BoundsReport)> {
    let (p, c, mut report) = plan_and_color(dims)?;
    // Input axis j sits at produced position inv[j].
    let mut inv = vec![0; dims.len()];
    for (pos, &j) in report.axis_order.iter().enumerate() {
        inv[j] = pos;
    }
    let c = c.permute_axes(&inv)?;
    report.axis_order = (0..dims.len()).collect();
    Ok((p, c, report))
}
