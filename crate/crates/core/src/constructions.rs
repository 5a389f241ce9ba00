//! Explicit strong rainbow colorings and the two ways of combining them.
//!
//! * [`cycle_coloring`]: `C_n` with `ceil(n/2)` colors.
//! * [`prism_coloring`]: `C_n x C_2` with `ceil((n+1)/2)` colors.
//! * [`product_coloring`]: disjoint palettes on the two factors of `G x H`.
//! * [`lift_coloring`]: extends a coloring of `G x C_2` (and one of `G`) to
//!   `G x C_n` with `ceil((n-2)/2)` extra colors on the layer-to-layer bundles.

use crate::coloring::{relabel, Color, Coloring, PaletteInjection};
use crate::error::{Error, Result};
use crate::torus::TorusShape;

fn too_small(value: usize, min: usize) -> Error {
    Error::DimTooSmall { index: 0, value, min }
}

/// `C_n` colored by `i mod ceil(n/2)` on the edge based at `i`; one color for `n <= 3`.
pub fn cycle_coloring(n: usize) -> Result<Coloring> {
    if n < 2 {
        return Err(too_small(n, 2));
    }
    let shape = TorusShape::new(&[n])?;
    if n <= 3 {
        return Ok(Coloring::uniform(shape));
    }
    let k = n.div_ceil(2);
    Ok(Coloring::from_fn(shape, k, |i| (i % k) as Color))
}

/// `C_n x C_2` with axis 0 the ring and axis 1 the rungs.
pub fn prism_coloring(n: usize) -> Result<Coloring> {
    if n < 3 {
        return Err(too_small(n, 3));
    }
    let shape = TorusShape::new(&[n, 2])?;
    let palette = (n + 1).div_ceil(2);
    let k = n / 2;
    let even = n.is_multiple_of(2);
    let ring = shape.axis_edges(0);
    let view = shape.clone();
    Ok(Coloring::from_fn(shape, palette, move |id| {
        let i = view.coord(view.edge_base(id), 0);
        let c = if ring.contains(&id) {
            // Ring edge {(i, j), (i+1, j)}.
            let last = if even { 2 * k - 1 } else { 2 * k };
            let first_half = if even { k - 1 } else { k };
            if i == last {
                k - 1
            } else if i <= first_half {
                i
            } else if even {
                i - k
            } else {
                i - k - 1
            }
        } else if even || i == 0 {
            k
        } else if i <= k {
            i
        } else {
            i - k - 1
        };
        c as Color
    }))
}

/// Coloring of `a.shape x b.shape`: `a`'s axes first keep `a`'s colors, `b`'s
/// axes get `b`'s colors shifted past `a`'s palette.
pub fn product_coloring(a: &Coloring, b: &Coloring) -> Coloring {
    let sa = a.shape();
    let sb = b.shape();
    let shape = sa.concat(sb);
    let ra = sa.rank();
    let vb = sb.vertex_count();
    let shift = a.palette_size() as Color;
    let view = shape.clone();
    Coloring::from_fn(shape, a.palette_size() + b.palette_size(), move |id| {
        let axis = view.edge_axis(id);
        let base = view.edge_base(id);
        let (x, y) = (base / vb, base % vb);
        if axis < ra {
            a.color(sa.edge_at(x, axis, true))
        } else {
            b.color(sb.edge_at(y, axis - ra, true)) + shift
        }
    })
}

/// Extends `prism_like` (a coloring of `G x C_2`) and `base` (a coloring of
/// `G`) to a coloring of `G x C_n`, the new axis last.
///
/// With layers `0..n` along the new axis and `h = floor(n/2)`, layers
/// `{0, n-1}` and `{h-1, h}` together with the edges joining them are copies
/// of `prism_like`; the bundles between consecutive layers outside those two
/// pairs get fresh colors `K, K+1, ...` counted from either side; the
/// remaining layers are colored by `base` inside `prism_like`'s palette.
/// For `n = 3` the two layer pairs overlap, and the result is the product of
/// the embedded `base` with a single fresh color on the new axis.
///
/// Both inputs are expected to be strong rainbow; that is not rechecked here.
pub fn lift_coloring(prism_like: &Coloring, base: &Coloring, n: usize) -> Result<Coloring> {
    if n < 3 {
        return Err(too_small(n, 3));
    }
    let gs = base.shape();
    let ps = prism_like.shape();
    let mut expected = gs.dims().to_vec();
    expected.push(2);
    if ps.dims() != expected.as_slice() {
        return Err(Error::ShapeMismatch(format!(
            "prism-like shape {:?} should be {:?}",
            ps.dims(),
            expected
        )));
    }
    let k2 = prism_like.palette_size();
    if base.palette_size() > k2 {
        return Err(Error::PaletteTooLarge {
            base: base.palette_size(),
            prism: k2,
        });
    }
    let embedded = relabel(base, &PaletteInjection::identity(base.palette_size(), k2)?)?;
    if n == 3 {
        return Ok(product_coloring(&embedded, &Coloring::uniform(TorusShape::new(&[3])?)));
    }

    let h = n / 2;
    let rg = gs.rank();
    let shape = gs.concat(&TorusShape::new(&[n])?);
    let palette = k2 + (n - 2).div_ceil(2);
    // Prism layer (0 or 1) standing in for a lifted layer, if any.
    let prism_layer = move |layer: usize| -> Option<usize> {
        match layer {
            l if l == 0 || l == h - 1 => Some(0),
            l if l == n - 1 || l == h => Some(1),
            _ => None,
        }
    };
    let view = shape.clone();
    Ok(Coloring::from_fn(shape, palette, move |id| {
        let axis = view.edge_axis(id);
        let b = view.edge_base(id);
        let (y, layer) = (b / n, b % n);
        if axis < rg {
            match prism_layer(layer) {
                Some(s) => prism_like.color(ps.edge_at(y * 2 + s, axis, true)),
                None => embedded.color(gs.edge_at(y, axis, true)),
            }
        } else if layer == n - 1 || layer == h - 1 {
            prism_like.color(ps.edge_at(y * 2, rg, true))
        } else if layer < h - 1 {
            (k2 + layer) as Color
        } else {
            (k2 + layer - h) as Color
        }
    }))
}
