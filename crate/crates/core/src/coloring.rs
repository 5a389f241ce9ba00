//! Edge colorings of toroidal meshes and palette maps between them.

use crate::error::{Error, Result};
use crate::torus::{Edge, TorusShape};

pub type Color = u32;

/// A total map from the canonical edges of a shape to `[0, palette_size)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    shape: TorusShape,
    palette_size: usize,
    colors: Vec<Color>,
}

impl Coloring {
    /// `colors[id]` is the color of edge `id` in the shape's canonical order.
    pub fn new(shape: TorusShape, palette_size: usize, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != shape.edge_count() {
            return Err(Error::IncompleteColoring(format!(
                "{} colors for {} edges",
                colors.len(),
                shape.edge_count()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= palette_size) {
            return Err(Error::ColorOutOfRange {
                color: c as usize,
                palette: palette_size,
            });
        }
        Ok(Coloring {
            shape,
            palette_size,
            colors,
        })
    }

    pub(crate) fn from_fn(shape: TorusShape, palette_size: usize, mut f: impl FnMut(usize) -> Color) -> Self {
        let colors: Vec<Color> = (0..shape.edge_count()).map(&mut f).collect();
        debug_assert!(colors.iter().all(|&c| (c as usize) < palette_size));
        Coloring {
            shape,
            palette_size,
            colors,
        }
    }

    /// Every edge gets color 0.
    pub fn uniform(shape: TorusShape) -> Self {
        let colors = vec![0; shape.edge_count()];
        Coloring {
            shape,
            palette_size: 1,
            colors,
        }
    }

    pub fn shape(&self) -> &TorusShape {
        &self.shape
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, edge_id: usize) -> Color {
        self.colors[edge_id]
    }

    pub fn color_of(&self, edge: &Edge) -> Result<Color> {
        Ok(self.colors[self.shape.edge_id(edge)?])
    }

    /// Number of distinct colors that actually appear.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.palette_size];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// True when every palette color is used by some edge.
    pub fn is_tight(&self) -> bool {
        self.used_colors() == self.palette_size
    }

    /// Copy with a single edge recolored.
    pub fn recolored(&self, edge_id: usize, color: Color) -> Result<Coloring> {
        if color as usize >= self.palette_size {
            return Err(Error::ColorOutOfRange {
                color: color as usize,
                palette: self.palette_size,
            });
        }
        let mut out = self.clone();
        out.colors[edge_id] = color;
        Ok(out)
    }

    /// The same coloring on the shape whose axis `i` is this shape's axis `order[i]`.
    pub fn permute_axes(&self, order: &[usize]) -> Result<Coloring> {
        let rank = self.shape.rank();
        let mut seen = vec![false; rank];
        if order.len() != rank
            || order
                .iter()
                .any(|&k| k >= rank || std::mem::replace(&mut seen[k], true))
        {
            return Err(Error::ShapeMismatch(format!(
                "{order:?} is not a permutation of {rank} axes"
            )));
        }
        let dims: Vec<usize> = order.iter().map(|&k| self.shape.dims()[k]).collect();
        let target = TorusShape::new(&dims)?;
        let mut colors = vec![0; target.edge_count()];
        for (id, color) in colors.iter_mut().enumerate() {
            let e = target.edge(id);
            let mut coords = vec![0; rank];
            for (i, &k) in order.iter().enumerate() {
                coords[k] = e.base.0[i];
            }
            let src = Edge {
                base: crate::torus::Vertex(coords),
                axis: order[e.axis],
            };
            *color = self.color_of(&src)?;
        }
        Coloring::new(target, self.palette_size, colors)
    }
}

/// An injective map from a palette of `source` colors into one of `target` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteInjection {
    map: Vec<Color>,
    target: usize,
}

impl PaletteInjection {
    pub fn new(map: Vec<Color>, target: usize) -> Result<Self> {
        let mut hit = vec![false; target];
        for (from, &to) in map.iter().enumerate() {
            let slot = hit
                .get_mut(to as usize)
                .ok_or_else(|| Error::NotInjective(format!("{from} -> {to} is outside the target palette {target}")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::NotInjective(format!("color {to} is hit twice")));
            }
        }
        Ok(PaletteInjection { map, target })
    }

    /// The embedding of `[0, source)` onto the low colors of `[0, target)`.
    pub fn identity(source: usize, target: usize) -> Result<Self> {
        PaletteInjection::new((0..source as Color).collect(), target)
    }

    pub fn source(&self) -> usize {
        self.map.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn apply(&self, c: Color) -> Color {
        self.map[c as usize]
    }
}

/// Renames colors through `inj`. The result's palette is `inj.target()`, which
/// may leave some colors unused.
pub fn relabel(c: &Coloring, inj: &PaletteInjection) -> Result<Coloring> {
    if inj.source() != c.palette_size() {
        return Err(Error::ShapeMismatch(format!(
            "injection source {} differs from palette size {}",
            inj.source(),
            c.palette_size()
        )));
    }
    Ok(Coloring {
        shape: c.shape.clone(),
        palette_size: inj.target(),
        colors: c.colors.iter().map(|&x| inj.apply(x)).collect(),
    })
}
