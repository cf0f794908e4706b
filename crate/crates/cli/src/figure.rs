//! Curve data behind each figure, one CSV per curve.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hypercauchy_core::distributions::{ComponentSpec, HyperCauchy, HyperCauchyParams};
use hypercauchy_core::numerics::GridSpec;

use crate::curve::Curve;
use crate::output::tabulate;

pub const DEFAULT_POINTS: usize = 2001;
/// Half-width of default grids in units of `t`.
pub const DEFAULT_HALF_WIDTH: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FigureId {
    /// `p_4` and `p_8`, `t = 1`.
    P4p8,
    /// Disturbance factor `g_k`, `n = 3`, `k = 1, 3`.
    Gk,
    /// `p_{2^n}` for `n = 5, 10, 15, 20`, `t = 1`.
    PnLarge,
    /// Folded and symmetrized component densities, `n = 3`, `k = 1, 3`.
    FoldSym,
    /// Third-order law, `t = 1`.
    Third,
}

/// A named curve on its grid.
#[derive(Debug, Clone)]
pub struct FigureCurve {
    pub name: String,
    pub curve: Curve,
    pub grid: GridSpec,
}

pub fn default_grid(t: f64, points: usize) -> Result<GridSpec> {
    Ok(GridSpec::new(-DEFAULT_HALF_WIDTH * t, DEFAULT_HALF_WIDTH * t, points)?)
}

fn hyper(n: u32) -> Result<Curve> {
    Ok(Curve::Hyper(HyperCauchy::new(HyperCauchyParams::new(n, 1.0)?)))
}

pub fn figure_curves(id: FigureId, points: usize) -> Result<Vec<FigureCurve>> {
    let grid = default_grid(1.0, points)?;
    let half = GridSpec::new(0.0, DEFAULT_HALF_WIDTH, points)?;
    let named = |name: String, curve: Curve, grid: GridSpec| FigureCurve { name, curve, grid };
    Ok(match id {
        FigureId::P4p8 => vec![named("p4".into(), hyper(2)?, grid), named("p8".into(), hyper(3)?, grid)],
        FigureId::Gk => [1, 3]
            .into_iter()
            .map(|k| named(format!("gk_n3_k{k}"), Curve::Disturbance { n: 3, k, t: 1.0 }, grid))
            .collect(),
        FigureId::PnLarge => [5, 10, 15, 20]
            .into_iter()
            .map(|n| Ok(named(format!("p_n{n}"), hyper(n)?, grid)))
            .collect::<Result<_>>()?,
        FigureId::FoldSym => {
            let mut curves = Vec::new();
            for k in [1, 3] {
                let c = ComponentSpec::new(3, k, 1.0)?;
                curves.push(named(format!("folded_n3_k{k}"), Curve::Folded(c), half));
                curves.push(named(format!("symmetrized_n3_k{k}"), Curve::Component(c), grid));
            }
            curves
        }
        FigureId::Third => vec![named("third".into(), Curve::Third { t: 1.0 }, grid)],
    })
}

/// Writes `<dir>/<curve>.csv` for every curve of the figure.
pub fn write_figure(id: FigureId, dir: &Path, points: usize) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for fc in figure_curves(id, points)? {
        let record = tabulate(&fc.curve, &fc.grid)?;
        let path = dir.join(format!("{}.csv", fc.name));
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        record.write_csv(BufWriter::new(file))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_counts() {
        let counts = [(FigureId::P4p8, 2), (FigureId::Gk, 2), (FigureId::PnLarge, 4), (FigureId::FoldSym, 4), (FigureId::Third, 1)];
        for (id, n) in counts {
            assert_eq!(figure_curves(id, 11).unwrap().len(), n);
        }
    }
}
