//! Standard parameter grids and the closed-form verification sweep.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::expengine::verify_closed_form;
use crate::lie::{class_algebra, jacobi_defect};
use crate::structure::{ClassId, ClassParams};

/// α, β values of the exponential sweep.
pub const PARAM_GRID: [f64; 5] = [-2.0, -1.0, 0.5, 1.0, 2.0];
/// Coordinate values of the exponential sweep; each of a, b, c ranges over it.
pub const COORD_GRID: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];
/// α, β values of the classification round trip.
pub const ROUND_TRIP_GRID: [f64; 6] = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0];

const SMALL_PARAM_GRID: [f64; 2] = [-1.0, 1.0];
const SMALL_COORD_GRID: [f64; 3] = [-1.0, 0.0, 1.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum GridSize {
    #[default]
    Full,
    Small,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridPoint {
    pub params: ClassParams<f64>,
    pub coords: [f64; 3],
}

fn cube(values: &[f64]) -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(values.len().pow(3));
    for &a in values {
        for &b in values {
            for &c in values {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every (class, α, β, a, b, c) combination, ordered by class then grid index.
///
/// β is swept for every class (it is ignored by the one-parameter families).
pub fn exp_grid(size: GridSize) -> Vec<GridPoint> {
    let (params, coords): (&[f64], &[f64]) = match size {
        GridSize::Full => (&PARAM_GRID, &COORD_GRID),
        GridSize::Small => (&SMALL_PARAM_GRID, &SMALL_COORD_GRID),
    };
    let coords = cube(coords);
    let mut out = Vec::new();
    for &class_id in &ClassId::BASIC {
        for &alpha in params {
            for &beta in params {
                let p = ClassParams::new(class_id, alpha, beta).expect("finite grid values");
                out.extend(coords.iter().map(|&coords| GridPoint { params: p, coords }));
            }
        }
    }
    out
}

/// Per-class maxima over a verification sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassSummary {
    #[serde(rename = "class")]
    pub class_id: ClassId,
    pub points: usize,
    pub max_residual: f64,
    pub max_jacobi_defect: f64,
}

impl ClassSummary {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual <= tol && self.max_jacobi_defect == 0.0
    }
}

/// Runs the closed form against the oracle at every grid point (in parallel) and
/// reduces to per-class maxima in `ClassId::BASIC` order.
pub fn verify_grid(size: GridSize) -> Result<Vec<ClassSummary>> {
    let grid = exp_grid(size);
    let rows: Vec<(ClassId, f64, f64)> = grid
        .par_iter()
        .map(|pt| {
            let [a, b, c] = pt.coords;
            let residual = verify_closed_form(&pt.params, a, b, c, 1e-12)?;
            let jacobi = jacobi_defect(&class_algebra(&pt.params));
            Ok((pt.params.class_id, residual, jacobi))
        })
        .collect::<Result<_>>()?;

    Ok(ClassId::BASIC
        .iter()
        .map(|&class_id| {
            let mine = rows.iter().filter(|r| r.0 == class_id);
            let (points, max_residual, max_jacobi_defect) =
                mine.fold((0, 0.0f64, 0.0f64), |(n, r, j), row| (n + 1, r.max(row.1), j.max(row.2)));
            ClassSummary { class_id, points, max_residual, max_jacobi_defect }
        })
        .collect())
}
