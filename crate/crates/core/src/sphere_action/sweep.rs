use std::cmp::Ordering;

use super::{
    asymptotic_action, direct_action, ActionBreakdown, ActionRequest, CutoffModel, DirectSum,
};
use crate::dimension::OddDimension;
use crate::error::Result;
use crate::par::{map_collect, Execution};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub dim: OddDimension,
    pub t: f64,
    pub lambda: f64,
}

impl SweepPoint {
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.t.total_cmp(&other.t))
            .then(self.lambda.total_cmp(&other.lambda))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub point: SweepPoint,
    pub direct: DirectSum,
    pub asymptotic: ActionBreakdown,
    pub abs_diff: f64,
    pub rel_diff: f64,
}

/// Evaluates both routes on every grid point. Records come back sorted by
/// `(d, t, Λ)` whatever the execution mode; duplicate points are dropped.
pub fn sweep(
    points: &[SweepPoint],
    cutoff: CutoffModel,
    tail_epsilon: f64,
    max_terms: usize,
    exec: Execution,
) -> Result<Vec<SweepRecord>> {
    let mut points = points.to_vec();
    points.sort_by(SweepPoint::canonical_cmp);
    points.dedup_by(|a, b| a.canonical_cmp(b) == Ordering::Equal);
    map_collect(&points, exec, |p| {
        let req = ActionRequest::new(p.dim, p.t, p.lambda, cutoff)?
            .with_tail_epsilon(tail_epsilon)?
            .with_max_terms(max_terms)?;
        let direct = direct_action(&req)?;
        let asymptotic = asymptotic_action(&req);
        let abs_diff = (direct.value - asymptotic.total).abs();
        let rel_diff = if direct.value == 0.0 {
            abs_diff
        } else {
            abs_diff / direct.value.abs()
        };
        Ok(SweepRecord {
            point: *p,
            direct,
            asymptotic,
            abs_diff,
            rel_diff,
        })
    })
    .into_iter()
    .collect()
}
