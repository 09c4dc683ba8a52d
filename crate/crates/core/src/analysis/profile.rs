use serde::Serialize;

/// Empirical distribution of one algorithm's quality quotients, evaluated
/// at a list of thresholds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileCurve {
    pub algorithm: String,
    /// `(τ, fraction of samples with quotient ≤ τ)`.
    pub points: Vec<(f64, f64)>,
}

impl ProfileCurve {
    pub fn is_monotone(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1)
    }

    pub fn terminal(&self) -> Option<f64> {
        self.points.last().map(|p| p.1)
    }
}

/// One curve per `(algorithm, quotients)` entry, in input order.
pub fn performance_profile(metric: &[(String, Vec<f64>)], thresholds: &[f64]) -> Vec<ProfileCurve> {
    metric
        .iter()
        .map(|(name, values)| {
            let mut sorted = values.clone();
            sorted.sort_by(f64::total_cmp);
            let points = thresholds
                .iter()
                .map(|&tau| {
                    let hits = sorted.partition_point(|&v| v <= tau);
                    (tau, hits as f64 / sorted.len().max(1) as f64)
                })
                .collect();
            ProfileCurve {
                algorithm: name.clone(),
                points,
            }
        })
        .collect()
}
