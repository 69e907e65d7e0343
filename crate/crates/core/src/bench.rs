//! Benchmark records, their summaries and performance profiles.

use serde::{Deserialize, Serialize};

/// One clustering run of one algorithm for one seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub graph: String,
    pub algo: String,
    pub seed: u64,
    pub phi_mu: f64,
    pub cluster_size: usize,
    pub time_ms: f64,
    pub degenerate: bool,
    /// One-off preprocessing included in `time_ms` (the baseline's global
    /// triangle enumeration).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preprocess_ms: Option<f64>,
    /// Whether `phi_mu` matched a whole-graph recount, when checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub graph: String,
    pub algo: String,
    pub instances: usize,
    pub degenerate: usize,
    pub mean_phi_mu: f64,
    pub mean_time_ms: f64,
    pub geo_mean_time_ms: f64,
    pub geo_mean_cluster_size: f64,
    /// Mean time with the preprocessing shared across all seeds instead of
    /// paid per seed. Only set when records carry `preprocess_ms`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amortized_time_ms: Option<f64>,
}

pub fn arithmetic_mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Geometric mean; zero if any value is zero.
pub fn geometric_mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    if xs.iter().any(|&x| x <= 0.0) {
        return 0.0;
    }
    (xs.iter().map(|x| x.ln()).sum::<f64>() / xs.len() as f64).exp()
}

/// Per (graph, algo) summaries, in order of first appearance.
pub fn summarize(records: &[Record]) -> Vec<Summary> {
    let mut keys: Vec<(&str, &str)> = Vec::new();
    for r in records {
        let k = (r.graph.as_str(), r.algo.as_str());
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|(graph, algo)| {
            let group: Vec<&Record> = records
                .iter()
                .filter(|r| r.graph == graph && r.algo == algo)
                .collect();
            let col = |f: fn(&Record) -> f64| group.iter().map(|r| f(r)).collect::<Vec<_>>();
            let times = col(|r| r.time_ms);
            let amortized_time_ms = group[0].preprocess_ms.map(|pre| {
                let query = arithmetic_mean(&col(|r| r.time_ms - r.preprocess_ms.unwrap_or(0.0)));
                query + pre / group.len() as f64
            });
            Summary {
                graph: graph.to_string(),
                algo: algo.to_string(),
                instances: group.len(),
                degenerate: group.iter().filter(|r| r.degenerate).count(),
                mean_phi_mu: arithmetic_mean(&col(|r| r.phi_mu)),
                mean_time_ms: arithmetic_mean(&times),
                geo_mean_time_ms: geometric_mean(&times),
                geo_mean_cluster_size: geometric_mean(&col(|r| r.cluster_size as f64)),
                amortized_time_ms,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    PhiMu,
    TimeMs,
}

impl Metric {
    fn of(self, r: &Record) -> f64 {
        match self {
            Metric::PhiMu => r.phi_mu,
            Metric::TimeMs => r.time_ms,
        }
    }
}

/// Fraction of instances on which `algo` is within a factor `tau` of the best
/// algorithm, as a right-continuous step function given by its breakpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub metric: Metric,
    pub algo: String,
    pub points: Vec<(f64, f64)>,
}

/// `value / best`, with `0 / 0 = 1` and `x / 0 = inf`.
fn ratio(value: f64, best: f64) -> f64 {
    if value == best {
        1.0
    } else if best == 0.0 {
        f64::INFINITY
    } else {
        value / best
    }
}

/// Performance profiles over instances `(graph, seed)` present for every
/// algorithm; lower is better for both metrics.
pub fn performance_profile(records: &[Record], metric: Metric) -> Vec<ProfileCurve> {
    let mut algos: Vec<&str> = Vec::new();
    let mut instances: Vec<(&str, u64)> = Vec::new();
    for r in records {
        if !algos.contains(&r.algo.as_str()) {
            algos.push(&r.algo);
        }
        if !instances.contains(&(r.graph.as_str(), r.seed)) {
            instances.push((&r.graph, r.seed));
        }
    }
    let lookup = |algo: &str, (graph, seed): (&str, u64)| {
        records
            .iter()
            .find(|r| r.algo == algo && r.graph == graph && r.seed == seed)
            .map(|r| metric.of(r))
    };
    let mut ratios: Vec<Vec<f64>> = vec![Vec::new(); algos.len()];
    for &inst in &instances {
        let values: Option<Vec<f64>> = algos.iter().map(|a| lookup(a, inst)).collect();
        let Some(values) = values else { continue };
        let best = values.iter().copied().fold(f64::INFINITY, f64::min);
        for (i, v) in values.into_iter().enumerate() {
            ratios[i].push(ratio(v, best));
        }
    }
    algos
        .iter()
        .zip(ratios)
        .map(|(algo, mut rs)| {
            let total = rs.len() as f64;
            rs.sort_by(f64::total_cmp);
            let mut points: Vec<(f64, f64)> = Vec::new();
            for (i, &r) in rs.iter().enumerate() {
                if !r.is_finite() {
                    break;
                }
                let frac = (i + 1) as f64 / total;
                match points.last_mut() {
                    Some(last) if last.0 == r => last.1 = frac,
                    _ => points.push((r, frac)),
                }
            }
            ProfileCurve {
                metric,
                algo: algo.to_string(),
                points,
            }
        })
        .collect()
}

impl ProfileCurve {
    /// Value of the step function at `tau`.
    pub fn fraction_at(&self, tau: f64) -> f64 {
        self.points
            .iter()
            .take_while(|(t, _)| *t <= tau)
            .last()
            .map_or(0.0, |&(_, f)| f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(algo: &str, seed: u64, phi: f64, time: f64) -> Record {
        Record {
            graph: "g".into(),
            algo: algo.into(),
            seed,
            phi_mu: phi,
            cluster_size: 4,
            time_ms: time,
            degenerate: false,
            preprocess_ms: None,
            verified: None,
            cluster: None,
        }
    }

    #[test]
    fn means() {
        assert_eq!(arithmetic_mean(&[0.0, 0.5, 1.0]), 0.5);
        assert!((geometric_mean(&[1.0, 4.0, 16.0]) - 4.0).abs() < 1e-12);
        assert_eq!(geometric_mean(&[0.0, 3.0]), 0.0);
    }

    #[test]
    fn hand_computed_profile() {
        let records = vec![
            rec("a", 1, 0.1, 10.0),
            rec("b", 1, 0.2, 5.0),
            rec("a", 2, 0.3, 10.0),
            rec("b", 2, 0.3, 40.0),
            rec("a", 3, 0.0, 1.0),
            rec("b", 3, 0.5, 3.0),
        ];
        let phi = performance_profile(&records, Metric::PhiMu);
        assert_eq!(phi[0].points, vec![(1.0, 1.0)]);
        assert_eq!(phi[1].points, vec![(1.0, 1.0 / 3.0), (2.0, 2.0 / 3.0)]);
        let time = performance_profile(&records, Metric::TimeMs);
        assert_eq!(time[0].points, vec![(1.0, 2.0 / 3.0), (2.0, 1.0)]);
        assert_eq!(time[1].points, vec![(1.0, 1.0 / 3.0), (3.0, 2.0 / 3.0), (4.0, 1.0)]);
        assert_eq!(time[1].fraction_at(3.5), 2.0 / 3.0);
        assert_eq!(time[1].fraction_at(0.5), 0.0);
    }

    #[test]
    fn identical_algorithms_have_identical_curves() {
        let records: Vec<Record> = (0..5)
            .flat_map(|s| [rec("a", s, s as f64 / 10.0, 1.0 + s as f64), rec("b", s, s as f64 / 10.0, 1.0 + s as f64)])
            .collect();
        for m in [Metric::PhiMu, Metric::TimeMs] {
            let c = performance_profile(&records, m);
            assert_eq!(c[0].points, c[1].points);
            assert_eq!(c[0].points, vec![(1.0, 1.0)]);
        }
    }

    #[test]
    fn summary_amortizes_preprocessing() {
        let mut records = vec![rec("base", 1, 0.2, 110.0), rec("base", 2, 0.4, 130.0)];
        for r in &mut records {
            r.preprocess_ms = Some(100.0);
        }
        let s = summarize(&records);
        assert_eq!(s.len(), 1);
        assert!((s[0].mean_phi_mu - 0.3).abs() < 1e-15);
        assert_eq!(s[0].mean_time_ms, 120.0);
        assert_eq!(s[0].amortized_time_ms, Some(70.0));
    }

    #[test]
    fn record_roundtrip() {
        let mut r = rec("ours", 7, 0.25, 1.5);
        r.cluster = Some(vec![1, 2, 7]);
        let line = serde_json::to_string(&r).unwrap();
        assert!(!line.contains("preprocess_ms"));
        assert_eq!(serde_json::from_str::<Record>(&line).unwrap(), r);
    }
}
