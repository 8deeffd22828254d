//! CSV and JSON emitters. Floats use the shortest representation that reads
//! back to the same `f64`; all output uses `\n` line endings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::Positions;
use crate::spectral::{EigenCurve, GeometryEnsemble, GeometryScores};
use crate::stats::SweepRow;

fn num(x: f64) -> String {
    format!("{x:?}")
}

/// `node,r,phi` for polar points, `node,leaf` for tree leaves and
/// `node,z1,...,zt` for vectors.
pub fn positions_csv(p: &Positions) -> String {
    let mut out = String::new();
    match p {
        Positions::Polar(ps) => {
            out.push_str("node,r,phi\n");
            for (i, q) in ps.iter().enumerate() {
                let _ = writeln!(out, "{i},{},{}", num(q.r), num(q.phi));
            }
        }
        Positions::Leaves(ls) => {
            out.push_str("node,leaf\n");
            for (i, l) in ls.iter().enumerate() {
                let _ = writeln!(out, "{i},{l}");
            }
        }
        Positions::Vectors(vs) => {
            let t = vs.first().map_or(0, Vec::len);
            out.push_str("node");
            for k in 1..=t {
                let _ = write!(out, ",z{k}");
            }
            out.push('\n');
            for (i, v) in vs.iter().enumerate() {
                let _ = write!(out, "{i}");
                for x in v {
                    let _ = write!(out, ",{}", num(*x));
                }
                out.push('\n');
            }
        }
    }
    out
}

/// `rank,value`, rank 1 = largest eigenvalue.
pub fn curve_csv(c: &EigenCurve) -> String {
    let mut out = String::from("rank,value\n");
    for (k, v) in c.values.iter().enumerate() {
        let _ = writeln!(out, "{},{}", k + 1, num(*v));
    }
    out
}

/// Reads a `rank,value` table back into a curve.
pub fn parse_curve_csv(text: &str) -> Result<EigenCurve> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(super::edgelist::csv_error)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["rank", "value"] {
        return Err(Error::Parse {
            line: 1,
            message: "expected header rank,value".into(),
        });
    }
    let mut values = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec.map_err(super::edgelist::csv_error)?;
        let v: f64 = rec
            .get(1)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line: k + 2,
                message: "bad eigenvalue".into(),
            })?;
        values.push(v);
    }
    Ok(EigenCurve::new(values))
}

/// `rank,mean,min,max`.
pub fn ensemble_csv(e: &GeometryEnsemble) -> String {
    let mut out = String::from("rank,mean,min,max\n");
    for k in 0..e.n {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            k + 1,
            num(e.mean[k]),
            num(e.min[k]),
            num(e.max[k])
        );
    }
    out
}

/// `geometry,n,gamma,stat,mean,min,max`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("geometry,n,gamma,stat,mean,min,max\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.geometry,
            r.n,
            num(r.gamma),
            r.statistic,
            num(r.mean),
            num(r.min),
            num(r.max)
        );
    }
    out
}

/// Scores file: one RMS score per geometry and the winning label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoresFile {
    pub scores: BTreeMap<String, f64>,
    pub label: String,
}

impl From<&GeometryScores> for ScoresFile {
    fn from(s: &GeometryScores) -> Self {
        ScoresFile {
            scores: s
                .scores
                .iter()
                .map(|(g, v)| (g.name().to_string(), *v))
                .collect(),
            label: s.label(),
        }
    }
}

pub fn scores_json(s: &GeometryScores) -> String {
    let mut text = serde_json::to_string_pretty(&ScoresFile::from(s)).expect("scores serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Geometry, PolarPoint};
    use crate::stats::Statistic;

    #[test]
    fn positions_headers() {
        let p = Positions::Polar(vec![PolarPoint::new(0.5, 0.1)]);
        assert_eq!(positions_csv(&p), "node,r,phi\n0,0.5,0.1\n");
        assert_eq!(
            positions_csv(&Positions::Leaves(vec![3, 7])),
            "node,leaf\n0,3\n1,7\n"
        );
        let v = Positions::Vectors(vec![vec![1.0, -2.0]]);
        assert_eq!(positions_csv(&v), "node,z1,z2\n0,1.0,-2.0\n");
    }

    #[test]
    fn curve_round_trip() {
        let c = EigenCurve::new(vec![0.0, 3.0000000000000004, 1.0 / 3.0]);
        let text = curve_csv(&c);
        assert!(text.starts_with("rank,value\n1,3.0000000000000004\n"));
        assert_eq!(parse_curve_csv(&text).unwrap(), c);
        assert!(parse_curve_csv("a,b\n1,2\n").is_err());
    }

    #[test]
    fn sweep_and_scores_format() {
        let rows = [SweepRow {
            geometry: Geometry::Hyperbolic,
            n: 20,
            gamma: 0.4,
            statistic: Statistic::Modularity,
            mean: 0.25,
            min: 0.0,
            max: 0.5,
        }];
        assert_eq!(
            sweep_csv(&rows),
            "geometry,n,gamma,stat,mean,min,max\nhyperbolic,20,0.4,modularity,0.25,0.0,0.5\n"
        );
        let s = GeometryScores {
            scores: vec![
                (Geometry::Euclidean, 2.0),
                (Geometry::Spherical, 3.0),
                (Geometry::Hyperbolic, 1.0),
            ],
            best: vec![Geometry::Hyperbolic],
        };
        let parsed: ScoresFile = serde_json::from_str(&scores_json(&s)).unwrap();
        assert_eq!(parsed.scores.len(), 3);
        assert_eq!(parsed.label, "hyperbolic");
        assert_eq!(parsed.scores["euclidean"], 2.0);
    }
}
