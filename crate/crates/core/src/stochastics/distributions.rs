//! Triangular and empirical-discrete distributions plus the `TRIA(...)` /
//! `DISC(...)` literal notation used in scenario and distribution files.

use std::fmt;

use super::StochasticsError;

/// Triangular distribution on `[min, max]` with the given mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularDist {
    min: f64,
    mode: f64,
    max: f64,
}

impl TriangularDist {
    pub fn new(min: f64, mode: f64, max: f64) -> Result<Self, StochasticsError> {
        let ordered = min <= mode && mode <= max && min < max;
        if !ordered || !(min.is_finite() && mode.is_finite() && max.is_finite()) {
            return Err(StochasticsError::InvalidTriangular { min, mode, max });
        }
        Ok(Self { min, mode, max })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn mode(&self) -> f64 {
        self.mode
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn mean(&self) -> f64 {
        (self.min + self.mode + self.max) / 3.0
    }
}

impl fmt::Display for TriangularDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TRIA({},{},{})", self.min, self.mode, self.max)
    }
}

/// Inverse-CDF transform of a uniform draw `u` in `[0, 1]`.
pub fn sample_triangular(d: &TriangularDist, u: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&u));
    let span = d.max - d.min;
    let break_point = (d.mode - d.min) / span;
    if u <= break_point {
        d.min + (u * span * (d.mode - d.min)).sqrt()
    } else {
        d.max - ((1.0 - u) * span * (d.max - d.mode)).sqrt()
    }
}

/// Empirical discrete CDF: ordered `(cumulative_probability, value)` points.
///
/// Values are minutes from the start of the operating day in the release-time
/// use, but the type itself is unit-agnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    points: Vec<(f64, f64)>,
}

impl EmpiricalCdf {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self, StochasticsError> {
        if points.is_empty() {
            return Err(StochasticsError::InvalidCdf("no points".into()));
        }
        let mut prev_p = 0.0;
        let mut prev_v = f64::NEG_INFINITY;
        for &(p, v) in &points {
            if !(p > prev_p && p <= 1.0) {
                return Err(StochasticsError::InvalidCdf(format!(
                    "probabilities must be strictly increasing in (0, 1], got {p} after {prev_p}"
                )));
            }
            if v < prev_v {
                return Err(StochasticsError::InvalidCdf(format!(
                    "values must be non-decreasing, got {v} after {prev_v}"
                )));
            }
            prev_p = p;
            prev_v = v;
        }
        if (prev_p - 1.0).abs() > 1e-9 {
            return Err(StochasticsError::InvalidCdf(format!(
                "final probability must be 1, got {prev_p}"
            )));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn last_value(&self) -> f64 {
        self.points.last().expect("non-empty").1
    }
}

impl fmt::Display for EmpiricalCdf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DISC(")?;
        for (i, (p, v)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p},{v}")?;
        }
        write!(f, ")")
    }
}

/// Returns the value of the first point whose cumulative probability ≥ `u`.
pub fn sample_discrete_cdf(c: &EmpiricalCdf, u: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&u));
    let idx = c.points.partition_point(|&(p, _)| p < u);
    c.points[idx.min(c.points.len() - 1)].1
}

/// A parsed `TRIA(...)` or `DISC(...)` literal.
#[derive(Debug, Clone, PartialEq)]
pub enum DistributionLiteral {
    Triangular(TriangularDist),
    Discrete(EmpiricalCdf),
}

/// Parses the paper-notation literals `TRIA(a,m,b)` and `DISC(p1,v1,...)`.
pub fn parse_distribution_literal(text: &str) -> Result<DistributionLiteral, StochasticsError> {
    let bad = |msg: &str| StochasticsError::BadLiteral(text.to_string(), msg.to_string());
    let trimmed = text.trim();
    let (kind, rest) = trimmed
        .split_once('(')
        .ok_or_else(|| bad("expected `NAME(args)`"))?;
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| bad("missing closing parenthesis"))?;
    let numbers = body
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| bad(&format!("`{}` is not a number", tok.trim())))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    match kind.trim().to_ascii_uppercase().as_str() {
        "TRIA" => {
            if numbers.len() != 3 {
                return Err(bad("TRIA takes exactly 3 arguments"));
            }
            Ok(DistributionLiteral::Triangular(TriangularDist::new(
                numbers[0], numbers[1], numbers[2],
            )?))
        }
        "DISC" => {
            if numbers.len() < 2 || numbers.len() % 2 != 0 {
                return Err(bad("DISC takes an even, nonzero number of arguments"));
            }
            let points = numbers.chunks(2).map(|c| (c[0], c[1])).collect();
            Ok(DistributionLiteral::Discrete(EmpiricalCdf::new(points)?))
        }
        other => Err(bad(&format!("unknown distribution `{other}`"))),
    }
}

#[cfg(test)]
mod unit {
    use super::*;

    #[test]
    fn triangular_endpoints() {
        let d = TriangularDist::new(60.0, 68.0, 75.0).unwrap();
        assert_eq!(sample_triangular(&d, 0.0), 60.0);
        assert_eq!(sample_triangular(&d, 1.0), 75.0);
    }

    #[test]
    fn triangular_rejects_disorder() {
        assert!(TriangularDist::new(5.0, 4.0, 6.0).is_err());
        assert!(TriangularDist::new(5.0, 5.0, 5.0).is_err());
        // Degenerate endpoints are allowed when mode coincides with one end.
        assert!(TriangularDist::new(3.0, 3.0, 5.0).is_ok());
    }

    #[test]
    fn discrete_picks_first_point_at_or_above_u() {
        let c = EmpiricalCdf::new(vec![(0.004, 0.0), (0.05, 30.0), (1.0, 1410.0)]).unwrap();
        assert_eq!(sample_discrete_cdf(&c, 0.003), 0.0);
        assert_eq!(sample_discrete_cdf(&c, 0.03), 30.0);
        assert_eq!(sample_discrete_cdf(&c, 1.0), 1410.0);
    }

    #[test]
    fn cdf_validation() {
        assert!(EmpiricalCdf::new(vec![]).is_err());
        assert!(EmpiricalCdf::new(vec![(0.5, 0.0), (0.99, 10.0)]).is_err());
        assert!(EmpiricalCdf::new(vec![(0.5, 10.0), (1.0, 5.0)]).is_err());
        assert!(EmpiricalCdf::new(vec![(0.5, 0.0), (0.4, 10.0)]).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let lit = parse_distribution_literal("TRIA(60,68,75)").unwrap();
        match lit {
            DistributionLiteral::Triangular(d) => {
                assert_eq!((d.min(), d.mode(), d.max()), (60.0, 68.0, 75.0));
                assert_eq!(d.to_string(), "TRIA(60,68,75)");
            }
            _ => panic!("expected TRIA"),
        }
        let lit = parse_distribution_literal("DISC(0.004,0,0.05,30,1,1410)").unwrap();
        match lit {
            DistributionLiteral::Discrete(c) => {
                assert_eq!(c.points().len(), 3);
                assert_eq!(c.to_string(), "DISC(0.004,0,0.05,30,1,1410)");
            }
            _ => panic!("expected DISC"),
        }
        assert!(parse_distribution_literal("NORM(0,1)").is_err());
        assert!(parse_distribution_literal("TRIA(1,2)").is_err());
        assert!(parse_distribution_literal("DISC(0.5,1,0.7)").is_err());
    }
}
