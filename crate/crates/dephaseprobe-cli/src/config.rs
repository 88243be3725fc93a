//! Range parsing and run-configuration echoing.

use std::fmt;
use std::str::FromStr;

/// Inclusive parameter range `start:stop:count`, linear by default, log-spaced
/// with a `log:` prefix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub log: bool,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        if self.log {
            let la = self.start.ln();
            let lb = self.stop.ln();
            (0..n)
                .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
                .collect()
        } else {
            (0..n)
                .map(|i| self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64)
                .collect()
        }
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (log, body) = match s.strip_prefix("log:") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parts: Vec<&str> = body.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range must be [log:]start:stop:count, got {s:?}"));
        }
        let start: f64 = parts[0]
            .parse()
            .map_err(|_| format!("bad range start {:?}", parts[0]))?;
        let stop: f64 = parts[1]
            .parse()
            .map_err(|_| format!("bad range stop {:?}", parts[1]))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| format!("bad range count {:?}", parts[2]))?;
        if count < 2 {
            return Err(format!("range count must be >= 2, got {count}"));
        }
        if !(stop > start) {
            return Err(format!("range needs stop > start, got {start}..{stop}"));
        }
        if log && start <= 0.0 {
            return Err("log-spaced range needs start > 0".into());
        }
        Ok(Range {
            start,
            stop,
            count,
            log,
        })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log {
            write!(f, "log:{}:{}:{}", self.start, self.stop, self.count)
        } else {
            write!(f, "{}:{}:{}", self.start, self.stop, self.count)
        }
    }
}

/// Scalar flag or range flag resolved into a list of grid values.
pub fn axis_values(
    name: &str,
    scalar: Option<f64>,
    range: Option<Range>,
    default: Option<f64>,
) -> Result<Vec<f64>, String> {
    match (scalar, range) {
        (Some(_), Some(_)) => Err(format!(
            "--{name} and --{name}-range are mutually exclusive"
        )),
        (Some(v), None) => Ok(vec![v]),
        (None, Some(r)) => Ok(r.values()),
        (None, None) => match default {
            Some(v) => Ok(vec![v]),
            None => Err(format!("either --{name} or --{name}-range is required")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_linear_range() {
        let r: Range = "0.1:3:59".parse().unwrap();
        assert_eq!(r.count, 59);
        assert!(!r.log);
        let v = r.values();
        assert_eq!(v.len(), 59);
        assert!((v[0] - 0.1).abs() < 1e-15);
        assert!((v[58] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn parses_log_range() {
        let r: Range = "log:0.001:35:512".parse().unwrap();
        assert!(r.log);
        let v = r.values();
        assert!((v[0] - 0.001).abs() < 1e-15);
        assert!((v[511] - 35.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!("1:2".parse::<Range>().is_err());
        assert!("2:1:10".parse::<Range>().is_err());
        assert!("1:2:1".parse::<Range>().is_err());
        assert!("log:0:2:10".parse::<Range>().is_err());
        assert!("a:b:c".parse::<Range>().is_err());
    }
}
