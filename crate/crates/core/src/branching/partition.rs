use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. It is read as a polynomial highest weight of `GL_n` for
/// any `n` at least its number of rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single row `(k)`.
    pub fn row(k: u32) -> Self {
        Partition {
            parts: if k == 0 { Vec::new() } else { vec![k] },
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn scale(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn check_rows(&self, n: usize) -> Result<()> {
        if self.rows() > n {
            Err(Error::invalid(format!("({self}) has more than {n} rows")))
        } else {
            Ok(())
        }
    }

    /// The entries padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i)).collect()
    }

    /// All partitions of `size` with at most `max_rows` rows, in reverse
    /// lexicographic order.
    pub fn all(size: u32, max_rows: usize) -> Vec<Partition> {
        fn rec(rest: u32, max_part: u32, rows_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                rec(rest - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` with at most `max_rows` rows.
    pub fn subpartitions(&self, max_rows: usize) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, bound: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i >= rows {
                return;
            }
            for p in 1..=bound.min(outer.part(i)) {
                cur.push(p);
                rec(outer, i + 1, p, rows, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let rows = max_rows.min(self.rows());
        rec(self, 0, u32::MAX, rows, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated weakly decreasing integers; the empty string or `0`
    /// is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(s, format!("`{}` is not a nonnegative integer", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_enumerate() {
        let p: Partition = "3,2,0".parse().unwrap();
        assert_eq!(p.parts(), &[3, 2]);
        assert_eq!(p.to_string(), "3,2");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::all(4, 4).len(), 5);
        assert_eq!(Partition::all(6, 2).len(), 4);
        let subs = "2,1".parse::<Partition>().unwrap().subpartitions(2);
        assert_eq!(subs.len(), 5);
        assert_eq!(p.scale(2).parts(), &[6, 4]);
    }
}
