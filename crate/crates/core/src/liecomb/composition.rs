use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered block sizes of a parabolic's Levi factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("composition must have at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    /// Builds a composition after discarding zero parts. Fails if nothing remains.
    pub fn from_nonzero(parts: &[usize]) -> Result<Self> {
        Self::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    /// The single-block composition `(n)`.
    pub fn whole(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length at least two, i.e. the parabolic is not the whole group.
    pub fn is_proper(&self) -> bool {
        self.parts.len() >= 2
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn is_palindrome(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }

    /// Length two with a part equal to one: the stabilizer of a line or a hyperplane.
    pub fn is_mirabolic(&self) -> bool {
        self.parts.len() == 2 && self.parts.contains(&1)
    }

    /// Proper partial sums `s_1 < s_2 < ... < s_{l-1}`.
    pub fn break_points(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Block index (0-based) of each coordinate `0..size`.
    pub fn block_of(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
            .collect()
    }

    /// All compositions of `n`, in lexicographic order of their part sequences.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for first in 1..=rest {
                cur.push(first);
                rec(rest - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Composition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// A type C block structure `(a_1, ..., a_l, [m], a_l, ..., a_1)`.
///
/// Only the left half and the optional middle part are stored; the
/// palindrome is rebuilt on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticComposition {
    left: Vec<usize>,
    middle: Option<usize>,
}

impl SymplecticComposition {
    pub fn new(left: Vec<usize>, middle: Option<usize>) -> Result<Self> {
        if left.contains(&0) {
            return Err(Error::invalid("symplectic composition parts must be positive"));
        }
        match middle {
            Some(m) if m == 0 || m % 2 == 1 => {
                return Err(Error::invalid(format!(
                    "unpaired middle part must be positive and even, got {m}"
                )))
            }
            None if left.is_empty() => {
                return Err(Error::invalid("symplectic composition is empty"));
            }
            _ => {}
        }
        Ok(SymplecticComposition { left, middle })
    }

    /// Parses the full palindromic part sequence.
    pub fn from_full(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("symplectic composition is empty"));
        }
        if !parts.iter().eq(parts.iter().rev()) {
            return Err(Error::invalid(format!("{parts:?} is not palindromic")));
        }
        let half = parts.len() / 2;
        let left = parts[..half].to_vec();
        let middle = (parts.len() % 2 == 1).then(|| parts[half]);
        Self::new(left, middle)
    }

    /// The Siegel shape `(n, n)`.
    pub fn siegel(n: usize) -> Self {
        SymplecticComposition {
            left: vec![n],
            middle: None,
        }
    }

    /// The Borel shape `(1, ..., 1)` of length `2n`.
    pub fn borel(n: usize) -> Self {
        SymplecticComposition {
            left: vec![1; n],
            middle: None,
        }
    }

    /// The whole group, a single middle block `(2n)`.
    pub fn whole(n: usize) -> Self {
        SymplecticComposition {
            left: Vec::new(),
            middle: Some(2 * n),
        }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn middle(&self) -> Option<usize> {
        self.middle
    }

    /// Rank `n` with `|λ| = 2n`.
    pub fn rank(&self) -> usize {
        self.left.iter().sum::<usize>() + self.middle.unwrap_or(0) / 2
    }

    pub fn size(&self) -> usize {
        2 * self.rank()
    }

    pub fn full(&self) -> Vec<usize> {
        let mut v = self.left.clone();
        v.extend(self.middle);
        v.extend(self.left.iter().rev());
        v
    }

    pub fn len(&self) -> usize {
        2 * self.left.len() + usize::from(self.middle.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_proper(&self) -> bool {
        !self.left.is_empty()
    }

    pub fn is_siegel(&self) -> bool {
        self.left.len() == 1 && self.middle.is_none()
    }

    /// Dimensions of the isotropic subspaces `F_1 ⊂ ... ⊂ F_l`.
    pub fn isotropic_dims(&self) -> Vec<usize> {
        let mut acc = 0;
        self.left
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// The block structure as an ordinary composition of `2n`.
    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.full() }
    }

    /// All symplectic compositions of size `2n`, including the whole group.
    pub fn all(n: usize) -> Vec<SymplecticComposition> {
        let mut out = Vec::new();
        for used in 0..=n {
            let lefts = if used == 0 {
                vec![Vec::new()]
            } else {
                Composition::all(used).into_iter().map(|c| c.parts).collect()
            };
            let middle = (used < n).then_some(2 * (n - used));
            for left in lefts {
                out.push(SymplecticComposition {
                    left,
                    middle,
                });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SymplecticComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.full())
    }
}

impl Serialize for SymplecticComposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SymplecticComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        SymplecticComposition::from_full(&parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Err(Error::parse(s, "empty part list"));
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::parse(tok, "expected a nonnegative integer"))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let c: Composition = "2,1,1".parse().unwrap();
        assert_eq!(c.parts(), &[2, 1, 1]);
        assert_eq!(c.size(), 4);
        assert_eq!(c.to_string(), "2,1,1");
        assert!("2,0,1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("a,1".parse::<Composition>().is_err());
    }

    #[test]
    fn compositions_of_n_count_is_power_of_two() {
        for n in 1..=7 {
            assert_eq!(Composition::all(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn symplectic_palindromes() {
        let s: SymplecticComposition = "1,2,1".parse().unwrap();
        assert_eq!(s.left(), &[1]);
        assert_eq!(s.middle(), Some(2));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.full(), vec![1, 2, 1]);
        assert!("1,3,1".parse::<SymplecticComposition>().is_err());
        assert!("1,2".parse::<SymplecticComposition>().is_err());
        let siegel: SymplecticComposition = "2,2".parse().unwrap();
        assert!(siegel.is_siegel());
        assert_eq!(siegel, SymplecticComposition::siegel(2));
    }

    #[test]
    fn symplectic_enumeration_counts_subsets_of_simple_roots() {
        // Standard parabolics of Sp_2n correspond to subsets of the n simple roots.
        for n in 1..=4 {
            assert_eq!(SymplecticComposition::all(n).len(), 1 << n);
        }
    }

    #[test]
    fn mirabolic_and_breaks() {
        assert!(Composition::new(vec![3, 1]).unwrap().is_mirabolic());
        assert!(!Composition::new(vec![2, 2]).unwrap().is_mirabolic());
        assert_eq!(Composition::new(vec![2, 1, 3]).unwrap().break_points(), vec![2, 3]);
    }
}
