use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liecomb::Composition;

/// Rows of the classification of finite type `G/B × K/Q` for
/// `K = GL_p × GL_q ⊂ GL_{p+q}`, `q >= p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AiiiCase {
    /// `Q = K`.
    I,
    /// `Q_1 = GL_p`, `Q_2` mirabolic.
    Ii,
    /// `p = 1`.
    Iii,
    /// `p = 2`, `Q_1 = GL_2`, `Q_2` of length at most two.
    Iv,
    /// `Q_1` mirabolic, `Q_2 = GL_q`.
    V,
}

impl fmt::Display for AiiiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AiiiCase::I => "i",
            AiiiCase::Ii => "ii",
            AiiiCase::Iii => "iii",
            AiiiCase::Iv => "iv",
            AiiiCase::V => "v",
        })
    }
}

impl Serialize for AiiiCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AiiiBorelVerdict {
    /// The reported case, or `None` for infinitely many orbits.
    pub case: Option<AiiiCase>,
    /// Every case whose conditions hold.
    pub all_cases: Vec<AiiiCase>,
}

impl AiiiBorelVerdict {
    pub fn is_finite(&self) -> bool {
        self.case.is_some()
    }

    pub fn label(&self) -> String {
        match self.case {
            Some(c) => c.to_string(),
            None => "Infinite".to_string(),
        }
    }
}

/// Looks up `(Q_1, Q_2)` in the five-case table. Requires `q >= p >= 1`.
pub fn classify_aiii_borel(
    p: usize,
    q: usize,
    q1: &Composition,
    q2: &Composition,
) -> Result<AiiiBorelVerdict> {
    if p == 0 || q < p {
        return Err(Error::invalid(format!(
            "the table is stated for q >= p >= 1, got p = {p}, q = {q}; swap the factors"
        )));
    }
    if q1.size() != p || q2.size() != q {
        return Err(Error::Mismatch(format!(
            "Q1 = ({q1}) and Q2 = ({q2}) do not fit GL_{p} × GL_{q}"
        )));
    }
    let whole1 = q1.len() == 1;
    let whole2 = q2.len() == 1;
    let mut all = Vec::new();
    if whole1 && whole2 {
        all.push(AiiiCase::I);
    }
    if whole1 && q2.is_mirabolic() {
        all.push(AiiiCase::Ii);
    }
    if p == 1 {
        all.push(AiiiCase::Iii);
    }
    if p == 2 && whole1 && q2.len() <= 2 {
        all.push(AiiiCase::Iv);
    }
    if q1.is_mirabolic() && whole2 {
        all.push(AiiiCase::V);
    }
    const PRIORITY: [AiiiCase; 5] = [AiiiCase::Iii, AiiiCase::Iv, AiiiCase::I, AiiiCase::Ii, AiiiCase::V];
    let case = PRIORITY.into_iter().find(|c| all.contains(c));
    Ok(AiiiBorelVerdict { case, all_cases: all })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn table_examples() {
        let v = classify_aiii_borel(1, 5, &a("1"), &a("1,1,1,1,1")).unwrap();
        assert_eq!(v.case, Some(AiiiCase::Iii));
        let v = classify_aiii_borel(2, 3, &a("2"), &a("2,1")).unwrap();
        assert_eq!(v.case, Some(AiiiCase::Iv));
        assert!(v.all_cases.contains(&AiiiCase::Ii));
        let v = classify_aiii_borel(3, 3, &a("3"), &a("1,1,1")).unwrap();
        assert_eq!(v.case, None);
        assert_eq!(v.label(), "Infinite");
        let v = classify_aiii_borel(3, 4, &a("1,2"), &a("4")).unwrap();
        assert_eq!(v.case, Some(AiiiCase::V));
        let v = classify_aiii_borel(2, 2, &a("1,1"), &a("1,1")).unwrap();
        assert!(!v.is_finite());
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(classify_aiii_borel(3, 2, &a("3"), &a("2")).is_err());
        assert!(classify_aiii_borel(2, 3, &a("3"), &a("2")).is_err());
    }
}
