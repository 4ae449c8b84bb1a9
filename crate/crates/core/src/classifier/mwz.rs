use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liecomb::{Composition, Family, Shape, SymplecticComposition};

/// A row of the Magyar–Weyman–Zelevinsky lists of finite type triple flag varieties.
///
/// Numeric fields are the subscripts as displayed, e.g. `D { rank: 5 }` is `D_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MwzRow {
    S { q: usize, r: usize },
    D { rank: usize },
    E6,
    E7,
    E8,
    Ea { rank: usize },
    Eb { rank: usize },
    SpD { rank: usize },
    SpE6,
    SpE7,
    SpE8,
    SpEb { rank: usize },
    SpY { r: usize },
}

impl MwzRow {
    /// The generic row name, without the subscripts filled in.
    pub fn family_label(&self) -> &'static str {
        match self {
            MwzRow::S { .. } => "S_{q,r}",
            MwzRow::D { .. } => "D_{r+2}",
            MwzRow::E6 => "E_6",
            MwzRow::E7 => "E_7",
            MwzRow::E8 => "E_8",
            MwzRow::Ea { .. } => "E^(a)_{r+3}",
            MwzRow::Eb { .. } => "E^(b)_{r+3}",
            MwzRow::SpD { .. } => "SpD_{r+2}",
            MwzRow::SpE6 => "SpE_6",
            MwzRow::SpE7 => "SpE_7",
            MwzRow::SpE8 => "SpE_8",
            MwzRow::SpEb { .. } => "SpE^(b)_{r+3}",
            MwzRow::SpY { .. } => "SpY_{4,r}",
        }
    }

    pub fn family(&self) -> Family {
        match self {
            MwzRow::S { .. }
            | MwzRow::D { .. }
            | MwzRow::E6
            | MwzRow::E7
            | MwzRow::E8
            | MwzRow::Ea { .. }
            | MwzRow::Eb { .. } => Family::GeneralLinear,
            _ => Family::Symplectic,
        }
    }
}

impl fmt::Display for MwzRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MwzRow::S { q, r } => write!(f, "S_{{{q},{r}}}"),
            MwzRow::D { rank } => write!(f, "D_{rank}"),
            MwzRow::E6 => f.write_str("E_6"),
            MwzRow::E7 => f.write_str("E_7"),
            MwzRow::E8 => f.write_str("E_8"),
            MwzRow::Ea { rank } => write!(f, "E^(a)_{rank}"),
            MwzRow::Eb { rank } => write!(f, "E^(b)_{rank}"),
            MwzRow::SpD { rank } => write!(f, "SpD_{rank}"),
            MwzRow::SpE6 => f.write_str("SpE_6"),
            MwzRow::SpE7 => f.write_str("SpE_7"),
            MwzRow::SpE8 => f.write_str("SpE_8"),
            MwzRow::SpEb { rank } => write!(f, "SpE^(b)_{rank}"),
            MwzRow::SpY { r } => write!(f, "SpY_{{4,{r}}}"),
        }
    }
}

impl Serialize for MwzRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleFlagVerdict {
    pub family: Family,
    pub finite: bool,
    pub matched_rows: Vec<MwzRow>,
    /// Parts sorted within each flag, flags sorted by length then parts.
    pub normalized_triple: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn match_type_a(n: usize, t: [&[usize]; 3], notes: &mut BTreeSet<String>) -> BTreeSet<MwzRow> {
    let mut rows = BTreeSet::new();
    for perm in PERMUTATIONS {
        let (a, b, c) = (t[perm[0]], t[perm[1]], t[perm[2]]);
        if a.len() != 2 {
            continue;
        }
        let sa = sorted_desc(a);
        if n >= 2 && sa == [n - 1, 1] {
            let (q, r) = (b.len().min(c.len()), b.len().max(c.len()));
            rows.insert(MwzRow::S { q, r });
        }
        if b.len() == 2 {
            rows.insert(MwzRow::D { rank: c.len() + 2 });
        }
        if b.len() == 3 && c.len() >= 3 {
            match c.len() {
                3 => {
                    rows.insert(MwzRow::E6);
                }
                4 => {
                    rows.insert(MwzRow::E7);
                }
                5 => {
                    rows.insert(MwzRow::E8);
                }
                _ => {}
            }
            if n >= 4 && sa == [n - 2, 2] {
                rows.insert(MwzRow::Ea { rank: c.len() + 3 });
            }
            if b.contains(&1) {
                rows.insert(MwzRow::Eb { rank: c.len() + 3 });
                if b[2] != 1 {
                    notes.insert(
                        "E^(b) matched with the part 1 of the length-3 flag in a non-final position"
                            .to_string(),
                    );
                }
            }
        }
    }
    rows
}

fn match_type_c(n: usize, t: [&[usize]; 3]) -> BTreeSet<MwzRow> {
    let mut rows = BTreeSet::new();
    let siegel = [n, n];
    let line: Vec<usize> = if n >= 2 { vec![1, 2 * n - 2, 1] } else { Vec::new() };
    for perm in PERMUTATIONS {
        let (a, b, c) = (t[perm[0]], t[perm[1]], t[perm[2]]);
        if a == siegel {
            if b == siegel {
                rows.insert(MwzRow::SpD { rank: c.len() + 2 });
            }
            if b.len() == 3 {
                match c.len() {
                    3 => {
                        rows.insert(MwzRow::SpE6);
                    }
                    4 => {
                        rows.insert(MwzRow::SpE7);
                    }
                    5 => {
                        rows.insert(MwzRow::SpE8);
                    }
                    _ => {}
                }
                if b == line.as_slice() && c.len() >= 3 {
                    rows.insert(MwzRow::SpEb { rank: c.len() + 3 });
                }
            }
        }
        if !line.is_empty() && a == line.as_slice() && b == line.as_slice() && c.len() >= 3 {
            rows.insert(MwzRow::SpY { r: c.len() });
        }
    }
    rows
}

fn normalize(t: [&[usize]; 3], sort_parts: bool) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = t
        .iter()
        .map(|x| if sort_parts { sorted_desc(x) } else { x.to_vec() })
        .collect();
    v.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    v
}

fn classify_parts(family: Family, n: usize, t: [&[usize]; 3]) -> TripleFlagVerdict {
    let mut notes = BTreeSet::new();
    let rows = match family {
        Family::GeneralLinear => match_type_a(n, t, &mut notes),
        Family::Symplectic => match_type_c(n, t),
    };
    if !rows.iter().any(|r| matches!(r, MwzRow::Eb { .. })) {
        notes.clear();
    }
    TripleFlagVerdict {
        family,
        finite: !rows.is_empty(),
        matched_rows: rows.into_iter().collect(),
        normalized_triple: normalize(t, family == Family::GeneralLinear),
        notes: notes.into_iter().collect(),
    }
}

/// Finite type test for `GL_n/P_λ × GL_n/P_μ × GL_n/P_ν`.
pub fn mwz_classify_a(
    lambda: &Composition,
    mu: &Composition,
    nu: &Composition,
) -> Result<TripleFlagVerdict> {
    let n = lambda.size();
    for c in [lambda, mu, nu] {
        if c.size() != n {
            return Err(Error::Mismatch(format!(
                "compositions {lambda}, {mu}, {nu} have different sizes"
            )));
        }
        if !c.is_proper() {
            return Err(Error::invalid(format!(
                "composition {c} is not proper (the parabolic is the whole group)"
            )));
        }
    }
    Ok(classify_parts(
        Family::GeneralLinear,
        n,
        [lambda.parts(), mu.parts(), nu.parts()],
    ))
}

/// Finite type test for `Sp_2n/P_λ × Sp_2n/P_μ × Sp_2n/P_ν`.
pub fn mwz_classify_c(
    lambda: &SymplecticComposition,
    mu: &SymplecticComposition,
    nu: &SymplecticComposition,
) -> Result<TripleFlagVerdict> {
    let n = lambda.rank();
    for c in [lambda, mu, nu] {
        if c.rank() != n {
            return Err(Error::Mismatch(format!(
                "symplectic compositions {lambda}, {mu}, {nu} have different sizes"
            )));
        }
        if !c.is_proper() {
            return Err(Error::invalid(format!(
                "symplectic composition {c} is not proper (the parabolic is the whole group)"
            )));
        }
    }
    let (a, b, c) = (lambda.full(), mu.full(), nu.full());
    Ok(classify_parts(Family::Symplectic, n, [&a, &b, &c]))
}

/// Outcome of testing a triple in which some factor may be the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleOutcome {
    /// Some parabolic is the whole group, so the triple is a double flag
    /// variety with finitely many Bruhat cells.
    Degenerate,
    Table(TripleFlagVerdict),
}

impl TripleOutcome {
    pub fn is_finite(&self) -> bool {
        match self {
            TripleOutcome::Degenerate => true,
            TripleOutcome::Table(v) => v.finite,
        }
    }

    /// A short description of the matched row, if finite.
    pub fn row_label(&self) -> Option<String> {
        match self {
            TripleOutcome::Degenerate => Some("Bruhat (a factor is the whole group)".to_string()),
            TripleOutcome::Table(v) => v.matched_rows.first().map(ToString::to_string),
        }
    }
}

/// Classifies a triple of shapes of one group, allowing improper factors.
pub fn triple_outcome(shapes: [&Shape; 3]) -> Result<TripleOutcome> {
    if shapes.iter().any(|s| !s.is_proper()) {
        return Ok(TripleOutcome::Degenerate);
    }
    match shapes {
        [Shape::A(a), Shape::A(b), Shape::A(c)] => Ok(TripleOutcome::Table(mwz_classify_a(a, b, c)?)),
        [Shape::C(a), Shape::C(b), Shape::C(c)] => Ok(TripleOutcome::Table(mwz_classify_c(a, b, c)?)),
        _ => Err(Error::Mismatch("triple mixes type A and type C shapes".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> SymplecticComposition {
        s.parse().unwrap()
    }

    #[test]
    fn type_a_examples() {
        let v = mwz_classify_a(&a("3,1"), &a("1,1,1,1"), &a("1,1,1,1")).unwrap();
        assert!(v.finite);
        assert!(v.matched_rows.contains(&MwzRow::S { q: 4, r: 4 }));
        let v = mwz_classify_a(&a("2,2"), &a("2,2"), &a("2,2")).unwrap();
        assert!(v.matched_rows.contains(&MwzRow::D { rank: 4 }));
        let v = mwz_classify_a(&a("1,1,1"), &a("1,1,1"), &a("1,1,1")).unwrap();
        assert!(!v.finite);
        assert!(v.matched_rows.is_empty());
        let v = mwz_classify_a(&a("2,2"), &a("2,1,1"), &a("2,1,1")).unwrap();
        assert!(v.matched_rows.contains(&MwzRow::E6));
        assert_eq!(v.normalized_triple, vec![vec![2, 2], vec![2, 1, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn type_a_rejections() {
        assert!(mwz_classify_a(&a("3"), &a("2,1"), &a("1,2")).is_err());
        assert!(mwz_classify_a(&a("2,1"), &a("2,2"), &a("1,2")).is_err());
    }

    #[test]
    fn type_c_examples() {
        let v = mwz_classify_c(&c("2,2"), &c("2,2"), &c("1,1,1,1")).unwrap();
        assert_eq!(v.matched_rows, vec![MwzRow::SpD { rank: 6 }]);
        let v = mwz_classify_c(&c("2,2"), &c("1,2,1"), &c("1,2,1")).unwrap();
        assert!(v.matched_rows.contains(&MwzRow::SpE6));
        let v = mwz_classify_c(&c("1,2,1"), &c("1,2,1"), &c("1,2,1")).unwrap();
        assert_eq!(v.matched_rows, vec![MwzRow::SpY { r: 3 }]);
        let v = mwz_classify_c(&c("3,3"), &c("3,3"), &c("2,2,2")).unwrap();
        assert!(v.matched_rows.contains(&MwzRow::SpD { rank: 5 }));
        let v = mwz_classify_c(&c("1,1,1,1"), &c("1,1,1,1"), &c("1,1,1,1")).unwrap();
        assert!(!v.finite);
        assert!(mwz_classify_c(&c("4"), &c("2,2"), &c("2,2")).is_err());
    }

    #[test]
    fn permutation_invariance() {
        let t = [a("3,1"), a("1,2,1"), a("2,1,1")];
        let base = mwz_classify_a(&t[0], &t[1], &t[2]).unwrap();
        for p in PERMUTATIONS {
            let v = mwz_classify_a(&t[p[0]], &t[p[1]], &t[p[2]]).unwrap();
            assert_eq!(v.matched_rows, base.matched_rows);
            assert_eq!(v.normalized_triple, base.normalized_triple);
        }
    }

    #[test]
    fn degenerate_triples() {
        let g = Shape::A(a("3"));
        let b = Shape::A(a("1,1,1"));
        assert_eq!(triple_outcome([&g, &b, &b]).unwrap(), TripleOutcome::Degenerate);
        let cs = Shape::C(c("1,1"));
        assert!(triple_outcome([&b, &b, &cs]).is_err());
    }
}
