use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::group::{Family, GroupDatum, Orientation, ParabolicSpec};
use crate::error::{Error, Result};

/// A root written in the coordinates `e_1, ..., e_n` of the diagonal torus.
///
/// Type A roots are `e_i - e_j`; type C roots are `±e_i ± e_j` and `±2e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    /// `e_i - e_j` in `GL_n`, with 1-based indices.
    pub fn type_a(n: usize, i: usize, j: usize) -> Root {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Root(v)
    }

    /// The pair `(i, j)` (1-based) of a type A root `e_i - e_j`.
    pub fn as_type_a_pair(&self) -> Option<(usize, usize)> {
        let i = self.0.iter().position(|&c| c == 1)?;
        let j = self.0.iter().position(|&c| c == -1)?;
        let support = self.0.iter().filter(|&&c| c != 0).count();
        (support == 2).then_some((i + 1, j + 1))
    }

    /// Positive for the upper triangular Borel: the first nonzero coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Restricts to a subset of coordinates if the root is supported there.
    pub fn restrict(&self, coords: &[usize]) -> Option<Root> {
        let inside = self
            .0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || coords.contains(&i));
        inside.then(|| Root(coords.iter().map(|&i| self.0[i]).collect()))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub type RootSet = BTreeSet<Root>;

/// Torus weight of the coordinate `k` (0-based) of the natural representation.
///
/// For `Sp_2n` the form pairs coordinates `k` and `2n - 1 - k`, so the second
/// half carries the negated weights in reverse order.
pub(crate) fn coordinate_weight(group: GroupDatum, k: usize) -> (usize, i32) {
    match group.family {
        Family::GeneralLinear => (k, 1),
        Family::Symplectic => {
            if k < group.n {
                (k, 1)
            } else {
                (2 * group.n - 1 - k, -1)
            }
        }
    }
}

/// The root of the matrix entry `(k, l)`, `k != l`.
pub(crate) fn root_of_entry(group: GroupDatum, k: usize, l: usize) -> Root {
    let mut v = vec![0; group.n];
    let (a, sa) = coordinate_weight(group, k);
    let (b, sb) = coordinate_weight(group, l);
    v[a] += sa;
    v[b] -= sb;
    Root(v)
}

pub fn full_root_system(group: GroupDatum) -> RootSet {
    let d = group.dim();
    let mut out = RootSet::new();
    for k in 0..d {
        for l in 0..d {
            if k != l {
                out.insert(root_of_entry(group, k, l));
            }
        }
    }
    out
}

pub fn positive_roots(group: GroupDatum) -> RootSet {
    full_root_system(group)
        .into_iter()
        .filter(Root::is_positive)
        .collect()
}

/// Simple roots `e_i - e_{i+1}` (and `2e_n` for type C), in diagram order.
pub fn simple_roots(group: GroupDatum) -> Vec<Root> {
    let n = group.n;
    let mut out: Vec<Root> = (1..n).map(|i| Root::type_a(n, i, i + 1)).collect();
    if group.family == Family::Symplectic {
        let mut v = vec![0; n];
        v[n - 1] = 2;
        out.push(Root(v));
    }
    out
}

/// Roots whose root spaces lie in the Lie algebra of `p`.
pub fn parabolic_root_set(p: &ParabolicSpec) -> RootSet {
    let group = p.group();
    let blocks = p.block_of();
    let d = group.dim();
    let mut out = RootSet::new();
    for k in 0..d {
        for l in 0..d {
            if k == l {
                continue;
            }
            let inside = match p.orientation() {
                Orientation::Standard => blocks[k] <= blocks[l],
                Orientation::Opposite => blocks[k] >= blocks[l],
            };
            if inside {
                out.insert(root_of_entry(group, k, l));
            }
        }
    }
    out
}

/// Whether `Lie(p2) + Lie(p3) = Lie(G)`, i.e. `P2 P3` is open in `G`.
pub fn is_product_open(p2: &ParabolicSpec, p3: &ParabolicSpec) -> Result<bool> {
    if p2.group() != p3.group() {
        return Err(Error::Mismatch(format!(
            "{} and {} live in different groups",
            p2.group(),
            p3.group()
        )));
    }
    let mut union = parabolic_root_set(p2);
    union.extend(parabolic_root_set(p3));
    Ok(union == full_root_system(p2.group()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecomb::composition::{Composition, SymplecticComposition};

    fn gl(parts: &[usize]) -> ParabolicSpec {
        ParabolicSpec::gl(Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn root_system_sizes() {
        for n in 1..=5 {
            assert_eq!(full_root_system(GroupDatum::gl(n)).len(), n * (n - 1));
            assert_eq!(full_root_system(GroupDatum::sp(n)).len(), 2 * n * n);
            assert_eq!(positive_roots(GroupDatum::sp(n)).len(), n * n);
        }
    }

    #[test]
    fn borel_and_whole_of_gl2() {
        let b = parabolic_root_set(&gl(&[1, 1]));
        assert_eq!(b, RootSet::from([Root::type_a(2, 1, 2)]));
        let g = parabolic_root_set(&gl(&[2]));
        assert_eq!(g, RootSet::from([Root::type_a(2, 1, 2), Root::type_a(2, 2, 1)]));
        let g_opp = parabolic_root_set(&gl(&[2]).opposite());
        assert_eq!(g, g_opp);
    }

    #[test]
    fn gl3_shape_2_1() {
        let got = parabolic_root_set(&gl(&[2, 1]));
        let want: RootSet = [(1, 2), (2, 1), (1, 3), (2, 3)]
            .into_iter()
            .map(|(i, j)| Root::type_a(3, i, j))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn open_products() {
        let b = gl(&[1, 1, 1]);
        assert!(!is_product_open(&b, &b).unwrap());
        assert!(is_product_open(&b, &b.opposite()).unwrap());
        // The union of the (2,1) and (1,2) root sets misses e_3 - e_1.
        assert!(!is_product_open(&gl(&[2, 1]), &gl(&[1, 2])).unwrap());
        let union: RootSet = parabolic_root_set(&gl(&[2, 1]))
            .union(&parabolic_root_set(&gl(&[1, 2])))
            .cloned()
            .collect();
        assert!(union.contains(&Root::type_a(3, 2, 1)));
        assert!(!union.contains(&Root::type_a(3, 3, 1)));
        let mixed = is_product_open(&gl(&[2]), &ParabolicSpec::borel(GroupDatum::sp(1)));
        assert!(mixed.is_err());
    }

    #[test]
    fn type_c_borel_is_positive_system() {
        for n in 1..=3 {
            let g = GroupDatum::sp(n);
            let b = ParabolicSpec::sp(SymplecticComposition::borel(n));
            assert_eq!(parabolic_root_set(&b), positive_roots(g));
        }
    }

    #[test]
    fn siegel_levi_is_gl_n() {
        let p = ParabolicSpec::sp(SymplecticComposition::siegel(2));
        let roots = parabolic_root_set(&p);
        let levi: Vec<_> = roots.iter().filter(|r| roots.contains(&r.negated())).collect();
        // GL_2 Levi: e1-e2 and e2-e1.
        assert_eq!(levi.len(), 2);
        assert!(levi.iter().all(|r| r.as_type_a_pair().is_some()));
    }
}
