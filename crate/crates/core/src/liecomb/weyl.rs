use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::group::{Family, GroupDatum, Orientation, ParabolicSpec};
use super::roots::{parabolic_root_set, positive_roots, simple_roots, Root};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// A Weyl group element as a signed permutation: `w(e_i) = ±e_j`.
///
/// Entry `i` of `images` is `±(j + 1)`. Type A elements carry no signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    family: Family,
    images: Vec<i32>,
}

impl WeylElement {
    pub fn identity(group: GroupDatum) -> Self {
        WeylElement {
            family: group.family,
            images: (1..=group.n as i32).collect(),
        }
    }

    pub fn from_images(family: Family, images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let j = im.unsigned_abs() as usize;
            if j == 0 || j > n || seen[j - 1] {
                return Err(Error::invalid(format!("{images:?} is not a signed permutation")));
            }
            seen[j - 1] = true;
            if im < 0 && family == Family::GeneralLinear {
                return Err(Error::invalid("type A Weyl elements carry no signs"));
            }
        }
        Ok(WeylElement { family, images })
    }

    /// A type A element from the one-line notation `w(1), ..., w(n)`.
    pub fn permutation(one_line: &[usize]) -> Result<Self> {
        Self::from_images(
            Family::GeneralLinear,
            one_line.iter().map(|&x| x as i32).collect(),
        )
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// One-line notation for type A elements.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        (self.family == Family::GeneralLinear)
            .then(|| self.images.iter().map(|&x| x as usize).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let images = other
            .images
            .iter()
            .map(|&im| {
                let j = im.unsigned_abs() as usize - 1;
                im.signum() * self.images[j]
            })
            .collect();
        WeylElement {
            family: self.family,
            images,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            let j = im.unsigned_abs() as usize - 1;
            images[j] = im.signum() * (i as i32 + 1);
        }
        WeylElement {
            family: self.family,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| im == i as i32 + 1)
    }

    pub fn act_on_root(&self, root: &Root) -> Root {
        let mut v = vec![0; root.0.len()];
        for (i, &c) in root.0.iter().enumerate() {
            if c != 0 {
                let im = self.images[i];
                v[im.unsigned_abs() as usize - 1] += c * im.signum();
            }
        }
        Root(v)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let group = GroupDatum {
            family: self.family,
            n: self.images.len(),
        };
        positive_roots(group)
            .iter()
            .filter(|r| !self.act_on_root(r).is_positive())
            .count()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, im) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{im}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The simple reflection for simple root `i` (0-based, diagram order).
pub fn simple_reflection(group: GroupDatum, i: usize) -> WeylElement {
    let mut w = WeylElement::identity(group);
    if i + 1 < group.n {
        w.images.swap(i, i + 1);
    } else {
        // Only type C has a simple root at index n-1: the long root 2e_n.
        w.images[i] = -w.images[i];
    }
    w
}

/// Every element of the Weyl group, in lexicographic order of images.
pub fn weyl_elements(group: GroupDatum) -> Vec<WeylElement> {
    fn perms(n: usize) -> Vec<Vec<i32>> {
        fn rec(cur: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<Vec<i32>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for j in 0..used.len() {
                if !used[j] {
                    used[j] = true;
                    cur.push(j as i32 + 1);
                    rec(cur, used, out);
                    cur.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
    let n = group.n;
    let mut out = Vec::new();
    for p in perms(n) {
        match group.family {
            Family::GeneralLinear => out.push(WeylElement {
                family: group.family,
                images: p,
            }),
            Family::Symplectic => {
                for mask in 0..(1u32 << n) {
                    let images = p
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    out.push(WeylElement {
                        family: group.family,
                        images,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Simple reflections generating the Weyl group of the Levi factor of a standard parabolic.
pub fn levi_generators(p: &ParabolicSpec) -> Vec<WeylElement> {
    let roots = parabolic_root_set(p);
    simple_roots(p.group())
        .iter()
        .enumerate()
        .filter(|(_, a)| roots.contains(a) && roots.contains(&a.negated()))
        .map(|(i, _)| simple_reflection(p.group(), i))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCosets {
    pub count: usize,
    /// The unique minimal-length element of each double coset, sorted by length then images.
    pub representatives: Vec<WeylElement>,
}

/// `W_P \ W / W_{P2}` with one minimal-length representative per double coset.
pub fn bruhat_double_cosets(p: &ParabolicSpec, p2: &ParabolicSpec) -> Result<DoubleCosets> {
    if p.group() != p2.group() {
        return Err(Error::Mismatch(format!("{} vs {}", p.group(), p2.group())));
    }
    if p.orientation() != Orientation::Standard || p2.orientation() != Orientation::Standard {
        return Err(Error::invalid("double cosets are computed for standard parabolics"));
    }
    let elements = weyl_elements(p.group());
    let index: HashMap<&WeylElement, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let left = levi_generators(p);
    let right = levi_generators(p2);
    let mut uf = UnionFind::new(elements.len());
    for (i, w) in elements.iter().enumerate() {
        for s in &left {
            uf.union(i, index[&s.compose(w)]);
        }
        for s in &right {
            uf.union(i, index[&w.compose(s)]);
        }
    }
    let lengths: Vec<usize> = elements.iter().map(WeylElement::length).collect();
    let mut best: HashMap<usize, (usize, usize, bool)> = HashMap::new();
    for (i, &len) in lengths.iter().enumerate() {
        let root = uf.find(i);
        best.entry(root)
            .and_modify(|(bi, bl, tie)| {
                if len < *bl {
                    *bi = i;
                    *bl = len;
                    *tie = false;
                } else if len == *bl {
                    *tie = true;
                }
            })
            .or_insert((i, len, false));
    }
    let mut reps: Vec<(usize, WeylElement)> = Vec::with_capacity(best.len());
    for (bi, bl, tie) in best.into_values() {
        assert!(!tie, "minimal double coset representative is not unique");
        reps.push((bl, elements[bi].clone()));
    }
    reps.sort();
    Ok(DoubleCosets {
        count: reps.len(),
        representatives: reps.into_iter().map(|(_, w)| w).collect(),
    })
}

/// A permutation of the simple roots, given in diagram order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAction(pub Vec<usize>);

impl DiagramAction {
    pub fn identity(group: GroupDatum) -> Self {
        DiagramAction((0..group.rank()).collect())
    }

    /// The flip `α_i ↔ α_{n-i}` of the type A diagram.
    pub fn flip(group: GroupDatum) -> Self {
        let r = group.rank();
        DiagramAction((0..r).rev().collect())
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Checks that `action` preserves the Cartan matrix of `group`.
fn validate_diagram_action(group: GroupDatum, action: &DiagramAction) -> Result<()> {
    let simple = simple_roots(group);
    let r = simple.len();
    if action.0.len() != r {
        return Err(Error::invalid(format!(
            "diagram action has {} entries, {group} has {r} simple roots",
            action.0.len()
        )));
    }
    let mut seen = vec![false; r];
    for &j in &action.0 {
        if j >= r || seen[j] {
            return Err(Error::invalid("diagram action is not a permutation"));
        }
        seen[j] = true;
    }
    let pairing = |a: &Root, b: &Root| -> i32 {
        let ab: i32 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
        let bb: i32 = b.0.iter().map(|x| x * x).sum();
        2 * ab / bb
    };
    for i in 0..r {
        for j in 0..r {
            let before = pairing(&simple[i], &simple[j]);
            let after = pairing(&simple[action.0[i]], &simple[action.0[j]]);
            if before != after {
                return Err(Error::invalid("diagram action does not preserve the Cartan matrix"));
            }
        }
    }
    Ok(())
}

/// `{ v ∈ W : θ(v) = v⁻¹ }` where θ acts on `W` through a diagram automorphism.
pub fn twisted_involutions(group: GroupDatum, action: &DiagramAction) -> Result<Vec<WeylElement>> {
    group.validate()?;
    validate_diagram_action(group, action)?;
    let twist: Box<dyn Fn(&WeylElement) -> WeylElement> = if action.is_identity() {
        Box::new(|w: &WeylElement| w.clone())
    } else {
        // The only nontrivial automorphism here is the type A flip, which acts
        // on S_n as conjugation by the longest element.
        let w0 = WeylElement::permutation(&(1..=group.n).rev().collect::<Vec<_>>())?;
        Box::new(move |w: &WeylElement| w0.compose(w).compose(&w0))
    };
    Ok(weyl_elements(group)
        .into_iter()
        .filter(|v| twist(v) == v.inverse())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecomb::composition::{Composition, SymplecticComposition};

    fn gl(parts: &[usize]) -> ParabolicSpec {
        ParabolicSpec::gl(Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_elements(GroupDatum::gl(4)).len(), 24);
        assert_eq!(weyl_elements(GroupDatum::sp(2)).len(), 8);
        assert_eq!(weyl_elements(GroupDatum::sp(3)).len(), 48);
    }

    #[test]
    fn longest_element_length() {
        let w0 = WeylElement::permutation(&[3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 3);
        let minus_one = WeylElement::from_images(Family::Symplectic, vec![-1, -2]).unwrap();
        assert_eq!(minus_one.length(), 4);
        let s = simple_reflection(GroupDatum::sp(2), 1);
        assert_eq!(s.length(), 1);
    }

    #[test]
    fn inverse_and_compose() {
        for w in weyl_elements(GroupDatum::sp(2)) {
            assert!(w.compose(&w.inverse()).is_identity());
        }
    }

    #[test]
    fn gl2_borel_double_cosets() {
        let b = gl(&[1, 1]);
        let dc = bruhat_double_cosets(&b, &b).unwrap();
        assert_eq!(dc.count, 2);
        assert!(dc.representatives[0].is_identity());
        assert_eq!(dc.representatives[1].as_permutation(), Some(vec![2, 1]));
    }

    #[test]
    fn gl3_mixed_maximal() {
        let dc = bruhat_double_cosets(&gl(&[2, 1]), &gl(&[1, 2])).unwrap();
        assert_eq!(dc.count, 2);
    }

    #[test]
    fn sp4_siegel_double_cosets() {
        let s = ParabolicSpec::sp(SymplecticComposition::siegel(2));
        assert_eq!(bruhat_double_cosets(&s, &s).unwrap().count, 3);
    }

    #[test]
    fn opposite_input_rejected() {
        let b = gl(&[1, 1]);
        assert!(bruhat_double_cosets(&b, &b.opposite()).is_err());
    }

    #[test]
    fn twisted_involutions_small() {
        let g2 = GroupDatum::gl(2);
        assert_eq!(twisted_involutions(g2, &DiagramAction::identity(g2)).unwrap().len(), 2);
        let g3 = GroupDatum::gl(3);
        assert_eq!(twisted_involutions(g3, &DiagramAction::identity(g3)).unwrap().len(), 4);
        assert_eq!(twisted_involutions(g3, &DiagramAction::flip(g3)).unwrap().len(), 4);
        // Type C has no diagram symmetry.
        let c3 = GroupDatum::sp(3);
        assert!(twisted_involutions(c3, &DiagramAction(vec![2, 1, 0])).is_err());
        assert!(twisted_involutions(g3, &DiagramAction(vec![0, 0])).is_err());
    }
}
