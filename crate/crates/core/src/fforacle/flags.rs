use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use super::field::Field;
use super::groups::ambient_generators;
use super::linalg::{FlagPoint, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::liecomb::{Family, GroupDatum, Shape};

/// `[k]_q = 1 + q + ... + q^{k-1}`.
fn q_int(k: usize, q: u128) -> u128 {
    (0..k).map(|i| q.pow(i as u32)).sum()
}

fn q_factorial(k: usize, q: u128) -> u128 {
    (1..=k).map(|i| q_int(i, q)).product()
}

/// Number of `F_q`-points of `G/P` for a standard shape.
pub fn flag_count(group: GroupDatum, shape: &Shape, q: u64) -> Result<u128> {
    check_shape(group, shape)?;
    let q = u128::from(q);
    Ok(match shape {
        Shape::A(c) => {
            q_factorial(c.size(), q) / c.parts().iter().map(|&a| q_factorial(a, q)).product::<u128>()
        }
        Shape::C(s) => {
            let weyl_c = |n: usize| (1..=n).map(|i| q_int(2 * i, q)).product::<u128>();
            let levi: u128 = s.left().iter().map(|&a| q_factorial(a, q)).product();
            weyl_c(s.rank()) / (levi * weyl_c(s.middle().unwrap_or(0) / 2))
        }
    })
}

fn check_shape(group: GroupDatum, shape: &Shape) -> Result<()> {
    let ok = match (group.family, shape) {
        (Family::GeneralLinear, Shape::A(c)) => c.size() == group.n,
        (Family::Symplectic, Shape::C(s)) => s.rank() == group.n,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("shape ({shape}) does not belong to {group}")))
    }
}

/// Dimensions of the subspaces in a flag of the given standard shape: the
/// partial sums for `GL_n`, the isotropic dimensions for `Sp_2n`.
pub fn flag_dims(shape: &Shape) -> Vec<usize> {
    match shape {
        Shape::A(c) => {
            let mut acc = 0;
            let mut dims: Vec<usize> = c
                .parts()
                .iter()
                .map(|&a| {
                    acc += a;
                    acc
                })
                .collect();
            dims.pop();
            dims
        }
        Shape::C(s) => s.isotropic_dims(),
    }
}

/// The flag of initial coordinate spans with dimensions `dims`.
pub fn coordinate_flag(ambient: usize, dims: &[usize], f: Field) -> FlagPoint {
    let spaces = dims
        .iter()
        .map(|&k| Subspace::coordinate(ambient, &(0..k).collect::<Vec<_>>(), f))
        .collect();
    FlagPoint::new(spaces, f).expect("coordinate spans are nested")
}

/// An orbit of flags under a matrix group, indexed for lookup.
#[derive(Clone, Debug)]
pub struct FlagSpace {
    points: Vec<FlagPoint>,
    index: HashMap<FlagPoint, u32>,
}

impl FlagSpace {
    /// The orbit of `base` under the group generated by `gens`, by
    /// breadth-first search. Fails once more than `cap` points are found.
    pub fn orbit(base: FlagPoint, gens: &[Matrix], f: Field, cap: u128) -> Result<FlagSpace> {
        let mut points = vec![base.clone()];
        let mut index = HashMap::from([(base, 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let images: Vec<FlagPoint> = gens.iter().map(|g| points[i].image(g, f)).collect();
            for y in images {
                if index.contains_key(&y) {
                    continue;
                }
                if points.len() as u128 >= cap {
                    return Err(Error::BudgetExceeded {
                        needed: points.len() as u128 + 1,
                        budget: cap,
                    });
                }
                index.insert(y.clone(), points.len() as u32);
                queue.push_back(points.len());
                points.push(y);
            }
        }
        Ok(FlagSpace { points, index })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[FlagPoint] {
        &self.points
    }

    pub fn index_of(&self, x: &FlagPoint) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    /// The permutation of the points induced by `g`, which must preserve the space.
    pub fn permutation(&self, g: &Matrix, f: Field) -> Vec<u32> {
        self.points
            .par_iter()
            .map(|x| {
                *self
                    .index
                    .get(&x.image(g, f))
                    .expect("generator does not preserve the flag space")
            })
            .collect()
    }
}

/// `G/P(F_q)` for a standard shape, after checking the closed-form count
/// against `budget`.
pub fn flag_space(group: GroupDatum, shape: &Shape, f: Field, budget: u128) -> Result<FlagSpace> {
    let count = flag_count(group, shape, f.order())?;
    if count > budget {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget,
        });
    }
    let base = coordinate_flag(group.dim(), &flag_dims(shape), f);
    let space = FlagSpace::orbit(base, &ambient_generators(group, f), f, budget)?;
    assert_eq!(space.len() as u128, count, "flag enumeration disagrees with the closed form");
    Ok(space)
}

/// Every `F_q`-point of `G/P`, in canonical echelon form and without repeats.
pub fn enumerate_flags(group: GroupDatum, shape: &Shape, q: u64, budget: u128) -> Result<Vec<FlagPoint>> {
    let f = Field::new(q)?;
    let mut points = flag_space(group, shape, f, budget)?.points;
    points.sort();
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fforacle::linalg::symplectic_form;
    use crate::liecomb::{Composition, SymplecticComposition};

    fn a(s: &str) -> Shape {
        Shape::A(s.parse::<Composition>().unwrap())
    }

    fn c(s: &str) -> Shape {
        Shape::C(s.parse::<SymplecticComposition>().unwrap())
    }

    #[test]
    fn small_counts() {
        let n = |g, s: &Shape, q| enumerate_flags(g, s, q, 1 << 20).unwrap().len();
        assert_eq!(n(GroupDatum::gl(2), &a("1,1"), 2), 3);
        assert_eq!(n(GroupDatum::gl(3), &a("1,1,1"), 2), 21);
        assert_eq!(n(GroupDatum::sp(2), &c("1,2,1"), 2), 15);
        assert_eq!(n(GroupDatum::sp(2), &c("1,1,1,1"), 3), 160);
        assert_eq!(n(GroupDatum::sp(2), &c("2,2"), 3), 40);
        assert_eq!(n(GroupDatum::gl(4), &a("2,2"), 3), 130);
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for q in [2, 3] {
            for k in 1..=4 {
                for comp in Composition::all(k) {
                    let s = Shape::A(comp);
                    let pts = enumerate_flags(GroupDatum::gl(k), &s, q, 1 << 20).unwrap();
                    assert_eq!(pts.len() as u128, flag_count(GroupDatum::gl(k), &s, q).unwrap());
                }
            }
            for k in 1..=2 {
                for comp in SymplecticComposition::all(k) {
                    let s = Shape::C(comp);
                    let pts = enumerate_flags(GroupDatum::sp(k), &s, q, 1 << 20).unwrap();
                    let w = symplectic_form(k, Field::new(q).unwrap());
                    assert!(pts.iter().all(|x| x.is_isotropic(&w, Field::new(q).unwrap())));
                }
            }
        }
    }

    #[test]
    fn budget_reports_closed_form() {
        let err = enumerate_flags(GroupDatum::gl(4), &a("1,1,1,1"), 3, 100).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { needed: 2080, budget: 100 });
    }
}
