use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::field::Field;
use super::linalg::{split_symmetric_form, symplectic_form, Matrix};
use crate::error::{Error, Result};
use crate::liecomb::{Family, GroupDatum, PairKind, SymmetricPairSpec};

/// A matrix group over `F_q` in the fixed realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixGroup {
    /// `GL_n` or `Sp_2n` with the antidiagonal form.
    Ambient(GroupDatum),
    /// `SO_n` of the split antidiagonal symmetric form.
    SpecialOrthogonal(usize),
    /// The fixed points `K` of a symmetric pair.
    K(SymmetricPairSpec),
}

impl fmt::Display for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixGroup::Ambient(g) => write!(f, "{g}"),
            MatrixGroup::SpecialOrthogonal(n) => write!(f, "SO_{n}"),
            MatrixGroup::K(pair) => write!(f, "K({pair})"),
        }
    }
}

/// `GL_n(F_q)`: adjacent elementary matrices and `diag(ω, 1, ..., 1)`.
pub fn gl_generators(n: usize, f: Field) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        gens.push(Matrix::elementary(n, i, i + 1, 1));
        gens.push(Matrix::elementary(n, i + 1, i, 1));
    }
    if f.q() > 2 && n > 0 {
        let mut d = vec![1; n];
        d[0] = f.primitive_root();
        gens.push(Matrix::diagonal(&d));
    }
    gens
}

/// The symplectic transvection `x ↦ x + c ω(x, v) v`.
pub fn transvection(form: &Matrix, v: &[u8], c: u8, f: Field) -> Matrix {
    let d = form.dim();
    let mut m = Matrix::identity(d);
    for j in 0..d {
        let mut e = vec![0u8; d];
        e[j] = 1;
        let s = f.mul(c, form.pairing(&e, v, f));
        for (i, &vi) in v.iter().enumerate() {
            m.set(i, j, f.add(m.get(i, j), f.mul(s, vi)));
        }
    }
    m
}

/// `Sp_2n(F_q)`: the Siegel Levi together with one long root element in
/// each of the two opposite Siegel unipotent radicals.
pub fn sp_generators(rank: usize, f: Field) -> Vec<Matrix> {
    let d = 2 * rank;
    let mut gens: Vec<Matrix> = gl_generators(rank, f).iter().map(|a| levi_embedding(a, d, f)).collect();
    if rank == 0 {
        return gens;
    }
    let form = symplectic_form(rank, f);
    for k in [rank - 1, rank] {
        let mut v = vec![0u8; d];
        v[k] = 1;
        gens.push(transvection(&form, &v, 1, f));
    }
    gens
}

/// `SO_n(F_q)` of the antidiagonal symmetric form for odd `q`: the Levi
/// `GL_m` of a maximal isotropic flag and one Eichler root element in each of
/// the two opposite unipotent radicals (a short root when `n` is odd).
pub fn so_generators(n: usize, f: Field) -> Result<Vec<Matrix>> {
    if f.q() == 2 {
        return Err(Error::Unsupported("orthogonal groups need odd q".into()));
    }
    let m = n / 2;
    let mut gens: Vec<Matrix> = gl_generators(m, f).iter().map(|a| levi_embedding(a, n, f)).collect();
    if n >= 3 {
        let form = split_symmetric_form(n);
        let (up, down) = if n % 2 == 1 { ((0, m), (n - 1, m)) } else { ((0, 1), (n - 1, n - 2)) };
        for (u, v) in [up, down] {
            gens.push(eichler(&form, u, v, f));
        }
    }
    Ok(gens)
}

/// `diag(A, I, J A^{-T} J)` in a group preserving an antidiagonal form on `F_q^n`.
fn levi_embedding(a: &Matrix, n: usize, f: Field) -> Matrix {
    let m = a.dim();
    let inv_t = a.inverse(f).expect("Levi element must be invertible").transpose();
    let mut g = Matrix::identity(n);
    for i in 0..m {
        for j in 0..m {
            g.set(i, j, a.get(i, j));
            g.set(n - m + i, n - m + j, inv_t.get(m - 1 - i, m - 1 - j));
        }
    }
    g
}

/// The Eichler transformation `x ↦ x + B(x,u)v - B(x,v)u - Q(v)B(x,u)u`
/// for the isotropic coordinate vector `u = e_a` and `v = e_b ⟂ u`.
fn eichler(form: &Matrix, a: usize, b: usize, f: Field) -> Matrix {
    let n = form.dim();
    let unit = |k: usize| {
        let mut e = vec![0u8; n];
        e[k] = 1;
        e
    };
    let (u, v) = (unit(a), unit(b));
    let qv = f.mul(form.pairing(&v, &v, f), f.inv(2 % f.q()));
    let mut g = Matrix::identity(n);
    for j in 0..n {
        let e = unit(j);
        let bu = form.pairing(&e, &u, f);
        let bv = form.pairing(&e, &v, f);
        for i in 0..n {
            let mut x = g.get(i, j);
            x = f.add(x, f.mul(bu, v[i]));
            x = f.sub(x, f.mul(bv, u[i]));
            x = f.sub(x, f.mul(f.mul(qv, bu), u[i]));
            g.set(i, j, x);
        }
    }
    g
}

pub fn ambient_generators(group: GroupDatum, f: Field) -> Vec<Matrix> {
    match group.family {
        Family::GeneralLinear => gl_generators(group.n, f),
        Family::Symplectic => sp_generators(group.n, f),
    }
}

/// Coordinates of the outer (`Sp_2p`) and inner (`Sp_2q`) factors for CII.
pub fn cii_coordinates(p: usize, q: usize) -> (Vec<usize>, Vec<usize>) {
    let d = 2 * (p + q);
    let outer = (0..p).chain(d - p..d).collect();
    let inner = (p..d - p).collect();
    (outer, inner)
}

/// Generators of `K(F_q)` as matrices in `G(F_q)`.
pub fn k_generators(pair: &SymmetricPairSpec, f: Field) -> Result<Vec<Matrix>> {
    let n = pair.group().n;
    Ok(match pair.kind() {
        PairKind::AIII { p, q } => {
            let mut gens: Vec<Matrix> = gl_generators(p, f)
                .iter()
                .map(|g| g.embed(&(0..p).collect::<Vec<_>>(), n))
                .collect();
            gens.extend(
                gl_generators(q, f)
                    .iter()
                    .map(|g| g.embed(&(p..n).collect::<Vec<_>>(), n)),
            );
            gens
        }
        PairKind::AI => so_generators(n, f)?,
        PairKind::AII => sp_generators(n / 2, f),
        PairKind::CI => gl_generators(n, f).iter().map(|a| levi_embedding(a, 2 * n, f)).collect(),
        PairKind::CII { p, q } => {
            let (outer, inner) = cii_coordinates(p, q);
            let mut gens: Vec<Matrix> =
                sp_generators(p, f).iter().map(|g| g.embed(&outer, 2 * n)).collect();
            gens.extend(sp_generators(q, f).iter().map(|g| g.embed(&inner, 2 * n)));
            gens
        }
    })
}

fn pow(q: u128, e: usize) -> u128 {
    q.pow(e as u32)
}

pub fn gl_order(n: usize, q: u64) -> u128 {
    let q = u128::from(q);
    (0..n).map(|i| pow(q, n) - pow(q, i)).product()
}

pub fn sp_order(rank: usize, q: u64) -> u128 {
    let q = u128::from(q);
    pow(q, rank * rank) * (1..=rank).map(|i| pow(q, 2 * i) - 1).product::<u128>()
}

/// Order of `SO_n` of a split form.
pub fn so_order(n: usize, q: u64) -> u128 {
    let qq = u128::from(q);
    let m = n / 2;
    if n % 2 == 1 {
        pow(qq, m * m) * (1..=m).map(|i| pow(qq, 2 * i) - 1).product::<u128>()
    } else if m == 0 {
        1
    } else {
        pow(qq, m * (m - 1)) * (pow(qq, m) - 1) * (1..m).map(|i| pow(qq, 2 * i) - 1).product::<u128>()
    }
}

pub fn group_order(group: MatrixGroup, q: u64) -> u128 {
    match group {
        MatrixGroup::Ambient(g) => match g.family {
            Family::GeneralLinear => gl_order(g.n, q),
            Family::Symplectic => sp_order(g.n, q),
        },
        MatrixGroup::SpecialOrthogonal(n) => so_order(n, q),
        MatrixGroup::K(pair) => {
            let n = pair.group().n;
            match pair.kind() {
                PairKind::AIII { p, q: qq } => gl_order(p, q) * gl_order(qq, q),
                PairKind::AI => so_order(n, q),
                PairKind::AII => sp_order(n / 2, q),
                PairKind::CI => gl_order(n, q),
                PairKind::CII { p, q: qq } => sp_order(p, q) * sp_order(qq, q),
            }
        }
    }
}

pub fn generators(group: MatrixGroup, f: Field) -> Result<Vec<Matrix>> {
    match group {
        MatrixGroup::Ambient(g) => Ok(ambient_generators(g, f)),
        MatrixGroup::SpecialOrthogonal(n) => so_generators(n, f),
        MatrixGroup::K(pair) => k_generators(&pair, f),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupPoints {
    pub q: u64,
    /// Closed-form order of the group.
    pub order: u128,
    #[serde(skip)]
    pub generators: Vec<Matrix>,
    /// All elements, when the order fits the budget.
    #[serde(skip)]
    pub elements: Option<Vec<Matrix>>,
    /// Whether the closure of the generators has the closed-form order.
    pub verified: Option<bool>,
}

/// Generators of `group(F_q)` and, within `budget`, every element obtained
/// as the closure of the generators.
pub fn group_points(group: MatrixGroup, q: u64, budget: u128) -> Result<GroupPoints> {
    let f = Field::new(q)?;
    let gens = generators(group, f)?;
    let order = group_order(group, q);
    let d = match group {
        MatrixGroup::Ambient(g) => g.dim(),
        MatrixGroup::SpecialOrthogonal(n) => n,
        MatrixGroup::K(pair) => pair.group().dim(),
    };
    if order > budget {
        return Ok(GroupPoints {
            q,
            order,
            generators: gens,
            elements: None,
            verified: None,
        });
    }
    let elements = closure(d, &gens, f, budget)?;
    Ok(GroupPoints {
        q,
        order,
        verified: Some(elements.len() as u128 == order),
        generators: gens,
        elements: Some(elements),
    })
}

/// The subgroup generated by `gens`, sorted.
pub fn closure(d: usize, gens: &[Matrix], f: Field, cap: u128) -> Result<Vec<Matrix>> {
    let id = Matrix::identity(d);
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x, f);
            if seen.insert(y.clone()) {
                if seen.len() as u128 > cap {
                    return Err(Error::BudgetExceeded {
                        needed: seen.len() as u128,
                        budget: cap,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Matrix> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}
