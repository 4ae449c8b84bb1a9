use std::fmt;

use super::field::Field;

/// A square matrix over a prime field, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    d: usize,
    a: Vec<u8>,
}

impl Matrix {
    pub fn identity(d: usize) -> Self {
        let mut a = vec![0; d * d];
        for i in 0..d {
            a[i * d + i] = 1;
        }
        Matrix { d, a }
    }

    pub fn from_rows(d: usize, a: Vec<u8>) -> Self {
        assert_eq!(a.len(), d * d, "matrix entries do not fill {d}x{d}");
        Matrix { d, a }
    }

    /// `1 + c·E_ij`.
    pub fn elementary(d: usize, i: usize, j: usize, c: u8) -> Self {
        let mut m = Self::identity(d);
        m.a[i * d + j] = c;
        m
    }

    pub fn diagonal(entries: &[u8]) -> Self {
        let d = entries.len();
        let mut m = Matrix { d, a: vec![0; d * d] };
        for (i, &e) in entries.iter().enumerate() {
            m.a[i * d + i] = e;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.a[i * self.d + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.a[i * self.d + j] = v;
    }

    pub fn entries(&self) -> &[u8] {
        &self.a
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.d)
    }

    pub fn mul(&self, other: &Matrix, f: Field) -> Matrix {
        assert_eq!(self.d, other.d);
        let d = self.d;
        let mut a = vec![0u8; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    a[i * d + j] = f.add(a[i * d + j], f.mul(x, other.a[k * d + j]));
                }
            }
        }
        Matrix { d, a }
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.d;
        let mut a = vec![0u8; d * d];
        for i in 0..d {
            for j in 0..d {
                a[j * d + i] = self.a[i * d + j];
            }
        }
        Matrix { d, a }
    }

    pub fn inverse(&self, f: Field) -> Option<Matrix> {
        let d = self.d;
        let mut m = self.a.clone();
        let mut inv = Self::identity(d).a;
        for col in 0..d {
            let pivot = (col..d).find(|&r| m[r * d + col] != 0)?;
            for j in 0..d {
                m.swap(col * d + j, pivot * d + j);
                inv.swap(col * d + j, pivot * d + j);
            }
            let s = f.inv(m[col * d + col]);
            for j in 0..d {
                m[col * d + j] = f.mul(m[col * d + j], s);
                inv[col * d + j] = f.mul(inv[col * d + j], s);
            }
            for r in 0..d {
                let c = m[r * d + col];
                if r == col || c == 0 {
                    continue;
                }
                for j in 0..d {
                    m[r * d + j] = f.sub(m[r * d + j], f.mul(c, m[col * d + j]));
                    inv[r * d + j] = f.sub(inv[r * d + j], f.mul(c, inv[col * d + j]));
                }
            }
        }
        Some(Matrix { d, a: inv })
    }

    /// `g v` for a column vector `v`.
    pub fn apply(&self, v: &[u8], f: Field) -> Vec<u8> {
        let d = self.d;
        (0..d)
            .map(|i| {
                (0..d).fold(0, |acc, j| f.add(acc, f.mul(self.a[i * d + j], v[j])))
            })
            .collect()
    }

    /// The bilinear form `xᵀ M y`.
    pub fn pairing(&self, x: &[u8], y: &[u8], f: Field) -> u8 {
        let my = self.apply(y, f);
        x.iter().zip(&my).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Whether `gᵀ M g = M`.
    pub fn preserves_form(&self, form: &Matrix, f: Field) -> bool {
        self.transpose().mul(form, f).mul(self, f) == *form
    }

    /// Places `self` on the coordinates `coords` of a `d`-dimensional space.
    pub fn embed(&self, coords: &[usize], d: usize) -> Matrix {
        assert_eq!(coords.len(), self.d);
        let mut m = Matrix::identity(d);
        for (i, &ci) in coords.iter().enumerate() {
            for (j, &cj) in coords.iter().enumerate() {
                m.a[ci * d + cj] = self.get(i, j);
            }
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.d {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.d {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// The antidiagonal alternating form on `F_q^{2n}`:
/// `ω(e_i, e_{2n+1-i}) = 1` for `i <= n`.
pub fn symplectic_form(rank: usize, f: Field) -> Matrix {
    let d = 2 * rank;
    let mut m = Matrix { d, a: vec![0; d * d] };
    for i in 0..d {
        m.set(i, d - 1 - i, if i < rank { 1 } else { f.neg(1) });
    }
    m
}

/// The antidiagonal symmetric form on `F_q^n`.
pub fn split_symmetric_form(n: usize) -> Matrix {
    let mut m = Matrix { d: n, a: vec![0; n * n] };
    for i in 0..n {
        m.set(i, n - 1 - i, 1);
    }
    m
}

/// A subspace of `F_q^d` stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: u8,
    rows: Vec<u8>,
}

impl Subspace {
    /// The span of `vectors`, each of length `ambient`, concatenated.
    pub fn span(ambient: usize, mut vectors: Vec<u8>, f: Field) -> Self {
        let d = ambient;
        let count = vectors.len().checked_div(d).unwrap_or(0);
        let mut rank = 0;
        for col in 0..d {
            let Some(pivot) = (rank..count).find(|&r| vectors[r * d + col] != 0) else {
                continue;
            };
            for j in 0..d {
                vectors.swap(rank * d + j, pivot * d + j);
            }
            let s = f.inv(vectors[rank * d + col]);
            for j in col..d {
                vectors[rank * d + j] = f.mul(vectors[rank * d + j], s);
            }
            for r in 0..count {
                let c = vectors[r * d + col];
                if r == rank || c == 0 {
                    continue;
                }
                for j in col..d {
                    vectors[r * d + j] = f.sub(vectors[r * d + j], f.mul(c, vectors[rank * d + j]));
                }
            }
            rank += 1;
            if rank == count {
                break;
            }
        }
        vectors.truncate(rank * d);
        Subspace {
            ambient: d as u8,
            rows: vectors,
        }
    }

    /// `span(e_i : i ∈ coords)`.
    pub fn coordinate(ambient: usize, coords: &[usize], f: Field) -> Self {
        let mut v = vec![0u8; coords.len() * ambient];
        for (r, &c) in coords.iter().enumerate() {
            v[r * ambient + c] = 1;
        }
        Self::span(ambient, v, f)
    }

    pub fn ambient(&self) -> usize {
        usize::from(self.ambient)
    }

    pub fn dim(&self) -> usize {
        if self.ambient == 0 {
            0
        } else {
            self.rows.len() / self.ambient()
        }
    }

    /// The echelon basis, one row per basis vector.
    pub fn basis(&self) -> impl Iterator<Item = &[u8]> {
        self.rows.chunks(self.ambient().max(1))
    }

    pub fn image(&self, g: &Matrix, f: Field) -> Subspace {
        let mut v = Vec::with_capacity(self.rows.len());
        for row in self.basis() {
            v.extend(g.apply(row, f));
        }
        Subspace::span(self.ambient(), v, f)
    }

    pub fn contains(&self, other: &Subspace, f: Field) -> bool {
        let mut v = self.rows.clone();
        v.extend_from_slice(&other.rows);
        Subspace::span(self.ambient(), v, f).dim() == self.dim()
    }

    pub fn is_isotropic(&self, form: &Matrix, f: Field) -> bool {
        let basis: Vec<&[u8]> = self.basis().collect();
        basis
            .iter()
            .all(|x| basis.iter().all(|y| form.pairing(x, y, f) == 0))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, row) in self.basis().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        f.write_str(">")
    }
}

/// A chain of nested subspaces with strictly increasing dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagPoint {
    subspaces: Vec<Subspace>,
}

impl FlagPoint {
    /// Checks nesting and strict growth.
    pub fn new(subspaces: Vec<Subspace>, f: Field) -> Option<Self> {
        let ok = subspaces.windows(2).all(|w| {
            w[0].ambient() == w[1].ambient() && w[0].dim() < w[1].dim() && w[1].contains(&w[0], f)
        });
        ok.then_some(FlagPoint { subspaces })
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }

    pub fn image(&self, g: &Matrix, f: Field) -> FlagPoint {
        FlagPoint {
            subspaces: self.subspaces.iter().map(|s| s.image(g, f)).collect(),
        }
    }

    pub fn is_isotropic(&self, form: &Matrix, f: Field) -> bool {
        self.subspaces.iter().all(|s| s.is_isotropic(form, f))
    }
}

impl fmt::Display for FlagPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.subspaces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊂ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_canonical() {
        let f = Field::new(3).unwrap();
        let a = Subspace::span(3, vec![1, 2, 0, 0, 1, 1], f);
        let b = Subspace::span(3, vec![1, 0, 1, 2, 2, 1, 1, 1, 2], f);
        assert_eq!(a.dim(), 2);
        assert_eq!(a, b);
        assert!(a.contains(&Subspace::span(3, vec![1, 0, 1], f), f));
        assert!(!a.contains(&Subspace::span(3, vec![1, 0, 0], f), f));
    }

    #[test]
    fn inverse_and_forms() {
        let f = Field::new(5).unwrap();
        let g = Matrix::from_rows(3, vec![1, 2, 0, 0, 3, 1, 4, 0, 1]);
        let h = g.inverse(f).unwrap();
        assert!(g.mul(&h, f).is_identity());
        let w = symplectic_form(2, f);
        assert_eq!(w.transpose(), Matrix::from_rows(4, w.entries().iter().map(|&x| f.neg(x)).collect()));
        let line = Subspace::coordinate(4, &[0, 1], f);
        assert!(line.is_isotropic(&w, f));
        assert!(!Subspace::coordinate(4, &[0, 3], f).is_isotropic(&w, f));
    }
}
