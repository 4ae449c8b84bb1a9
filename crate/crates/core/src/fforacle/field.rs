use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field `F_q` for `q ∈ {2, 3, 5}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u8,
}

impl Field {
    pub const SUPPORTED: [u64; 3] = [2, 3, 5];

    pub fn new(q: u64) -> Result<Self> {
        if Self::SUPPORTED.contains(&q) {
            Ok(Field { q: q as u8 })
        } else {
            Err(Error::Unsupported(format!("field size {q}; supported sizes are 2, 3, 5")))
        }
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn order(self) -> u64 {
        u64::from(self.q)
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.q - a) % self.q
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.q
    }

    /// Multiplicative inverse of a nonzero element.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(!a.is_multiple_of(self.q));
        match (self.q, a) {
            (_, 1) => 1,
            (3, 2) => 2,
            (5, 2) => 3,
            (5, 3) => 2,
            (5, 4) => 4,
            _ => unreachable!("{a} is not invertible mod {}", self.q),
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        match self.q {
            2 => 1,
            _ => 2,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    pub fn element(self, value: i64) -> FieldElement {
        FieldElement {
            value: value.rem_euclid(i64::from(self.q)) as u8,
            field: self,
        }
    }
}

/// A residue modulo the field size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    field: Field,
}

impl FieldElement {
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FieldElement> {
        (!self.is_zero()).then(|| FieldElement {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                assert_eq!(self.field, rhs.field, "mixed fields");
                FieldElement {
                    value: self.field.$m(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        for q in Field::SUPPORTED {
            let f = Field::new(q).unwrap();
            for a in 1..f.q() {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            let g = f.primitive_root();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 1..f.q() {
                x = f.mul(x, g);
                seen.insert(x);
            }
            assert_eq!(seen.len(), usize::from(f.q()) - 1);
        }
        let f = Field::new(5).unwrap();
        let a = f.element(3);
        let b = f.element(-1);
        assert_eq!((a * b).value(), 2);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((-a).value(), 2);
        assert_eq!(a.inv().unwrap().value(), 2);
        assert!(Field::new(7).is_err());
    }
}
