use std::fmt;

use serde::Serialize;

use super::composition::{Composition, SymplecticComposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    GeneralLinear,
    Symplectic,
}

/// `GL_n` acting on `F^n`, or `Sp_2n` acting on `F^{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupDatum {
    pub family: Family,
    pub n: usize,
}

impl GroupDatum {
    pub fn gl(n: usize) -> Self {
        GroupDatum {
            family: Family::GeneralLinear,
            n,
        }
    }

    pub fn sp(n: usize) -> Self {
        GroupDatum {
            family: Family::Symplectic,
            n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("group rank must be at least 1"));
        }
        Ok(())
    }

    /// Dimension of the natural representation.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::GeneralLinear => self.n,
            Family::Symplectic => 2 * self.n,
        }
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::GeneralLinear => self.n - 1,
            Family::Symplectic => self.n,
        }
    }

    pub fn weyl_order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.family {
            Family::GeneralLinear => fact,
            Family::Symplectic => fact << self.n,
        }
    }
}

impl fmt::Display for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::GeneralLinear => write!(f, "GL_{}", self.n),
            Family::Symplectic => write!(f, "Sp_{}", 2 * self.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    A(Composition),
    C(SymplecticComposition),
}

impl Shape {
    /// Block sizes along the coordinates of the natural representation.
    pub fn blocks(&self) -> Vec<usize> {
        match self {
            Shape::A(c) => c.parts().to_vec(),
            Shape::C(s) => s.full(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Shape::A(c) => c.len(),
            Shape::C(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_proper(&self) -> bool {
        match self {
            Shape::A(c) => c.is_proper(),
            Shape::C(s) => s.is_proper(),
        }
    }

    pub fn as_a(&self) -> Option<&Composition> {
        match self {
            Shape::A(c) => Some(c),
            Shape::C(_) => None,
        }
    }

    pub fn as_c(&self) -> Option<&SymplecticComposition> {
        match self {
            Shape::C(s) => Some(s),
            Shape::A(_) => None,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::A(c) => c.fmt(f),
            Shape::C(s) => s.fmt(f),
        }
    }
}

/// Standard parabolics contain the upper triangular Borel, opposite ones the lower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    Standard,
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSpec {
    group: GroupDatum,
    shape: Shape,
    orientation: Orientation,
}

impl ParabolicSpec {
    pub fn new(group: GroupDatum, shape: Shape, orientation: Orientation) -> Result<Self> {
        group.validate()?;
        match (&shape, group.family) {
            (Shape::A(c), Family::GeneralLinear) if c.size() == group.n => {}
            (Shape::C(s), Family::Symplectic) if s.rank() == group.n => {}
            _ => {
                return Err(Error::Mismatch(format!(
                    "shape {shape} does not fit {group}"
                )))
            }
        }
        Ok(ParabolicSpec {
            group,
            shape,
            orientation,
        })
    }

    pub fn gl(parts: Composition) -> Self {
        let n = parts.size();
        ParabolicSpec {
            group: GroupDatum::gl(n),
            shape: Shape::A(parts),
            orientation: Orientation::Standard,
        }
    }

    pub fn sp(parts: SymplecticComposition) -> Self {
        let n = parts.rank();
        ParabolicSpec {
            group: GroupDatum::sp(n),
            shape: Shape::C(parts),
            orientation: Orientation::Standard,
        }
    }

    pub fn borel(group: GroupDatum) -> Self {
        match group.family {
            Family::GeneralLinear => Self::gl(Composition::ones(group.n)),
            Family::Symplectic => Self::sp(SymplecticComposition::borel(group.n)),
        }
    }

    pub fn whole(group: GroupDatum) -> Self {
        match group.family {
            Family::GeneralLinear => Self::gl(Composition::whole(group.n)),
            Family::Symplectic => Self::sp(SymplecticComposition::whole(group.n)),
        }
    }

    /// All standard parabolics of `group`.
    pub fn all_standard(group: GroupDatum) -> Vec<ParabolicSpec> {
        match group.family {
            Family::GeneralLinear => Composition::all(group.n).into_iter().map(Self::gl).collect(),
            Family::Symplectic => SymplecticComposition::all(group.n)
                .into_iter()
                .map(Self::sp)
                .collect(),
        }
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn opposite(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Standard => Orientation::Opposite,
            Orientation::Opposite => Orientation::Standard,
        };
        self.clone().with_orientation(orientation)
    }

    pub fn group(&self) -> GroupDatum {
        self.group
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_borel(&self) -> bool {
        self.shape.blocks().iter().all(|&b| b == 1)
    }

    pub fn is_proper(&self) -> bool {
        self.shape.is_proper()
    }

    /// Block index of each coordinate of the natural representation.
    pub fn block_of(&self) -> Vec<usize> {
        self.shape
            .blocks()
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
            .collect()
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation {
            Orientation::Standard => "",
            Orientation::Opposite => "opp ",
        };
        write!(f, "{tag}P({}) in {}", self.shape, self.group)
    }
}
