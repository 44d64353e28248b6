//! Points of `ℚⁿ`.

use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;

/// A point with exact rational coordinates. Ordering is lexicographic in the
/// coordinates, which is the canonical vertex order used everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point::new(alloc::vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector of `ℚⁿ` (zero-based `i`).
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        let mut p = Point::origin(dim);
        p.coords[i] = Rational::one();
        p
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn dot(&self, other: &Point) -> Rational {
        crate::linalg::dot(&self.coords, &other.coords)
    }
}

impl core::ops::Index<usize> for Point {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
