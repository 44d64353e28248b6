//! Convex polytopes in vertex representation.
//!
//! A [`Polytope`] stores exactly its extreme points, sorted lexicographically,
//! so structural equality is geometric equality and the stored form is
//! canonical. Halfspace data is derived on demand through [`Membership`].

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::faces::Face;
use crate::linalg;
use crate::point::Point;
use crate::rational::Rational;

/// Lattice enumeration refuses bounding boxes with more integer points than
/// this unless a larger guard is passed explicitly.
pub const DEFAULT_LATTICE_GUARD: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
}

fn check_dims(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::MixedDimensions {
            expected: n,
            found: bad.dim(),
        });
    }
    Ok(n)
}

impl Polytope {
    /// Convex hull of a non-empty list of points of equal dimension.
    pub fn hull(mut points: Vec<Point>) -> Result<Polytope> {
        let ambient_dim = check_dims(&points)?;
        points.sort();
        points.dedup();
        let face = Face::build(&points, (0..points.len()).collect());
        let vertices = face.vertices.iter().map(|&i| points[i].clone()).collect();
        Ok(Polytope {
            ambient_dim,
            vertices,
        })
    }

    pub fn point(p: Point) -> Polytope {
        Polytope {
            ambient_dim: p.dim(),
            vertices: alloc::vec![p],
        }
    }

    /// The one-point body `{0}`.
    pub fn origin(ambient_dim: usize) -> Polytope {
        Polytope::point(Point::origin(ambient_dim))
    }

    /// `[0,1]ⁿ`.
    pub fn unit_cube(n: usize) -> Polytope {
        let mut vertices = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let coords = (0..n)
                .map(|i| {
                    // Most significant bit first keeps the list sorted.
                    if mask >> (n - 1 - i) & 1 == 1 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            vertices.push(Point::new(coords));
        }
        Polytope {
            ambient_dim: n,
            vertices,
        }
    }

    /// `conv{0, e_1, …, e_n}`.
    pub fn standard_simplex(n: usize) -> Polytope {
        let mut pts = alloc::vec![Point::origin(n)];
        pts.extend((0..n).map(|i| Point::basis_vector(n, i)));
        Polytope::hull(pts).expect("non-empty")
    }

    /// `conv{0, e_1, e_1 + 2e_2, e_1 + 2e_2 + 3e_3, …}` truncated to `n`
    /// coordinates: a simplex with no non-trivial symmetry.
    pub fn asymmetric_simplex(n: usize) -> Polytope {
        let mut pts = alloc::vec![Point::origin(n)];
        let mut acc = Point::origin(n);
        for i in 0..n {
            acc = acc.add(&Point::basis_vector(n, i).scale(&Rational::from_integer(i as i64 + 1)));
            pts.push(acc.clone());
        }
        Polytope::hull(pts).expect("non-empty")
    }

    /// The segment `[lo, hi]` on the real line.
    pub fn interval(lo: Rational, hi: Rational) -> Polytope {
        Polytope::hull(alloc::vec![Point::new(alloc::vec![lo]), Point::new(alloc::vec![hi])])
            .expect("non-empty")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// The lexicographically smallest vertex.
    pub fn min_vertex(&self) -> &Point {
        &self.vertices[0]
    }

    /// Affine dimension: rank of `{v - v_0}`.
    pub fn dim(&self) -> usize {
        let base = &self.vertices[0];
        let diffs = self.vertices[1..]
            .iter()
            .map(|v| v.sub(base).into_coords())
            .collect();
        linalg::rank(diffs, self.ambient_dim)
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    /// `λP`. `dilate(P, 0)` is the origin.
    pub fn dilate(&self, factor: &Rational) -> Result<Polytope> {
        if factor.is_negative() {
            return Err(Error::NegativeFactor(factor.to_string()));
        }
        if factor.is_zero() {
            return Ok(Polytope::origin(self.ambient_dim));
        }
        // Positive scaling preserves both extremality and lexicographic order.
        Ok(Polytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| v.scale(factor)).collect(),
        })
    }

    pub fn translate(&self, t: &Point) -> Result<Polytope> {
        if t.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: t.dim(),
            });
        }
        Ok(Polytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| v.add(t)).collect(),
        })
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if other.is_point() {
            return self.translate(&other.vertices[0]);
        }
        if self.is_point() {
            return other.translate(&self.vertices[0]);
        }
        let sums = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p.add(q)))
            .collect();
        Polytope::hull(sums)
    }

    /// Halfspace description for repeated membership queries.
    pub fn membership(&self) -> Membership {
        Membership {
            face: Face::build(&self.vertices, (0..self.vertices.len()).collect()),
        }
    }

    /// Exact membership test. A point of the wrong dimension is never a member.
    pub fn contains(&self, x: &Point) -> bool {
        x.dim() == self.ambient_dim && self.membership().contains(x)
    }

    /// `max_{v} ⟨u, v⟩`.
    pub fn support(&self, u: &Point) -> Result<Rational> {
        if u.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: u.dim(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.dot(u))
            .max()
            .expect("non-empty"))
    }

    fn is_box(&self) -> bool {
        let n = self.ambient_dim;
        if n >= usize::BITS as usize - 1 || self.vertices.len() != 1 << n {
            return false;
        }
        (0..n).all(|i| {
            let mut values: Vec<&Rational> = self.vertices.iter().map(|v| &v[i]).collect();
            values.sort();
            values.dedup();
            values.len() == 2
        })
    }

    /// `n`-dimensional volume in the ambient space. Zero for lower-dimensional
    /// polytopes. Simplices and axis-aligned boxes use closed forms in any
    /// dimension; other polytopes are triangulated and need `n <= 3`.
    pub fn volume(&self) -> Result<Rational> {
        let n = self.ambient_dim;
        if n == 0 {
            return Ok(Rational::one());
        }
        if self.vertices.len() <= n || self.dim() < n {
            return Ok(Rational::zero());
        }
        if self.vertices.len() == n + 1 {
            return Ok(simplex_volume(&self.vertices.iter().collect::<Vec<_>>()));
        }
        if self.is_box() {
            let (lo, hi) = (&self.vertices[0], &self.vertices[self.vertices.len() - 1]);
            return Ok((0..n).map(|i| &hi[i] - &lo[i]).product());
        }
        if n > 3 {
            return Err(Error::UnsupportedDimension(n));
        }
        let face = Face::build(&self.vertices, (0..self.vertices.len()).collect());
        Ok(face
            .fan_simplices()
            .iter()
            .map(|s| simplex_volume(&s.iter().map(|&i| &self.vertices[i]).collect::<Vec<_>>()))
            .sum())
    }

    /// Side lengths of an axis-aligned box, `None` for any other polytope.
    pub fn box_widths(&self) -> Option<Vec<Rational>> {
        if !self.is_box() {
            return None;
        }
        let (lo, hi) = (&self.vertices[0], &self.vertices[self.vertices.len() - 1]);
        Some((0..self.ambient_dim).map(|i| &hi[i] - &lo[i]).collect())
    }

    /// Keeps only the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> Result<Polytope> {
        let points = self
            .vertices
            .iter()
            .map(|v| Point::new(coords.iter().map(|&i| v[i].clone()).collect()))
            .collect();
        Polytope::hull(points)
    }

    /// `vol(self + B)` for an axis-aligned box `B` with the given side
    /// lengths, without forming the sum: adding a segment `[0, w·e_i]` adds
    /// `w` times the volume of the projection along `e_i`, so the total is a
    /// sum over coordinate subsets of projected volumes.
    pub fn volume_plus_box(&self, widths: &[Rational]) -> Result<Rational> {
        let n = self.ambient_dim;
        if widths.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: widths.len(),
            });
        }
        if n >= usize::BITS as usize - 1 {
            return Err(Error::UnsupportedDimension(n));
        }
        let mut total = Rational::zero();
        for dropped in 0u64..1 << n {
            let mut weight = Rational::one();
            let mut kept = Vec::new();
            for (i, w) in widths.iter().enumerate() {
                if dropped >> i & 1 == 1 {
                    weight = &weight * w;
                } else {
                    kept.push(i);
                }
            }
            if weight.is_zero() {
                continue;
            }
            let shadow = if kept.len() == n { self.clone() } else { self.project(&kept)? };
            total += &(weight * shadow.volume()?);
        }
        Ok(total)
    }

    /// Number of integer points, with the default enumeration guard.
    pub fn lattice_count(&self) -> Result<u64> {
        self.lattice_count_with_guard(DEFAULT_LATTICE_GUARD)
    }

    /// `|P ∩ ℤⁿ|` by exact membership over the integer bounding box.
    pub fn lattice_count_with_guard(&self, guard: u64) -> Result<u64> {
        let n = self.ambient_dim;
        if n > 3 {
            return Err(Error::UnsupportedDimension(n));
        }
        let mut ranges = Vec::with_capacity(n);
        let mut total = BigInt::one();
        for i in 0..n {
            let lo = self.vertices.iter().map(|v| &v[i]).min().expect("non-empty").ceil();
            let hi = self.vertices.iter().map(|v| &v[i]).max().expect("non-empty").floor();
            if hi < lo {
                return Ok(0);
            }
            total *= &hi - &lo + 1;
            ranges.push((lo, hi));
        }
        if total > BigInt::from(guard) {
            return Err(Error::GuardExceeded {
                points: total.to_string(),
                limit: guard,
            });
        }
        if self.is_box() {
            // Every integer point of the bounding box is in the box.
            return Ok(total.to_u64().expect("below the guard"));
        }
        let membership = self.membership();
        let mut count = 0u64;
        let mut current: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
        loop {
            let x = Point::new(current.iter().cloned().map(Rational::from_bigint).collect());
            if membership.contains(&x) {
                count += 1;
            }
            // Odometer increment, last coordinate fastest.
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(count);
                }
                i -= 1;
                if current[i] < ranges[i].1 {
                    current[i] += 1;
                    break;
                }
                current[i] = ranges[i].0.clone();
            }
        }
    }
}

/// `|det(v_1 - v_0, …, v_n - v_0)| / n!` for `n + 1` points in `ℚⁿ`.
pub(crate) fn simplex_volume(points: &[&Point]) -> Rational {
    let n = points.len() - 1;
    let rows = points[1..]
        .iter()
        .map(|p| p.sub(points[0]).into_coords())
        .collect();
    let det = linalg::determinant(rows).abs();
    det / Rational::from_bigint(factorial(n as u64))
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub(crate) fn factorial_u64(n: usize) -> Option<u64> {
    factorial(n as u64).to_u64()
}

/// Halfspace data of a polytope, built once for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Membership {
    face: Face,
}

impl Membership {
    pub fn contains(&self, x: &Point) -> bool {
        self.face.contains(x)
    }

    pub fn dim(&self) -> usize {
        self.face.dim()
    }
}

/// Linearly independent vectors `v_1, …, v_d` spanning the chain simplex
/// `S(v_1, …, v_d) = conv{0, v_1, v_1 + v_2, …, v_1 + ⋯ + v_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexBasis {
    vectors: Vec<Point>,
}

impl SimplexBasis {
    pub fn new(vectors: Vec<Point>) -> Result<SimplexBasis> {
        let n = check_dims(&vectors)?;
        let d = vectors.len();
        let rows = vectors.iter().map(|v| v.coords().to_vec()).collect();
        if d > n || linalg::rank(rows, n) < d {
            return Err(Error::DependentBasis);
        }
        Ok(SimplexBasis { vectors })
    }

    /// `(e_1, …, e_d)` in `ℚᵈ`.
    pub fn standard(d: usize) -> SimplexBasis {
        SimplexBasis {
            vectors: (0..d).map(|i| Point::basis_vector(d, i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn vectors(&self) -> &[Point] {
        &self.vectors
    }

    /// Coordinates `x` with `Σ x_i v_i = p`, if `p` lies in the span.
    pub fn coordinates(&self, p: &Point) -> Option<Vec<Rational>> {
        let vs: Vec<_> = self.vectors.iter().map(|v| v.coords().to_vec()).collect();
        linalg::coordinates_in(&vs, p.coords())
    }

    pub fn combine(&self, coords: &[Rational]) -> Point {
        let mut acc = Point::origin(self.ambient_dim());
        for (v, x) in self.vectors.iter().zip(coords) {
            acc = acc.add(&v.scale(x));
        }
        acc
    }
}

/// `S(v_1, …, v_k)` for a possibly empty run of vectors; the empty run gives
/// the origin.
pub(crate) fn chain_simplex(vectors: &[Point], ambient_dim: usize) -> Polytope {
    let mut pts = alloc::vec![Point::origin(ambient_dim)];
    let mut acc = Point::origin(ambient_dim);
    for v in vectors {
        acc = acc.add(v);
        pts.push(acc.clone());
    }
    // The partial sums are affinely independent, hence all extreme.
    pts.sort();
    Polytope {
        ambient_dim,
        vertices: pts,
    }
}

/// The chain simplex with vertices `0, v_1, v_1 + v_2, …, v_1 + ⋯ + v_d`.
pub fn simplex_from_basis(basis: &SimplexBasis) -> Polytope {
    chain_simplex(basis.vectors(), basis.ambient_dim())
}
