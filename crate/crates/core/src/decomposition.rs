//! The simplex decomposition `(a+b)σ^d = A_0 ∪ ⋯ ∪ A_d`.
//!
//! With `σ^i = S(v_1, …, v_i)` and `τ^{d−i} = S(v_{i+1}, …, v_d)`,
//!
//! * `A_i = aσ^i + bτ^{d−i} + b(v_1 + ⋯ + v_i)`, `0 <= i <= d`;
//! * `B_i = aσ^{i−1} + bτ^{d−i} + b(v_1 + ⋯ + v_i)`, `1 <= i <= d`.
//!
//! In simplex coordinates `x` (so `p = Σ x_i v_i`, and `(a+b)σ^d` is
//! `a+b ≥ x_1 ≥ ⋯ ≥ x_d ≥ 0`) the pieces are `A_i = {x_i ≥ b ≥ x_{i+1}}` and
//! `B_i = {x_i = b}`, with `x_0 = a+b` and `x_{d+1} = 0`. The prefix union
//! `A_0 ∪ ⋯ ∪ A_{i−1}` is `{x_i ≤ b}`, which is convex, and meets `A_i` in
//! `B_i`. Verification checks all of this on a rational grid together with
//! exact volume accounting.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::difference::multisets;
use crate::error::{Error, Result};
use crate::point::Point;
use crate::polytope::{chain_simplex, Membership, Polytope, SimplexBasis};
use crate::rational::Rational;
use crate::report::Report;

/// Grid resolution used by [`verify_decomposition`]: simplex coordinates are
/// drawn from `{(a+b)j/N : 0 <= j <= N} ∪ {b}`.
pub const DEFAULT_GRID: u32 = 4;

#[derive(Clone, Debug)]
pub struct DecompositionPieces {
    pub basis: SimplexBasis,
    pub a: Rational,
    pub b: Rational,
    /// `(a+b)σ^d`.
    pub whole: Polytope,
    /// `A_0, …, A_d`.
    pub a_pieces: Vec<Polytope>,
    /// `B_1, …, B_d`.
    pub b_pieces: Vec<Polytope>,
}

/// One instance of the valuation law: `left ∪ right = union`,
/// `left ∩ right = intersection`, with the union convex.
#[derive(Clone, Debug)]
pub struct UnionWitness {
    pub left: Polytope,
    pub right: Polytope,
    pub union: Polytope,
    pub intersection: Polytope,
}

fn piece(
    basis: &SimplexBasis,
    a: &Rational,
    b: &Rational,
    sigma_len: usize,
    tau_from: usize,
    shift_len: usize,
) -> Result<Polytope> {
    let n = basis.ambient_dim();
    let vs = basis.vectors();
    let sigma = chain_simplex(&vs[..sigma_len], n).dilate(a)?;
    let tau = chain_simplex(&vs[tau_from..], n).dilate(b)?;
    let shift = vs[..shift_len]
        .iter()
        .fold(Point::origin(n), |acc, v| acc.add(v))
        .scale(b);
    sigma.minkowski_sum(&tau)?.translate(&shift)
}

pub fn decomposition_pieces(
    basis: &SimplexBasis,
    a: &Rational,
    b: &Rational,
) -> Result<DecompositionPieces> {
    for s in [a, b] {
        if !s.is_positive() {
            return Err(Error::NonpositiveScale(s.to_string()));
        }
    }
    let d = basis.dim();
    let n = basis.ambient_dim();
    let a_pieces = (0..=d)
        .map(|i| piece(basis, a, b, i, i, i))
        .collect::<Result<Vec<_>>>()?;
    let b_pieces = (1..=d)
        .map(|i| piece(basis, a, b, i - 1, i, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionPieces {
        basis: basis.clone(),
        a: a.clone(),
        b: b.clone(),
        whole: chain_simplex(basis.vectors(), n).dilate(&(a + b))?,
        a_pieces,
        b_pieces,
    })
}

impl DecompositionPieces {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `A_0 ∪ ⋯ ∪ A_{i−1}` for `1 <= i <= d+1`, as the hull of the pieces
    /// (the union is convex; [`verify_decomposition`] checks this).
    pub fn prefix_union(&self, i: usize) -> Result<Polytope> {
        let pts = self.a_pieces[..i]
            .iter()
            .flat_map(|p| p.vertices().iter().cloned())
            .collect();
        Polytope::hull(pts)
    }

    /// `(A_0 ∪ ⋯ ∪ A_{i−1}, A_i, A_0 ∪ ⋯ ∪ A_i, B_i)` for `i = 1..=d`.
    pub fn union_witnesses(&self) -> Result<Vec<UnionWitness>> {
        (1..=self.dim())
            .map(|i| {
                Ok(UnionWitness {
                    left: self.prefix_union(i)?,
                    right: self.a_pieces[i].clone(),
                    union: self.prefix_union(i + 1)?,
                    intersection: self.b_pieces[i - 1].clone(),
                })
            })
            .collect()
    }

    /// Simplex coordinates of a point in the span of the basis.
    pub fn coordinates(&self, p: &Point) -> Option<Vec<Rational>> {
        self.basis.coordinates(p)
    }

    /// Volume used for the accounting: the ambient volume when the basis
    /// spans the space, otherwise the volume of the piece in simplex
    /// coordinates (a fixed multiple of its `d`-dimensional volume).
    pub fn piece_volume(&self, p: &Polytope) -> Result<Rational> {
        if self.basis.ambient_dim() == self.dim() {
            return p.volume();
        }
        let pts = p
            .vertices()
            .iter()
            .map(|v| {
                self.coordinates(v)
                    .map(Point::new)
                    .ok_or_else(|| Error::InvalidArgument("piece leaves the basis span".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Polytope::hull(pts)?.volume()
    }

    /// `x ∈ A_i` by the coordinate characterization.
    fn in_a(&self, i: usize, x: &[Rational]) -> bool {
        let d = self.dim();
        let top = &self.a + &self.b;
        let hi = if i == 0 { &top } else { &x[i - 1] };
        let zero = Rational::zero();
        let lo = if i == d { &zero } else { &x[i] };
        hi >= &self.b && &self.b >= lo
    }
}

/// Points of `(a+b)σ^d` with simplex coordinates drawn from the grid.
fn grid(pieces: &DecompositionPieces, resolution: u32) -> Vec<Vec<Rational>> {
    let top = &pieces.a + &pieces.b;
    let n = Rational::from_integer(resolution.max(1) as i64);
    let mut values: Vec<Rational> = (0..=resolution.max(1))
        .map(|j| &top * Rational::from_integer(j as i64) / &n)
        .collect();
    values.push(pieces.b.clone());
    values.sort();
    values.dedup();
    values.reverse();
    multisets(&values, pieces.dim())
}

/// Vertices, pairwise midpoints and the vertex centroid.
fn samples(p: &Polytope) -> Vec<Point> {
    let vs = p.vertices();
    let mut out: Vec<Point> = vs.to_vec();
    let half = Rational::new(1, 2);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.push(vs[i].add(&vs[j]).scale(&half));
        }
    }
    let k = Rational::from_integer(vs.len() as i64);
    let sum = vs.iter().skip(1).fold(vs[0].clone(), |acc, v| acc.add(v));
    out.push(sum.scale(&k.recip().expect("non-empty")));
    out
}

/// Exact verification of the decomposition.
pub fn verify_decomposition(basis: &SimplexBasis, a: &Rational, b: &Rational) -> Result<Report> {
    verify_decomposition_with_grid(basis, a, b, DEFAULT_GRID)
}

pub fn verify_decomposition_with_grid(
    basis: &SimplexBasis,
    a: &Rational,
    b: &Rational,
    resolution: u32,
) -> Result<Report> {
    let pieces = decomposition_pieces(basis, a, b)?;
    let d = pieces.dim();
    let mut report = Report::new(format!("decomposition d={d} a={a} b={b}"));

    // (i) volume accounting
    let whole_volume = pieces.piece_volume(&pieces.whole)?;
    let mut total = Rational::zero();
    for (i, p) in pieces.a_pieces.iter().enumerate() {
        let v = pieces.piece_volume(p)?;
        report.value(format!("vol(A_{i})"), v.to_string());
        total += &v;
    }
    for (i, p) in pieces.b_pieces.iter().enumerate() {
        report.value(format!("vol(B_{})", i + 1), pieces.piece_volume(p)?.to_string());
    }
    report.value("vol(whole)", whole_volume.to_string());
    report.check(
        "volume_sum",
        total == whole_volume,
        format!("sum vol(A_i) = {total}, vol((a+b)sigma) = {whole_volume}"),
    );

    // (iv) dimensions
    let a_dims: Vec<usize> = pieces.a_pieces.iter().map(Polytope::dim).collect();
    let b_dims: Vec<usize> = pieces.b_pieces.iter().map(Polytope::dim).collect();
    report.check(
        "piece_dimensions",
        a_dims.iter().all(|&k| k == d) && b_dims.iter().all(|&k| k + 1 == d),
        format!("dim A = {a_dims:?}, dim B = {b_dims:?}"),
    );

    let whole_m = pieces.whole.membership();
    let a_m: Vec<Membership> = pieces.a_pieces.iter().map(Polytope::membership).collect();
    let b_m: Vec<Membership> = pieces.b_pieces.iter().map(Polytope::membership).collect();
    let unions = (1..=d + 1)
        .map(|i| pieces.prefix_union(i))
        .collect::<Result<Vec<_>>>()?;
    let union_m: Vec<Membership> = unions.iter().map(Polytope::membership).collect();

    // (ii) double inclusion
    let points = grid(&pieces, resolution);
    let mut uncovered = None;
    let mut wrong_a = None;
    let mut wrong_b = None;
    let mut wrong_step = None;
    let mut wrong_union = None;
    for x in &points {
        let p = basis.combine(x);
        let in_a: Vec<bool> = a_m.iter().map(|m| m.contains(&p)).collect();
        if !in_a.iter().any(|&t| t) && uncovered.is_none() {
            uncovered = Some(x.clone());
        }
        for i in 0..=d {
            if in_a[i] != pieces.in_a(i, x) && wrong_a.is_none() {
                wrong_a = Some((i, x.clone()));
            }
        }
        for i in 1..=d {
            let in_b = b_m[i - 1].contains(&p);
            if in_b != (x[i - 1] == *b) && wrong_b.is_none() {
                wrong_b = Some((i, x.clone()));
            }
            let in_prefix = in_a[..i].iter().any(|&t| t);
            if (in_prefix && in_a[i]) != in_b && wrong_step.is_none() {
                wrong_step = Some((i, x.clone()));
            }
            if union_m[i - 1].contains(&p) != (x[i - 1] <= *b) && wrong_union.is_none() {
                wrong_union = Some((i, x.clone()));
            }
        }
    }
    let mut outside = None;
    for (i, p) in pieces.a_pieces.iter().enumerate() {
        if let Some(s) = samples(p).into_iter().find(|s| !whole_m.contains(s)) {
            outside = Some((i, s));
            break;
        }
    }
    report.value("grid_points", points.len().to_string());
    report.check(
        "grid_covered",
        uncovered.is_none(),
        match &uncovered {
            None => "every grid point lies in some A_i".to_string(),
            Some(x) => format!("no piece contains simplex point {x:?}"),
        },
    );
    report.check(
        "pieces_inside",
        outside.is_none(),
        match &outside {
            None => "sampled points of every A_i lie in (a+b)sigma".to_string(),
            Some((i, s)) => format!("A_{i} sample {s} lies outside"),
        },
    );
    // (iii) coordinate characterizations and the step identity
    report.check(
        "a_characterization",
        wrong_a.is_none(),
        match &wrong_a {
            None => "A_i = {x_i >= b >= x_(i+1)} on the grid".to_string(),
            Some((i, x)) => format!("A_{i} disagrees at {x:?}"),
        },
    );
    let b_vertices_ok = pieces.b_pieces.iter().enumerate().all(|(k, p)| {
        p.vertices()
            .iter()
            .all(|v| pieces.coordinates(v).is_some_and(|x| x[k] == *b))
    });
    report.check(
        "b_slice",
        wrong_b.is_none() && b_vertices_ok,
        match &wrong_b {
            None if b_vertices_ok => "B_i = {x_i = b} on the grid and at its vertices".to_string(),
            None => "a vertex of some B_i is off the slice x_i = b".to_string(),
            Some((i, x)) => format!("B_{i} disagrees at {x:?}"),
        },
    );
    report.check(
        "step_identity",
        wrong_step.is_none(),
        match &wrong_step {
            None => "(A_0 u ... u A_(i-1)) n A_i = B_i on the grid".to_string(),
            Some((i, x)) => format!("step {i} fails at {x:?}"),
        },
    );
    report.check(
        "prefix_unions",
        wrong_union.is_none() && unions[d] == pieces.whole,
        match &wrong_union {
            None => "A_0 u ... u A_(i-1) = {x_i <= b}; full union = (a+b)sigma".to_string(),
            Some((i, x)) => format!("prefix union {i} disagrees at {x:?}"),
        },
    );
    Ok(report)
}
