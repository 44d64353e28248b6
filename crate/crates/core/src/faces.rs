//! Face lattice of a finite point set, computed by recursive gift wrapping.
//!
//! A face of affine dimension `k` is worked on in a chart: the projection of
//! its points onto the `k` pivot coordinates of its difference space, which is
//! an affine isomorphism of the affine hull onto `ℚᵏ`. Facets in the chart are
//! found by wrapping: start from one supporting hyperplane, then rotate each
//! known facet around each of its ridges until the hyperplane meets the next
//! point. Ridges are the facets of the facet, so the recursion yields the
//! whole lattice. Coplanar and redundant points need no special casing: a face
//! keeps every input point lying on it as a member, and only dimension 0 and 1
//! decide which members are vertices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::linalg::{self, dot, Row};
use crate::point::Point;
use crate::rational::Rational;

/// `normal · y <= offset` in chart coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Halfspace {
    pub normal: Row,
    pub offset: Rational,
}

impl Halfspace {
    fn slack(&self, y: &[Rational]) -> Rational {
        &self.offset - dot(&self.normal, y)
    }
}

/// Affine chart of the hull of a set of points.
#[derive(Clone, Debug)]
pub(crate) struct Chart {
    origin: Point,
    directions: Vec<Row>,
    pivots: Vec<usize>,
}

impl Chart {
    pub fn of(points: &[Point], members: &[usize]) -> Chart {
        let origin = points[members[0]].clone();
        let n = origin.dim();
        let diffs: Vec<Row> = members[1..]
            .iter()
            .map(|&i| points[i].sub(&origin).into_coords())
            .collect();
        let (directions, pivots) = linalg::rref(diffs, n);
        Chart {
            origin,
            directions,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn project(&self, p: &Point) -> Row {
        self.pivots.iter().map(|&c| p[c].clone()).collect()
    }

    /// Whether `x` lies in the affine hull.
    pub fn spans(&self, x: &Point) -> bool {
        if x.dim() != self.origin.dim() {
            return false;
        }
        let mut v = x.sub(&self.origin).into_coords();
        linalg::reduce_against(&self.directions, &self.pivots, &mut v);
        v.iter().all(Rational::is_zero)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Face {
    /// Indices (into the point slice) of every point lying on the face, sorted.
    pub members: Vec<usize>,
    /// Members that are extreme points of the face, sorted.
    pub vertices: Vec<usize>,
    pub chart: Chart,
    /// One halfspace per facet, in this face's chart coordinates.
    pub halfspaces: Vec<Halfspace>,
    pub facets: Vec<Face>,
}

impl Face {
    /// Builds the face lattice of `points[members]`. `members` must be
    /// non-empty, sorted, and free of duplicate points.
    pub fn build(points: &[Point], members: Vec<usize>) -> Face {
        let chart = Chart::of(points, &members);
        let local: Vec<Row> = members.iter().map(|&i| chart.project(&points[i])).collect();
        match chart.dim() {
            0 => Face {
                vertices: alloc::vec![members[0]],
                members,
                chart,
                halfspaces: Vec::new(),
                facets: Vec::new(),
            },
            1 => {
                let (mut lo, mut hi) = (0, 0);
                for (j, y) in local.iter().enumerate() {
                    if y[0] < local[lo][0] {
                        lo = j;
                    }
                    if y[0] > local[hi][0] {
                        hi = j;
                    }
                }
                let halfspaces = alloc::vec![
                    Halfspace {
                        normal: alloc::vec![Rational::one()],
                        offset: local[hi][0].clone(),
                    },
                    Halfspace {
                        normal: alloc::vec![-Rational::one()],
                        offset: -&local[lo][0],
                    },
                ];
                let facets = alloc::vec![
                    Face::build(points, alloc::vec![members[hi]]),
                    Face::build(points, alloc::vec![members[lo]]),
                ];
                let mut vertices = alloc::vec![members[lo], members[hi]];
                vertices.sort_unstable();
                Face {
                    members,
                    vertices,
                    chart,
                    halfspaces,
                    facets,
                }
            }
            k => wrap(points, members, chart, &local, k),
        }
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn contains(&self, x: &Point) -> bool {
        if !self.chart.spans(x) {
            return false;
        }
        let y = self.chart.project(x);
        self.halfspaces.iter().all(|h| h.slack(&y).signum() >= 0)
    }

    /// Triangulation by coning from the first vertex over every facet that
    /// does not contain it, recursively. Each simplex is a list of `dim + 1`
    /// point indices.
    pub fn fan_simplices(&self) -> Vec<Vec<usize>> {
        match self.dim() {
            0 => alloc::vec![alloc::vec![self.vertices[0]]],
            1 => alloc::vec![self.vertices.clone()],
            _ => {
                let apex = self.vertices[0];
                let mut out = Vec::new();
                for facet in &self.facets {
                    if facet.members.binary_search(&apex).is_ok() {
                        continue;
                    }
                    for mut s in facet.fan_simplices() {
                        s.insert(0, apex);
                        out.push(s);
                    }
                }
                out
            }
        }
    }
}

fn normalized(mut normal: Row) -> Row {
    let lead = normal
        .iter()
        .find(|c| !c.is_zero())
        .expect("non-zero normal")
        .abs();
    if !lead.is_one() {
        for c in normal.iter_mut() {
            *c = &*c / &lead;
        }
    }
    normal
}

fn contact(local: &[Row], h: &Halfspace) -> Vec<usize> {
    (0..local.len())
        .filter(|&j| h.slack(&local[j]).is_zero())
        .collect()
}

fn affine_rank(local: &[Row], idx: &[usize], k: usize) -> usize {
    let base = &local[idx[0]];
    let diffs: Vec<Row> = idx[1..]
        .iter()
        .map(|&j| local[j].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(diffs, k)
}

fn diff(a: &[Rational], b: &[Rational]) -> Row {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Second normal of a pencil of hyperplanes through a hinge: orthogonal to
/// `normal` and to every hinge direction.
fn hinge_normal(local: &[Row], hinge: &[usize], normal: &[Rational], k: usize) -> Row {
    let base = &local[hinge[0]];
    let mut rows: Vec<Row> = hinge[1..].iter().map(|&j| diff(&local[j], base)).collect();
    rows.push(normal.to_vec());
    linalg::nullspace(rows, k)
        .into_iter()
        .next()
        .expect("hinge of codimension at least two")
}

/// Projects `p` to the 2-plane of the pencil: `x` along the second normal,
/// `y >= 0` measuring depth below the current hyperplane.
fn pencil_coords(h: &Halfspace, g: &[Rational], r: &[Rational], p: &[Rational]) -> (Rational, Rational) {
    (dot(g, &diff(p, r)), h.slack(p))
}

/// `a × b` for 2-vectors; positive when `b` is counter-clockwise of `a`.
fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn initial_facet(local: &[Row], k: usize) -> Halfspace {
    let mut normal = alloc::vec![Rational::zero(); k];
    normal[0] = Rational::one();
    let offset = local.iter().map(|y| y[0].clone()).max().expect("non-empty");
    let mut h = Halfspace { normal, offset };
    let mut touching = contact(local, &h);
    while affine_rank(local, &touching, k) < k - 1 {
        let g = hinge_normal(local, &touching, &h.normal, k);
        let r = local[touching[0]].clone();
        // Every point off the hyperplane has y > 0; the first one met when
        // rotating from the +x side has the smallest angle.
        let mut best: Option<(Rational, Rational)> = None;
        for (j, p) in local.iter().enumerate() {
            if touching.binary_search(&j).is_ok() {
                continue;
            }
            let c = pencil_coords(&h, &g, &r, p);
            if best.as_ref().is_none_or(|b| cross(b, &c).signum() < 0) {
                best = Some(c);
            }
        }
        let (bx, by) = best.expect("full-dimensional point set");
        let normal: Row = h
            .normal
            .iter()
            .zip(&g)
            .map(|(n, gi)| &bx * n + &by * gi)
            .collect();
        let normal = normalized(normal);
        let offset = dot(&normal, &r);
        h = Halfspace { normal, offset };
        touching = contact(local, &h);
    }
    h
}

/// Rotates facet `h` around the ridge `ridge` (local indices) to the
/// neighbouring facet.
fn pivot(local: &[Row], h: &Halfspace, facet: &[usize], ridge: &[usize], k: usize) -> Halfspace {
    let mut g = hinge_normal(local, ridge, &h.normal, k);
    let r = local[ridge[0]].clone();
    let inside = facet
        .iter()
        .find(|j| ridge.binary_search(j).is_err())
        .expect("facet has a point off each ridge");
    if dot(&g, &diff(&local[*inside], &r)).signum() < 0 {
        g = g.into_iter().map(|x| -x).collect();
    }
    // Facet points sit at angle 0 (x > 0, y = 0); the neighbour is the
    // point set at the largest angle.
    let mut best: Option<(Rational, Rational)> = None;
    for p in local {
        let c = pencil_coords(h, &g, &r, p);
        if c.0.is_zero() && c.1.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|b| cross(b, &c).signum() > 0) {
            best = Some(c);
        }
    }
    let (bx, by) = best.expect("full-dimensional point set");
    let normal: Row = h
        .normal
        .iter()
        .zip(&g)
        .map(|(n, gi)| -(&bx * n + &by * gi))
        .collect();
    let normal = normalized(normal);
    let offset = dot(&normal, &r);
    Halfspace { normal, offset }
}

fn wrap(points: &[Point], members: Vec<usize>, chart: Chart, local: &[Row], k: usize) -> Face {
    let to_local = |global: &[usize]| -> Vec<usize> {
        global
            .iter()
            .map(|g| members.binary_search(g).expect("ridge point is a member"))
            .collect()
    };

    let first = initial_facet(local, k);
    let mut seen: BTreeSet<Row> = BTreeSet::new();
    seen.insert(first.normal.clone());
    let mut pending = alloc::vec![first];
    let mut halfspaces = Vec::new();
    let mut facets: Vec<Face> = Vec::new();

    while let Some(h) = pending.pop() {
        let touching = contact(local, &h);
        let face = Face::build(points, touching.iter().map(|&j| members[j]).collect());
        for ridge in &face.facets {
            let ridge_local = to_local(&ridge.members);
            let next = pivot(local, &h, &touching, &ridge_local, k);
            if seen.insert(next.normal.clone()) {
                pending.push(next);
            }
        }
        halfspaces.push(h);
        facets.push(face);
    }

    let vertices: BTreeSet<usize> = facets
        .iter()
        .flat_map(|f| f.vertices.iter().copied())
        .collect();
    Face {
        members,
        vertices: vertices.into_iter().collect(),
        chart,
        halfspaces,
        facets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use alloc::vec;

    fn pts(raw: &[&[i64]]) -> Vec<Point> {
        let mut v: Vec<Point> = raw.iter().map(|c| Point::from_integers(c)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn all(points: &[Point]) -> Face {
        Face::build(points, (0..points.len()).collect())
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let p = pts(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2], &[1, 1], &[1, 0]]);
        let f = all(&p);
        assert_eq!(f.dim(), 2);
        assert_eq!(f.facets.len(), 4);
        let vs: Vec<&Point> = f.vertices.iter().map(|&i| &p[i]).collect();
        assert_eq!(vs.len(), 4);
        assert!(!vs.contains(&&Point::from_integers(&[1, 0])));
        assert!(!vs.contains(&&Point::from_integers(&[1, 1])));
    }

    #[test]
    fn cube_has_six_square_facets() {
        let mut raw = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    raw.push(Point::from_integers(&[x, y, z]));
                }
            }
        }
        raw.push(Point::new(vec![q(1, 2), q(1, 2), q(1, 2)]));
        raw.sort();
        let f = all(&raw);
        assert_eq!(f.facets.len(), 6);
        assert!(f.facets.iter().all(|x| x.facets.len() == 4));
        assert_eq!(f.vertices.len(), 8);
    }

    #[test]
    fn lower_dimensional_sets_use_their_own_chart() {
        // A triangle lying in the plane x + y + z = 1.
        let p = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let f = all(&p);
        assert_eq!(f.dim(), 2);
        assert_eq!(f.facets.len(), 3);
        assert!(f.contains(&Point::new(vec![q(1, 3), q(1, 3), q(1, 3)])));
        assert!(!f.contains(&Point::new(vec![q(1, 2), q(1, 2), q(1, 2)])));
    }

    #[test]
    fn fan_covers_square_with_two_triangles() {
        let p = pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let simplices = all(&p).fan_simplices();
        assert_eq!(simplices.len(), 2);
        assert!(simplices.iter().all(|s| s.len() == 3 && s[0] == 0));
    }
}
