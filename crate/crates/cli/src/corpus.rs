//! Seeded random inputs for the verification suites.
//!
//! Every criterion draws from its own ChaCha stream of the run seed, so
//! adding cases to one criterion never shifts another's inputs.

use convexval_core::valuation::named_probe;
use convexval_core::{Point, Polytope, Rational, SimplexBasis};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Corpus { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    /// `k/den` with `lo <= k/den <= hi` on a small denominator.
    pub fn rational(&mut self, lo: i64, hi: i64, max_den: i64) -> Rational {
        let den = self.rng.gen_range(1..=max_den);
        let num = self.rng.gen_range(lo * den..=hi * den);
        Rational::new(num, den)
    }

    /// A rational in `(0, hi]`.
    pub fn positive_rational(&mut self, hi: i64, max_den: i64) -> Rational {
        let den = self.rng.gen_range(1..=max_den);
        let num = self.rng.gen_range(1..=hi * den);
        Rational::new(num, den)
    }

    pub fn point(&mut self, n: usize, lo: i64, hi: i64, max_den: i64) -> Point {
        Point::new((0..n).map(|_| self.rational(lo, hi, max_den)).collect())
    }

    /// Hull of a few random points; dimension anywhere from 0 to `n`, with
    /// lower-dimensional bodies made likely on purpose.
    pub fn polytope(&mut self, n: usize) -> Polytope {
        let shape = self.rng.gen_range(0..6);
        let k = match shape {
            0 => 2,
            1 => n.max(1),
            _ => n + 1 + self.rng.gen_range(0..=n.min(2)),
        };
        let mut points: Vec<Point> = (0..k).map(|_| self.point(n, 0, 2, 2)).collect();
        if shape == 1 && n >= 2 {
            // Points on a line through the first one.
            let dir = self.point(n, -1, 1, 2);
            points = (0..3)
                .map(|i| points[0].add(&dir.scale(&Rational::from_integer(i))))
                .collect();
        }
        Polytope::hull(points).expect("non-empty")
    }

    /// Ambient dimension in `1..=3`, then [`Corpus::polytope`].
    pub fn polytope_any(&mut self) -> Polytope {
        let n = self.rng.gen_range(1..=3);
        self.polytope(n)
    }

    /// A full-dimensional body: rejects samples until the dimension is `n`.
    pub fn full_polytope(&mut self, n: usize) -> Polytope {
        loop {
            let p = self.polytope(n);
            if p.dim() == n {
                return p;
            }
        }
    }

    /// Linearly independent rational vectors in `ℚᵈ`.
    pub fn basis(&mut self, d: usize) -> SimplexBasis {
        loop {
            let vectors = (0..d).map(|_| self.point(d, -2, 2, 3)).collect();
            if let Ok(b) = SimplexBasis::new(vectors) {
                return b;
            }
        }
    }

    /// A named probe or a random small polytope in dimension `n`.
    pub fn probe(&mut self, n: usize) -> (String, Polytope) {
        let names = ["unit_cube", "standard_simplex", "asymmetric_simplex", "random"];
        let name = *names.choose(&mut self.rng).expect("non-empty");
        match named_probe(name, n) {
            Some(p) => (name.to_string(), p),
            None => (name.to_string(), self.polytope(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed_and_stream() {
        let a: Vec<Polytope> = (0..5).map({
            let mut c = Corpus::new(7, 3);
            move |_| c.polytope_any()
        }).collect();
        let b: Vec<Polytope> = (0..5).map({
            let mut c = Corpus::new(7, 3);
            move |_| c.polytope_any()
        }).collect();
        assert_eq!(a, b);
        let mut other = Corpus::new(7, 4);
        assert_ne!(a[0..3].to_vec(), (0..3).map(|_| other.polytope_any()).collect::<Vec<_>>());
    }

    #[test]
    fn ranges() {
        let mut c = Corpus::new(1, 0);
        for _ in 0..50 {
            let r = c.rational(-2, 2, 3);
            assert!(r >= Rational::from_integer(-2) && r <= Rational::from_integer(2));
            assert!(c.positive_rational(3, 4).is_positive());
            let p = c.polytope(3);
            assert!(p.dim() <= 3);
        }
        assert_eq!(c.full_polytope(2).dim(), 2);
        assert_eq!(c.basis(3).dim(), 3);
    }
}
