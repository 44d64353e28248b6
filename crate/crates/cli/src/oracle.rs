//! Independent oracles the suites check the library against.

use convexval_core::Rational;

/// `|λ[0,1]^d ∩ ℤ^d|` by enumerating a padded box and testing the defining
/// inequalities `0 <= x_i <= λ` directly.
pub fn cube_lattice_count(d: usize, lambda: u64) -> u64 {
    let lo = -1i64;
    let hi = lambda as i64 + 1;
    let mut x = vec![lo; d];
    let mut count = 0;
    loop {
        if x.iter().all(|&c| 0 <= c && c <= lambda as i64) {
            count += 1;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if x[i] < hi {
                x[i] += 1;
                break;
            }
            x[i] = lo;
        }
    }
}

/// Monomial coefficients `[c_0, …, c_k]` of the unique polynomial of degree
/// `< samples.len()` through the given points (Newton divided differences).
pub fn fit_polynomial(samples: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = samples.len();
    let xs: Vec<&Rational> = samples.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = samples.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner in Newton form: p = t_0 + (x − x_0)(t_1 + (x − x_1)(…)).
    let mut coeffs = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        // coeffs ← coeffs·(x − x_i) + t_i
        let mut next = vec![Rational::zero(); n];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &(&coeffs[j] * xs[i]);
        }
        next[0] += &table[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
        coeffs.pop();
    }
    coeffs
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
