//! The eight exact verification criteria, run on seeded inputs.
//!
//! Each criterion returns an [`Outcome`] naming how many cases it ran and
//! the first few failures. Nothing is compared with a tolerance: every check
//! is an equality of exact rationals or of canonical formal sums.

use convexval_core::decomposition::verify_decomposition;
use convexval_core::difference::{
    extract_components_with, iterated_delta, verify_cocycle, verify_vanishing, ExtractionOptions,
    FunctionHandle, PolynomialExpansion, RationalVector,
};
use convexval_core::group::{
    class_of, mcmullen_components, simplex_identity_with, verify_homogeneity_with,
    verify_idempotence_with, FormalSum, PanelEvaluator,
};
use convexval_core::valuation::{
    ehrhart_expansion, expansion_of_dilation, mixed_volume_2d, Panel, ValuationDescriptor,
};
use convexval_core::{q, Polytope, Rational, Result, SimplexBasis};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::corpus::Corpus;
use crate::oracle::{binomial, cube_lattice_count, fit_polynomial};

/// How many failure messages an outcome keeps.
const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// `[PASS] 3 vanishing: 25 cases` or `[FAIL] …: first failure`.
    pub fn line(&self) -> String {
        let mark = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!("[{mark}] {} {}: {} cases", self.id, self.name, self.cases);
        if let Some(first) = self.failures.first() {
            out.push_str(&format!(", {} failed; first: {first}", self.failure_count));
        }
        out
    }
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(message);
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.fail(message());
        }
    }

    /// Counts one case; an error inside it is a failure.
    fn case(&mut self, label: impl FnOnce() -> String, body: impl FnOnce(&mut Tally) -> Result<()>) {
        self.cases += 1;
        if let Err(e) = body(self) {
            self.fail(format!("{}: {e}", label()));
        }
    }

    fn finish(self, id: u8, name: &'static str) -> Outcome {
        Outcome {
            id,
            name,
            cases: self.cases,
            failures: self.failures,
            failure_count: self.failure_count,
        }
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "difference_laws"),
    (2, "simplex_decomposition"),
    (3, "vanishing"),
    (4, "mcmullen_components"),
    (5, "mixed_volume"),
    (6, "ehrhart"),
    (7, "uniqueness"),
    (8, "constant_factorization"),
];

pub fn run(id: u8, seed: u64) -> Option<Outcome> {
    Some(match id {
        1 => criterion_1(seed),
        2 => criterion_2(seed),
        3 => criterion_3(seed),
        4 => criterion_4(seed),
        5 => criterion_5(seed),
        6 => criterion_6(),
        7 => criterion_7(seed),
        8 => criterion_8(seed),
        _ => return None,
    })
}

/// All criteria, run concurrently; results come back in criterion order.
pub fn run_all(seed: u64) -> Vec<Outcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, _)| scope.spawn(move || run(id, seed).expect("known criterion")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    })
}

/// `Σ_k c_k a^k` as a handle over `ℚ≥0`.
fn polynomial(coeffs: Vec<Rational>) -> FunctionHandle<Rational, Rational> {
    FunctionHandle::new(move |a: &Rational| {
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    })
}

fn random_coeffs(c: &mut Corpus, degree: usize) -> Vec<Rational> {
    let mut coeffs: Vec<Rational> = (0..=degree).map(|_| c.rational(-3, 3, 3)).collect();
    if coeffs[degree].is_zero() {
        coeffs[degree] = Rational::one();
    }
    coeffs
}

fn steps(c: &mut Corpus, p: usize) -> Vec<Rational> {
    (0..p).map(|_| c.positive_rational(3, 4)).collect()
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(Rational::from_integer).product()
}

/// Order invariance of iterated differences, the cocycle identity, and
/// `Δ_u^p` on diagonals of symmetric multiadditive maps (`n!·f` at `p = n`,
/// zero beyond), 100 cases each.
pub fn criterion_1(seed: u64) -> Outcome {
    let mut c = Corpus::new(seed, 1);
    let mut t = Tally::new();
    for case in 0..100 {
        let degree = c.rng().gen_range(1..=4);
        let f = polynomial(random_coeffs(&mut c, degree));
        let p = c.rng().gen_range(1..=4);
        let us = steps(&mut c, p);
        let base = c.rational(0, 3, 3);
        let mut shuffled = us.clone();
        shuffled.shuffle(c.rng());
        t.case(|| format!("order case {case}"), |t| {
            let a = iterated_delta(&f, &us, &base)?;
            let b = iterated_delta(&f, &shuffled, &base)?;
            t.check(a == b, || format!("order case {case}: {a} != {b} for {us:?}"));
            Ok(())
        });
    }
    for case in 0..100 {
        let degree = c.rng().gen_range(0..=4);
        let f = polynomial(random_coeffs(&mut c, degree));
        let (u, v) = (c.positive_rational(3, 4), c.positive_rational(3, 4));
        let base = c.rational(0, 3, 3);
        t.case(|| format!("cocycle case {case}"), |t| {
            let ok = verify_cocycle(&f, &u, &v, &base)?;
            t.check(ok, || format!("cocycle case {case}: u={u} v={v} base={base}"));
            Ok(())
        });
    }
    for case in 0..100 {
        // f = diagonal of F(u_1..u_n) = c·Πu_i (scalar) or (c_1·Πu_i, c_2·Πu_i)
        // (vector), plus lower-degree noise that n-fold differences kill.
        let n = c.rng().gen_range(1..=4);
        let mut lower = random_coeffs(&mut c, n);
        let top = lower.pop().expect("degree n");
        let second = c.rational(-3, 3, 3);
        let us = steps(&mut c, n);
        let extra = c.positive_rational(3, 4);
        let base = c.rational(0, 3, 3);
        let product: Rational = us.iter().cloned().product();
        let nf = factorial(n);
        let mut longer = us.clone();
        longer.push(extra);
        if case % 2 == 0 {
            let mut coeffs = lower.clone();
            coeffs.push(top.clone());
            let f = polynomial(coeffs);
            t.case(|| format!("eq3 case {case}"), |t| {
                let exact = iterated_delta(&f, &us, &base)?;
                let expected = &nf * &top * &product;
                t.check(exact == expected, || format!("eq3 case {case}: p=n gave {exact}, expected {expected}"));
                let beyond = iterated_delta(&f, &longer, &base)?;
                t.check(beyond.is_zero(), || format!("eq3 case {case}: p>n gave {beyond}"));
                Ok(())
            });
        } else {
            let (top1, top2, lower1) = (top.clone(), second.clone(), lower.clone());
            let f = FunctionHandle::new(move |a: &Rational| {
                let an = a.pow(n as u32);
                let mut noise = Rational::zero();
                for coef in lower1.iter().rev() {
                    noise = noise * a + coef;
                }
                RationalVector::new(vec![&top1 * &an + &noise, &top2 * &an])
            });
            t.case(|| format!("eq3 case {case}"), |t| {
                let exact = iterated_delta(&f, &us, &base)?;
                let expected = RationalVector::new(vec![&nf * &top * &product, &nf * &second * &product]);
                t.check(exact == expected, || format!("eq3 case {case}: vector p=n mismatch"));
                let beyond = iterated_delta(&f, &longer, &base)?;
                t.check(beyond == RationalVector::default(), || format!("eq3 case {case}: vector p>n nonzero"));
                Ok(())
            });
        }
    }
    t.finish(1, "difference_laws")
}

pub const SCALE_PAIRS: [(i64, i64, i64, i64); 3] = [(1, 1, 1, 1), (1, 2, 3, 2), (2, 1, 1, 3)];

fn identity_panel(d: usize) -> Panel {
    Panel::new(vec![
        ValuationDescriptor::volume(),
        ValuationDescriptor::euler(),
        ValuationDescriptor::probe("unit_cube", Polytope::unit_cube(d)),
    ])
}

/// Decomposition accounting, grid double inclusion, the valuation law on
/// the witnessed unions and the final identity for three valuations.
pub fn criterion_2(seed: u64) -> Outcome {
    let mut c = Corpus::new(seed, 2);
    let mut t = Tally::new();
    for d in 1..=3 {
        let panel = identity_panel(d);
        let mut eval = PanelEvaluator::new(&panel).expect("invariant panel");
        let bases: Vec<SimplexBasis> = (0..25).map(|_| c.basis(d)).collect();
        for (k, basis) in bases.iter().enumerate() {
            for &(an, ad, bn, bd) in &SCALE_PAIRS {
                let (a, b) = (q(an, ad), q(bn, bd));
                let label = format!("d={d} basis {k} a={a} b={b}");
                t.case(|| label.clone(), |t| {
                    let report = verify_decomposition(basis, &a, &b)?;
                    for f in report.failures() {
                        t.fail(format!("{label}: {} ({})", f.name, f.detail));
                    }
                    let pieces = convexval_core::decomposition::decomposition_pieces(basis, &a, &b)?;
                    for (i, w) in pieces.union_witnesses()?.iter().enumerate() {
                        for v in [ValuationDescriptor::volume(), ValuationDescriptor::euler()] {
                            let lhs = v.evaluate(&w.union)? + v.evaluate(&w.intersection)?;
                            let rhs = v.evaluate(&w.left)? + v.evaluate(&w.right)?;
                            t.check(lhs == rhs, || {
                                format!("{label}: {} law at step {} ({lhs} != {rhs})", v.descriptor(), i + 1)
                            });
                        }
                    }
                    let identity = simplex_identity_with(basis, &a, &b, &mut eval)?;
                    for f in identity.failures() {
                        t.fail(format!("{label}: final identity {} ({})", f.name, f.detail));
                    }
                    Ok(())
                });
            }
        }
    }
    t.finish(2, "simplex_decomposition")
}

/// The shared corpus of criteria 3, 4 and 8: 25 bodies with a probe each.
pub fn body_corpus(seed: u64) -> Vec<(Polytope, String, Polytope)> {
    let mut c = Corpus::new(seed, 3);
    (0..25)
        .map(|_| {
            let x = c.polytope_any();
            let (name, probe) = c.probe(x.ambient_dim());
            (x, name, probe)
        })
        .collect()
}

fn dilation_volume(x: &Polytope, probe: &Polytope) -> FunctionHandle<Rational, Rational> {
    let (x, probe) = (x.clone(), probe.clone());
    FunctionHandle::fallible(move |lambda: &Rational| x.dilate(lambda)?.minkowski_sum(&probe)?.volume())
}

/// `Δ_{u_1}⋯Δ_{u_{dim X+1}} vol(λX + Q) = 0` on all multisets from
/// `{1, 1/2, 2}` at bases `{0, 1/3}`.
pub fn criterion_3(seed: u64) -> Outcome {
    let mut t = Tally::new();
    let us = [q(1, 1), q(1, 2), q(2, 1)];
    let bases = [q(0, 1), q(1, 3)];
    for (k, (x, name, probe)) in body_corpus(seed).iter().enumerate() {
        let label = format!("body {k} (dim {}, probe {name})", x.dim());
        t.case(|| label.clone(), |t| {
            let f = dilation_volume(x, probe);
            let ok = verify_vanishing(&f, x.dim(), &us, &bases)?;
            t.check(ok, || format!("{label}: a difference of order dim+1 is nonzero"));
            Ok(())
        });
    }
    t.finish(3, "vanishing")
}

pub const HOMOGENEITY_FACTORS: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (2, 1), (3, 1)];

/// Closed forms `e_1 = [X] − [p]` (dim 1) and `e_2 = 2[X] − 4[(1/2)X] + 2[p]`
/// (dim 2); `None` for other dimensions.
pub fn closed_form(x: &Polytope) -> Option<(usize, FormalSum)> {
    let p = class_of(&Polytope::origin(x.ambient_dim()));
    let cx = class_of(x);
    match x.dim() {
        1 => Some((1, FormalSum::combine(&cx, &p, 1, -1))),
        2 => {
            let half = class_of(&x.dilate(&q(1, 2)).ok()?);
            Some((2, FormalSum::combine(&FormalSum::combine(&cx, &half, 2, -4), &p, 1, 2)))
        }
        _ => None,
    }
}

fn check_components(t: &mut Tally, label: &str, x: &Polytope, panel: &Panel) -> Result<()> {
    let mut eval = PanelEvaluator::new(panel)?;
    let e = mcmullen_components(x)?;
    let total = e.iter().fold(FormalSum::empty(), |acc, s| FormalSum::combine(&acc, s, 1, 1));
    t.check(total == class_of(x), || format!("{label}: sum of e_i[X] is not [X]"));
    t.check(e[0] == class_of(&Polytope::origin(x.ambient_dim())), || format!("{label}: e_0[X] is not [p]"));
    if let Some((i, expected)) = closed_form(x) {
        t.check(e[i] == expected, || format!("{label}: e_{i}[X] differs from the closed form"));
    }
    for f in verify_idempotence_with(x, &mut eval)?.failures() {
        t.fail(format!("{label}: idempotence {} ({})", f.name, f.detail));
    }
    for &(n, d) in &HOMOGENEITY_FACTORS {
        for f in verify_homogeneity_with(x, &q(n, d), &mut eval)?.failures() {
            t.fail(format!("{label}: homogeneity lambda={} {} ({})", q(n, d), f.name, f.detail));
        }
    }
    Ok(())
}

/// Syntactic `Σ e_i[X] = [X]` and `e_0[X] = [p]`, idempotence and
/// homogeneity on the panel, and the low-dimensional closed forms.
pub fn criterion_4(seed: u64) -> Outcome {
    let mut t = Tally::new();
    let mut bodies: Vec<Polytope> = body_corpus(seed).into_iter().map(|(x, _, _)| x).collect();
    // The closed forms are always exercised, whatever the corpus holds.
    bodies.push(Polytope::interval(q(0, 1), q(3, 2)));
    bodies.push(Polytope::unit_cube(2));
    for (k, x) in bodies.iter().enumerate() {
        let label = format!("body {k} (dim {})", x.dim());
        let panel = Panel::default_for(x.ambient_dim());
        t.case(|| label.clone(), |t| check_components(t, &label, x, &panel));
    }
    t.finish(4, "mcmullen_components")
}

/// The linear coefficient of `vol(λP + Q)` is `2 V(P, Q)`, and `V` is
/// symmetric.
pub fn criterion_5(seed: u64) -> Outcome {
    let mut c = Corpus::new(seed, 5);
    let mut t = Tally::new();
    for k in 0..25 {
        let (p, other) = (c.polytope(2), c.polytope(2));
        let label = format!("pair {k}");
        t.case(|| label.clone(), |t| {
            let e = expansion_of_dilation(&ValuationDescriptor::volume(), &p, Some(&other))?;
            let v = mixed_volume_2d(&p, &other)?;
            let f1 = e.component_at_unit(1);
            let twice = &v * q(2, 1);
            t.check(*f1 == twice, || format!("{label}: f_1 = {f1}, 2V = {twice}"));
            let w = mixed_volume_2d(&other, &p)?;
            t.check(v == w, || format!("{label}: V(P,Q) = {v}, V(Q,P) = {w}"));
            Ok(())
        });
    }
    t.finish(5, "mixed_volume")
}

pub const EHRHART_MAX_LAMBDA: u64 = 10;

/// Lattice counts of cube dilates against brute force and `(λ+1)^d`, and
/// extraction over `ℕ → ℚ` against the fitted polynomial.
pub fn criterion_6() -> Outcome {
    let mut t = Tally::new();
    for d in 1..=3usize {
        let label = format!("cube d={d}");
        t.case(|| label.clone(), |t| {
            let cube = Polytope::unit_cube(d);
            let mut samples = Vec::new();
            for lambda in 0..=EHRHART_MAX_LAMBDA {
                let count = cube.dilate(&Rational::from_integer(lambda as i64))?.lattice_count()?;
                let brute = cube_lattice_count(d, lambda);
                let closed = (lambda + 1).pow(d as u32);
                t.check(count == brute && brute == closed, || {
                    format!("{label}: lambda={lambda} count {count}, oracle {brute}, (lambda+1)^d {closed}")
                });
                samples.push((Rational::from_integer(lambda as i64), Rational::from_integer(brute as i64)));
            }
            let fitted = fit_polynomial(&samples);
            let binomials: Vec<Rational> =
                (0..=d as u64).map(|k| Rational::from_integer(binomial(d as u64, k) as i64)).collect();
            t.check(fitted == binomials, || format!("{label}: fitted {fitted:?} vs binomials {binomials:?}"));
            let extracted = ehrhart_expansion(&cube, d)?.coefficients();
            t.check(extracted == fitted, || format!("{label}: extracted {extracted:?} vs fitted {fitted:?}"));
            Ok(())
        });
    }
    t.finish(6, "ehrhart")
}

fn same_expansion(
    a: &PolynomialExpansion<Rational, Rational>,
    b: &PolynomialExpansion<Rational, Rational>,
    args: &[Vec<Rational>],
) -> Result<bool> {
    if a.coefficients() != b.coefficients() {
        return Ok(false);
    }
    for k in 1..=a.degree() {
        for tuple in args {
            if a.component(k, &tuple[..k])? != b.component(k, &tuple[..k])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Extraction reading the constant differences at base `1` versus base
/// `1/3` gives identical components.
pub fn criterion_7(seed: u64) -> Outcome {
    let mut c = Corpus::new(seed, 7);
    let mut t = Tally::new();
    let grid_one = ExtractionOptions::default().with_base_points(vec![q(1, 1)]);
    let grid_third = ExtractionOptions::default().with_base_points(vec![q(1, 3)]);
    for k in 0..50 {
        let (f, degree, label) = if k % 2 == 0 {
            let degree = c.rng().gen_range(0..=3);
            (polynomial(random_coeffs(&mut c, degree)), degree, format!("polynomial case {k}"))
        } else {
            let n = c.rng().gen_range(1..=2);
            let x = c.polytope(n);
            let (name, probe) = c.probe(n);
            (dilation_volume(&x, &probe), n, format!("volume case {k} (probe {name})"))
        };
        let args: Vec<Vec<Rational>> = (0..3).map(|_| steps(&mut c, 3)).collect();
        t.case(|| label.clone(), |t| {
            let a = extract_components_with(&f, degree, &grid_one)?;
            let b = extract_components_with(&f, degree, &grid_third)?;
            let same = same_expansion(&a, &b, &args)?;
            t.check(same, || format!("{label}: components depend on the base point"));
            Ok(())
        });
    }
    t.finish(7, "uniqueness")
}

/// `v([X]) − v([p]) = Σ_{i≥1} v(e_i[X])` for every panel valuation.
pub fn criterion_8(seed: u64) -> Outcome {
    let mut t = Tally::new();
    for (k, (x, _, _)) in body_corpus(seed).iter().enumerate() {
        let label = format!("body {k}");
        let panel = Panel::default_for(x.ambient_dim());
        t.case(|| label.clone(), |t| {
            let mut eval = PanelEvaluator::new(&panel)?;
            let e = mcmullen_components(x)?;
            let whole = eval.signature(&class_of(x))?;
            let point = eval.signature(&class_of(&Polytope::origin(x.ambient_dim())))?;
            let mut higher = eval.signature(&FormalSum::empty())?;
            for ei in &e[1..] {
                higher = higher.plus(&eval.signature(ei)?);
            }
            for (((key, w), (_, p)), (_, h)) in whole.entries.iter().zip(&point.entries).zip(&higher.entries) {
                let lhs = w - p;
                t.check(lhs == *h, || format!("{label}: {key}: {lhs} != {h}"));
            }
            Ok(())
        });
    }
    t.finish(8, "constant_factorization")
}
