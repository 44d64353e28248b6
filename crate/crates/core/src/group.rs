//! Formal integer sums of polytopes modulo translation.
//!
//! [`FormalSum`] is the free abelian group on translation classes; the
//! inclusion-exclusion relations are not quotiented out, so two sums that
//! agree in the group of convex bodies may still differ structurally. Panel
//! signatures give a sound certificate of inequality.
//!
//! The McMullen components `e_i[X]` are produced by running the extraction
//! of [`crate::difference`] on `λ ↦ [λX]`, so each is an explicit integer
//! combination of rational dilates of `X`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::decomposition::decomposition_pieces;
use crate::difference::{
    extract_components_with, AbelianGroup, ExtractionOptions, FunctionHandle,
};
use crate::error::{Error, Result};
use crate::polytope::{Polytope, SimplexBasis};
use crate::rational::Rational;
use crate::report::Report;
use crate::valuation::Panel;

/// Finite integer combination of keys; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeSum<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord + Clone> FreeSum<K> {
    pub fn empty() -> Self {
        FreeSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(key: K) -> Self {
        let mut s = FreeSum::empty();
        s.add_term(key, BigInt::one());
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut s = FreeSum::empty();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn add_term(&mut self, key: K, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c1·s1 + c2·s2`.
    pub fn combine(s1: &Self, s2: &Self, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        let (c1, c2) = (c1.into(), c2.into());
        let mut out = FreeSum::empty();
        for (k, c) in &s1.terms {
            out.add_term(k.clone(), c * &c1);
        }
        for (k, c) in &s2.terms {
            out.add_term(k.clone(), c * &c2);
        }
        out
    }

    /// Pushes every key through `f`, merging coefficients of keys that
    /// collide.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Result<L>) -> Result<FreeSum<L>> {
        let mut out = FreeSum::empty();
        for (k, c) in &self.terms {
            out.add_term(f(k)?, c.clone());
        }
        Ok(out)
    }
}

impl<K: Ord + Clone + fmt::Debug> AbelianGroup for FreeSum<K> {
    fn zero() -> Self {
        FreeSum::empty()
    }
    fn plus(&self, other: &Self) -> Self {
        FreeSum::combine(self, other, 1, 1)
    }
    fn negate(&self) -> Self {
        FreeSum {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
    fn times(&self, k: &BigInt) -> Self {
        let mut out = FreeSum::empty();
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c * k);
        }
        out
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FreeSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_signed(f, i == 0, c)?;
            write!(f, "[{k:?}]")?;
        }
        Ok(())
    }
}

fn write_signed(f: &mut impl fmt::Write, first: bool, c: &BigInt) -> fmt::Result {
    let magnitude = c.abs();
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    if !magnitude.is_one() {
        write!(f, "{magnitude}")?;
    }
    Ok(())
}

/// Keys that stand for a polytope.
pub trait SumKey: Ord + Clone {
    /// Whether keys are translation classes rather than placed polytopes.
    const TRANSLATION_CLASSES: bool;
    fn polytope(&self) -> &Polytope;
}

impl SumKey for Polytope {
    const TRANSLATION_CLASSES: bool = false;
    fn polytope(&self) -> &Polytope {
        self
    }
}

/// A polytope translated so that its lexicographically smallest vertex is
/// the origin: the canonical representative of its translation class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassRep(Polytope);

impl ClassRep {
    pub fn of(p: &Polytope) -> ClassRep {
        let shift = p.min_vertex().scale(&-Rational::one());
        ClassRep(p.translate(&shift).expect("same dimension"))
    }

    pub fn polytope(&self) -> &Polytope {
        &self.0
    }

    pub fn into_polytope(self) -> Polytope {
        self.0
    }

    pub fn is_point(&self) -> bool {
        self.0.is_point()
    }

    /// `λ` with `self = λ·base` for canonical representatives, if any.
    pub fn dilation_factor_of(&self, base: &ClassRep) -> Option<Rational> {
        if self.0.ambient_dim() != base.0.ambient_dim() {
            return None;
        }
        if self.is_point() {
            return Some(Rational::zero());
        }
        let far = base.0.vertices().last()?;
        let idx = far.coords().iter().position(|c| !c.is_zero())?;
        let lambda = &self.0.vertices().last()?[idx] / &far[idx];
        (lambda.is_positive() && base.0.dilate(&lambda).ok()? == self.0).then_some(lambda)
    }
}

impl SumKey for ClassRep {
    const TRANSLATION_CLASSES: bool = true;
    fn polytope(&self) -> &Polytope {
        &self.0
    }
}

impl fmt::Debug for ClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Elements of the free group on translation classes.
pub type FormalSum = FreeSum<ClassRep>;
/// Sums of placed polytopes, for valuations that see translations.
pub type ExplicitSum = FreeSum<Polytope>;

impl FormalSum {
    /// Text with classes named relative to `x`: `[X]`, `[(1/2)X]`, `[p]`;
    /// terms ordered by decreasing dilation factor, unrelated classes last.
    pub fn describe_relative(&self, x: &Polytope) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let base = ClassRep::of(x);
        let mut named: Vec<(Option<Rational>, &ClassRep, &BigInt)> = self
            .terms()
            .map(|(k, c)| (k.dilation_factor_of(&base), k, c))
            .collect();
        named.sort_by(|a, b| match (&a.0, &b.0) {
            (Some(x), Some(y)) => y.cmp(x),
            (Some(_), None) => core::cmp::Ordering::Less,
            (None, Some(_)) => core::cmp::Ordering::Greater,
            (None, None) => a.1.cmp(b.1),
        });
        let mut out = String::new();
        for (i, (lambda, key, c)) in named.into_iter().enumerate() {
            write_signed(&mut out, i == 0, c).expect("string write");
            let name = match lambda {
                _ if key.is_point() => "[p]".to_string(),
                Some(l) if l.is_one() => "[X]".to_string(),
                Some(l) => format!("[({l})X]"),
                None => format!("[{key:?}]"),
            };
            out.push_str(&name);
        }
        out
    }
}

pub fn class_of(p: &Polytope) -> FormalSum {
    FormalSum::singleton(ClassRep::of(p))
}

pub fn combine(s1: &FormalSum, s2: &FormalSum, c1: i64, c2: i64) -> FormalSum {
    FormalSum::combine(s1, s2, c1, c2)
}

/// `Σ c [λX]` for `s = Σ c [X]`.
pub fn dilate_class(s: &FormalSum, lambda: &Rational) -> Result<FormalSum> {
    if lambda.is_negative() {
        return Err(Error::NegativeFactor(lambda.to_string()));
    }
    s.map_keys(|k| Ok(ClassRep::of(&k.polytope().dilate(lambda)?)))
}

/// The handle `λ ↦ D(λ, s)`.
pub fn dilation_handle(s: &FormalSum) -> FunctionHandle<Rational, FormalSum> {
    let s = s.clone();
    FunctionHandle::fallible(move |lambda: &Rational| dilate_class(&s, lambda))
}

/// `[e_0(s), …, e_d(s)]` by extraction on `λ ↦ D(λ, s)` with degree bound
/// `d`, which must be at least the dimension of every summand.
pub fn component_extraction_on_sum(s: &FormalSum, d: usize) -> Result<Vec<FormalSum>> {
    if let Some(required) = s.terms().map(|(k, _)| k.polytope().dim()).find(|&k| k > d) {
        return Err(Error::DegreeTooSmall {
            degree: d,
            required,
        });
    }
    // Reconstruction holds syntactically for this handle; additivity only
    // holds modulo the inclusion-exclusion relations, so it is not checked
    // structurally here.
    let options = ExtractionOptions {
        check_reconstruction: true,
        ..ExtractionOptions::unchecked()
    };
    let expansion = extract_components_with(&dilation_handle(s), d, &options)?;
    Ok(expansion.coefficients())
}

/// `[e_0[X], …, e_d[X]]` with `d = dim X`.
pub fn mcmullen_components(p: &Polytope) -> Result<Vec<FormalSum>> {
    component_extraction_on_sum(&class_of(p), p.dim())
}

/// The dilation factors and integer coefficients of `e_i[X]` for every
/// `X` of dimension `d`: entry `i` is `Σ c [λ]`, meaning `Σ c [λX]`.
pub fn dilation_formula(d: usize) -> Result<Vec<FreeSum<Rational>>> {
    let f = FunctionHandle::new(|lambda: &Rational| FreeSum::singleton(lambda.clone()));
    let options = ExtractionOptions {
        check_reconstruction: true,
        ..ExtractionOptions::unchecked()
    };
    Ok(extract_components_with(&f, d, &options)?.coefficients())
}

/// Ordered `(descriptor, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PanelSignature {
    pub entries: Vec<(String, Rational)>,
}

impl PanelSignature {
    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.values().all(Rational::is_zero)
    }

    /// Entry-wise sum; both signatures must come from the same panel.
    pub fn plus(&self, other: &PanelSignature) -> PanelSignature {
        PanelSignature {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|((k, a), (_, b))| (k.clone(), a + b))
                .collect(),
        }
    }
}

impl fmt::Display for PanelSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Panel evaluation with a per-class cache, for routines that see the same
/// classes many times.
pub struct PanelEvaluator<'p> {
    panel: &'p Panel,
    cache: BTreeMap<ClassRep, Vec<Rational>>,
}

impl<'p> PanelEvaluator<'p> {
    pub fn new(panel: &'p Panel) -> Result<Self> {
        if let Some(v) = panel.entries().iter().find(|v| !v.translation_invariant()) {
            return Err(Error::NonInvariantOnClasses(v.descriptor()));
        }
        Ok(PanelEvaluator {
            panel,
            cache: BTreeMap::new(),
        })
    }

    pub fn panel(&self) -> &Panel {
        self.panel
    }

    fn class_values(&mut self, key: &ClassRep) -> Result<Vec<Rational>> {
        if let Some(v) = self.cache.get(key) {
            return Ok(v.clone());
        }
        let values = self
            .panel
            .entries()
            .iter()
            .map(|v| v.evaluate(key.polytope()))
            .collect::<Result<Vec<_>>>()?;
        self.cache.insert(key.clone(), values.clone());
        Ok(values)
    }

    pub fn signature(&mut self, s: &FormalSum) -> Result<PanelSignature> {
        let mut acc = alloc::vec![Rational::zero(); self.panel.len()];
        for (key, c) in s.terms() {
            let c = Rational::from_bigint(c.clone());
            for (slot, v) in acc.iter_mut().zip(self.class_values(key)?) {
                *slot += &(v * &c);
            }
        }
        Ok(PanelSignature {
            entries: self
                .panel
                .entries()
                .iter()
                .map(|v| v.descriptor())
                .zip(acc)
                .collect(),
        })
    }

    pub fn compare(&mut self, s1: &FormalSum, s2: &FormalSum) -> Result<Comparison> {
        let (a, b) = (self.signature(s1)?, self.signature(s2)?);
        for ((key, x), (_, y)) in a.entries.iter().zip(&b.entries) {
            if x != y {
                return Ok(Comparison::Distinguished {
                    descriptor: key.clone(),
                    left: x.clone(),
                    right: y.clone(),
                });
            }
        }
        Ok(Comparison::EqualOnPanel)
    }
}

pub fn panel_signature(s: &FormalSum, panel: &Panel) -> Result<PanelSignature> {
    PanelEvaluator::new(panel)?.signature(s)
}

/// Result of [`panel_compare`]. `Distinguished` certifies inequality;
/// `EqualOnPanel` does not certify equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    EqualOnPanel,
    Distinguished {
        descriptor: String,
        left: Rational,
        right: Rational,
    },
}

pub fn panel_compare(s1: &FormalSum, s2: &FormalSum, panel: &Panel) -> Result<Comparison> {
    PanelEvaluator::new(panel)?.compare(s1, s2)
}

/// Re-extracting `e_j[X]` gives `e_j[X]` in slot `j` and zero elsewhere, on
/// the panel.
pub fn verify_idempotence(p: &Polytope, panel: &Panel) -> Result<Report> {
    verify_idempotence_with(p, &mut PanelEvaluator::new(panel)?)
}

/// [`verify_idempotence`] reusing an evaluator's cache.
pub fn verify_idempotence_with(p: &Polytope, eval: &mut PanelEvaluator<'_>) -> Result<Report> {
    let d = p.dim();
    let components = mcmullen_components(p)?;
    let mut report = Report::new(format!("idempotence dim={d}"));
    for (j, ej) in components.iter().enumerate() {
        let again = component_extraction_on_sum(ej, d)?;
        for (i, slot) in again.iter().enumerate() {
            let expected = if i == j { ej.clone() } else { FormalSum::empty() };
            let verdict = eval.compare(slot, &expected)?;
            let detail = match &verdict {
                Comparison::EqualOnPanel => "equal on panel".to_string(),
                Comparison::Distinguished {
                    descriptor,
                    left,
                    right,
                } => format!("{descriptor}: {left} != {right}"),
            };
            report.check(
                format!("e_{i}(e_{j}[X])"),
                verdict == Comparison::EqualOnPanel,
                detail,
            );
        }
    }
    Ok(report)
}

/// `v(e_i[λX]) = λ^i v(e_i[X])` for every panel entry and `i <= dim X`,
/// with `e_i[λX]` extracted under degree bound `dim X`.
pub fn verify_homogeneity(p: &Polytope, lambda: &Rational, panel: &Panel) -> Result<Report> {
    verify_homogeneity_with(p, lambda, &mut PanelEvaluator::new(panel)?)
}

/// [`verify_homogeneity`] reusing an evaluator's cache.
pub fn verify_homogeneity_with(
    p: &Polytope,
    lambda: &Rational,
    eval: &mut PanelEvaluator<'_>,
) -> Result<Report> {
    if lambda.is_negative() {
        return Err(Error::NegativeFactor(lambda.to_string()));
    }
    let d = p.dim();
    let base = mcmullen_components(p)?;
    let scaled = component_extraction_on_sum(&class_of(&p.dilate(lambda)?), d)?;
    let mut report = Report::new(format!("homogeneity dim={d} lambda={lambda}"));
    for i in 0..=d {
        let factor = lambda.pow(i as u32);
        let lhs = eval.signature(&scaled[i])?;
        let rhs = eval.signature(&base[i])?;
        for ((key, l), (_, r)) in lhs.entries.iter().zip(&rhs.entries) {
            let expected = r * &factor;
            report.check(
                format!("{key}(e_{i}[lambda X])"),
                *l == expected,
                format!("{l} vs {lambda}^{i} * {r} = {expected}"),
            );
        }
    }
    Ok(report)
}

/// `[(a+b)σ^d]` against `Σ[A_i] − Σ[B_i]`, which agree in the group of
/// convex bodies; checked on every panel row.
pub fn simplex_identity_as_classes(
    basis: &SimplexBasis,
    a: &Rational,
    b: &Rational,
    panel: &Panel,
) -> Result<Report> {
    simplex_identity_with(basis, a, b, &mut PanelEvaluator::new(panel)?)
}

/// [`simplex_identity_as_classes`] reusing an evaluator's cache.
pub fn simplex_identity_with(
    basis: &SimplexBasis,
    a: &Rational,
    b: &Rational,
    eval: &mut PanelEvaluator<'_>,
) -> Result<Report> {
    let pieces = decomposition_pieces(basis, a, b)?;
    let lhs = class_of(&pieces.whole);
    let mut rhs = FormalSum::empty();
    for p in &pieces.a_pieces {
        rhs = rhs.plus(&class_of(p));
    }
    for p in &pieces.b_pieces {
        rhs = rhs.minus(&class_of(p));
    }
    let mut report = Report::new(format!("simplex identity d={} a={a} b={b}", basis.dim()));
    let left = eval.signature(&lhs)?;
    let right = eval.signature(&rhs)?;
    for ((key, l), (_, r)) in left.entries.iter().zip(&right.entries) {
        report.check(key.clone(), l == r, format!("{l} = {r}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::rational::q;
    use crate::valuation::ValuationDescriptor;
    use alloc::vec;

    fn seg() -> Polytope {
        Polytope::hull(vec![Point::from_integers(&[0, 0]), Point::from_integers(&[2, 1])]).unwrap()
    }

    fn small_panel(n: usize) -> Panel {
        Panel::new(vec![
            ValuationDescriptor::volume(),
            ValuationDescriptor::euler(),
            ValuationDescriptor::probe("unit_cube", Polytope::unit_cube(n)),
        ])
    }

    #[test]
    fn classes_forget_translation() {
        let sq = Polytope::unit_cube(2);
        let moved = sq.translate(&Point::new(vec![q(3, 1), q(-1, 2)])).unwrap();
        assert_eq!(class_of(&sq), class_of(&moved));
        let p = class_of(&Polytope::point(Point::from_integers(&[5, 5])));
        assert_eq!(p, class_of(&Polytope::origin(2)));
    }

    #[test]
    fn group_laws() {
        let x = class_of(&Polytope::unit_cube(2));
        assert!(combine(&x, &x, 1, -1).is_empty());
        assert_eq!(combine(&x, &x, 1, 1).coefficient(&ClassRep::of(&Polytope::unit_cube(2))), BigInt::from(2));
        assert_eq!(combine(&combine(&x, &x, 1, 1), &x, 1, -1), x);
    }

    #[test]
    fn dilation_of_classes() {
        let s = combine(&class_of(&Polytope::unit_cube(2)), &class_of(&seg()), 2, -1);
        assert_eq!(dilate_class(&s, &q(1, 1)).unwrap(), s);
        assert_eq!(
            dilate_class(&class_of(&seg()), &q(0, 1)).unwrap(),
            class_of(&Polytope::origin(2))
        );
        let twice = dilate_class(&dilate_class(&s, &q(2, 3)).unwrap(), &q(3, 4)).unwrap();
        assert_eq!(twice, dilate_class(&s, &q(1, 2)).unwrap());
        assert!(dilate_class(&s, &q(-1, 1)).is_err());
    }

    #[test]
    fn segment_components() {
        let e = mcmullen_components(&seg()).unwrap();
        let p = class_of(&Polytope::origin(2));
        assert_eq!(e.len(), 2);
        assert_eq!(e[0], p);
        assert_eq!(e[1], combine(&class_of(&seg()), &p, 1, -1));
        assert_eq!(e[1].describe_relative(&seg()), "[X] - [p]");
    }

    #[test]
    fn square_components() {
        let sq = Polytope::unit_cube(2);
        let e = mcmullen_components(&sq).unwrap();
        assert_eq!(e[2].describe_relative(&sq), "2[X] - 4[(1/2)X] + 2[p]");
        assert_eq!(e[1].describe_relative(&sq), "-[X] + 4[(1/2)X] - 3[p]");
        assert_eq!(e[0].describe_relative(&sq), "[p]");
        let total = e.iter().fold(FormalSum::empty(), |acc, s| acc.plus(s));
        assert_eq!(total, class_of(&sq));
        let panel = Panel::new(vec![ValuationDescriptor::volume(), ValuationDescriptor::euler()]);
        let sig = panel_signature(&e[2], &panel).unwrap();
        assert_eq!(sig.values().cloned().collect::<Vec<_>>(), vec![q(1, 1), q(0, 1)]);
        let sig = panel_signature(&e[0], &panel).unwrap();
        assert_eq!(sig.values().cloned().collect::<Vec<_>>(), vec![q(0, 1), q(1, 1)]);
        assert!(panel_signature(&FormalSum::empty(), &panel).unwrap().is_zero());
    }

    #[test]
    fn point_has_one_component() {
        let e = mcmullen_components(&Polytope::origin(3)).unwrap();
        assert_eq!(e, vec![class_of(&Polytope::origin(3))]);
    }

    #[test]
    fn formula_matches_closed_form() {
        let f = dilation_formula(2).unwrap();
        let expected = FreeSum::from_terms(vec![
            (q(1, 1), BigInt::from(2)),
            (q(1, 2), BigInt::from(-4)),
            (q(0, 1), BigInt::from(2)),
        ]);
        assert_eq!(f[2], expected);
    }

    #[test]
    fn extraction_on_sums_is_additive() {
        let x = Polytope::unit_cube(2);
        let y = Polytope::standard_simplex(2);
        let s = combine(&class_of(&x), &class_of(&y), 1, 1);
        let whole = component_extraction_on_sum(&s, 2).unwrap();
        let ex = mcmullen_components(&x).unwrap();
        let ey = mcmullen_components(&y).unwrap();
        for i in 0..=2 {
            assert_eq!(whole[i], ex[i].plus(&ey[i]));
        }
        assert!(matches!(
            component_extraction_on_sum(&s, 1),
            Err(Error::DegreeTooSmall { degree: 1, required: 2 })
        ));
        let p = component_extraction_on_sum(&class_of(&Polytope::origin(2)), 3).unwrap();
        assert_eq!(p[0], class_of(&Polytope::origin(2)));
        assert!(p[1..].iter().all(FormalSum::is_empty));
    }

    #[test]
    fn comparisons() {
        let sq = Polytope::unit_cube(2);
        let panel = small_panel(2);
        let moved = sq.translate(&Point::from_integers(&[4, 4])).unwrap();
        assert_eq!(
            panel_compare(&class_of(&sq), &class_of(&moved), &panel).unwrap(),
            Comparison::EqualOnPanel
        );
        match panel_compare(&class_of(&sq), &class_of(&Polytope::origin(2)), &panel).unwrap() {
            Comparison::Distinguished { descriptor, .. } => assert_eq!(descriptor, "volume"),
            other => panic!("{other:?}"),
        }
        let bad = Panel::new(vec![ValuationDescriptor::support(Point::from_integers(&[1, 0]))]);
        assert!(matches!(
            panel_signature(&class_of(&sq), &bad),
            Err(Error::NonInvariantOnClasses(_))
        ));
    }

    #[test]
    fn idempotence_and_homogeneity() {
        let panel = small_panel(2);
        for p in [seg(), Polytope::unit_cube(2), Polytope::asymmetric_simplex(2)] {
            let r = verify_idempotence(&p, &panel).unwrap();
            assert!(r.passed(), "{r:?}");
            for lambda in [q(0, 1), q(1, 2), q(1, 1), q(2, 1), q(3, 1)] {
                let r = verify_homogeneity(&p, &lambda, &panel).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
        let r = verify_homogeneity(&Polytope::unit_cube(2), &q(2, 1), &panel).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "volume(e_2[lambda X])" && c.detail.starts_with("4 ")));
    }

    #[test]
    fn simplex_identity() {
        let r = simplex_identity_as_classes(&SimplexBasis::standard(2), &q(1, 1), &q(1, 1), &small_panel(2))
            .unwrap();
        assert!(r.passed(), "{r:?}");
        let euler = r.checks.iter().find(|c| c.name == "euler").unwrap();
        assert_eq!(euler.detail, "1 = 1");
        let r = simplex_identity_as_classes(&SimplexBasis::standard(1), &q(1, 2), &q(3, 2), &small_panel(1))
            .unwrap();
        assert!(r.passed());
    }
}
