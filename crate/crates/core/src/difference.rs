//! Difference operators and polynomial expansions.
//!
//! For `f: A → M` from an abelian semigroup to an abelian group,
//! `(Δ_u f)(a) = f(a + u) − f(a)`. A function killed by every `(n+1)`-fold
//! difference has a unique expansion `f = f_0 + f_1^* + ⋯ + f_n^*` where each
//! `f_k: Aᵏ → M` is symmetric and additive in every argument and
//! `f_k^*(a) = f_k(a, …, a)`. The top component is read off from the constant
//! `h(u_1, …, u_n) = Δ_{u_1}⋯Δ_{u_n} f`:
//!
//! * when `A` is divisible, `f_n(u) = (n!)^{n−1} · h(u_1/n!, …, u_n/n!)`;
//! * when only `M` is divisible, `f_n(u) = h(u) / n!`;
//!
//! and the rest by recursion on `f − f_n^*`.
//!
//! Everything here is computed symbolically first: a component value is a
//! finite [`Combination`] of sample points of `A`, and `f` is only evaluated
//! once per distinct point when the combination is applied. With `M` a group
//! of formal sums this makes the components explicit integer combinations of
//! values of `f`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::factorial_u64;
use crate::rational::Rational;

/// Domain of a function handle: a commutative monoid with a distinguished
/// element `unit` at which components are reported.
pub trait Semigroup: Clone + Ord + fmt::Debug + Send + Sync + 'static {
    /// Whether `x ↦ k·x` can be inverted for every positive integer `k`.
    const DIVISIBLE: bool = false;

    fn identity() -> Self;
    fn unit() -> Self;
    fn combine(&self, other: &Self) -> Self;

    /// The unique `y` with `k·y = self`, when the semigroup is divisible.
    fn divide(&self, _k: u64) -> Option<Self> {
        None
    }
}

/// Value group of a function handle.
pub trait AbelianGroup: Clone + PartialEq + fmt::Debug {
    /// Whether the group is a `ℚ`-vector space, so [`AbelianGroup::scaled`]
    /// accepts every rational.
    const DIVISIBLE: bool = false;

    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// `k · self` by doubling.
    fn times(&self, k: &BigInt) -> Self {
        let mut acc = Self::zero();
        let mut power = if k.is_negative() {
            self.negate()
        } else {
            self.clone()
        };
        let mut k = k.abs();
        while !k.is_zero() {
            if (&k & BigInt::one()).is_one() {
                acc = acc.plus(&power);
            }
            k >>= 1;
            if !k.is_zero() {
                power = power.plus(&power);
            }
        }
        acc
    }

    /// `r · self`; integers always work, other rationals need a divisible group.
    fn scaled(&self, r: &Rational) -> Option<Self> {
        r.to_integer().map(|k| self.times(&k))
    }
}

impl Semigroup for Rational {
    const DIVISIBLE: bool = true;

    fn identity() -> Self {
        Rational::zero()
    }
    fn unit() -> Self {
        Rational::one()
    }
    fn combine(&self, other: &Self) -> Self {
        self + other
    }
    fn divide(&self, k: u64) -> Option<Self> {
        (k > 0).then(|| self / Rational::from_bigint(k.into()))
    }
}

impl Semigroup for u64 {
    fn identity() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn combine(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("natural number overflow")
    }
}

impl AbelianGroup for Rational {
    const DIVISIBLE: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, k: &BigInt) -> Self {
        self * Rational::from_bigint(k.clone())
    }
    fn scaled(&self, r: &Rational) -> Option<Self> {
        Some(self * r)
    }
}

/// A finitely supported vector over `ℚ`; trailing zeros are not stored, so
/// vectors of different lengths compare as if padded with zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(mut entries: Vec<Rational>) -> Self {
        while entries.last().is_some_and(Rational::is_zero) {
            entries.pop();
        }
        RationalVector(entries)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }
}

impl AbelianGroup for RationalVector {
    const DIVISIBLE: bool = true;

    fn zero() -> Self {
        RationalVector(Vec::new())
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        RationalVector::new((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }
    fn negate(&self) -> Self {
        RationalVector(self.0.iter().map(|x| -x).collect())
    }
    fn scaled(&self, r: &Rational) -> Option<Self> {
        Some(RationalVector::new(self.0.iter().map(|x| x * r).collect()))
    }
}

/// A black-box function `A → M`. Evaluation may fail (for instance when a
/// geometric kernel refuses an input); failures propagate out of every
/// operation that evaluates the handle.
pub struct FunctionHandle<A, M> {
    eval: Arc<dyn Fn(&A) -> Result<M> + Send + Sync>,
}

impl<A, M> Clone for FunctionHandle<A, M> {
    fn clone(&self) -> Self {
        FunctionHandle {
            eval: Arc::clone(&self.eval),
        }
    }
}

impl<A, M> fmt::Debug for FunctionHandle<A, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FunctionHandle")
    }
}

impl<A: Semigroup, M: AbelianGroup> FunctionHandle<A, M> {
    pub fn new(f: impl Fn(&A) -> M + Send + Sync + 'static) -> Self {
        FunctionHandle {
            eval: Arc::new(move |a| Ok(f(a))),
        }
    }

    pub fn fallible(f: impl Fn(&A) -> Result<M> + Send + Sync + 'static) -> Self {
        FunctionHandle { eval: Arc::new(f) }
    }

    pub fn eval(&self, a: &A) -> Result<M> {
        (self.eval)(a)
    }
}

/// A finite `ℚ`-combination `Σ c_j · [a_j]` of points of `A`; applying it to
/// `f` gives `Σ c_j · f(a_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Combination<A: Ord> {
    terms: BTreeMap<A, Rational>,
}

impl<A: Semigroup> Combination<A> {
    pub fn empty() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }

    pub fn point(a: A) -> Self {
        let mut c = Combination::empty();
        c.add_term(a, Rational::one());
        c
    }

    pub fn add_term(&mut self, a: A, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(a).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            // Drop cancelled terms so equal combinations compare equal.
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Combination<A>, c: &Rational) {
        for (a, x) in &other.terms {
            self.add_term(a.clone(), x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&A, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }
}

/// Evaluates a handle at most once per distinct point within one operation.
struct Memo<'h, A: Ord, M> {
    f: &'h FunctionHandle<A, M>,
    cache: BTreeMap<A, M>,
}

impl<'h, A: Semigroup, M: AbelianGroup> Memo<'h, A, M> {
    fn new(f: &'h FunctionHandle<A, M>) -> Self {
        Memo {
            f,
            cache: BTreeMap::new(),
        }
    }

    fn value(&mut self, a: &A) -> Result<M> {
        if let Some(v) = self.cache.get(a) {
            return Ok(v.clone());
        }
        let v = self.f.eval(a)?;
        self.cache.insert(a.clone(), v.clone());
        Ok(v)
    }

    fn apply(&mut self, form: &Combination<A>) -> Result<M> {
        let mut acc = M::zero();
        for (a, c) in form.terms() {
            let v = self.value(a)?;
            let term = v.scaled(c).ok_or(Error::DivisionUnsupported)?;
            acc = acc.plus(&term);
        }
        Ok(acc)
    }
}

/// Applies a combination to `f`, evaluating each point once.
pub fn apply_combination<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    form: &Combination<A>,
) -> Result<M> {
    Memo::new(f).apply(form)
}

/// `Σ_{S ⊆ {1..p}} (−1)^{p−|S|} [base + Σ_{i∈S} u_i]`, the point form of
/// `(Δ_{u_1}⋯Δ_{u_p} f)(base)`.
pub fn delta_combination<A: Semigroup>(us: &[A], base: &A) -> Combination<A> {
    let p = us.len();
    let mut form = Combination::empty();
    for mask in 0u64..(1u64 << p) {
        let mut point = base.clone();
        for (i, u) in us.iter().enumerate() {
            if mask >> i & 1 == 1 {
                point = point.combine(u);
            }
        }
        let sign = if (p - mask.count_ones() as usize) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        form.add_term(point, sign);
    }
    form
}

/// `(Δ_{u_1}⋯Δ_{u_p} f)(base)` for `p >= 1`.
pub fn iterated_delta<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    us: &[A],
    base: &A,
) -> Result<M> {
    if us.is_empty() {
        return Err(Error::InvalidArgument(
            "iterated difference needs at least one step".into(),
        ));
    }
    check_width(us.len())?;
    apply_combination(f, &delta_combination(us, base))
}

fn check_width(p: usize) -> Result<()> {
    if p > 24 {
        return Err(Error::InvalidArgument(format!(
            "{p}-fold difference needs 2^{p} evaluations"
        )));
    }
    Ok(())
}

/// `(Δ_{u+v} − Δ_u − Δ_v) f = Δ_u Δ_v f` at `base`, both sides evaluated
/// separately and compared exactly.
pub fn verify_cocycle<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    u: &A,
    v: &A,
    base: &A,
) -> Result<bool> {
    let mut memo = Memo::new(f);
    let uv = u.combine(v);
    let lhs = memo
        .apply(&delta_combination(core::slice::from_ref(&uv), base))?
        .minus(&memo.apply(&delta_combination(core::slice::from_ref(u), base))?)
        .minus(&memo.apply(&delta_combination(core::slice::from_ref(v), base))?);
    let rhs = memo.apply(&delta_combination(&[u.clone(), v.clone()], base))?;
    Ok(lhs == rhs)
}

/// All multisets of size `size` drawn from `items`, as index-nondecreasing
/// tuples.
pub fn multisets<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; size];
    if items.is_empty() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        let Some(pos) = (0..size).rev().find(|&p| idx[p] + 1 < items.len()) else {
            return out;
        };
        let next = idx[pos] + 1;
        for slot in idx[pos..].iter_mut() {
            *slot = next;
        }
    }
}

/// Whether every `(n+1)`-fold difference with steps drawn (with repetition)
/// from `steps` vanishes at every base point in `bases`.
pub fn verify_vanishing<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    n: usize,
    steps: &[A],
    bases: &[A],
) -> Result<bool> {
    if steps.is_empty() || bases.is_empty() {
        return Err(Error::InvalidArgument("empty sample list".into()));
    }
    check_width(n + 1)?;
    let mut memo = Memo::new(f);
    for us in multisets(steps, n + 1) {
        for base in bases {
            if !memo.apply(&delta_combination(&us, base))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Division {
    /// `f_k(u) = (k!)^{k−1} h(u_1/k!, …, u_k/k!)`.
    Arguments,
    /// `f_k(u) = h(u) / k!`.
    Values,
}

/// Symbolic form of the recursive extraction for a fixed degree bound and
/// base point.
#[derive(Clone, Debug)]
struct Recipe<A> {
    degree: usize,
    division: Division,
    base: A,
}

impl<A: Semigroup> Recipe<A> {
    /// Point form of `f_k(args)`.
    fn component(&self, k: usize, args: &[A]) -> Result<Combination<A>> {
        debug_assert_eq!(args.len(), k);
        let kf = factorial_u64(k).ok_or(Error::DivisionUnsupported)?;
        let (steps, scale) = match self.division {
            Division::Arguments => {
                let steps = args
                    .iter()
                    .map(|u| u.divide(kf).ok_or(Error::DivisionUnsupported))
                    .collect::<Result<Vec<_>>>()?;
                let scale = Rational::from_bigint(BigInt::from(kf).pow(k.saturating_sub(1) as u32));
                (steps, scale)
            }
            Division::Values => (
                args.to_vec(),
                Rational::one() / Rational::from_bigint(kf.into()),
            ),
        };
        let mut out = Combination::empty();
        for (point, sign) in delta_combination(&steps, &self.base).terms() {
            out.add_scaled(&self.residual(k, point)?, &(sign * &scale));
        }
        Ok(out)
    }

    /// Point form of `r_m(a) = f(a) − Σ_{k>m} f_k^*(a)`.
    fn residual(&self, m: usize, a: &A) -> Result<Combination<A>> {
        if m >= self.degree {
            return Ok(Combination::point(a.clone()));
        }
        let mut out = self.residual(m + 1, a)?;
        let diagonal = alloc::vec![a.clone(); m + 1];
        out.add_scaled(&self.component(m + 1, &diagonal)?, &-Rational::one());
        Ok(out)
    }

    fn constant(&self) -> Result<Combination<A>> {
        self.residual(0, &self.base)
    }
}

/// Knobs for [`extract_components_with`].
#[derive(Clone, Debug)]
pub struct ExtractionOptions<A> {
    /// Points at which the constant differences `h` are read off. The first
    /// one defines the result; any further ones must give identical component
    /// values or extraction fails.
    pub base_points: Vec<A>,
    /// Check `f_0 + Σ_k f_k(a, …, a) = f(a)` at every probe point.
    pub check_reconstruction: bool,
    /// Check additivity and symmetry of every component on probe pairs.
    pub check_additivity: bool,
    pub probes: Vec<A>,
}

impl<A: Semigroup> Default for ExtractionOptions<A> {
    fn default() -> Self {
        ExtractionOptions {
            base_points: alloc::vec![A::identity()],
            check_reconstruction: true,
            check_additivity: true,
            probes: default_probes(),
        }
    }
}

impl<A: Semigroup> ExtractionOptions<A> {
    /// No post-checks. Used when `M` equality is only a fingerprint of the
    /// intended equality, as for formal sums.
    pub fn unchecked() -> Self {
        ExtractionOptions {
            check_reconstruction: false,
            check_additivity: false,
            ..ExtractionOptions::default()
        }
    }

    pub fn with_base_points(mut self, base_points: Vec<A>) -> Self {
        self.base_points = base_points;
        self
    }
}

fn multiple<A: Semigroup>(a: &A, k: usize) -> A {
    (0..k).fold(A::identity(), |acc, _| acc.combine(a))
}

/// Twenty distinct probe points: `j/den` for small `den` when `A` is
/// divisible, else `0, 1, …, 19`.
pub fn default_probes<A: Semigroup>() -> Vec<A> {
    const COUNT: usize = 20;
    let unit = A::unit();
    if !A::DIVISIBLE {
        return (0..COUNT).map(|j| multiple(&unit, j)).collect();
    }
    let mut out: Vec<A> = Vec::new();
    'outer: for den in 1..=6u64 {
        for j in 0..=(3 * den as usize) {
            let Some(p) = multiple(&unit, j).divide(den) else {
                continue;
            };
            if !out.contains(&p) {
                out.push(p);
                if out.len() == COUNT {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// An extracted expansion `f(a) = f_0 + Σ_{k=1}^{d} f_k(a, …, a)`.
#[derive(Clone, Debug)]
pub struct PolynomialExpansion<A, M> {
    degree: usize,
    constant: M,
    unit_values: Vec<M>,
    recipe: Recipe<A>,
    source: FunctionHandle<A, M>,
}

impl<A: Semigroup, M: AbelianGroup> PolynomialExpansion<A, M> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `f_0`.
    pub fn constant(&self) -> &M {
        &self.constant
    }

    /// `f_k(1, …, 1)` for `1 <= k <= degree`.
    pub fn component_at_unit(&self, k: usize) -> &M {
        &self.unit_values[k - 1]
    }

    /// `[f_0, f_1(1), f_2(1,1), …]`.
    pub fn coefficients(&self) -> Vec<M> {
        let mut out = alloc::vec![self.constant.clone()];
        out.extend(self.unit_values.iter().cloned());
        out
    }

    /// The point combination computing `f_k(args)`.
    pub fn component_combination(&self, k: usize, args: &[A]) -> Result<Combination<A>> {
        self.check_arity(k, args)?;
        self.recipe.component(k, args)
    }

    pub fn constant_combination(&self) -> Result<Combination<A>> {
        self.recipe.constant()
    }

    /// `f_k(args)` for `1 <= k <= degree` and `args.len() == k`.
    pub fn component(&self, k: usize, args: &[A]) -> Result<M> {
        apply_combination(&self.source, &self.component_combination(k, args)?)
    }

    /// `f_0 + Σ_k f_k(a, …, a)`.
    pub fn evaluate(&self, a: &A) -> Result<M> {
        let mut memo = Memo::new(&self.source);
        let mut acc = self.constant.clone();
        for k in 1..=self.degree {
            let form = self.recipe.component(k, &alloc::vec![a.clone(); k])?;
            acc = acc.plus(&memo.apply(&form)?);
        }
        Ok(acc)
    }

    fn check_arity(&self, k: usize, args: &[A]) -> Result<()> {
        if k == 0 || k > self.degree || args.len() != k {
            return Err(Error::InvalidArgument(format!(
                "component {k} with {} arguments of a degree-{} expansion",
                args.len(),
                self.degree
            )));
        }
        Ok(())
    }
}

fn division_for<A: Semigroup, M: AbelianGroup>() -> Result<Division> {
    if A::DIVISIBLE {
        Ok(Division::Arguments)
    } else if M::DIVISIBLE {
        Ok(Division::Values)
    } else {
        Err(Error::DivisionUnsupported)
    }
}

/// Extracts the expansion of `f` with degree bound `n` using the default
/// options: base point `0` and exact post-checks at twenty probe points.
pub fn extract_components<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    n: usize,
) -> Result<PolynomialExpansion<A, M>> {
    extract_components_with(f, n, &ExtractionOptions::default())
}

pub fn extract_components_with<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    n: usize,
    options: &ExtractionOptions<A>,
) -> Result<PolynomialExpansion<A, M>> {
    let division = division_for::<A, M>()?;
    let mut memo = Memo::new(f);
    let mut primary: Option<(M, Vec<M>, Recipe<A>)> = None;
    let unit = A::unit();

    let bases: Vec<A> = if options.base_points.is_empty() {
        alloc::vec![A::identity()]
    } else {
        options.base_points.clone()
    };
    for base in &bases {
        let recipe = Recipe {
            degree: n,
            division,
            base: base.clone(),
        };
        let constant = memo.apply(&recipe.constant()?)?;
        let values = (1..=n)
            .map(|k| memo.apply(&recipe.component(k, &alloc::vec![unit.clone(); k])?))
            .collect::<Result<Vec<M>>>()?;
        match &primary {
            None => primary = Some((constant, values, recipe)),
            Some((c0, v0, _)) => {
                if *c0 != constant || *v0 != values {
                    return Err(Error::ReconstructionFailure(format!(
                        "components read at base {:?} differ from those at base {:?}",
                        base, bases[0]
                    )));
                }
            }
        }
    }
    let (constant, unit_values, recipe) = primary.expect("at least one base point");

    if options.check_reconstruction {
        for a in &options.probes {
            let mut acc = constant.clone();
            for k in 1..=n {
                acc = acc.plus(&memo.apply(&recipe.component(k, &alloc::vec![a.clone(); k])?)?);
            }
            if acc != memo.value(a)? {
                return Err(Error::ReconstructionFailure(format!(
                    "expansion disagrees with the function at {a:?}"
                )));
            }
        }
    }

    if options.check_additivity {
        let probes = &options.probes;
        for k in 1..=n {
            for pair in probes.windows(2).take(4) {
                let (p, r) = (&pair[0], &pair[1]);
                let mut args_p = alloc::vec![unit.clone(); k];
                let mut args_r = args_p.clone();
                let mut args_pr = args_p.clone();
                args_p[0] = p.clone();
                args_r[0] = r.clone();
                args_pr[0] = p.combine(r);
                let split = memo
                    .apply(&recipe.component(k, &args_p)?)?
                    .plus(&memo.apply(&recipe.component(k, &args_r)?)?);
                if memo.apply(&recipe.component(k, &args_pr)?)? != split {
                    return Err(Error::ReconstructionFailure(format!(
                        "component {k} is not additive at {p:?} + {r:?}"
                    )));
                }
                if k >= 2 {
                    let mut swapped = args_p.clone();
                    swapped[1] = r.clone();
                    let mut other = swapped.clone();
                    other.swap(0, 1);
                    if memo.apply(&recipe.component(k, &swapped)?)?
                        != memo.apply(&recipe.component(k, &other)?)?
                    {
                        return Err(Error::ReconstructionFailure(format!(
                            "component {k} is not symmetric at ({p:?}, {r:?})"
                        )));
                    }
                }
            }
        }
    }

    Ok(PolynomialExpansion {
        degree: n,
        constant,
        unit_values,
        recipe,
        source: f.clone(),
    })
}

/// `f_k(args)` of the expansion of `f` with degree bound `n`.
pub fn component_value<A: Semigroup, M: AbelianGroup>(
    f: &FunctionHandle<A, M>,
    n: usize,
    k: usize,
    args: &[A],
) -> Result<M> {
    extract_components(f, n)?.component(k, args)
}

/// For `f: ℚ≥0ᵏ → M` additive in each argument, checks
/// `f(λ_1, …, λ_k) = f(λ_1⋯λ_k, 1, …, 1)` on every sample tuple.
pub fn verify_diagonal_collapse<M: AbelianGroup>(
    f_multi: &dyn Fn(&[Rational]) -> Result<M>,
    samples: &[Vec<Rational>],
) -> Result<bool> {
    for tuple in samples {
        if tuple.is_empty() {
            continue;
        }
        let product: Rational = tuple.iter().cloned().product();
        let mut collapsed = alloc::vec![Rational::one(); tuple.len()];
        collapsed[0] = product;
        if f_multi(tuple)? != f_multi(&collapsed)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use alloc::vec;

    fn poly(coeffs: &'static [i64]) -> FunctionHandle<Rational, Rational> {
        FunctionHandle::new(move |a: &Rational| {
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| Rational::from_integer(c) * a.pow(i as u32))
                .sum()
        })
    }

    #[test]
    fn square_gives_twice_the_product() {
        let f = poly(&[0, 0, 1]);
        let (u, v) = (q(2, 3), q(5, 7));
        let d = iterated_delta(&f, &[u.clone(), v.clone()], &Rational::zero()).unwrap();
        assert_eq!(d, Rational::from_integer(2) * &u * &v);
        let d3 = iterated_delta(&f, &[u, v, q(1, 9)], &q(4, 1)).unwrap();
        assert!(d3.is_zero());
    }

    #[test]
    fn constant_has_zero_difference() {
        let f = poly(&[7]);
        assert!(iterated_delta(&f, &[q(3, 2)], &q(1, 5)).unwrap().is_zero());
        assert!(iterated_delta(&f, &[], &q(1, 5)).is_err());
    }

    #[test]
    fn cocycle_examples() {
        let sq = poly(&[0, 0, 1]);
        assert!(verify_cocycle(&sq, &q(1, 1), &q(2, 1), &Rational::zero()).unwrap());
        assert!(verify_cocycle(&poly(&[4]), &q(1, 1), &q(2, 1), &q(3, 1)).unwrap());
        let cube = poly(&[0, 0, 0, 1]);
        assert!(verify_cocycle(&cube, &q(1, 2), &q(1, 3), &q(1, 1)).unwrap());
    }

    #[test]
    fn vanishing_detects_degree() {
        let f = poly(&[3, 2, 5]);
        let steps = [q(1, 1), q(1, 2), q(2, 1)];
        let bases = [Rational::zero(), q(1, 3)];
        assert!(verify_vanishing(&f, 2, &steps, &bases).unwrap());
        assert!(!verify_vanishing(&f, 1, &steps, &bases).unwrap());
    }

    #[test]
    fn multisets_count() {
        // C(3 + 4 - 1, 4) = 15
        assert_eq!(multisets(&[1, 2, 3], 4).len(), 15);
        assert_eq!(multisets(&[1, 2], 1), vec![vec![1], vec![2]]);
    }

    #[test]
    fn extracts_quadratic() {
        let e = extract_components(&poly(&[3, 2, 5]), 2).unwrap();
        assert_eq!(e.constant(), &q(3, 1));
        assert_eq!(e.component_at_unit(1), &q(2, 1));
        assert_eq!(e.component_at_unit(2), &q(5, 1));
        for a in [q(0, 1), q(1, 1), q(2, 1), q(1, 2)] {
            assert_eq!(e.evaluate(&a).unwrap(), q(3, 1) + q(2, 1) * &a + q(5, 1) * &a * &a);
        }
    }

    #[test]
    fn constant_function_degree_zero() {
        let e = extract_components(&poly(&[9]), 0).unwrap();
        assert_eq!(e.constant(), &q(9, 1));
        assert_eq!(e.coefficients(), vec![q(9, 1)]);
    }

    #[test]
    fn component_values() {
        let f = poly(&[0, 0, 5]);
        let (u, v) = (q(3, 4), q(2, 9));
        assert_eq!(
            component_value(&f, 2, 2, &[u.clone(), v.clone()]).unwrap(),
            q(5, 1) * &u * &v
        );
        assert!(component_value(&f, 2, 2, &[Rational::zero(), v]).unwrap().is_zero());
        assert_eq!(
            component_value(&poly(&[0, 2]), 1, 1, &[u.clone()]).unwrap(),
            q(2, 1) * &u
        );
    }

    #[test]
    fn degree_too_low_is_reported() {
        let err = extract_components(&poly(&[0, 0, 1]), 1).unwrap_err();
        assert!(matches!(err, Error::ReconstructionFailure(_)));
    }

    #[test]
    fn base_points_must_agree() {
        let opts = ExtractionOptions::default().with_base_points(vec![q(1, 1), q(1, 3)]);
        assert!(extract_components_with(&poly(&[1, -4, 2, 7]), 3, &opts).is_ok());
        // A non-polynomial function gives different constants at different bases.
        let f = FunctionHandle::new(|a: &Rational| (Rational::one() + a).recip().unwrap());
        let opts = ExtractionOptions::unchecked().with_base_points(vec![q(1, 1), q(1, 3)]);
        assert!(extract_components_with(&f, 1, &opts).is_err());
    }

    #[test]
    fn naturals_use_value_division() {
        // (λ + 1)^2 over ℕ → ℚ.
        let f = FunctionHandle::new(|n: &u64| Rational::from_integer((*n as i64 + 1).pow(2)));
        let e = extract_components(&f, 2).unwrap();
        assert_eq!(e.coefficients(), vec![q(1, 1), q(2, 1), q(1, 1)]);
    }

    #[derive(Clone, PartialEq, Debug)]
    struct Integer(BigInt);

    impl AbelianGroup for Integer {
        fn zero() -> Self {
            Integer(BigInt::zero())
        }
        fn plus(&self, o: &Self) -> Self {
            Integer(&self.0 + &o.0)
        }
        fn negate(&self) -> Self {
            Integer(-&self.0)
        }
    }

    #[test]
    fn no_divisibility_anywhere_is_an_error() {
        let f = FunctionHandle::new(|n: &u64| Integer(BigInt::from(*n)));
        assert_eq!(extract_components(&f, 1).unwrap_err(), Error::DivisionUnsupported);
    }

    #[test]
    fn times_by_doubling_matches_repeated_addition() {
        let x = Integer(BigInt::from(7));
        for k in -9i64..=9 {
            assert_eq!(x.times(&BigInt::from(k)), Integer(BigInt::from(7 * k)));
        }
    }

    #[test]
    fn vector_valued_functions() {
        let f: FunctionHandle<Rational, RationalVector> =
            FunctionHandle::new(|a: &Rational| RationalVector::new(vec![a.clone(), a * a, Rational::one()]));
        let e = extract_components(&f, 2).unwrap();
        assert_eq!(e.constant(), &RationalVector::new(vec![q(0, 1), q(0, 1), q(1, 1)]));
        assert_eq!(e.component_at_unit(1), &RationalVector::new(vec![q(1, 1)]));
        assert_eq!(e.component_at_unit(2), &RationalVector::new(vec![q(0, 1), q(1, 1)]));
    }

    #[test]
    fn diagonal_collapse() {
        let f = |xs: &[Rational]| -> Result<Rational> { Ok(q(7, 1) * &xs[0] * &xs[1]) };
        assert!(verify_diagonal_collapse(&f, &[vec![q(2, 3), q(3, 2)], vec![q(1, 1), q(1, 1)]]).unwrap());
        // Not multiplicative in the product: collapse fails.
        let g = |xs: &[Rational]| -> Result<Rational> { Ok(&xs[0] + &xs[1]) };
        assert!(!verify_diagonal_collapse(&g, &[vec![q(2, 1), q(3, 1)]]).unwrap());
    }
}
