//! Concrete valuations and the polynomial behavior of their dilations.
//!
//! A panel is an ordered list of valuations. Applied to formal sums it gives
//! a vector of exact values; two sums with different vectors are certainly
//! different in the group of convex bodies, while equal vectors prove
//! nothing.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::difference::{
    extract_components, extract_components_with, ExtractionOptions, FunctionHandle,
    PolynomialExpansion,
};
use crate::error::{Error, Result};
use crate::group::{FreeSum, SumKey};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuationKind {
    /// Ambient `n`-volume.
    Volume,
    /// The constant 1 on every polytope.
    Euler,
    /// `P ↦ vol(P + Q)` for a fixed probe `Q`.
    ProbeVolume { name: String, probe: Polytope },
    /// `P ↦ max_{v ∈ P} ⟨u, v⟩`; not translation-invariant.
    Support(Point),
    /// `|P ∩ ℤⁿ|`; invariant under integer translations only.
    LatticeCount,
}

/// Where the dilation factor of [`expansion_of_dilation`] ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DilationDomain {
    NonnegativeRationals,
    Naturals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationDescriptor {
    pub kind: ValuationKind,
}

/// Probes known by name, in ambient dimension `n`.
pub fn named_probe(name: &str, n: usize) -> Option<Polytope> {
    match name {
        "unit_cube" | "cube" | "unit_square" | "square" => Some(Polytope::unit_cube(n)),
        "standard_simplex" | "simplex" => Some(Polytope::standard_simplex(n)),
        "asymmetric_simplex" => Some(Polytope::asymmetric_simplex(n)),
        "point" => Some(Polytope::origin(n)),
        _ => None,
    }
}

/// Reads `"1,0"` or `"(1/2, 3)"` as a point.
pub fn parse_vector(text: &str) -> Result<Point> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Point::new(Vec::new()));
    }
    inner
        .split(',')
        .map(|t| {
            t.parse::<Rational>()
                .map_err(|e| Error::InvalidArgument(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()
        .map(Point::new)
}

impl ValuationDescriptor {
    pub fn new(kind: ValuationKind) -> Self {
        ValuationDescriptor { kind }
    }

    pub fn volume() -> Self {
        Self::new(ValuationKind::Volume)
    }

    pub fn euler() -> Self {
        Self::new(ValuationKind::Euler)
    }

    pub fn probe(name: impl Into<String>, probe: Polytope) -> Self {
        Self::new(ValuationKind::ProbeVolume {
            name: name.into(),
            probe,
        })
    }

    pub fn support(u: Point) -> Self {
        Self::new(ValuationKind::Support(u))
    }

    pub fn lattice() -> Self {
        Self::new(ValuationKind::LatticeCount)
    }

    /// Parses `volume`, `euler`, `probe:NAME` (or `probe_vol:NAME`),
    /// `support:VEC` and `lattice`; named probes are built in dimension `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::InvalidArgument(format!("unknown valuation `{text}`"));
        match text {
            "volume" | "vol" => return Ok(Self::volume()),
            "euler" => return Ok(Self::euler()),
            "lattice" => return Ok(Self::lattice()),
            _ => {}
        }
        let (head, arg) = text.split_once(':').ok_or_else(bad)?;
        match head {
            "probe" | "probe_vol" => {
                let probe = named_probe(arg, n)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown probe `{arg}`")))?;
                Ok(Self::probe(arg, probe))
            }
            "support" => Ok(Self::support(parse_vector(arg)?)),
            _ => Err(bad()),
        }
    }

    /// Stable key used in reports, e.g. `probe_vol:unit_cube`.
    pub fn descriptor(&self) -> String {
        match &self.kind {
            ValuationKind::Volume => "volume".into(),
            ValuationKind::Euler => "euler".into(),
            ValuationKind::ProbeVolume { name, .. } => format!("probe_vol:{name}"),
            ValuationKind::Support(u) => {
                let parts: Vec<String> = u.coords().iter().map(|c| c.to_string()).collect();
                format!("support:{}", parts.join(","))
            }
            ValuationKind::LatticeCount => "lattice".into(),
        }
    }

    /// Invariant under all translations.
    pub fn translation_invariant(&self) -> bool {
        matches!(
            self.kind,
            ValuationKind::Volume | ValuationKind::Euler | ValuationKind::ProbeVolume { .. }
        )
    }

    /// Invariant under integer translations (lattice count included).
    pub fn lattice_translation_invariant(&self) -> bool {
        self.translation_invariant() || self.kind == ValuationKind::LatticeCount
    }

    pub fn dilation_domain(&self) -> DilationDomain {
        match self.kind {
            ValuationKind::LatticeCount => DilationDomain::Naturals,
            _ => DilationDomain::NonnegativeRationals,
        }
    }

    pub fn evaluate(&self, p: &Polytope) -> Result<Rational> {
        match &self.kind {
            ValuationKind::Volume => p.volume(),
            ValuationKind::Euler => Ok(Rational::one()),
            ValuationKind::ProbeVolume { probe, .. } => match probe.box_widths() {
                Some(widths) if probe.ambient_dim() == p.ambient_dim() => p.volume_plus_box(&widths),
                _ => p.minkowski_sum(probe)?.volume(),
            },
            ValuationKind::Support(u) => p.support(u),
            ValuationKind::LatticeCount => Ok(Rational::from_integer(p.lattice_count()? as i64)),
        }
    }

    /// Linear extension to formal sums. Sums of translation classes only
    /// accept translation-invariant valuations.
    pub fn evaluate_sum<K: SumKey>(&self, s: &FreeSum<K>) -> Result<Rational> {
        if K::TRANSLATION_CLASSES && !self.translation_invariant() {
            return Err(Error::NonInvariantOnClasses(self.descriptor()));
        }
        let mut acc = Rational::zero();
        for (key, c) in s.terms() {
            acc += &(self.evaluate(key.polytope())? * Rational::from_bigint(c.clone()));
        }
        Ok(acc)
    }
}

/// Expansion of `λ ↦ val(λP + Q)` over `λ ∈ ℚ≥0`, `Q` the optional probe.
/// The degree bound is `dim P` without a probe and the ambient dimension
/// with one.
pub fn expansion_of_dilation(
    val: &ValuationDescriptor,
    p: &Polytope,
    probe: Option<&Polytope>,
) -> Result<PolynomialExpansion<Rational, Rational>> {
    if !val.translation_invariant() {
        return Err(Error::NonInvariantOnClasses(val.descriptor()));
    }
    let degree = match probe {
        None => p.dim(),
        Some(_) => p.ambient_dim(),
    };
    let (val, p, probe) = (val.clone(), p.clone(), probe.cloned());
    let f = FunctionHandle::fallible(move |lambda: &Rational| {
        let scaled = p.dilate(lambda)?;
        let body = match &probe {
            None => scaled,
            Some(q) => scaled.minkowski_sum(q)?,
        };
        val.evaluate(&body)
    });
    extract_components(&f, degree)
}

/// Reconstruction probes `0..=EHRHART_PROBES` for lattice counts. Over `ℕ`
/// the extraction divides values rather than arguments, so it samples
/// dilates several times larger than the probes; this keeps the counts small.
pub const EHRHART_PROBES: u64 = 10;

/// Expansion of `λ ↦ |λP ∩ ℤⁿ|` over `λ ∈ ℕ` with values in `ℚ`.
pub fn ehrhart_expansion(p: &Polytope, degree: usize) -> Result<PolynomialExpansion<u64, Rational>> {
    let p = p.clone();
    let f = FunctionHandle::fallible(move |lambda: &u64| {
        let count = p.dilate(&Rational::from_integer(*lambda as i64))?.lattice_count()?;
        Ok(Rational::from_integer(count as i64))
    });
    let options = ExtractionOptions {
        probes: (0..=EHRHART_PROBES).collect(),
        ..ExtractionOptions::default()
    };
    extract_components_with(&f, degree, &options)
}

/// `(vol(P+Q) − vol(P) − vol(Q)) / 2` in the plane.
pub fn mixed_volume_2d(p: &Polytope, q: &Polytope) -> Result<Rational> {
    for body in [p, q] {
        if body.ambient_dim() != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: body.ambient_dim(),
            });
        }
    }
    let sum = p.minkowski_sum(q)?.volume()?;
    Ok((sum - p.volume()? - q.volume()?) / Rational::from_integer(2))
}

/// An ordered list of valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Panel {
    entries: Vec<ValuationDescriptor>,
}

impl Panel {
    pub fn new(entries: Vec<ValuationDescriptor>) -> Self {
        Panel { entries }
    }

    /// Volume, Euler and the three default probes in dimension `n`.
    pub fn default_for(n: usize) -> Self {
        let mut entries = alloc::vec![ValuationDescriptor::volume(), ValuationDescriptor::euler()];
        if n > 0 {
            for name in ["unit_cube", "standard_simplex", "asymmetric_simplex"] {
                let probe = named_probe(name, n).expect("known probe");
                entries.push(ValuationDescriptor::probe(name, probe));
            }
        }
        Panel { entries }
    }

    /// Parses a comma-separated list; the word `default` expands to
    /// [`Panel::default_for`].
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if item == "default" {
                entries.extend(Panel::default_for(n).entries);
            } else {
                entries.push(ValuationDescriptor::parse(item, n)?);
            }
        }
        if entries.is_empty() {
            return Err(Error::InvalidArgument("empty panel".into()));
        }
        Ok(Panel { entries })
    }

    pub fn entries(&self) -> &[ValuationDescriptor] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
