//! Exact sparse multivariate polynomial arithmetic over GF(2) and over
//! arbitrary-precision integers, with per-variable cohomological weights,
//! optional degree truncation and big-exponent powering.
//!
//! Polynomials are stored as maps from exponent vectors to coefficients in
//! graded-lexicographic order. Over GF(2) only odd coefficients survive and
//! are stored as 1; over the integers no zero coefficient is ever stored.
//! When a truncation cap is set, every monomial of weighted degree above the
//! cap is discarded and all arithmetic is exact below the cap.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponents above this bound require a truncation cap before powering.
pub const SMALL_POW_THRESHOLD: u64 = 64;

/// Coefficient domain of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffDomain {
    /// Field with two elements; coefficients are implicitly 1.
    Gf2,
    /// Arbitrary-precision integers.
    Integer,
}

#[derive(Debug)]
struct RingInner {
    var_names: Vec<String>,
    weights: Vec<u64>,
    domain: CoeffDomain,
}

/// Descriptor of a graded polynomial ring. Cheap to clone; two rings are
/// compatible when they agree on variable count, weights and domain
/// (display names do not matter).
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PolyRing {
    /// Build a ring descriptor. Weights must be strictly positive and the
    /// variable names pairwise distinct.
    pub fn new<S: Into<String>>(
        domain: CoeffDomain,
        var_names: impl IntoIterator<Item = S>,
        weights: impl IntoIterator<Item = u64>,
    ) -> Self {
        let var_names: Vec<String> = var_names.into_iter().map(Into::into).collect();
        let weights: Vec<u64> = weights.into_iter().collect();
        assert_eq!(var_names.len(), weights.len(), "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        for (i, a) in var_names.iter().enumerate() {
            for b in var_names.iter().skip(i + 1) {
                assert_ne!(a, b, "variable names must be distinct");
            }
        }
        PolyRing(Arc::new(RingInner { var_names, weights, domain }))
    }

    /// Ring of `n` variables named `{prefix}1..{prefix}n`, all of weight `w`.
    pub fn uniform(domain: CoeffDomain, prefix: &str, n: usize, w: u64) -> Self {
        let names = (1..=n).map(|i| alloc::format!("{prefix}{i}"));
        PolyRing::new(domain, names, core::iter::repeat(w).take(n))
    }

    pub fn num_vars(&self) -> usize {
        self.0.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.0.weights
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.var_names[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.var_names
    }

    pub fn domain(&self) -> CoeffDomain {
        self.0.domain
    }

    /// Structural compatibility: same variable count, weights and domain.
    pub fn compatible(&self, other: &PolyRing) -> bool {
        self.0.weights == other.0.weights && self.0.domain == other.0.domain
    }

    /// Weighted (cohomological) degree of an exponent vector, saturating.
    fn degree_of(&self, exps: &[u64]) -> u128 {
        exps.iter()
            .zip(&self.0.weights)
            .fold(0u128, |d, (&e, &w)| d.saturating_add(e as u128 * w as u128))
    }
}

/// Exponent vector of a monomial. The ordering is graded-lexicographic:
/// total exponent sum first, ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn grade(&self) -> u128 {
        self.0.iter().map(|&e| e as u128).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse graded polynomial. Immutable after construction; all operations
/// return new values and are deterministic.
///
/// Equality compares the ring structure (weights, domain) and the term maps;
/// truncation caps and display names are not part of the value.
#[derive(Debug, Clone)]
pub struct GradedPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, BigInt>,
    cap: Option<u64>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

fn cap_min(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl GradedPoly {
    pub fn zero(ring: &PolyRing, cap: Option<u64>) -> Self {
        GradedPoly { ring: ring.clone(), terms: BTreeMap::new(), cap }
    }

    pub fn one(ring: &PolyRing, cap: Option<u64>) -> Self {
        Self::constant(ring, BigInt::one(), cap)
    }

    pub fn constant(ring: &PolyRing, value: BigInt, cap: Option<u64>) -> Self {
        let mut p = Self::zero(ring, cap);
        p.accumulate(Monomial::new(alloc::vec![0; ring.num_vars()]), value);
        p
    }

    /// The single variable `x_i`, possibly truncated away when its weight
    /// already exceeds the cap.
    pub fn variable(ring: &PolyRing, i: usize, cap: Option<u64>) -> Result<Self> {
        if i >= ring.num_vars() {
            return Err(Error::IndexOutOfRange { what: "variable" });
        }
        let mut exps = alloc::vec![0u64; ring.num_vars()];
        exps[i] = 1;
        let mut p = Self::zero(ring, cap);
        p.accumulate(Monomial::new(exps), BigInt::one());
        Ok(p)
    }

    /// Build a polynomial from raw `(exponents, coefficient)` pairs,
    /// summing duplicates and normalizing.
    pub fn from_terms<I>(ring: &PolyRing, terms: I, cap: Option<u64>) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u64>, BigInt)>,
    {
        let mut p = Self::zero(ring, cap);
        for (exps, coeff) in terms {
            if exps.len() != ring.num_vars() {
                return Err(Error::ImageCount { expected: ring.num_vars(), got: exps.len() });
            }
            p.accumulate(Monomial::new(exps), coeff);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn truncation_cap(&self) -> Option<u64> {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::new(alloc::vec![0; self.ring.num_vars()]))
    }

    /// Weighted degree of a monomial under this ring's grading.
    pub fn weighted_degree(&self, mono: &Monomial) -> u128 {
        self.ring.degree_of(mono.exponents())
    }

    /// Largest weighted degree among stored terms, `None` for the zero
    /// polynomial.
    pub fn max_weighted_degree(&self) -> Option<u128> {
        self.terms.keys().map(|m| self.ring.degree_of(m.exponents())).max()
    }

    fn over_cap(&self, mono: &Monomial) -> bool {
        match self.cap {
            Some(c) => self.ring.degree_of(mono.exponents()) > c as u128,
            None => false,
        }
    }

    /// Add `coeff * mono` in place, normalizing for the coefficient domain
    /// and discarding terms above the cap.
    fn accumulate(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() || self.over_cap(&mono) {
            return;
        }
        match self.ring.domain() {
            CoeffDomain::Gf2 => {
                // Stored coefficients are exactly 1, so adding an odd
                // coefficient toggles the key.
                if coeff.is_even() {
                    return;
                }
                match self.terms.entry(mono) {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(BigInt::one());
                    }
                    alloc::collections::btree_map::Entry::Occupied(o) => {
                        o.remove();
                    }
                }
            }
            CoeffDomain::Integer => match self.terms.entry(mono) {
                alloc::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(coeff);
                }
                alloc::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += coeff;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            },
        }
    }

    fn check_ring(&self, other: &GradedPoly) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Coefficient-wise sum. The result carries the smaller cap present.
    pub fn add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_ring(other)?;
        let cap = cap_min(self.cap, other.cap);
        let mut out = GradedPoly::zero(&self.ring, cap);
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c.clone());
        }
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Accumulate `scalar * other` into `self` in place (same ring and cap
    /// conventions as [`GradedPoly::add`], but without reallocating).
    pub(crate) fn add_scaled_assign(&mut self, other: &GradedPoly, scalar: &BigInt) -> Result<()> {
        self.check_ring(other)?;
        let cap = cap_min(self.cap, other.cap);
        if cap != self.cap {
            self.cap = cap;
            let ring = self.ring.clone();
            let c = cap.expect("tightened cap is set") as u128;
            self.terms.retain(|m, _| ring.degree_of(m.exponents()) <= c);
        }
        if scalar.is_zero() {
            return Ok(());
        }
        let scalar_is_one = scalar.is_one();
        for (m, c) in &other.terms {
            let coeff = if scalar_is_one { c.clone() } else { c * scalar };
            self.accumulate(m.clone(), coeff);
        }
        Ok(())
    }

    /// Coefficient-wise negation (identity over GF(2)).
    pub fn neg(&self) -> GradedPoly {
        match self.ring.domain() {
            CoeffDomain::Gf2 => self.clone(),
            CoeffDomain::Integer => {
                let mut out = self.clone();
                for c in out.terms.values_mut() {
                    *c = -core::mem::take(c);
                }
                out
            }
        }
    }

    pub fn sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.add(&other.neg())
    }

    /// Distributive product, exact below the combined cap. Terms that would
    /// exceed the cap are never materialized.
    pub fn mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_ring(other)?;
        let cap = cap_min(self.cap, other.cap);
        let mut out = GradedPoly::zero(&self.ring, cap);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        // Sort the shorter operand by degree so the inner loop can stop as
        // soon as the cap is crossed.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut rhs: Vec<(&Monomial, u128, &BigInt)> = small
            .terms
            .iter()
            .map(|(m, c)| (m, self.ring.degree_of(m.exponents()), c))
            .collect();
        rhs.sort_by_key(|&(_, d, _)| d);
        let capped = cap.map(|c| c as u128);
        for (ml, cl) in &large.terms {
            let dl = self.ring.degree_of(ml.exponents());
            for &(mr, dr, cr) in &rhs {
                if let Some(c) = capped {
                    if dl.saturating_add(dr) > c {
                        break;
                    }
                }
                let mut exps = Vec::with_capacity(ml.0.len());
                for (a, b) in ml.0.iter().zip(&mr.0) {
                    match a.checked_add(*b) {
                        Some(e) => exps.push(e),
                        None => return Err(Error::ExponentOverflow),
                    }
                }
                out.accumulate(Monomial::new(exps), cl * cr);
            }
        }
        Ok(out)
    }

    /// `self^(2^j)` over GF(2): every exponent is multiplied by `2^j` in a
    /// single pass, with no polynomial multiplication.
    pub fn frobenius_power(&self, j: u32) -> Result<GradedPoly> {
        if self.ring.domain() != CoeffDomain::Gf2 {
            return Err(Error::DomainMismatch("frobenius_power needs a GF(2) ring"));
        }
        if j == 0 {
            return Ok(self.clone());
        }
        let mut out = GradedPoly::zero(&self.ring, self.cap);
        'term: for (m, c) in &self.terms {
            let mut exps = Vec::with_capacity(m.0.len());
            for &e in &m.0 {
                if e == 0 {
                    exps.push(0);
                    continue;
                }
                match e.checked_shl(j).filter(|s| s >> j == e) {
                    Some(s) => exps.push(s),
                    None => {
                        // The scaled term has astronomically large degree;
                        // with a cap it simply truncates away.
                        if self.cap.is_some() {
                            continue 'term;
                        }
                        return Err(Error::ExponentOverflow);
                    }
                }
            }
            out.accumulate(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// `self^n` for an arbitrary-precision exponent. Over GF(2) this uses the
    /// binary expansion of `n` with Frobenius squarings; over the integers it
    /// is square-and-multiply. Exponents above [`SMALL_POW_THRESHOLD`]
    /// require a truncation cap.
    pub fn pow_big(&self, n: &BigUint) -> Result<GradedPoly> {
        if n.is_zero() {
            return Ok(GradedPoly::one(&self.ring, self.cap));
        }
        if self.cap.is_none() && *n > BigUint::from(SMALL_POW_THRESHOLD) {
            return Err(Error::MissingCap);
        }
        match self.ring.domain() {
            CoeffDomain::Gf2 => {
                let mut acc: Option<GradedPoly> = None;
                for j in 0..n.bits() {
                    if n.bit(j) {
                        let f = self.frobenius_power(j as u32)?;
                        acc = Some(match acc {
                            None => f,
                            Some(a) => a.mul(&f)?,
                        });
                    }
                }
                Ok(acc.expect("n > 0 has at least one set bit"))
            }
            CoeffDomain::Integer => {
                let mut acc = GradedPoly::one(&self.ring, self.cap);
                let mut base = self.clone();
                let bits = n.bits();
                for j in 0..bits {
                    if n.bit(j) {
                        acc = acc.mul(&base)?;
                    }
                    if j + 1 < bits {
                        base = base.mul(&base)?;
                    }
                }
                Ok(acc)
            }
        }
    }

    pub fn pow(&self, n: u64) -> Result<GradedPoly> {
        self.pow_big(&BigUint::from(n))
    }

    /// Homogeneous part of weighted degree `d` (zero polynomial if none).
    pub fn graded_component(&self, d: u64) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.ring, self.cap);
        for (m, c) in &self.terms {
            if self.ring.degree_of(m.exponents()) == d as u128 {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// True when every term has the same weighted degree (vacuously for 0).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| self.ring.degree_of(m.exponents()));
        match degrees.next() {
            None => true,
            Some(d0) => degrees.all(|d| d == d0),
        }
    }

    /// Copy of `self` truncated to `cap` (combined with any existing cap).
    pub fn truncated(&self, cap: u64) -> GradedPoly {
        let cap = cap_min(self.cap, Some(cap));
        let mut out = GradedPoly::zero(&self.ring, cap);
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    /// Ring homomorphism evaluation: replace variable `i` by `images[i]`.
    /// All images must live in one target ring; the result is truncated to
    /// the smallest cap among the images. Integer sources may map into a
    /// GF(2) target (coefficients reduce mod 2); GF(2) sources cannot map
    /// into an integer target.
    pub fn substitute(&self, images: &[GradedPoly]) -> Result<GradedPoly> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::ImageCount {
                expected: self.ring.num_vars(),
                got: images.len(),
            });
        }
        let target = if let Some(first) = images.first() {
            for img in images.iter().skip(1) {
                first.check_ring(img)?;
            }
            first.ring.clone()
        } else {
            // Zero-variable source: the value is the constant term, but we
            // still need a target ring; reuse the source descriptor.
            self.ring.clone()
        };
        if self.ring.domain() == CoeffDomain::Gf2 && target.domain() == CoeffDomain::Integer {
            return Err(Error::DomainMismatch(
                "cannot substitute GF(2) coefficients into an integer ring",
            ));
        }
        let cap = images.iter().fold(None, |c, img| cap_min(c, img.cap));
        let mut out = GradedPoly::zero(&target, cap);
        let mut power_cache: BTreeMap<(usize, u64), GradedPoly> = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let mut acc: Option<GradedPoly> = None;
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pow = match power_cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = images[i].truncated_to_opt(cap).pow(e)?;
                        power_cache.insert((i, e), p.clone());
                        p
                    }
                };
                acc = Some(match acc {
                    None => pow,
                    Some(a) => a.mul(&pow)?,
                });
                if acc.as_ref().is_some_and(GradedPoly::is_zero) {
                    break;
                }
            }
            match acc {
                Some(a) => out.add_scaled_assign(&a, coeff)?,
                // Constant source monomial.
                None => out.accumulate(
                    Monomial::new(alloc::vec![0; target.num_vars()]),
                    coeff.clone(),
                ),
            }
        }
        Ok(out)
    }

    fn truncated_to_opt(&self, cap: Option<u64>) -> GradedPoly {
        match cap {
            Some(c) => self.truncated(c),
            None => self.clone(),
        }
    }

    /// Invariance under all permutations of the variables, checked on the
    /// adjacent transpositions (which generate the symmetric group).
    pub fn is_symmetric(&self) -> bool {
        let n = self.ring.num_vars();
        for t in 1..n {
            let swapped: BTreeMap<Monomial, BigInt> = self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.swap(t - 1, t);
                    (Monomial::new(e), c.clone())
                })
                .collect();
            if swapped != self.terms {
                return false;
            }
        }
        true
    }

    /// Terms in the canonical rendering order: ascending weighted degree,
    /// and within a degree descending lexicographic exponent order (so `e1`
    /// prints before `e2`, and `E1^2` before `E2`).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            self.ring
                .degree_of(a.exponents())
                .cmp(&self.ring.degree_of(b.exponents()))
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        v
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let mut wrote = false;
            if !abs.is_one() || mono.is_constant() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.var_name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}
