//! Symmetric-function machinery: elementary symmetric polynomials, orbit
//! products over weight classes, conversion to the elementary-symmetric
//! basis, Dickson factors, and the two-alphabet tensor polynomial.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{CoeffDomain, GradedPoly, Monomial, PolyRing};

/// Ring `F_2[v_1..v_n]` with weight-1 variables.
pub fn v_ring(n: usize) -> PolyRing {
    PolyRing::uniform(CoeffDomain::Gf2, "v", n, 1)
}

/// Ring `E_1..E_n` where `E_i` carries weight `i * base` — the grading of
/// the elementary-symmetric basis over weight-`base` roots.
pub fn elementary_ring(domain: CoeffDomain, prefix: &str, n: usize, base: u64) -> PolyRing {
    let names = (1..=n).map(|i| alloc::format!("{prefix}{i}"));
    PolyRing::new(domain, names, (1..=n as u64).map(|i| i * base))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    // k-subsets of 0..n in lexicographic order.
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The `k`th elementary symmetric polynomial in all variables of `ring`:
/// zero when `k` exceeds the variable count, one when `k = 0`.
pub fn elementary_symmetric(ring: &PolyRing, k: usize) -> GradedPoly {
    elementary_symmetric_window(ring, k, 0..ring.num_vars(), None)
}

fn elementary_symmetric_window(
    ring: &PolyRing,
    k: usize,
    window: Range<usize>,
    cap: Option<u64>,
) -> GradedPoly {
    let n = window.len();
    let mut p = GradedPoly::zero(ring, cap);
    if k > n {
        return p;
    }
    let mut terms = Vec::new();
    for subset in subsets(n, k) {
        let mut exps = alloc::vec![0u64; ring.num_vars()];
        for s in subset {
            exps[window.start + s] = 1;
        }
        terms.push((exps, BigInt::one()));
    }
    p = GradedPoly::from_terms(ring, terms, cap).expect("exponent lengths match the ring");
    p
}

/// Balanced product of a list of factors: pairwise rounds keep the
/// intermediate operands comparable in size.
pub(crate) fn product_tree(ring: &PolyRing, mut factors: Vec<GradedPoly>) -> Result<GradedPoly> {
    if factors.is_empty() {
        return Ok(GradedPoly::one(ring, None));
    }
    while factors.len() > 1 {
        let mut next = Vec::with_capacity(factors.len() / 2 + 1);
        let mut iter = factors.into_iter();
        while let Some(a) = iter.next() {
            match iter.next() {
                Some(b) => next.push(a.mul(&b)?),
                None => next.push(a),
            }
        }
        factors = next;
    }
    Ok(factors.pop().expect("nonempty"))
}

/// Product over all GF(2)-vectors `v` of Hamming weight `k` of
/// `1 + v_{i_1} + ... + v_{i_k}` in the weight-1 `v`-ring. Subsets are
/// enumerated in lexicographic order; the result is symmetric.
pub fn orbit_product(n: usize, k: usize) -> Result<GradedPoly> {
    if k > n {
        return Err(Error::IndexOutOfRange { what: "orbit_product" });
    }
    let ring = v_ring(n);
    let mut factors = Vec::new();
    for subset in subsets(n, k) {
        if subset.is_empty() {
            continue; // the empty-support vector contributes 1 + 0
        }
        let mut factor = GradedPoly::one(&ring, None);
        for i in subset {
            factor = factor.add(&GradedPoly::variable(&ring, i, None)?)?;
        }
        factors.push(factor);
    }
    product_tree(&ring, factors)
}

/// Reduce `p`, symmetric in the `window` variables, to the elementary
/// symmetric basis of that window by leading-term elimination in graded-lex
/// order. Variables outside the window pass through unchanged; the window
/// variables (which must share one weight) are replaced by `E_1..E_w` named
/// `{prefix}1..{prefix}w` with `E_i` of weight `i * w0`.
pub(crate) fn reduce_window(
    p: &GradedPoly,
    window: Range<usize>,
    prefix: &str,
) -> Result<GradedPoly> {
    let ring = p.ring();
    let w = window.len();
    assert!(window.end <= ring.num_vars());
    let w0 = ring.weights()[window.clone()]
        .iter()
        .fold(None, |acc: Option<u64>, &x| match acc {
            None => Some(x),
            Some(a) => {
                assert_eq!(a, x, "window variables must share one weight");
                Some(a)
            }
        })
        .unwrap_or(1);

    // Output ring: passthrough names kept, window slots replaced by E-vars.
    let mut names: Vec<String> = Vec::with_capacity(ring.num_vars());
    let mut weights: Vec<u64> = Vec::with_capacity(ring.num_vars());
    for i in 0..ring.num_vars() {
        if window.contains(&i) {
            let j = i - window.start + 1;
            names.push(alloc::format!("{prefix}{j}"));
            weights.push(j as u64 * w0);
        } else {
            names.push(ring.var_name(i).into());
            weights.push(ring.weights()[i]);
        }
    }
    let out_ring = PolyRing::new(ring.domain(), names, weights);
    let cap = p.truncation_cap();
    let mut out = GradedPoly::zero(&out_ring, cap);

    // The elimination subtracts homogeneous window expansions, so the total
    // exponent grade is preserved throughout and each homogeneous component
    // reduces independently. Working per component keeps the remainders
    // small; the expansion cache is shared across components.
    let mut components: BTreeMap<u128, Vec<(Vec<u64>, BigInt)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let grade: u128 = m.exponents().iter().map(|&e| e as u128).sum();
        components
            .entry(grade)
            .or_default()
            .push((m.exponents().to_vec(), c.clone()));
    }
    let mut expansions: BTreeMap<Vec<u64>, GradedPoly> = BTreeMap::new();

    for terms in components.into_values() {
        let mut remainder = GradedPoly::from_terms(ring, terms, cap)?;
        let mut previous_leading: Option<Monomial> = None;
        while !remainder.is_zero() {
            // Leading window exponent: graded-lex max of the projections.
            let leading = remainder
                .terms()
                .map(|(m, _)| Monomial::new(m.exponents()[window.clone()].to_vec()))
                .max()
                .expect("nonzero polynomial has terms");
            if let Some(prev) = &previous_leading {
                // The elimination must strictly descend; a stall would mean
                // the input was not symmetric in the window after all.
                if leading >= *prev {
                    return Err(Error::NotSymmetric);
                }
            }
            let a = leading.exponents();
            if a.windows(2).any(|pair| pair[0] < pair[1]) {
                // The leading exponent of a window-symmetric polynomial is a
                // partition; anything else exposes an asymmetric input.
                return Err(Error::NotSymmetric);
            }

            // Collect the terms with this window exponent; `group` holds
            // them with the window slots zeroed (a passthrough polynomial).
            let mut group_terms: Vec<(Vec<u64>, BigInt)> = Vec::new();
            for (m, c) in remainder.terms() {
                if m.exponents()[window.clone()] == *a {
                    let mut e = m.exponents().to_vec();
                    for i in window.clone() {
                        e[i] = 0;
                    }
                    group_terms.push((e, c.clone()));
                }
            }
            let group = GradedPoly::from_terms(ring, group_terms.clone(), cap)?;

            // Emit c * E_1^{a1-a2} ... E_w^{aw} into the output.
            let mut e_exps = alloc::vec![0u64; w];
            for i in 0..w {
                let next = if i + 1 < w { a[i + 1] } else { 0 };
                e_exps[i] = a[i] - next;
            }
            let out_terms: Vec<(Vec<u64>, BigInt)> = group_terms
                .into_iter()
                .map(|(mut e, c)| {
                    for i in window.clone() {
                        e[i] = e_exps[i - window.start];
                    }
                    (e, c)
                })
                .collect();
            out.add_scaled_assign(
                &GradedPoly::from_terms(&out_ring, out_terms, cap)?,
                &BigInt::one(),
            )?;

            // Subtract c * expansion(E^b) from the remainder.
            let expansion =
                expand_elementary_monomial(&e_exps, ring, window.clone(), &mut expansions, cap)?;
            remainder = remainder.sub(&group.mul(&expansion)?)?;
            previous_leading = Some(leading);
        }
    }
    Ok(out)
}

/// Expansion of `prod_i E_i(window)^{b_i}` in the original ring, built
/// incrementally and cached per exponent vector.
fn expand_elementary_monomial(
    b: &[u64],
    ring: &PolyRing,
    window: Range<usize>,
    cache: &mut BTreeMap<Vec<u64>, GradedPoly>,
    cap: Option<u64>,
) -> Result<GradedPoly> {
    if let Some(hit) = cache.get(b) {
        return Ok(hit.clone());
    }
    let result = match b.iter().rposition(|&e| e > 0) {
        None => GradedPoly::one(ring, cap),
        Some(j) => {
            let mut smaller = b.to_vec();
            smaller[j] -= 1;
            let prefix = expand_elementary_monomial(&smaller, ring, window.clone(), cache, cap)?;
            let ej = elementary_symmetric_window(ring, j + 1, window.clone(), cap);
            prefix.mul(&ej)?
        }
    };
    cache.insert(b.to_vec(), result.clone());
    Ok(result)
}

/// Rewrite a symmetric polynomial in terms of the elementary symmetric
/// polynomials of all its variables. Fails with [`Error::NotSymmetric`]
/// when the input is not permutation-invariant.
pub fn symmetric_to_elementary(p: &GradedPoly) -> Result<GradedPoly> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    reduce_window(p, 0..p.ring().num_vars(), "E")
}

/// The Dickson factor `D^[k]` for rank `n`: the orbit product over weight-`k`
/// vectors, rewritten in the elementary-symmetric basis `E_1..E_n` (raw
/// weight-`i` convention). Memoized per `(n, k)` when built with `std`.
pub fn dickson_factor(n: usize, k: usize) -> Result<GradedPoly> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { what: "dickson_factor" });
    }
    #[cfg(feature = "std")]
    {
        if let Some(hit) = memo::dickson_get(n, k) {
            return Ok(hit);
        }
    }
    let computed = reduce_window(&orbit_product(n, k)?, 0..n, "E")?;
    #[cfg(feature = "std")]
    memo::dickson_put(n, k, computed.clone());
    Ok(computed)
}

/// The full Dickson product `D = prod_k D^[k]` in the `E`-basis. Its
/// nonconstant homogeneous parts are the Dickson invariants `d_i` of degree
/// `2^n - 2^(n-i)`.
pub fn dickson_total(n: usize) -> Result<GradedPoly> {
    assert!(n >= 1, "rank must be positive");
    let mut acc = GradedPoly::one(dickson_factor(n, 1)?.ring(), None);
    for k in 1..=n {
        acc = acc.mul(&dickson_factor(n, k)?)?;
    }
    Ok(acc)
}

/// The two-alphabet polynomial `P_{m,n}` expressing
/// `q_{m,n} = prod_{i,j} (1 + x_i + y_j)` in the elementary symmetric
/// polynomials of the `x` and `y` alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmnPolynomial {
    m: usize,
    n: usize,
    domain: CoeffDomain,
    body: GradedPoly,
}

impl PmnPolynomial {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    /// Body in the ring `Ex1..Exm, Ey1..Eyn` with `E_i` of weight `i`.
    pub fn body(&self) -> &GradedPoly {
        &self.body
    }

    /// Substitute the elementary symmetric polynomials of fresh root
    /// variables back into the body, recovering `q_{m,n}` exactly. The
    /// expansions of the two alphabets are cached per exponent prefix.
    pub fn expand_roots(&self) -> Result<GradedPoly> {
        let ring = root_ring(self.m, self.n, self.domain);
        let cap = self.body.truncation_cap();
        let mut cache_x: BTreeMap<Vec<u64>, GradedPoly> = BTreeMap::new();
        let mut cache_y: BTreeMap<Vec<u64>, GradedPoly> = BTreeMap::new();
        let mut out = GradedPoly::zero(&ring, cap);
        for (mono, coeff) in self.body.terms() {
            let bx = &mono.exponents()[..self.m];
            let by = &mono.exponents()[self.m..];
            let ex = expand_elementary_monomial(bx, &ring, 0..self.m, &mut cache_x, cap)?;
            let ey = expand_elementary_monomial(
                by,
                &ring,
                self.m..self.m + self.n,
                &mut cache_y,
                cap,
            )?;
            out.add_scaled_assign(&ex.mul(&ey)?, coeff)?;
        }
        Ok(out)
    }
}

/// Root ring `x_1..x_m, y_1..y_n`, all weight 1.
pub fn root_ring(m: usize, n: usize, domain: CoeffDomain) -> PolyRing {
    let names = (1..=m)
        .map(|i| alloc::format!("x{i}"))
        .chain((1..=n).map(|j| alloc::format!("y{j}")));
    PolyRing::new(domain, names, core::iter::repeat(1).take(m + n))
}

/// `q_{m,n} = prod_{i=1..m} prod_{j=1..n} (1 + x_i + y_j)`. An empty
/// alphabet acts as a trivial line factor, so `q_{m,0} = prod_i (1 + x_i)`
/// and `P_{m,0} = 1 + sum of its argument slots`: tensoring against a rank-0
/// class is the identity augmentation.
pub fn q_product(m: usize, n: usize, domain: CoeffDomain, cap: Option<u64>) -> Result<GradedPoly> {
    let ring = root_ring(m, n, domain);
    if m == 0 && n == 0 {
        return Ok(GradedPoly::one(&ring, cap));
    }
    if m == 0 || n == 0 {
        let mut acc = GradedPoly::one(&ring, cap);
        for i in 0..ring.num_vars() {
            let factor = GradedPoly::one(&ring, cap).add(&GradedPoly::variable(&ring, i, cap)?)?;
            acc = acc.mul(&factor)?;
        }
        return Ok(acc);
    }
    let mut factors = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            factors.push(
                GradedPoly::one(&ring, cap)
                    .add(&GradedPoly::variable(&ring, i, cap)?)?
                    .add(&GradedPoly::variable(&ring, m + j, cap)?)?,
            );
        }
    }
    product_tree(&ring, factors)
}

/// Expand `q_{m,n}` and perform the two-alphabet symmetric reduction,
/// x-alphabet first, then y. Memoized per `(m, n, domain)` when built with
/// `std`.
pub fn compute_pmn(m: usize, n: usize, domain: CoeffDomain) -> Result<PmnPolynomial> {
    #[cfg(feature = "std")]
    {
        if let Some(hit) = memo::pmn_get(m, n, domain) {
            return Ok(hit);
        }
    }
    let computed = compute_pmn_with_cap(m, n, domain, None)?;
    #[cfg(feature = "std")]
    memo::pmn_put(m, n, domain, computed.clone());
    Ok(computed)
}

/// Like [`compute_pmn`] but with the root-degree expansion truncated at
/// `cap`. The reduction is degree-graded, so the capped body agrees with the
/// exact one on every kept degree.
pub fn compute_pmn_with_cap(
    m: usize,
    n: usize,
    domain: CoeffDomain,
    cap: Option<u64>,
) -> Result<PmnPolynomial> {
    let q = q_product(m, n, domain, cap)?;
    let stage1 = reduce_window(&q, 0..m, "Ex")?;
    let body = reduce_window(&stage1, m..m + n, "Ey")?;
    Ok(PmnPolynomial { m, n, domain, body })
}

#[cfg(feature = "std")]
mod memo {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};

    use super::{CoeffDomain, GradedPoly, PmnPolynomial};

    // Fills are idempotent: the computations are deterministic, so a racing
    // double insert stores the same value.
    static DICKSON: OnceLock<Mutex<HashMap<(usize, usize), GradedPoly>>> = OnceLock::new();
    static PMN: OnceLock<Mutex<HashMap<(usize, usize, bool), PmnPolynomial>>> = OnceLock::new();

    pub(super) fn dickson_get(n: usize, k: usize) -> Option<GradedPoly> {
        DICKSON.get_or_init(Default::default).lock().unwrap().get(&(n, k)).cloned()
    }

    pub(super) fn dickson_put(n: usize, k: usize, value: GradedPoly) {
        DICKSON.get_or_init(Default::default).lock().unwrap().insert((n, k), value);
    }

    fn domain_key(domain: CoeffDomain) -> bool {
        matches!(domain, CoeffDomain::Gf2)
    }

    pub(super) fn pmn_get(m: usize, n: usize, domain: CoeffDomain) -> Option<PmnPolynomial> {
        PMN.get_or_init(Default::default)
            .lock()
            .unwrap()
            .get(&(m, n, domain_key(domain)))
            .cloned()
    }

    pub(super) fn pmn_put(m: usize, n: usize, domain: CoeffDomain, value: PmnPolynomial) {
        PMN.get_or_init(Default::default)
            .lock()
            .unwrap()
            .insert((m, n, domain_key(domain)), value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn e_terms(pairs: &[(&[u64], i64)]) -> Vec<(Vec<u64>, BigInt)> {
        pairs.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))).collect()
    }

    #[test]
    fn elementary_symmetric_basics() {
        let r = PolyRing::uniform(CoeffDomain::Integer, "x", 2, 1);
        let e1 = elementary_symmetric(&r, 1);
        assert_eq!(
            e1,
            GradedPoly::from_terms(&r, e_terms(&[(&[1, 0], 1), (&[0, 1], 1)]), None).unwrap()
        );
        let e2 = elementary_symmetric(&r, 2);
        assert_eq!(
            e2,
            GradedPoly::from_terms(&r, e_terms(&[(&[1, 1], 1)]), None).unwrap()
        );
        assert!(elementary_symmetric(&r, 3).is_zero());
        assert_eq!(elementary_symmetric(&r, 0), GradedPoly::one(&r, None));
    }

    #[test]
    fn orbit_product_basics() {
        // (2, 1) = (1+v1)(1+v2)
        let p = orbit_product(2, 1).unwrap();
        let r = v_ring(2);
        let expected = GradedPoly::one(&r, None)
            .add(&GradedPoly::variable(&r, 0, None).unwrap())
            .unwrap()
            .mul(
                &GradedPoly::one(&r, None)
                    .add(&GradedPoly::variable(&r, 1, None).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(p, expected);

        // (n, 0) = 1
        assert_eq!(orbit_product(3, 0).unwrap(), GradedPoly::one(&v_ring(3), None));

        // (3, 3) = 1 + v1 + v2 + v3
        let p33 = orbit_product(3, 3).unwrap();
        assert_eq!(p33.num_terms(), 4);
        assert!(p33
            .terms()
            .all(|(m, _)| m.exponents().iter().sum::<u64>() <= 1));
    }

    #[test]
    fn reduction_gf2_power_sum() {
        // v1^2 + v2^2 = E1^2 over GF(2).
        let r = v_ring(2);
        let p = GradedPoly::from_terms(&r, e_terms(&[(&[2, 0], 1), (&[0, 2], 1)]), None).unwrap();
        let reduced = symmetric_to_elementary(&p).unwrap();
        assert_eq!(reduced.num_terms(), 1);
        let (mono, _) = reduced.terms().next().unwrap();
        assert_eq!(mono.exponents(), &[2, 0]);
    }

    #[test]
    fn reduction_integer_newton() {
        // x1^2 + x2^2 = E1^2 - 2 E2 over the integers.
        let r = PolyRing::uniform(CoeffDomain::Integer, "x", 2, 1);
        let p = GradedPoly::from_terms(&r, e_terms(&[(&[2, 0], 1), (&[0, 2], 1)]), None).unwrap();
        let reduced = symmetric_to_elementary(&p).unwrap();
        let expected = GradedPoly::from_terms(
            reduced.ring(),
            e_terms(&[(&[2, 0], 1), (&[0, 1], -2)]),
            None,
        )
        .unwrap();
        assert_eq!(reduced, expected);
    }

    #[test]
    fn reduction_fixes_elementary_symmetric() {
        for n in 1..=4 {
            let r = v_ring(n);
            for k in 1..=n {
                let ek = elementary_symmetric(&r, k);
                let reduced = symmetric_to_elementary(&ek).unwrap();
                assert_eq!(reduced.num_terms(), 1, "E_{k} in {n} vars");
                let (mono, c) = reduced.terms().next().unwrap();
                assert!(c.is_one());
                let mut expected = vec![0u64; n];
                expected[k - 1] = 1;
                assert_eq!(mono.exponents(), &expected[..]);
            }
        }
    }

    #[test]
    fn reduction_rejects_asymmetric() {
        let r = v_ring(2);
        let p = GradedPoly::variable(&r, 0, None).unwrap();
        assert_eq!(symmetric_to_elementary(&p), Err(Error::NotSymmetric));
    }

    #[test]
    fn dickson_small_ranks() {
        // D^[n] = 1 + E1 for every rank.
        for n in 1..=5 {
            let d = dickson_factor(n, n).unwrap();
            let expected = GradedPoly::from_terms(
                d.ring(),
                {
                    let mut e1 = vec![0u64; n];
                    e1[0] = 1;
                    vec![(vec![0u64; n], BigInt::one()), (e1, BigInt::one())]
                },
                None,
            )
            .unwrap();
            assert_eq!(d, expected, "D^[{n}] at rank {n}");
        }
        // D^[1] = 1 + E1 + ... + En.
        for n in 1..=5 {
            let d = dickson_factor(n, 1).unwrap();
            assert_eq!(d.num_terms(), n + 1);
        }
    }

    #[test]
    fn dickson_total_degrees() {
        // Nonconstant homogeneous degrees of D are 2^n - 2^(n-i).
        for n in 1..=4usize {
            let total = dickson_total(n).unwrap();
            let mut degrees: Vec<u128> = total
                .terms()
                .map(|(m, _)| total.weighted_degree(m))
                .filter(|&d| d > 0)
                .collect();
            degrees.sort_unstable();
            degrees.dedup();
            let expected: Vec<u128> = (1..=n)
                .map(|i| (1u128 << n) - (1u128 << (n - i)))
                .collect();
            assert_eq!(degrees, expected, "rank {n}");
        }
    }

    #[test]
    fn dickson_total_equals_full_orbit_product() {
        // prod_k D^[k] re-expanded equals the product over all 2^n - 1
        // nontrivial vectors.
        for n in 1..=4usize {
            let total = dickson_total(n).unwrap();
            let ring = v_ring(n);
            let images: Vec<GradedPoly> =
                (1..=n).map(|i| elementary_symmetric(&ring, i)).collect();
            let expanded = total.substitute(&images).unwrap();
            let mut direct = GradedPoly::one(&ring, None);
            for k in 1..=n {
                direct = direct.mul(&orbit_product(n, k).unwrap()).unwrap();
            }
            assert_eq!(expanded, direct, "rank {n}");
        }
    }

    #[test]
    fn pmn_base_cases() {
        // P_{m,0} = 1 + sum of the x-slots: the identity augmentation.
        let p = compute_pmn(3, 0, CoeffDomain::Integer).unwrap();
        let expected = GradedPoly::from_terms(
            p.body().ring(),
            e_terms(&[(&[0, 0, 0], 1), (&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]),
            None,
        )
        .unwrap();
        assert_eq!(*p.body(), expected);

        // P_{1,1} = 1 + Ex1 + Ey1.
        let p11 = compute_pmn(1, 1, CoeffDomain::Gf2).unwrap();
        let expected = GradedPoly::from_terms(
            p11.body().ring(),
            e_terms(&[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]),
            None,
        )
        .unwrap();
        assert_eq!(*p11.body(), expected);
    }

    #[test]
    fn pmn_round_trip_2_2() {
        for domain in [CoeffDomain::Integer, CoeffDomain::Gf2] {
            let p = compute_pmn(2, 2, domain).unwrap();
            let expanded = p.expand_roots().unwrap();
            let direct = q_product(2, 2, domain, None).unwrap();
            assert_eq!(expanded, direct);
        }
    }
}
