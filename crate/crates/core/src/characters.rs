//! Character-level model of Sp(2n,q): involution-class character vectors,
//! the sigma coefficient tables, the multiplicity transform and its inverse,
//! orthogonality validation, and the built-in representation catalog.
//!
//! A representation enters the library only through its character values at
//! the involutions g_0..g_n, where g_i has eigenvalue -1 with multiplicity
//! 2i. Everything downstream consumes these n+1 integers.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Character values (chi(g_0), ..., chi(g_n)) of a representation of
/// Sp(2n,q). Entry 0 is the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterData {
    n: usize,
    values: Vec<BigInt>,
}

impl CharacterData {
    /// Validates length, a nonnegative degree, and the involution bound
    /// `|chi(g_i)| <= deg`.
    pub fn new(n: usize, values: Vec<BigInt>) -> Result<Self> {
        if values.len() != n + 1 {
            return Err(Error::CharacterLength { expected: n + 1, got: values.len() });
        }
        if values[0].is_negative() {
            return Err(Error::CharacterBound { index: 0 });
        }
        for (i, v) in values.iter().enumerate().skip(1) {
            if v.abs() > values[0] {
                return Err(Error::CharacterBound { index: i });
            }
        }
        Ok(CharacterData { n, values })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> &BigInt {
        &self.values[0]
    }

    pub fn value(&self, i: usize) -> &BigInt {
        &self.values[i]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Character of S(pi) = pi + pi-dual: doubles every value, since the
    /// involutions have real character values.
    pub fn symmetrize(&self) -> CharacterData {
        CharacterData {
            n: self.n,
            values: self.values.iter().map(|v| v * 2).collect(),
        }
    }

    /// Gow symmetry chi(g_i) = chi(g_{n-i}).
    pub fn is_gow_symmetric(&self) -> bool {
        (0..=self.n).all(|i| self.values[i] == self.values[self.n - i])
    }
}

/// The multiplicities m_0..m_n of the sigma_k orbit sums in the restriction
/// to the diagonal +-1 subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    n: usize,
    m: Vec<BigUint>,
}

impl MultiplicityVector {
    pub fn new(n: usize, m: Vec<BigUint>) -> Result<Self> {
        if m.len() != n + 1 {
            return Err(Error::CharacterLength { expected: n + 1, got: m.len() });
        }
        Ok(MultiplicityVector { n, m })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, k: usize) -> &BigUint {
        &self.m[k]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.m
    }

    /// Entrywise doubling (the multiplicities of a symmetrization).
    pub fn doubled(&self) -> MultiplicityVector {
        MultiplicityVector {
            n: self.n,
            m: self.m.iter().map(|v| v * 2u32).collect(),
        }
    }
}

/// Coefficient of x^i in (1-x)^k (1+x)^(n-k): the character value of the
/// orbit sum sigma_i at an involution of class k. Memoized per rank when
/// built with `std`.
pub fn sigma_char(n: usize, i: usize, k: usize) -> Result<BigInt> {
    if i > n || k > n {
        return Err(Error::IndexOutOfRange { what: "sigma_char" });
    }
    Ok(sigma_row(n, k)[i].clone())
}

/// All coefficients of (1-x)^k (1+x)^(n-k), length n+1.
fn sigma_row(n: usize, k: usize) -> Vec<BigInt> {
    #[cfg(feature = "std")]
    {
        return memo::sigma_table(n)[k].clone();
    }
    #[cfg(not(feature = "std"))]
    {
        sigma_row_uncached(n, k)
    }
}

fn sigma_row_uncached(n: usize, k: usize) -> Vec<BigInt> {
    let mut coeffs: Vec<BigInt> = alloc::vec![BigInt::one()];
    for step in 0..n {
        let sign: BigInt = if step < k { -BigInt::one() } else { BigInt::one() };
        let mut next = alloc::vec![BigInt::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * &sign;
        }
        coeffs = next;
    }
    coeffs
}

/// The transform of Eq-style half of the pairing:
/// m_k = 2^{-n} sum_i sigma_char(n, i, k) chi(g_i), exact.
pub fn multiplicities(chi: &CharacterData) -> Result<MultiplicityVector> {
    let n = chi.rank();
    let two_n = BigInt::one() << n;
    let mut m = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let row = sigma_row(n, k);
        let mut sum = BigInt::zero();
        for i in 0..=n {
            sum += &row[i] * chi.value(i);
        }
        let (quot, rem) = sum.div_rem(&two_n);
        if !rem.is_zero() {
            return Err(Error::NonIntegralMultiplicity { k });
        }
        if quot.is_negative() {
            return Err(Error::NegativeMultiplicity { k });
        }
        m.push(quot.to_biguint().expect("nonnegative"));
    }
    MultiplicityVector::new(n, m)
}

/// Inverse transform: chi(g_i) = sum_k m_k sigma_char(n, k, i). Exact
/// inverse of [`multiplicities`] (note the transposed index roles).
pub fn character_from_multiplicities(mv: &MultiplicityVector) -> CharacterData {
    let n = mv.rank();
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let row = sigma_row(n, i);
        let mut sum = BigInt::zero();
        for k in 0..=n {
            sum += &row[k] * BigInt::from(mv.entry(k).clone());
        }
        values.push(sum);
    }
    CharacterData::new(n, values).expect("transform output satisfies the character bounds")
}

/// Gate before any class computation: the multiplicities of an orthogonal
/// character of Sp(2n,q) are divisible by 4 for k >= 1.
pub fn validate_orthogonal(chi: &CharacterData) -> Result<MultiplicityVector> {
    let mv = multiplicities(chi)?;
    for k in 1..=chi.rank() {
        if !(mv.entry(k) % 4u32).is_zero() {
            return Err(Error::DivisibilityViolation {
                k,
                value: mv.entry(k).clone().into(),
                rank: chi.rank(),
            });
        }
    }
    Ok(mv)
}

/// Multiplicities of a Gow-symmetric character through the half-range sums:
/// zero for odd k, and for even k a sum over i <= n/2 only. Agrees with
/// [`multiplicities`] on palindromic inputs.
pub fn gow_multiplicities(chi: &CharacterData) -> Result<MultiplicityVector> {
    if let Some(i) = (0..=chi.rank()).find(|&i| chi.value(i) != chi.value(chi.rank() - i)) {
        return Err(Error::GowSymmetryViolation { index: i });
    }
    let n = chi.rank();
    let two_n = BigInt::one() << n;
    let mut m = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k == 0 {
            // m_0 is carried via the full transform; it never exponentiates
            // anything downstream.
            let row = sigma_row(n, 0);
            let mut sum = BigInt::zero();
            for i in 0..=n {
                sum += &row[i] * chi.value(i);
            }
            m.push(exact_nonneg_div(sum, &two_n, k)?);
            continue;
        }
        if k.is_odd() {
            m.push(BigUint::zero());
            continue;
        }
        let row = sigma_row(n, k);
        // Fold the palindrome: 2 * sum over i < ceil(n/2), plus the middle
        // term once when n is even. Both parity cases divide by 2^n here.
        let half = n / 2;
        let mut sum = BigInt::zero();
        let upper = if n.is_even() { half } else { half + 1 };
        for i in 0..upper {
            sum += &row[i] * chi.value(i) * 2;
        }
        if n.is_even() {
            sum += &row[half] * chi.value(half);
        }
        m.push(exact_nonneg_div(sum, &two_n, k)?);
    }
    MultiplicityVector::new(n, m)
}

fn exact_nonneg_div(sum: BigInt, divisor: &BigInt, k: usize) -> Result<BigUint> {
    let (quot, rem) = sum.div_rem(divisor);
    if !rem.is_zero() {
        return Err(Error::NonIntegralMultiplicity { k });
    }
    if quot.is_negative() {
        return Err(Error::NegativeMultiplicity { k });
    }
    Ok(quot.to_biguint().expect("nonnegative"))
}

/// Deterministic Miller-Rabin for u64 (complete base set for this range).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn integer_root(n: u64, k: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    // Float rounding can be off by one either way.
    while r > 1 && r.checked_pow(k).map_or(true, |p| p > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).map_or(false, |p| p <= n) {
        r += 1;
    }
    r
}

/// Check that q = p^e with p an odd prime, q >= 3.
pub fn validate_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidGroupParameter { q });
    }
    if is_prime_u64(q) {
        return Ok((q, 1));
    }
    for e in 2..=63u32 {
        let r = integer_root(q, e);
        if r < 3 {
            break;
        }
        if r.checked_pow(e) == Some(q) && is_prime_u64(r) {
            return Ok((r, e));
        }
    }
    Err(Error::InvalidGroupParameter { q })
}

/// |Sp(2n,q)| = q^(n^2) * prod_{i=1..n} (q^(2i) - 1).
pub fn group_order_sp(n: usize, q: u64) -> Result<BigUint> {
    validate_prime_power(q)?;
    if n == 0 {
        return Err(Error::InvalidGroupParameter { q });
    }
    let q = BigUint::from(q);
    let mut order = q.pow((n * n) as u32);
    for i in 1..=n as u32 {
        order *= q.pow(2 * i) - BigUint::one();
    }
    Ok(order)
}

/// The regular character: |G| at the identity, zero elsewhere.
pub fn regular_character(n: usize, q: u64) -> Result<CharacterData> {
    let order = group_order_sp(n, q)?;
    let mut values = alloc::vec![BigInt::zero(); n + 1];
    values[0] = order.into();
    CharacterData::new(n, values)
}

/// The Weil character at the involutions:
/// chi_W(g_i) = (-1)^(i (q-1)/2) q^(n-i); degree q^n.
pub fn weil_character(n: usize, q: u64) -> Result<CharacterData> {
    validate_prime_power(q)?;
    if n == 0 {
        return Err(Error::InvalidGroupParameter { q });
    }
    let qb = BigInt::from(q);
    let sign_flips = (q - 1) / 2 % 2 == 1; // q = 3 mod 4
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut v = qb.pow((n - i) as u32);
        if sign_flips && i % 2 == 1 {
            v = -v;
        }
        values.push(v);
    }
    CharacterData::new(n, values)
}

/// The second Weil representation W' has the same involution character
/// values as W.
pub fn weil_prime_character(n: usize, q: u64) -> Result<CharacterData> {
    weil_character(n, q)
}

/// Closed-form multiplicities of the symmetrized Weil representation:
/// m_k = (q-1)^k (q+1)^(n-k) / 2^(n-1) for q = 1 mod 4, and with k and n-k
/// exchanged for q = 3 mod 4. m_0 is filled from the general transform.
pub fn weil_multiplicities_closed_form(n: usize, q: u64) -> Result<MultiplicityVector> {
    let weil = weil_character(n, q)?;
    let m0 = multiplicities(&weil.symmetrize())?.entry(0).clone();
    let qm1 = BigUint::from(q - 1);
    let qp1 = BigUint::from(q + 1);
    let denom = BigUint::one() << (n - 1);
    let q_mod_4_is_1 = q % 4 == 1;
    let mut m = alloc::vec![m0];
    for k in 1..=n {
        let numer = if q_mod_4_is_1 {
            qm1.pow(k as u32) * qp1.pow((n - k) as u32)
        } else {
            qm1.pow((n - k) as u32) * qp1.pow(k as u32)
        };
        debug_assert!((&numer % &denom).is_zero());
        m.push(numer / &denom);
    }
    MultiplicityVector::new(n, m)
}

/// Parabolically induced pi_1 of Sp(4,q): degree (q+1)(q^2+1), value
/// -deg at -1 and 0 at g_1.
pub fn sp4_pi1_character(q: u64) -> Result<CharacterData> {
    validate_prime_power(q)?;
    let qb = BigInt::from(q);
    let d: BigInt = (&qb + 1) * (&qb * &qb + 1);
    CharacterData::new(2, alloc::vec![d.clone(), BigInt::zero(), -d])
}

/// Cuspidally induced pi_2 of Sp(4,q): degree q^2 (q-1)(q^2+1), value
/// -deg at -1 and 0 at g_1.
pub fn sp4_pi2_character(q: u64) -> Result<CharacterData> {
    validate_prime_power(q)?;
    let qb = BigInt::from(q);
    let d: BigInt = &qb * &qb * (&qb - 1) * (&qb * &qb + 1);
    CharacterData::new(2, alloc::vec![d.clone(), BigInt::zero(), -d])
}

/// Catalog of built-in characters exposed to front ends.
pub fn catalog_character(name: &str, n: usize, q: u64) -> Result<CharacterData> {
    match name {
        "regular" => regular_character(n, q),
        "weil" => weil_character(n, q),
        "weil-prime" => weil_prime_character(n, q),
        "sp4-pi1" => {
            if n != 2 {
                return Err(Error::RankNotTwo { n });
            }
            sp4_pi1_character(q)
        }
        "sp4-pi2" => {
            if n != 2 {
                return Err(Error::RankNotTwo { n });
            }
            sp4_pi2_character(q)
        }
        other => Err(Error::Parse(alloc::format!("unknown catalog representation: {other}"))),
    }
}

#[cfg(feature = "std")]
mod memo {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};

    use num_bigint::BigInt;

    static SIGMA: OnceLock<Mutex<HashMap<usize, Vec<Vec<BigInt>>>>> = OnceLock::new();

    /// Rows k = 0..=n of the (1-x)^k (1+x)^(n-k) coefficient table.
    pub(super) fn sigma_table(n: usize) -> Vec<Vec<BigInt>> {
        let cache = SIGMA.get_or_init(Default::default);
        if let Some(hit) = cache.lock().unwrap().get(&n) {
            return hit.clone();
        }
        let table: Vec<Vec<BigInt>> =
            (0..=n).map(|k| super::sigma_row_uncached(n, k)).collect();
        cache.lock().unwrap().insert(n, table.clone());
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(n: usize, values: &[i64]) -> CharacterData {
        CharacterData::new(n, values.iter().map(|&v| BigInt::from(v)).collect()).unwrap()
    }

    fn mv(n: usize, values: &[u64]) -> MultiplicityVector {
        MultiplicityVector::new(n, values.iter().map(|&v| BigUint::from(v)).collect()).unwrap()
    }

    #[test]
    fn sigma_char_values() {
        // Row k = 0 is plain binomials.
        for n in 1..=6 {
            for i in 0..=n {
                let expected = (0..i).fold(BigInt::one(), |acc, j| {
                    acc * BigInt::from((n - j) as u64) / BigInt::from((j + 1) as u64)
                });
                assert_eq!(sigma_char(n, i, 0).unwrap(), expected);
            }
        }
        assert_eq!(sigma_char(2, 1, 1).unwrap(), BigInt::zero());
        assert_eq!(sigma_char(2, 2, 2).unwrap(), BigInt::one());
        assert!(sigma_char(2, 3, 0).is_err());
    }

    #[test]
    fn multiplicities_examples() {
        assert_eq!(multiplicities(&chi(1, &[6, -2])).unwrap(), mv(1, &[2, 4]));
        assert_eq!(
            multiplicities(&chi(2, &[51840, 0, 0])).unwrap(),
            mv(2, &[12960, 12960, 12960])
        );
        assert_eq!(multiplicities(&chi(2, &[8, 0, -8])).unwrap(), mv(2, &[0, 4, 0]));
    }

    #[test]
    fn transform_round_trip() {
        let m = mv(2, &[0, 4, 0]);
        let c = character_from_multiplicities(&m);
        assert_eq!(c, chi(2, &[8, 0, -8]));
        assert_eq!(multiplicities(&c).unwrap(), m);

        let zero = mv(3, &[0, 0, 0, 0]);
        let c = character_from_multiplicities(&zero);
        assert!(c.values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(validate_orthogonal(&chi(1, &[6, -2])).unwrap(), mv(1, &[2, 4]));
        assert!(matches!(
            validate_orthogonal(&chi(1, &[2, 0])),
            Err(Error::DivisibilityViolation { k: 1, .. })
        ));
        assert!(matches!(
            validate_orthogonal(&chi(1, &[1, 0])),
            Err(Error::NonIntegralMultiplicity { .. })
        ));
        // (4, 4, 0) has m_2 = (4 - 8 + 0)/4 = -1.
        assert!(matches!(
            multiplicities(&chi(2, &[4, 4, 0])),
            Err(Error::NegativeMultiplicity { k: 2 })
        ));
    }

    #[test]
    fn divisibility_message_names_the_check() {
        // A character with m = (1, 2, 0, 0): m_1 = 2 violates the gate.
        let bad = character_from_multiplicities(&mv(3, &[1, 2, 0, 0]));
        let err = validate_orthogonal(&bad).unwrap_err();
        let msg = alloc::format!("{err}");
        assert!(msg.contains("m_1 = 2 not divisible by 4"), "{msg}");
        assert!(msg.contains("Sp(6,q)"), "{msg}");
    }

    #[test]
    fn gow_symmetry() {
        assert!(!chi(2, &[8, 0, -8]).is_gow_symmetric());
        assert!(chi(2, &[8, 0, 8]).is_gow_symmetric());
        assert!(matches!(
            gow_multiplicities(&chi(2, &[8, 0, -8])),
            Err(Error::GowSymmetryViolation { .. })
        ));
    }

    #[test]
    fn gow_half_sums_match_full_transform() {
        // Palindromic characters built from even-k multiplicities.
        for n in 1..=6usize {
            let mut entries = alloc::vec![BigUint::from(3u32)];
            for k in 1..=n {
                entries.push(BigUint::from(if k % 2 == 0 { 4 * k as u64 } else { 0 }));
            }
            let m = MultiplicityVector::new(n, entries).unwrap();
            let c = character_from_multiplicities(&m);
            assert!(c.is_gow_symmetric(), "n = {n}");
            assert_eq!(gow_multiplicities(&c).unwrap(), multiplicities(&c).unwrap());
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order_sp(1, 3).unwrap(), BigUint::from(24u32));
        assert_eq!(group_order_sp(2, 3).unwrap(), BigUint::from(51840u32));
        assert_eq!(group_order_sp(1, 5).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn prime_power_validation() {
        assert_eq!(validate_prime_power(3).unwrap(), (3, 1));
        assert_eq!(validate_prime_power(9).unwrap(), (3, 2));
        assert_eq!(validate_prime_power(27).unwrap(), (3, 3));
        assert_eq!(validate_prime_power(125).unwrap(), (5, 3));
        assert!(validate_prime_power(2).is_err());
        assert!(validate_prime_power(4).is_err());
        assert!(validate_prime_power(15).is_err());
        assert!(validate_prime_power(1).is_err());
        assert!(validate_prime_power(21).is_err());
    }

    #[test]
    fn weil_values() {
        assert_eq!(weil_character(1, 3).unwrap(), chi(1, &[3, -1]));
        assert_eq!(weil_character(2, 3).unwrap(), chi(2, &[9, -3, 1]));
        assert_eq!(weil_character(2, 5).unwrap(), chi(2, &[25, 5, 1]));
        assert_eq!(weil_prime_character(2, 3).unwrap(), weil_character(2, 3).unwrap());
    }

    #[test]
    fn weil_closed_form_examples() {
        let m13 = weil_multiplicities_closed_form(1, 3).unwrap();
        assert_eq!(m13.entry(1), &BigUint::from(4u32));
        let m23 = weil_multiplicities_closed_form(2, 3).unwrap();
        assert_eq!(m23.entry(1), &BigUint::from(4u32));
        assert_eq!(m23.entry(2), &BigUint::from(8u32));
        let m25 = weil_multiplicities_closed_form(2, 5).unwrap();
        assert_eq!(m25.entry(1), &BigUint::from(12u32));
        assert_eq!(m25.entry(2), &BigUint::from(8u32));
    }

    #[test]
    fn weil_closed_form_matches_transform() {
        for n in 1..=4 {
            for q in [3u64, 5, 7, 9] {
                let closed = weil_multiplicities_closed_form(n, q).unwrap();
                let transform =
                    multiplicities(&weil_character(n, q).unwrap().symmetrize()).unwrap();
                assert_eq!(closed, transform, "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn sp4_characters() {
        assert_eq!(sp4_pi1_character(3).unwrap(), chi(2, &[40, 0, -40]));
        assert_eq!(sp4_pi2_character(3).unwrap(), chi(2, &[180, 0, -180]));
        // m_1 of the symmetrization is (q+1)(q^2+1), m_2 = 0.
        for q in [3u64, 5, 7] {
            let m = multiplicities(&sp4_pi1_character(q).unwrap().symmetrize()).unwrap();
            assert_eq!(m.entry(1), &BigUint::from((q + 1) * (q * q + 1)));
            assert_eq!(m.entry(2), &BigUint::zero());
        }
    }

    #[test]
    fn regular_character_validates() {
        for (n, q) in [(1usize, 3u64), (1, 5), (2, 3), (2, 5), (3, 3)] {
            let reg = regular_character(n, q).unwrap();
            let m = validate_orthogonal(&reg).unwrap();
            let expected = group_order_sp(n, q).unwrap() >> n;
            for k in 0..=n {
                assert_eq!(m.entry(k), &expected);
            }
        }
    }

    #[test]
    fn character_bound_enforced() {
        assert!(CharacterData::new(1, alloc::vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(CharacterData::new(1, alloc::vec![BigInt::from(-1), BigInt::zero()]).is_err());
        assert!(CharacterData::new(1, alloc::vec![BigInt::one()]).is_err());
    }
}
