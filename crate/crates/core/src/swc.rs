//! Total Stiefel-Whitney classes of orthogonal representations of Sp(2n,q):
//! the product formula over Dickson factors, the Gow-simplified variants,
//! the Sp(4,q) closed form, the universal degree-4 and degree-8 formulas,
//! and the restriction-based end-to-end self check.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::characters::{
    gow_multiplicities, multiplicities, validate_orthogonal, CharacterData, MultiplicityVector,
};
use crate::error::{Error, Result};
use crate::polyring::{CoeffDomain, GradedPoly, PolyRing};
use crate::symfunc::{dickson_factor, elementary_symmetric, orbit_product, v_ring};

/// Ring `F_2[e_1..e_n]` with every generator of cohomological degree 4.
pub fn e_ring(n: usize) -> PolyRing {
    PolyRing::uniform(CoeffDomain::Gf2, "e", n, 4)
}

/// A total Stiefel-Whitney class: a truncated polynomial in e_1..e_n
/// (weight 4 each) together with the multiplicity vector that produced it.
///
/// Invariants: the constant term is 1, every graded component of degree not
/// divisible by 4 vanishes (structural, since all weights are 4), and the
/// polynomial is symmetric in the e-variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SWClass {
    n: usize,
    total: GradedPoly,
    multiplicities: MultiplicityVector,
}

impl SWClass {
    fn assemble(n: usize, total: GradedPoly, multiplicities: MultiplicityVector) -> Self {
        assert!(total.constant_term().is_one(), "total class must start at w_0 = 1");
        debug_assert!(total.is_symmetric(), "total class must be symmetric in e_1..e_n");
        SWClass { n, total, multiplicities }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> &GradedPoly {
        &self.total
    }

    /// The multiplicity vector m_0..m_n recorded when the class was built.
    pub fn exponent_record(&self) -> &MultiplicityVector {
        &self.multiplicities
    }

    /// The graded piece w_k. Degrees above the truncation cap are not stored
    /// and cannot be answered reliably.
    pub fn w_component(&self, k: u64) -> Result<GradedPoly> {
        if let Some(cap) = self.total.truncation_cap() {
            if k > cap {
                return Err(Error::CapExceeded { degree: k, cap });
            }
        }
        Ok(self.total.graded_component(k))
    }
}

/// `D^[k](e_1..e_n)`: the Dickson factor with `E_i` replaced by the `i`th
/// elementary symmetric polynomial of the weight-4 e-variables, truncated.
pub fn dickson_factor_e(n: usize, k: usize, cap: Option<u64>) -> Result<GradedPoly> {
    let ring = e_ring(n);
    let images: Vec<GradedPoly> = (1..=n)
        .map(|i| {
            let e = elementary_symmetric(&ring, i);
            match cap {
                Some(c) => e.truncated(c),
                None => e,
            }
        })
        .collect();
    dickson_factor(n, k)?.substitute(&images)
}

fn product_of_factors(
    n: usize,
    cap: u64,
    exponents: impl Iterator<Item = (usize, BigUint)>,
) -> Result<GradedPoly> {
    let ring = e_ring(n);
    let mut acc = GradedPoly::one(&ring, Some(cap));
    for (k, exp) in exponents {
        if exp.is_zero() {
            continue;
        }
        let factor = dickson_factor_e(n, k, Some(cap))?;
        acc = acc.mul(&factor.pow_big(&exp)?)?;
    }
    Ok(acc)
}

fn quarter(mv: &MultiplicityVector, k: usize) -> BigUint {
    mv.entry(k) >> 2
}

/// The product formula: w(pi) = prod_k D^[k](e)^(m_k/4), truncated at `cap`.
/// The input must pass the orthogonality gate.
pub fn total_swc(chi: &CharacterData, cap: u64) -> Result<SWClass> {
    let mv = validate_orthogonal(chi)?;
    let n = chi.rank();
    let total = product_of_factors(n, cap, (1..=n).map(|k| (k, quarter(&mv, k))))?;
    Ok(SWClass::assemble(n, total, mv))
}

/// Same class as [`total_swc`] but for a Gow-symmetric character, computed
/// with only the even-k factors and the half-range multiplicity sums.
pub fn total_swc_gow_orthogonal(chi: &CharacterData, cap: u64) -> Result<SWClass> {
    let mv = gow_multiplicities(chi)?;
    let n = chi.rank();
    for k in 1..=n {
        if !(mv.entry(k) % 4u32).is_zero() {
            return Err(Error::DivisibilityViolation {
                k,
                value: mv.entry(k).clone().into(),
                rank: n,
            });
        }
    }
    let total = product_of_factors(
        n,
        cap,
        (1..=n).filter(|k| k % 2 == 0).map(|k| (k, quarter(&mv, k))),
    )?;
    Ok(SWClass::assemble(n, total, mv))
}

/// w(S(phi)) for a symplectic-side character phi with even multiplicities:
/// prod_k D^[k](e)^(m_k(phi)/2). Equals `total_swc(phi.symmetrize())`.
pub fn total_swc_symmetrized_symplectic(chi_phi: &CharacterData, cap: u64) -> Result<SWClass> {
    let mv_phi = multiplicities(chi_phi)?;
    let n = chi_phi.rank();
    for k in 1..=n {
        if (mv_phi.entry(k) % 2u32).is_one() {
            return Err(Error::OddMultiplicity { k });
        }
    }
    let total = product_of_factors(n, cap, (1..=n).map(|k| (k, mv_phi.entry(k) >> 1)))?;
    // The class belongs to S(phi), whose multiplicities are the doubled ones.
    Ok(SWClass::assemble(n, total, mv_phi.doubled()))
}

/// w_4(pi) = ((deg pi - chi(g_1)) / 8 mod 2) * E_1(e_1..e_n), valid for all
/// ranks n >= 1.
pub fn universal_w4(chi: &CharacterData) -> Result<GradedPoly> {
    let n = chi.rank();
    if n < 1 {
        return Err(Error::RankTooSmall { needed: 1, got: n });
    }
    let diff = chi.degree() - chi.value(1);
    let c = exact_div(diff, 8, "deg - chi(g_1)")?;
    let ring = e_ring(n);
    if c.is_even() {
        Ok(GradedPoly::zero(&ring, None))
    } else {
        Ok(elementary_symmetric(&ring, 1))
    }
}

/// w_8(pi) = r_1 E_2 + C(r_1 + r_2, 2) E_1^2 with
/// r_1 = (deg - chi(g_2))/16 and r_2 = (deg - 2 chi(g_1) + chi(g_2))/16,
/// valid for n >= 2.
///
/// The E_1^2 coefficient expands as C(r_1,2) + r_1 r_2 + C(r_2,2): the
/// degree-2 part of (1 + E_1 + E_2)^(r_1) (1 + E_1)^(r_2) picks up a cross
/// term from one E_1 out of each factor, so the binomials alone understate
/// it whenever r_1 r_2 is odd.
pub fn universal_w8(chi: &CharacterData) -> Result<GradedPoly> {
    let n = chi.rank();
    if n < 2 {
        return Err(Error::RankTooSmall { needed: 2, got: n });
    }
    let r1 = exact_div(chi.degree() - chi.value(2), 16, "deg - chi(g_2)")?;
    let r2 = exact_div(
        chi.degree() - chi.value(1) * 2 + chi.value(2),
        16,
        "deg - 2 chi(g_1) + chi(g_2)",
    )?;
    let ring = e_ring(n);
    let mut out = GradedPoly::zero(&ring, None);
    if r1.is_odd() {
        out = out.add(&elementary_symmetric(&ring, 2))?;
    }
    if binom2(&(r1 + r2)).is_odd() {
        let e1 = elementary_symmetric(&ring, 1);
        out = out.add(&e1.mul(&e1)?)?;
    }
    Ok(out)
}

fn binom2(r: &BigInt) -> BigInt {
    r * (r - 1) / 2
}

fn exact_div(value: BigInt, by: u32, what: &'static str) -> Result<BigInt> {
    let (quot, rem) = value.div_rem(&BigInt::from(by));
    if !rem.is_zero() {
        return Err(Error::NotDivisible { what, by, value });
    }
    Ok(quot)
}

/// The Sp(4,q) closed form
/// w(pi) = ((1+e_1)(1+e_2))^r (1+e_1+e_2)^s with
/// r = (chi(1) - chi(-1))/16 and s = (chi(1) + chi(-1) - 2 chi(g_1))/16,
/// computed through the two displayed factors rather than the general
/// product. Must equal [`total_swc`] at rank 2.
pub fn sp4_closed_form(chi: &CharacterData, cap: u64) -> Result<SWClass> {
    if chi.rank() != 2 {
        return Err(Error::RankNotTwo { n: chi.rank() });
    }
    let r = exact_div(chi.value(0) - chi.value(2), 16, "chi(1) - chi(-1)")?;
    let s = exact_div(
        chi.value(0) + chi.value(2) - chi.value(1) * 2,
        16,
        "chi(1) + chi(-1) - 2 chi(g_1)",
    )?;
    for (name, val) in [("r", &r), ("s", &s)] {
        if val.is_negative() {
            return Err(Error::NegativeExponent {
                what: if name == "r" { "r = (chi(1) - chi(-1))/16" } else { "s" },
                value: val.clone(),
            });
        }
    }
    let mv = multiplicities(chi)?;
    let ring = e_ring(2);
    let one = GradedPoly::one(&ring, Some(cap));
    let e1 = GradedPoly::variable(&ring, 0, Some(cap))?;
    let e2 = GradedPoly::variable(&ring, 1, Some(cap))?;
    let first = one.add(&e1)?.mul(&one.add(&e2)?)?;
    let second = one.add(&e1)?.add(&e2)?;
    let total = first
        .pow_big(&r.to_biguint().expect("checked nonnegative"))?
        .mul(&second.pow_big(&s.to_biguint().expect("checked nonnegative"))?)?;
    Ok(SWClass::assemble(2, total, mv))
}

/// End-to-end self check. Computes (a) the total class restricted along
/// e_i -> v_i^4 and (b) the orbit-product formula
/// prod_k (prod_{|v|=k} (1+v))^(m_k) directly in the v-ring, both at `cap`,
/// and reports whether they agree. True for every valid input.
pub fn restriction_oracle(chi: &CharacterData, cap: u64) -> Result<bool> {
    let mv = validate_orthogonal(chi)?;
    let n = chi.rank();
    let cls = total_swc(chi, cap)?;
    let vring = v_ring(n);
    let images: Vec<GradedPoly> = (0..n)
        .map(|i| {
            GradedPoly::variable(&vring, i, Some(cap))
                .and_then(|v| v.pow(4))
        })
        .collect::<Result<_>>()?;
    let restricted = cls.total().substitute(&images)?;

    let mut direct = GradedPoly::one(&vring, Some(cap));
    for k in 1..=n {
        let m_k = mv.entry(k);
        if m_k.is_zero() {
            continue;
        }
        let base = orbit_product(n, k)?.truncated(cap);
        direct = direct.mul(&base.pow_big(m_k)?)?;
    }
    Ok(restricted == direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{
        character_from_multiplicities, regular_character, weil_character,
    };

    fn chi(n: usize, values: &[i64]) -> CharacterData {
        CharacterData::new(n, values.iter().map(|&v| BigInt::from(v)).collect()).unwrap()
    }

    fn mv(n: usize, values: &[u64]) -> MultiplicityVector {
        MultiplicityVector::new(n, values.iter().map(|&v| BigUint::from(v)).collect()).unwrap()
    }

    fn e_poly(n: usize, cap: Option<u64>, terms: &[&[u64]]) -> GradedPoly {
        GradedPoly::from_terms(
            &e_ring(n),
            terms.iter().map(|e| (e.to_vec(), BigInt::one())),
            cap,
        )
        .unwrap()
    }

    #[test]
    fn total_swc_rank1() {
        // S(Weil) at q = 3: m_1 = 4, class (1+e1).
        let cls = total_swc(&chi(1, &[6, -2]), 16).unwrap();
        assert_eq!(*cls.total(), e_poly(1, Some(16), &[&[0], &[1]]));

        // Regular of SL(2,3): exponent 24/8 = 3.
        let cls = total_swc(&regular_character(1, 3).unwrap(), 16).unwrap();
        assert_eq!(
            *cls.total(),
            e_poly(1, Some(16), &[&[0], &[1], &[2], &[3]])
        );
    }

    #[test]
    fn total_swc_rank2() {
        // m = (0,4,0): class (1+e1)(1+e2).
        let cls = total_swc(&chi(2, &[8, 0, -8]), 32).unwrap();
        assert_eq!(
            *cls.total(),
            e_poly(2, Some(32), &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
        );
    }

    #[test]
    fn w_component_examples() {
        let cls = total_swc(&chi(1, &[6, -2]), 16).unwrap();
        assert_eq!(cls.w_component(4).unwrap(), e_poly(1, Some(16), &[&[1]]));
        assert_eq!(cls.w_component(0).unwrap(), e_poly(1, Some(16), &[&[0]]));
        assert!(cls.w_component(5).unwrap().is_zero());
        assert!(matches!(cls.w_component(20), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn gow_route_agrees() {
        // m = (0,0,8,0) at n = 3 gives (D^[2])^2.
        let c = character_from_multiplicities(&mv(3, &[0, 0, 8, 0]));
        let plain = total_swc(&c, 32).unwrap();
        let gow = total_swc_gow_orthogonal(&c, 32).unwrap();
        assert_eq!(plain.total(), gow.total());
        let d2 = dickson_factor_e(3, 2, Some(32)).unwrap();
        assert_eq!(*gow.total(), d2.mul(&d2).unwrap());
    }

    #[test]
    fn gow_rank2_square() {
        // m = (0,0,8): (1 + E1)^2 in the e-coordinates is 1 + e1^2 + e2^2.
        let c = character_from_multiplicities(&mv(2, &[0, 0, 8]));
        let cls = total_swc_gow_orthogonal(&c, 32).unwrap();
        assert_eq!(
            *cls.total(),
            e_poly(2, Some(32), &[&[0, 0], &[2, 0], &[0, 2]])
        );
    }

    #[test]
    fn symmetrized_symplectic_route() {
        // Weil W at (1,3): m_1(phi) = 2, class (1+e1).
        let w = weil_character(1, 3).unwrap();
        let cls = total_swc_symmetrized_symplectic(&w, 16).unwrap();
        assert_eq!(*cls.total(), e_poly(1, Some(16), &[&[0], &[1]]));
        let direct = total_swc(&w.symmetrize(), 16).unwrap();
        assert_eq!(cls.total(), direct.total());

        // Weil W at (2,3): (D^[1])^1 (D^[2])^2.
        let w = weil_character(2, 3).unwrap();
        let cls = total_swc_symmetrized_symplectic(&w, 32).unwrap();
        let direct = total_swc(&w.symmetrize(), 32).unwrap();
        assert_eq!(cls.total(), direct.total());

        // Odd multiplicity rejected: m(phi) = (0, 1) has m_1 odd.
        let bad = character_from_multiplicities(&mv(1, &[0, 1]));
        assert!(matches!(
            total_swc_symmetrized_symplectic(&bad, 16),
            Err(Error::OddMultiplicity { k: 1 })
        ));
    }

    #[test]
    fn universal_w4_examples() {
        // S(Weil) q=3 at rank 2: coefficient 24/8 = 3, odd.
        let got = universal_w4(&chi(2, &[18, -6, 2])).unwrap();
        assert_eq!(got, e_poly(2, None, &[&[1, 0], &[0, 1]]));

        // chi(g_1) = deg kills the class.
        assert!(universal_w4(&chi(2, &[8, 8, 8])).unwrap().is_zero());

        // Rank 1: (6 - (-2))/8 = 1.
        assert_eq!(universal_w4(&chi(1, &[6, -2])).unwrap(), e_poly(1, None, &[&[1]]));

        // Non-divisible input is rejected.
        assert!(matches!(
            universal_w4(&chi(1, &[3, 0])),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn universal_w8_weil_instance() {
        // r1 = 1, r2 = 2: w8 = E2 + E1^2.
        let got = universal_w8(&chi(2, &[18, -6, 2])).unwrap();
        let expected = e_poly(2, None, &[&[1, 1], &[2, 0], &[0, 2]]);
        assert_eq!(got, expected);
        // Matches the expansion of the total class.
        let total = total_swc(&chi(2, &[18, -6, 2]), 16).unwrap();
        assert_eq!(got, total.w_component(8).unwrap());
        let w4 = universal_w4(&chi(2, &[18, -6, 2])).unwrap();
        assert_eq!(w4, total.w_component(4).unwrap());
    }

    #[test]
    fn universal_w8_regular_character() {
        let reg = regular_character(2, 3).unwrap();
        let got = universal_w8(&reg).unwrap();
        let total = total_swc(&reg, 16).unwrap();
        assert_eq!(got, total.w_component(8).unwrap());
    }

    #[test]
    fn universal_w8_cross_term() {
        // m = (19, 20, 4): r1 = 5 and r2 = 1 are both odd, so the E1^2
        // coefficient needs the r1*r2 cross term.
        let c = chi(2, &[63, 15, -17]);
        let got = universal_w8(&c).unwrap();
        let total = total_swc(&c, 16).unwrap();
        assert_eq!(got, total.w_component(8).unwrap());
        let expected = e_poly(2, None, &[&[1, 1], &[2, 0], &[0, 2]]);
        assert_eq!(got, expected);
    }

    #[test]
    fn sp4_closed_form_examples() {
        let cls = sp4_closed_form(&chi(2, &[8, 0, -8]), 32).unwrap();
        let direct = total_swc(&chi(2, &[8, 0, -8]), 32).unwrap();
        assert_eq!(cls.total(), direct.total());

        // m = (0,0,8) via the transform: s = 2, r = 0.
        let cls = sp4_closed_form(&chi(2, &[8, -8, 8]), 32).unwrap();
        assert_eq!(
            *cls.total(),
            e_poly(2, Some(32), &[&[0, 0], &[2, 0], &[0, 2]])
        );

        assert!(matches!(
            sp4_closed_form(&chi(1, &[4, 4]), 32),
            Err(Error::RankNotTwo { n: 1 })
        ));
    }

    #[test]
    fn restriction_oracle_small() {
        assert!(restriction_oracle(&chi(1, &[6, -2]), 16).unwrap());
        let reg = regular_character(2, 3).unwrap();
        assert!(restriction_oracle(&reg, 32).unwrap());
    }

    #[test]
    fn vanishing_off_multiples_of_four() {
        let cls = total_swc(&chi(2, &[18, -6, 2]), 32).unwrap();
        for d in 0..=32u64 {
            if d % 4 != 0 {
                assert!(cls.w_component(d).unwrap().is_zero(), "degree {d}");
            }
        }
        assert!(cls.total().constant_term().is_one());
        assert!(cls.total().is_symmetric());
    }

    #[test]
    fn rank4_gow_matches_printed_half_sum_coefficients() {
        // At n = 4 the half-range sums specialize to
        // m_2 = (deg - chi(g_2))/8 and m_4 = (deg - 4 chi(g_1) + 3 chi(g_2))/8.
        let c = character_from_multiplicities(&mv(4, &[4, 0, 8, 0, 12]));
        assert!(c.is_gow_symmetric());
        let m = gow_multiplicities(&c).unwrap();
        let deg = c.degree();
        let m2 = (deg - c.value(2)) / 8;
        let m4 = (deg - c.value(1) * 4 + c.value(2) * 3) / 8;
        assert_eq!(BigInt::from(m.entry(2).clone()), m2);
        assert_eq!(BigInt::from(m.entry(4).clone()), m4);

        let plain = total_swc(&c, 32).unwrap();
        let gow = total_swc_gow_orthogonal(&c, 32).unwrap();
        assert_eq!(plain.total(), gow.total());
    }
}
