//! Characteristic classes of external tensor products through the
//! two-alphabet polynomial P_{m,n}, and the mod-2 Chern class of a
//! representation.

use alloc::vec::Vec;

use crate::characters::CharacterData;
use crate::error::{Error, Result};
use crate::polyring::{CoeffDomain, GradedPoly};
use crate::swc::{total_swc, SWClass};
use crate::symfunc::compute_pmn_with_cap;

/// Largest total number of expansion variables (rank + rank) accepted by
/// [`tensor_class`]; the q-product blows up combinatorially beyond this.
pub const MAX_TENSOR_VARS: usize = 16;

/// The classes w_1..w_m (or c_1..c_m) of a rank-m representation or bundle,
/// all living in one target ring. Slot `i` must be homogeneous of degree
/// `i * degree_unit` when nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    rank: usize,
    components: Vec<GradedPoly>,
    degree_unit: u64,
}

impl ClassVector {
    /// Validate shapes: one component per slot 1..=rank, a common ring, and
    /// slot-proportional homogeneous degrees. The degree unit (cohomological
    /// degree of a formal root) is inferred from the first nonzero slot.
    pub fn new(rank: usize, components: Vec<GradedPoly>) -> Result<Self> {
        if components.len() != rank {
            return Err(Error::ImageCount { expected: rank, got: components.len() });
        }
        for pair in components.windows(2) {
            if !pair[0].ring().compatible(pair[1].ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let mut unit: Option<u64> = None;
        for (idx, w) in components.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let slot = (idx + 1) as u128;
            if !w.is_homogeneous() {
                return Err(Error::ComponentDegree { slot: idx + 1 });
            }
            let degree = w.max_weighted_degree().expect("nonzero");
            if degree % slot != 0 || degree / slot > u64::MAX as u128 {
                return Err(Error::ComponentDegree { slot: idx + 1 });
            }
            let u = (degree / slot) as u64;
            match unit {
                None => unit = Some(u),
                Some(prev) if prev != u => {
                    return Err(Error::ComponentDegree { slot: idx + 1 });
                }
                Some(_) => {}
            }
        }
        Ok(ClassVector { rank, components, degree_unit: unit.unwrap_or(1) })
    }

    /// Slots 1..=rank of a computed total SW class. Components above the
    /// truncation cap are zero; that is sound for capped tensor products,
    /// where their contributions would truncate away regardless.
    pub fn from_swclass(cls: &SWClass, rank: usize) -> Result<Self> {
        let components: Vec<GradedPoly> = (1..=rank as u64)
            .map(|i| cls.total().graded_component(i))
            .collect();
        ClassVector::new(rank, components)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[GradedPoly] {
        &self.components
    }

    pub fn degree_unit(&self) -> u64 {
        self.degree_unit
    }
}

/// Total class of an external tensor product:
/// `P_{m,n}(w_1(a), ..., w_m(a), w_1(b), ..., w_n(b))`, truncated at `cap`.
/// Both inputs must live in one ring of the stated domain and share a degree
/// unit.
pub fn tensor_class(
    a: &ClassVector,
    b: &ClassVector,
    domain: CoeffDomain,
    cap: u64,
) -> Result<GradedPoly> {
    let unit = match (a.has_nonzero(), b.has_nonzero()) {
        (true, true) if a.degree_unit != b.degree_unit => {
            return Err(Error::DegreeUnitMismatch {
                left: a.degree_unit,
                right: b.degree_unit,
            });
        }
        (true, _) => a.degree_unit,
        (false, true) => b.degree_unit,
        (false, false) => 1,
    };
    let target_ring = match (a.components.first(), b.components.first()) {
        (Some(x), Some(y)) => {
            if !x.ring().compatible(y.ring()) {
                return Err(Error::RingMismatch);
            }
            x.ring().clone()
        }
        (Some(x), None) => x.ring().clone(),
        (None, Some(y)) => y.ring().clone(),
        (None, None) => {
            return Err(Error::ImageCount { expected: 1, got: 0 });
        }
    };
    if target_ring.domain() != domain {
        return Err(Error::DomainMismatch("class vectors do not match the requested domain"));
    }
    let vars = a.rank + b.rank;
    if vars > MAX_TENSOR_VARS {
        return Err(Error::TensorTooLarge { vars, limit: MAX_TENSOR_VARS });
    }
    // Only root degrees up to cap/unit can contribute below the cap.
    let root_cap = cap / unit.max(1);
    let pmn = compute_pmn_with_cap(a.rank, b.rank, domain, Some(root_cap))?;
    let images: Vec<GradedPoly> = a
        .components
        .iter()
        .chain(&b.components)
        .map(|w| w.truncated(cap))
        .collect();
    if images.is_empty() {
        // Both ranks zero: P_{0,0} = 1.
        return Ok(GradedPoly::one(&target_ring, Some(cap)));
    }
    Ok(pmn.body().substitute(&images)?.truncated(cap))
}

impl ClassVector {
    fn has_nonzero(&self) -> bool {
        self.components.iter().any(|w| !w.is_zero())
    }
}

/// The mod-2 total Chern class of an arbitrary representation, computed as
/// w(S(pi)) from the symmetrized character.
pub fn mod2_chern(chi: &CharacterData, cap: u64) -> Result<SWClass> {
    total_swc(&chi.symmetrize(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{weil_character, weil_prime_character};
    use crate::polyring::PolyRing;
    use crate::symfunc::v_ring;
    use alloc::vec;
    use num_bigint::BigInt;
    use num_traits::One;

    fn split_vector(ring: &PolyRing, vars: &[usize]) -> ClassVector {
        // Rank-m class of a sum of line bundles with roots at the given
        // variable indices: w_k = E_k(roots).
        let m = vars.len();
        let mut components = Vec::new();
        for k in 1..=m {
            let mut acc = GradedPoly::zero(ring, None);
            for subset in combinations(vars, k) {
                let mut exps = vec![0u64; ring.num_vars()];
                for &v in &subset {
                    exps[v] = 1;
                }
                acc = acc
                    .add(&GradedPoly::from_terms(ring, vec![(exps, BigInt::one())], None).unwrap())
                    .unwrap();
            }
            components.push(acc);
        }
        ClassVector::new(m, components).unwrap()
    }

    fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if items.len() < k {
            return vec![];
        }
        let mut out = combinations(&items[1..], k - 1)
            .into_iter()
            .map(|mut rest| {
                rest.insert(0, items[0]);
                rest
            })
            .collect::<Vec<_>>();
        out.extend(combinations(&items[1..], k));
        out
    }

    #[test]
    fn rank1_times_rank1() {
        let ring = v_ring(2);
        let a = split_vector(&ring, &[0]);
        let b = split_vector(&ring, &[1]);
        let got = tensor_class(&a, &b, CoeffDomain::Gf2, 8).unwrap();
        // P_{1,1} = 1 + E1(x) + E1(y) evaluated at v1, v2.
        let expected = GradedPoly::from_terms(
            &ring,
            vec![
                (vec![0, 0], BigInt::one()),
                (vec![1, 0], BigInt::one()),
                (vec![0, 1], BigInt::one()),
            ],
            None,
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn split_classes_match_direct_product() {
        // Roots {v1, v2} x {v3, v4}: the tensor class is the expanded
        // product of (1 + v_i + v_j).
        let ring = v_ring(4);
        let a = split_vector(&ring, &[0, 1]);
        let b = split_vector(&ring, &[2, 3]);
        let cap = 12;
        let got = tensor_class(&a, &b, CoeffDomain::Gf2, cap).unwrap();
        let mut direct = GradedPoly::one(&ring, Some(cap));
        for i in 0..2usize {
            for j in 2..4usize {
                let factor = GradedPoly::one(&ring, Some(cap))
                    .add(&GradedPoly::variable(&ring, i, Some(cap)).unwrap())
                    .unwrap()
                    .add(&GradedPoly::variable(&ring, j, Some(cap)).unwrap())
                    .unwrap();
                direct = direct.mul(&factor).unwrap();
            }
        }
        assert_eq!(got, direct);
    }

    #[test]
    fn rank0_factor_gives_augmentation() {
        // b of rank 0: the result is 1 + sum of the slot contents of a.
        let ring = v_ring(2);
        let a = split_vector(&ring, &[0, 1]);
        let b = ClassVector::new(0, vec![]).unwrap();
        let got = tensor_class(&a, &b, CoeffDomain::Gf2, 8).unwrap();
        let expected = GradedPoly::one(&ring, None)
            .add(&a.components()[0])
            .unwrap()
            .add(&a.components()[1])
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn tensor_is_symmetric_in_the_factors() {
        let ring = v_ring(4);
        let a = split_vector(&ring, &[0, 1]);
        let b = split_vector(&ring, &[2, 3]);
        let left = tensor_class(&a, &b, CoeffDomain::Gf2, 10).unwrap();
        let right = tensor_class(&b, &a, CoeffDomain::Gf2, 10).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn rank_guard() {
        let ring = v_ring(2);
        let a = split_vector(&ring, &[0]);
        let big = ClassVector::new(
            MAX_TENSOR_VARS,
            vec![GradedPoly::zero(&ring, None); MAX_TENSOR_VARS],
        )
        .unwrap();
        assert!(matches!(
            tensor_class(&a, &big, CoeffDomain::Gf2, 8),
            Err(Error::TensorTooLarge { .. })
        ));
    }

    #[test]
    fn component_degree_checked() {
        let ring = v_ring(2);
        // Slot 2 holding a degree-1 polynomial is rejected.
        let w1 = GradedPoly::variable(&ring, 0, None).unwrap();
        let bad = ClassVector::new(2, vec![GradedPoly::zero(&ring, None), w1]);
        assert!(matches!(bad, Err(Error::ComponentDegree { slot: 2 })));
    }

    #[test]
    fn mod2_chern_of_weil() {
        // w(S(W)) at (2,3) is (1+e1)(1+e2)(1+e1+e2)^2 truncated.
        let cls = mod2_chern(&weil_character(2, 3).unwrap(), 32).unwrap();
        let ring = crate::swc::e_ring(2);
        let one = GradedPoly::one(&ring, Some(32));
        let e1 = GradedPoly::variable(&ring, 0, Some(32)).unwrap();
        let e2 = GradedPoly::variable(&ring, 1, Some(32)).unwrap();
        let d1 = one.add(&e1).unwrap().mul(&one.add(&e2).unwrap()).unwrap();
        let d2 = one.add(&e1).unwrap().add(&e2).unwrap();
        let expected = d1.mul(&d2.pow(2).unwrap()).unwrap();
        assert_eq!(*cls.total(), expected);

        // W and W' share their involution values, hence their classes.
        let prime = mod2_chern(&weil_prime_character(2, 3).unwrap(), 32).unwrap();
        assert_eq!(cls.total(), prime.total());
    }
}
