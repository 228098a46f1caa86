//! Two families where the elements with nonzero `χ(Δ_m)` are known in closed
//! form: supersymmetric semigroups `<L/t_1, ..., L/t_d>` and semigroups of
//! embedding dimension three.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::arith::{binomial, gcd, lcm};
use crate::complex::{skeleton, SimplicialComplex};
use crate::divisor::{delta, euler_at};
use crate::error::{Error, Result};
use crate::semigroup::{minimal_generators, NumericalSemigroup};

fn check_t_list(t_list: &[i64]) -> Result<i64> {
    if t_list.len() < 2 {
        return Err(Error::InvalidInput("need at least two values".into()));
    }
    if let Some(t) = t_list.iter().find(|&&t| t < 2) {
        return Err(Error::InvalidInput(format!("{t} is below 2")));
    }
    for (i, &a) in t_list.iter().enumerate() {
        for &b in &t_list[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(Error::InvalidInput(format!("{a} and {b} are not coprime")));
            }
        }
    }
    t_list
        .iter()
        .try_fold(1i64, |acc, &t| acc.checked_mul(t))
        .ok_or(Error::Overflow("product of t values"))
}

/// `<L/t_1, ..., L/t_d>` for pairwise coprime `t_i >= 2`, `L = t_1 ... t_d`.
pub fn supersymmetric_from(t_list: &[i64]) -> Result<NumericalSemigroup> {
    let product = check_t_list(t_list)?;
    let gens: Vec<i64> = t_list.iter().map(|t| product / t).collect();
    let semigroup = NumericalSemigroup::numerical(&gens)?;
    if semigroup.embedding_dimension() != t_list.len() {
        return Err(Error::InvalidInput(format!(
            "<{gens:?}> has embedding dimension {}",
            semigroup.embedding_dimension()
        )));
    }
    Ok(semigroup)
}

/// The values `L/n_i` (generator order) when they are pairwise coprime.
pub fn is_supersymmetric(semigroup: &NumericalSemigroup) -> Option<Vec<i64>> {
    if !semigroup.is_numerical() || semigroup.embedding_dimension() < 2 {
        return None;
    }
    let l = semigroup
        .generators()
        .iter()
        .try_fold(1i64, |acc, &n| lcm(acc, n))
        .ok()?;
    let t_list: Vec<i64> = semigroup.generators().iter().map(|n| l / n).collect();
    check_t_list(&t_list).ok().filter(|&p| p == l)?;
    Some(t_list)
}

/// Outcome of comparing `Δ_{kL}` with the `k`-skeleton bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonReport {
    pub t_list: Vec<i64>,
    pub k: u64,
    pub element: i64,
    pub expected_facets: Vec<Vec<usize>>,
    pub actual_facets: Vec<Vec<usize>>,
    /// `(-1)^k C(d-1, k)`.
    pub expected_euler: i64,
    /// `sum_{i <= k} (-1)^i C(d, i)`.
    pub alternating_sum: i64,
    pub actual_euler: i64,
    pub passed: bool,
}

/// Checks that `Δ_{kL}` consists of the faces of size at most `k` and that
/// its Euler characteristic is `(-1)^k C(d-1, k)`.
pub fn supersymmetric_skeleton_check(t_list: &[i64], k: u64) -> Result<SkeletonReport> {
    let semigroup = supersymmetric_from(t_list)?;
    let l = check_t_list(t_list)?;
    let d = t_list.len() as u64;
    let element = i64::try_from(k)
        .ok()
        .and_then(|k| k.checked_mul(l))
        .ok_or(Error::Overflow("kL"))?;
    let actual = delta(&semigroup, element)?;
    let expected: SimplicialComplex = skeleton(d as usize, k.min(d) as i64)?;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let expected_euler = sign * binomial(d - 1, k)?;
    let mut alternating_sum = 0i64;
    for i in 0..=k.min(d) {
        let term = binomial(d, i)?;
        alternating_sum += if i % 2 == 0 { term } else { -term };
    }
    let actual_euler = actual.euler_characteristic();
    let passed =
        actual == expected && actual_euler == expected_euler && alternating_sum == expected_euler;
    Ok(SkeletonReport {
        t_list: t_list.to_vec(),
        k,
        element,
        expected_facets: expected.facet_lists(),
        actual_facets: actual.facet_lists(),
        expected_euler,
        alternating_sum,
        actual_euler,
        passed,
    })
}

/// Outcome of scanning for nonzero Euler characteristics off the multiples of `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub t_list: Vec<i64>,
    pub bound: i64,
    pub checked: usize,
    /// First `(m, χ(Δ_m))` with `L ∤ m` and `χ ≠ 0`.
    pub violation: Option<(i64, i64)>,
    pub passed: bool,
}

/// Checks `χ(Δ_m) = 0` for every element `m <= bound` not divisible by `L`.
pub fn supersymmetric_vanishing_check(t_list: &[i64], bound: i64) -> Result<VanishingReport> {
    let semigroup = supersymmetric_from(t_list)?;
    let l = check_t_list(t_list)?;
    if bound < l {
        return Err(Error::InvalidInput(format!(
            "bound {bound} is below L = {l}"
        )));
    }
    let mut checked = 0;
    let mut violation = None;
    for m in semigroup.elements_up_to(bound) {
        if m % l == 0 {
            continue;
        }
        checked += 1;
        let chi = euler_at(&semigroup, m)?;
        if chi != 0 {
            violation = Some((m, chi));
            break;
        }
    }
    Ok(VanishingReport {
        t_list: t_list.to_vec(),
        bound,
        checked,
        violation,
        passed: violation.is_none(),
    })
}

fn require_three(semigroup: &NumericalSemigroup) -> Result<[i64; 3]> {
    if !semigroup.is_numerical() {
        return Err(Error::NonNumerical {
            content: semigroup.content(),
        });
    }
    match semigroup.generators() {
        &[a, b, c] => Ok([a, b, c]),
        gens => Err(Error::InvalidInput(format!(
            "embedding dimension is {}, not 3",
            gens.len()
        ))),
    }
}

/// `m_i`: the least positive multiple of `n_i` lying in the monoid generated by
/// the other two generators.
pub fn disconnected_elements_3gen(semigroup: &NumericalSemigroup) -> Result<[i64; 3]> {
    let gens = require_three(semigroup)?;
    let mut out = [0i64; 3];
    for i in 0..3 {
        let ni = gens[i];
        let (nj, nk) = (gens[(i + 1) % 3], gens[(i + 2) % 3]);
        let g = gcd(nj, nk);
        let pair = NumericalSemigroup::monoid(&[nj, nk])?;
        let reduced = NumericalSemigroup::numerical(&[nj / g, nk / g])?;
        // gcd(n_i, g) = 1, so the multiples of g n_i reach past g F(reduced).
        let limit = g
            .checked_mul(reduced.frobenius()?.max(0))
            .and_then(|x| x.checked_add(g.checked_mul(ni)?))
            .ok_or(Error::Overflow("m_i search bound"))?;
        let mut m = ni;
        loop {
            if pair.contains(m) {
                out[i] = m;
                break;
            }
            if m > limit {
                return Err(Error::InvalidInput(format!(
                    "no multiple of {ni} up to {limit} lies in <{nj},{nk}>"
                )));
            }
            m = m.checked_add(ni).ok_or(Error::Overflow("m_i search"))?;
        }
    }
    Ok(out)
}

/// `B = {0, m_1, m_2, m_3} ∪ {n_1 + n_2 + n_3 + f : f ∈ PF(S)}` with `χ(Δ_m)`
/// for each member.
pub fn nonzero_set_3gen(semigroup: &NumericalSemigroup) -> Result<BTreeMap<i64, i64>> {
    let disconnected = disconnected_elements_3gen(semigroup)?;
    let total = semigroup.generator_sum()?;
    let mut members: BTreeSet<i64> = BTreeSet::from([0]);
    members.extend(disconnected);
    for f in semigroup.pseudo_frobenius()? {
        members.insert(total + f);
    }
    members
        .into_iter()
        .map(|m| Ok((m, euler_at(semigroup, m)?)))
        .collect()
}

/// `<n_1, n_2, n_1 n_2 - n_1 - n_2>` together with its closed-form set
/// `{0, n_2 + n_3, n_1 + n_3, 2 n_3, n_1 + 2 n_3, n_2 + 2 n_3}`.
pub fn frobenius_gen_family(n1: i64, n2: i64) -> Result<(NumericalSemigroup, BTreeSet<i64>)> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidInput("both values must be at least 2".into()));
    }
    if gcd(n1, n2) != 1 {
        return Err(Error::InvalidInput(format!(
            "{n1} and {n2} are not coprime"
        )));
    }
    let n3 = n1
        .checked_mul(n2)
        .map(|p| p - n1 - n2)
        .ok_or(Error::Overflow("n1 n2 - n1 - n2"))?;
    if n3 < 2 {
        return Err(Error::InvalidInput(format!(
            "third generator {n3} is below 2"
        )));
    }
    if minimal_generators(&[n1, n2, n3])?.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "{{{n1}, {n2}, {n3}}} is not a minimal generating set"
        )));
    }
    let semigroup = NumericalSemigroup::numerical(&[n1, n2, n3])?;
    let b = BTreeSet::from([0, n2 + n3, n1 + n3, 2 * n3, n1 + 2 * n3, n2 + 2 * n3]);
    Ok((semigroup, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::numerical(gens).unwrap()
    }

    #[test]
    fn supersymmetric_construction() {
        assert_eq!(
            supersymmetric_from(&[2, 3, 5]).unwrap().generators(),
            &[6, 10, 15]
        );
        assert_eq!(supersymmetric_from(&[2, 3]).unwrap().generators(), &[2, 3]);
        assert!(matches!(
            supersymmetric_from(&[2, 4, 5]),
            Err(Error::InvalidInput(_))
        ));
        assert!(supersymmetric_from(&[5]).is_err());
        assert_eq!(is_supersymmetric(&s(&[6, 10, 15])), Some(vec![5, 3, 2]));
        assert_eq!(is_supersymmetric(&s(&[3, 5, 7])), None);
        assert_eq!(is_supersymmetric(&s(&[2, 3])), Some(vec![3, 2]));
        assert_eq!(is_supersymmetric(&s(&[1])), None);
    }

    #[test]
    fn skeleton_checks() {
        let r = supersymmetric_skeleton_check(&[2, 3, 5], 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.element, 30);
        assert_eq!(r.actual_facets, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(r.actual_euler, -2);
        let r = supersymmetric_skeleton_check(&[2, 3, 5], 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.actual_facets, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(r.actual_euler, 1);
        let r = supersymmetric_skeleton_check(&[2, 3, 5], 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.actual_facets, vec![Vec::<usize>::new()]);
        assert_eq!(r.actual_euler, 1);
    }

    #[test]
    fn vanishing_checks() {
        let r = supersymmetric_vanishing_check(&[2, 3, 5], 120).unwrap();
        assert!(r.passed && r.checked > 0);
        assert_eq!(euler_at(&s(&[6, 10, 15]), 36).unwrap(), 0);
        assert!(supersymmetric_vanishing_check(&[2, 3], 30).unwrap().passed);
        assert!(matches!(
            supersymmetric_vanishing_check(&[2, 3, 5], 29),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn three_generated() {
        assert_eq!(
            disconnected_elements_3gen(&s(&[3, 5, 7])).unwrap(),
            [12, 10, 14]
        );
        assert_eq!(
            disconnected_elements_3gen(&s(&[3, 4, 5])).unwrap(),
            [9, 8, 10]
        );
        assert!(matches!(
            disconnected_elements_3gen(&s(&[2, 3])),
            Err(Error::InvalidInput(_))
        ));
        // gcd(n_j, n_k) > 1 for one of the pairs.
        assert_eq!(
            disconnected_elements_3gen(&s(&[4, 6, 9])).unwrap(),
            [12, 12, 18]
        );

        let b = nonzero_set_3gen(&s(&[3, 5, 7])).unwrap();
        let expected: BTreeMap<i64, i64> =
            [(0, 1), (10, -1), (12, -1), (14, -1), (17, 1), (19, 1)].into();
        assert_eq!(b, expected);
        let b = nonzero_set_3gen(&s(&[3, 4, 5])).unwrap();
        assert_eq!(
            b.keys().copied().collect::<Vec<_>>(),
            vec![0, 8, 9, 10, 13, 14]
        );
        assert!(nonzero_set_3gen(&s(&[2, 3])).is_err());
    }

    #[test]
    fn family() {
        let (t, b) = frobenius_gen_family(3, 5).unwrap();
        assert_eq!(t.generators(), &[3, 5, 7]);
        assert_eq!(b, BTreeSet::from([0, 10, 12, 14, 17, 19]));
        let (t, b) = frobenius_gen_family(3, 4).unwrap();
        assert_eq!(t.generators(), &[3, 4, 5]);
        assert_eq!(b, BTreeSet::from([0, 8, 9, 10, 13, 14]));
        assert!(matches!(
            frobenius_gen_family(2, 3),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            frobenius_gen_family(2, 5),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            frobenius_gen_family(4, 6),
            Err(Error::InvalidInput(_))
        ));
    }
}
