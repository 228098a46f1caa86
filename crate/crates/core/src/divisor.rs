//! Squarefree divisor complexes `Δ_m`: a set `F` of generator indices is a
//! face exactly when `m - n_F` lies in the semigroup.
//!
//! For `m > F(S) + n_1 + ... + n_d` every `m - n_F` exceeds the Frobenius
//! number, so `Δ_m` is the full simplex and its Euler characteristic vanishes.
//! Scans over elements therefore stop at that bound.

use std::collections::{BTreeMap, HashSet};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// All faces of `Δ_m`, grown one vertex at a time so that only supersets of
/// known faces are ever tested.
pub(crate) fn divisor_faces(semigroup: &NumericalSemigroup, m: i64) -> Result<Vec<(Face, i64)>> {
    if !semigroup.contains(m) {
        return Ok(Vec::new());
    }
    let gens = semigroup.generators();
    let mut all = vec![(Face::EMPTY, m)];
    let mut level = vec![(Face::EMPTY, m, 0usize)];
    let mut known: HashSet<Face> = HashSet::from([Face::EMPTY]);
    while !level.is_empty() {
        let mut next = Vec::new();
        for &(face, rest, start) in &level {
            for (i, &n) in gens.iter().enumerate().skip(start) {
                let candidate = face.with(i + 1);
                let closed = face
                    .vertices()
                    .iter()
                    .all(|&v| known.contains(&candidate.difference(Face::singleton(v))));
                if !closed {
                    continue;
                }
                let remainder = rest - n;
                if semigroup.contains(remainder) {
                    next.push((candidate, remainder, i + 1));
                }
            }
        }
        for &(face, rest, _) in &next {
            known.insert(face);
            all.push((face, rest));
        }
        level = next;
    }
    Ok(all)
}

/// `Δ_m^S`; the void complex when `m` is not an element.
pub fn delta(semigroup: &NumericalSemigroup, m: i64) -> Result<SimplicialComplex> {
    let faces = divisor_faces(semigroup, m)?;
    let d = semigroup.embedding_dimension();
    if faces.is_empty() {
        return Ok(SimplicialComplex::void(d));
    }
    SimplicialComplex::from_faces(d, faces.into_iter().map(|(f, _)| f))
}

/// `χ(Δ_m)` counted directly from the face list.
pub fn euler_at(semigroup: &NumericalSemigroup, m: i64) -> Result<i64> {
    Ok(divisor_faces(semigroup, m)?
        .iter()
        .map(|(f, _)| if f.len() % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// `F(S) + n_1 + ... + n_d`: the last element whose divisor complex can differ
/// from the full simplex.
pub fn scan_bound(semigroup: &NumericalSemigroup) -> Result<i64> {
    semigroup
        .frobenius()?
        .checked_add(semigroup.generator_sum()?)
        .ok_or(Error::Overflow("scan bound"))
}

/// Every element `m` with `χ(Δ_m) ≠ 0`, keyed by `m` in ascending order.
pub fn nonzero_euler_scan(semigroup: &NumericalSemigroup) -> Result<BTreeMap<i64, i64>> {
    nonzero_euler_scan_parallel(semigroup, 1)
}

/// [`nonzero_euler_scan`] split over `threads` workers; the result does not
/// depend on the thread count.
pub fn nonzero_euler_scan_parallel(
    semigroup: &NumericalSemigroup,
    threads: usize,
) -> Result<BTreeMap<i64, i64>> {
    let bound = scan_bound(semigroup)?;
    let threads = threads.max(1) as i64;
    let scan = |offset: i64| -> Result<Vec<(i64, i64)>> {
        let mut found = Vec::new();
        let mut m = offset;
        while m <= bound {
            let chi = euler_at(semigroup, m)?;
            if chi != 0 {
                found.push((m, chi));
            }
            m += threads;
        }
        Ok(found)
    };
    let parts: Vec<Result<Vec<(i64, i64)>>> = if threads == 1 {
        vec![scan(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads).map(|t| scope.spawn(move || scan(t))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        })
    };
    let mut out = BTreeMap::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// `{ n_1 + ... + n_d + f : f ∈ PF(S) }`, the elements whose divisor complex
/// is the boundary of the full simplex.
pub fn hollow_simplex_elements(semigroup: &NumericalSemigroup) -> Result<Vec<i64>> {
    let total = semigroup.generator_sum()?;
    semigroup
        .pseudo_frobenius()?
        .into_iter()
        .map(|f| {
            f.checked_add(total)
                .ok_or(Error::Overflow("hollow simplex element"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::skeleton;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::numerical(gens).unwrap()
    }

    #[test]
    fn delta_examples() {
        let t = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert_eq!(delta(&t, 12).unwrap().facet_lists(), vec![vec![1]]);
        assert_eq!(
            delta(&s(&[3, 5, 7]), 0).unwrap(),
            SimplicialComplex::empty_face(3)
        );
        assert_eq!(
            delta(&s(&[3, 5, 7]), 10).unwrap().facet_lists(),
            vec![vec![2], vec![1, 3]]
        );
        assert!(delta(&s(&[3, 5, 7]), 4).unwrap().is_void());
        assert!(delta(&s(&[3, 5, 7]), -1).unwrap().is_void());
    }

    #[test]
    fn scans() {
        let scan = nonzero_euler_scan(&s(&[3, 5, 7])).unwrap();
        let expected: BTreeMap<i64, i64> =
            [(0, 1), (10, -1), (12, -1), (14, -1), (17, 1), (19, 1)].into();
        assert_eq!(scan, expected);
        assert_eq!(
            nonzero_euler_scan(&s(&[2, 3])).unwrap(),
            [(0, 1), (6, -1)].into()
        );
        assert_eq!(nonzero_euler_scan(&s(&[1])).unwrap(), [(0, 1)].into());
        assert_eq!(
            nonzero_euler_scan_parallel(&s(&[3, 5, 7]), 3).unwrap(),
            expected
        );
        let relaxed = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert!(matches!(
            nonzero_euler_scan(&relaxed),
            Err(Error::NonNumerical { .. })
        ));
    }

    #[test]
    fn hollow_simplices() {
        assert_eq!(
            hollow_simplex_elements(&s(&[3, 5, 7])).unwrap(),
            vec![17, 19]
        );
        assert_eq!(hollow_simplex_elements(&s(&[2, 3])).unwrap(), vec![6]);
        assert_eq!(hollow_simplex_elements(&s(&[2, 5])).unwrap(), vec![10]);
        assert_eq!(hollow_simplex_elements(&s(&[1])).unwrap(), vec![0]);
        assert_eq!(delta(&s(&[1]), 0).unwrap(), skeleton(1, 0).unwrap());
        let boundary = skeleton(3, 2).unwrap();
        assert_eq!(delta(&s(&[3, 5, 7]), 17).unwrap(), boundary);
        assert_eq!(delta(&s(&[3, 5, 7]), 19).unwrap(), boundary);
        assert_eq!(
            delta(&s(&[2, 3]), 6).unwrap().facet_lists(),
            vec![vec![1], vec![2]]
        );
    }

    #[test]
    fn beyond_the_bound_is_full() {
        let t = s(&[4, 7, 9]);
        let bound = scan_bound(&t).unwrap();
        for m in bound + 1..=bound + 5 {
            assert_eq!(delta(&t, m).unwrap(), SimplicialComplex::simplex(3));
        }
    }
}
