//! Finitely generated additive submonoids of the nonnegative integers.
//!
//! A [`NumericalSemigroup`] stores its minimal generators together with an
//! Apéry table taken with respect to the smallest generator. Once the table is
//! built every membership query is a single lookup, so a semigroup value can be
//! shared freely between threads.
//!
//! Generators with a common factor `g > 1` are accepted in *relaxed* mode: the
//! value then describes the monoid `g * S` for the numerical semigroup `S`
//! generated by the reduced generators. Membership and everything derived from
//! it work in that mode; the Frobenius data does not exist there and is
//! rejected with [`Error::NonNumerical`].

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Largest modulus for which a residue table is materialized.
pub const MAX_TABLE_SIZE: i64 = 1 << 24;

/// Least element of the monoid generated by `steps` in every residue class
/// modulo `modulus`, or `None` where the class is unreachable.
///
/// Dijkstra on the residue graph: one edge per step, weighted by the step.
pub(crate) fn residue_distances(modulus: i64, steps: &[i64]) -> Result<Vec<Option<i64>>> {
    if modulus <= 0 {
        return Err(Error::InvalidInput(format!(
            "modulus {modulus} must be positive"
        )));
    }
    if modulus > MAX_TABLE_SIZE {
        return Err(Error::InvalidInput(format!(
            "residue table of size {modulus} exceeds the limit of {MAX_TABLE_SIZE}"
        )));
    }
    let size = modulus as usize;
    let steps: Vec<i64> = steps.iter().copied().filter(|s| s % modulus != 0).collect();
    let mut dist: Vec<Option<i64>> = vec![None; size];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &s in &steps {
            let nd = d.checked_add(s).ok_or(Error::Overflow("Apéry table"))?;
            let nr = ((r as i64 + s) % modulus) as usize;
            if dist[nr].is_none_or(|cur| nd < cur) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

/// Reduces a generating list to the unique minimal generating set, ascending.
pub fn minimal_generators(gens: &[i64]) -> Result<Vec<i64>> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("generator list is empty".into()));
    }
    if let Some(bad) = gens.iter().find(|&&g| g < 1) {
        return Err(Error::InvalidInput(format!(
            "generator {bad} is not positive"
        )));
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let smallest = sorted[0];
    let mut kept = vec![smallest];
    for &x in &sorted[1..] {
        // Only smaller generators can appear in a representation of x.
        let dist = residue_distances(smallest, &kept)?;
        let representable = dist[(x % smallest) as usize].is_some_and(|d| d <= x);
        if !representable {
            kept.push(x);
        }
    }
    Ok(kept)
}

/// A numerical semigroup, or a scaled copy of one in relaxed mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    content: i64,
    /// Apéry table of the reduced semigroup with respect to its smallest generator.
    apery: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds the monoid generated by `gens`.
    ///
    /// With `require_numerical` set, generators with gcd greater than one are
    /// rejected; otherwise they describe a scaled monoid.
    pub fn new(gens: &[i64], require_numerical: bool) -> Result<Self> {
        let generators = minimal_generators(gens)?;
        let content = generators.iter().fold(0, |g, &n| gcd(g, n));
        if require_numerical && content != 1 {
            return Err(Error::NonNumerical { content });
        }
        let reduced: Vec<i64> = generators.iter().map(|n| n / content).collect();
        let apery = residue_distances(reduced[0], &reduced[1..])?
            .into_iter()
            .map(|d| d.expect("reduced generators have gcd 1"))
            .collect();
        Ok(Self {
            generators,
            content,
            apery,
        })
    }

    /// Strict constructor: the generators must have gcd 1.
    pub fn numerical(gens: &[i64]) -> Result<Self> {
        Self::new(gens, true)
    }

    /// Relaxed constructor accepting any content.
    pub fn monoid(gens: &[i64]) -> Result<Self> {
        Self::new(gens, false)
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// gcd of the generators; 1 for a numerical semigroup.
    pub fn content(&self) -> i64 {
        self.content
    }

    pub fn is_numerical(&self) -> bool {
        self.content == 1
    }

    /// Sum of all generators.
    pub fn generator_sum(&self) -> Result<i64> {
        self.generators
            .iter()
            .try_fold(0i64, |acc, &n| acc.checked_add(n))
            .ok_or(Error::Overflow("generator sum"))
    }

    /// Position of `value` among the minimal generators.
    pub fn generator_index(&self, value: i64) -> Option<usize> {
        self.generators.binary_search(&value).ok()
    }

    fn require_numerical(&self) -> Result<()> {
        if self.content == 1 {
            Ok(())
        } else {
            Err(Error::NonNumerical {
                content: self.content,
            })
        }
    }

    /// Membership test for arbitrary integers.
    pub fn contains(&self, m: i64) -> bool {
        if m < 0 || m % self.content != 0 {
            return false;
        }
        let q = m / self.content;
        let modulus = self.apery.len() as i64;
        q >= self.apery[(q % modulus) as usize]
    }

    /// Apéry table with respect to the reduced smallest generator.
    pub fn apery_table(&self) -> &[i64] {
        &self.apery
    }

    /// `Ap(S, n)`: entry `r` is the least element of `S` congruent to `r` modulo `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        self.require_numerical()?;
        if n <= 0 || !self.contains(n) {
            return Err(Error::InvalidInput(format!(
                "{n} is not a positive element of the semigroup"
            )));
        }
        Ok(residue_distances(n, &self.generators)?
            .into_iter()
            .map(|d| d.expect("gcd 1 reaches every residue"))
            .collect())
    }

    /// Largest integer outside the semigroup; `-1` for `<1>`.
    pub fn frobenius(&self) -> Result<i64> {
        self.require_numerical()?;
        let max = *self.apery.iter().max().expect("table is nonempty");
        Ok(max - self.generators[0])
    }

    /// Pseudo-Frobenius numbers in ascending order.
    ///
    /// Candidates are `w - n_1` for `w` in the Apéry set of the multiplicity;
    /// `x` qualifies when `x + n_i` lies in `S` for every generator. For `<1>`
    /// this yields `{-1}`, matching `F(<1>) = -1`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        self.require_numerical()?;
        let n1 = self.generators[0];
        let mut out: Vec<i64> = self
            .apery
            .iter()
            .filter(|&&w| w != 0 || n1 == 1)
            .map(|&w| w - n1)
            .filter(|&x| {
                self.generators
                    .iter()
                    .all(|&n| x.checked_add(n).is_some_and(|y| self.contains(y)))
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// All elements not exceeding `bound`, ascending.
    pub fn elements_up_to(&self, bound: i64) -> Vec<i64> {
        (0..=bound.max(-1)).filter(|&m| self.contains(m)).collect()
    }

    /// Number of nonnegative integer tuples `a` with `sum a_i n_i = m`.
    pub fn count_factorizations(&self, m: i64) -> Result<u64> {
        if m < 0 || !self.contains(m) {
            return Ok(0);
        }
        Ok(self.factorization_counts(m)?[m as usize])
    }

    /// Factorization counts of every integer in `0..=bound`, by the usual
    /// coin-change recurrence over the generators.
    pub fn factorization_counts(&self, bound: i64) -> Result<Vec<u64>> {
        if bound < 0 {
            return Ok(Vec::new());
        }
        if bound > MAX_TABLE_SIZE {
            return Err(Error::InvalidInput(format!(
                "{bound} is too large to count factorizations"
            )));
        }
        let size = bound as usize;
        let mut ways = vec![0u64; size + 1];
        ways[0] = 1;
        for &n in &self.generators {
            let n = n as usize;
            for v in n..=size {
                ways[v] = ways[v]
                    .checked_add(ways[v - n])
                    .ok_or(Error::Overflow("factorization count"))?;
            }
        }
        Ok(ways)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::numerical(gens).unwrap()
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(minimal_generators(&[2, 4, 5]).unwrap(), vec![2, 5]);
        assert_eq!(minimal_generators(&[1, 7]).unwrap(), vec![1]);
        assert_eq!(minimal_generators(&[12, 20, 30]).unwrap(), vec![12, 20, 30]);
        assert_eq!(minimal_generators(&[5, 3, 3, 9]).unwrap(), vec![3, 5]);
        assert!(matches!(
            minimal_generators(&[]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            minimal_generators(&[3, 0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn construction_modes() {
        let t = s(&[3, 5, 7]);
        assert_eq!(t.embedding_dimension(), 3);
        assert_eq!(t.content(), 1);

        let relaxed = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert_eq!(relaxed.content(), 2);
        assert_eq!(
            NumericalSemigroup::numerical(&[12, 20, 30]),
            Err(Error::NonNumerical { content: 2 })
        );
    }

    #[test]
    fn membership() {
        let t = s(&[3, 5, 7]);
        assert!(!t.contains(4));
        assert!(t.contains(0));
        assert!(!t.contains(-3));
        let relaxed = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert!(relaxed.contains(32));
        assert!(!relaxed.contains(31));
        assert!(!relaxed.contains(22));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(s(&[2, 5]).apery_set(2).unwrap(), vec![0, 5]);
        assert_eq!(s(&[3, 5, 7]).apery_set(3).unwrap(), vec![0, 7, 5]);
        assert_eq!(s(&[1]).apery_set(1).unwrap(), vec![0]);
        assert!(matches!(
            s(&[3, 5, 7]).apery_set(4),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            s(&[3, 5, 7]).apery_set(0),
            Err(Error::InvalidInput(_))
        ));
        // Non-generator moduli work too.
        assert_eq!(s(&[3, 5, 7]).apery_set(5).unwrap(), vec![0, 6, 7, 3, 9]);
    }

    #[test]
    fn frobenius_data() {
        assert_eq!(s(&[2, 5]).frobenius().unwrap(), 3);
        assert_eq!(s(&[3, 5, 7]).frobenius().unwrap(), 4);
        assert_eq!(s(&[1]).frobenius().unwrap(), -1);
        assert_eq!(s(&[3, 5, 7]).pseudo_frobenius().unwrap(), vec![2, 4]);
        assert_eq!(s(&[2, 3]).pseudo_frobenius().unwrap(), vec![1]);
        assert_eq!(s(&[2, 5]).pseudo_frobenius().unwrap(), vec![3]);
        assert_eq!(s(&[1]).pseudo_frobenius().unwrap(), vec![-1]);
        let relaxed = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert!(matches!(
            relaxed.frobenius(),
            Err(Error::NonNumerical { .. })
        ));
        assert!(matches!(
            relaxed.pseudo_frobenius(),
            Err(Error::NonNumerical { .. })
        ));
    }

    #[test]
    fn element_listing() {
        assert_eq!(
            s(&[3, 5, 7]).elements_up_to(10),
            vec![0, 3, 5, 6, 7, 8, 9, 10]
        );
        assert_eq!(s(&[1]).elements_up_to(3), vec![0, 1, 2, 3]);
        let relaxed = NumericalSemigroup::monoid(&[12, 20, 30]).unwrap();
        assert_eq!(relaxed.elements_up_to(32), vec![0, 12, 20, 24, 30, 32]);
        assert!(s(&[2, 3]).elements_up_to(-1).is_empty());
    }

    #[test]
    fn factorization_counts() {
        assert_eq!(s(&[2, 5]).count_factorizations(10).unwrap(), 2);
        assert_eq!(s(&[3, 5, 7]).count_factorizations(0).unwrap(), 1);
        assert_eq!(s(&[9, 10]).count_factorizations(19).unwrap(), 1);
        assert_eq!(s(&[9, 10]).count_factorizations(17).unwrap(), 0);
        assert_eq!(s(&[9, 10]).count_factorizations(-4).unwrap(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            NumericalSemigroup::numerical(&[2, i64::MAX]),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn oversized_tables_are_refused() {
        assert!(matches!(
            NumericalSemigroup::numerical(&[MAX_TABLE_SIZE + 1, MAX_TABLE_SIZE + 2]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<NumericalSemigroup>();
        let t = s(&[3, 5, 7]);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|k| {
                    let t = &t;
                    scope.spawn(move || (0..50).filter(|m| t.contains(m + k)).count())
                })
                .collect();
            for h in handles {
                assert!(h.join().unwrap() > 40);
            }
        });
    }
}
