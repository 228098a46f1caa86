//! Building semigroup elements with prescribed divisor complexes.
//!
//! * [`glue`] forms `k'S + kS'`, the monoid generated by `k' n_i` and `k n'_j`.
//! * [`disjoint_union_realize`] uses gluing to realize `Δ_k^S ⊔ Δ_{k'}^{S'}` at `kk'`.
//! * [`inflate`] forms `pS + b<1>` with `b = m - n_F`, which adds one vertex to
//!   `Δ_m` attached along `F`.
//! * [`realize_simplex`] supplies base cases and [`realize_fat_forest`] chains
//!   everything together for an arbitrary fat forest.
//!
//! Every construction recomputes the divisor complex of its output and compares
//! it with the intended complex before returning.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, next_prime};
use crate::complex::{face_sum, Face, SimplicialComplex};
use crate::divisor::{delta, scan_bound};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest simplex produced by [`realize_simplex`].
pub const SIMPLEX_CAP: usize = 10;

/// Default number of attempts per tree in [`realize_fat_forest`].
pub const DEFAULT_RETRY_BUDGET: usize = 64;

/// The monoid `k'S + kS'`.
///
/// In strict mode `k` and `k'` must be coprime non-generator elements of
/// numerical semigroups, and the result must keep all `d + d'` generators.
pub fn glue(
    first: &NumericalSemigroup,
    second: &NumericalSemigroup,
    k: i64,
    k_prime: i64,
    strict: bool,
) -> Result<NumericalSemigroup> {
    if strict {
        check_glue_hypotheses(first, second, k, k_prime).map_err(Error::GluingHypothesis)?;
    }
    let mut gens = Vec::with_capacity(first.embedding_dimension() + second.embedding_dimension());
    for &n in first.generators() {
        gens.push(k_prime.checked_mul(n).ok_or(Error::Overflow("gluing"))?);
    }
    for &n in second.generators() {
        gens.push(k.checked_mul(n).ok_or(Error::Overflow("gluing"))?);
    }
    let glued = NumericalSemigroup::monoid(&gens)?;
    if strict {
        let expected = first.embedding_dimension() + second.embedding_dimension();
        if glued.embedding_dimension() != expected {
            return Err(Error::GluingHypothesis(format!(
                "embedding dimension {} instead of {expected}",
                glued.embedding_dimension()
            )));
        }
    }
    Ok(glued)
}

fn check_glue_hypotheses(
    first: &NumericalSemigroup,
    second: &NumericalSemigroup,
    k: i64,
    k_prime: i64,
) -> std::result::Result<(), String> {
    if !first.is_numerical() || !second.is_numerical() {
        return Err("both semigroups must have gcd 1".into());
    }
    if !first.contains(k) || k == 0 {
        return Err(format!(
            "k = {k} is not a nonzero element of the first semigroup"
        ));
    }
    if !second.contains(k_prime) || k_prime == 0 {
        return Err(format!(
            "k' = {k_prime} is not a nonzero element of the second semigroup"
        ));
    }
    if first.generator_index(k).is_some() {
        return Err(format!("k = {k} is a minimal generator"));
    }
    if second.generator_index(k_prime).is_some() {
        return Err(format!("k' = {k_prime} is a minimal generator"));
    }
    if gcd(k, k_prime) != 1 {
        return Err(format!("gcd(k, k') = {}", gcd(k, k_prime)));
    }
    Ok(())
}

/// One step of a realization, in the order it was performed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// A tree starts from a simplex on its first facet. `shift` is how far
    /// `element` lies above the simplex family's own element.
    BaseSimplex {
        tree: usize,
        vertices: Vec<usize>,
        generators: Vec<i64>,
        element: i64,
        shift: i64,
    },
    /// A new vertex attached along `attach` (input labels) by inflation.
    Inflate {
        tree: usize,
        vertex: usize,
        attach: Vec<usize>,
        offset: i64,
        prime: i64,
        element: i64,
    },
    /// An attempt abandoned before the tree was finished.
    Retry {
        tree: usize,
        shift: i64,
        reason: String,
    },
    /// Two realized pieces combined by gluing.
    Union { k: i64, k_prime: i64, element: i64 },
}

/// Input complex as it is stored inside a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub num_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexRecord {
    fn from(c: &SimplicialComplex) -> Self {
        Self {
            num_vertices: c.num_vertices(),
            facets: c.facet_lists(),
        }
    }
}

impl ComplexRecord {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.num_vertices, &self.facets)
    }
}

/// Witness that `complex` is the divisor complex `Δ_element` of the monoid
/// generated by `generators`, after renaming vertex `v` to generator
/// `vertex_map[v]` (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationCertificate {
    pub generators: Vec<i64>,
    pub element: i64,
    pub vertex_map: BTreeMap<usize, usize>,
    pub verified: bool,
    pub complex: ComplexRecord,
    pub trace: Vec<TraceStep>,
}

impl RealizationCertificate {
    /// Recomputes `Δ_element` from scratch and compares it with the stored complex.
    pub fn check(&self) -> Result<bool> {
        let semigroup = NumericalSemigroup::numerical(&self.generators)?;
        if semigroup.generators() != self.generators.as_slice() {
            return Ok(false);
        }
        let input = self.complex.to_complex()?;
        let d = input.num_vertices();
        if d != semigroup.embedding_dimension() || self.vertex_map.len() != d {
            return Ok(false);
        }
        let mut map = Vec::with_capacity(d);
        for v in 1..=d {
            match self.vertex_map.get(&v) {
                Some(&j) if j >= 1 => map.push(j - 1),
                _ => return Ok(false),
            }
        }
        let realized = delta(&semigroup, self.element)?;
        Ok(input.equals_relabeled(&realized, &map))
    }
}

/// Realizes `Δ_k^S ⊔ Δ_{k'}^{S'}` as `Δ_{kk'}` of the glued semigroup.
pub fn disjoint_union_realize(
    first: &NumericalSemigroup,
    k: i64,
    second: &NumericalSemigroup,
    k_prime: i64,
) -> Result<RealizationCertificate> {
    check_glue_hypotheses(first, second, k, k_prime).map_err(Error::InvalidInput)?;
    let left = delta(first, k)?;
    let right = delta(second, k_prime)?;
    let expected = left.shifted_union(&right)?;
    let (glued, element) = glue_with_labels(first, k, second, k_prime)?;
    let mut vertex_map = BTreeMap::new();
    for (i, &n) in first.generators().iter().enumerate() {
        vertex_map.insert(i + 1, index_of(&glued, k_prime * n)?);
    }
    let d = first.embedding_dimension();
    for (j, &n) in second.generators().iter().enumerate() {
        vertex_map.insert(d + j + 1, index_of(&glued, k * n)?);
    }
    let certificate = RealizationCertificate {
        generators: glued.generators().to_vec(),
        element,
        vertex_map,
        verified: false,
        complex: ComplexRecord::from(&expected),
        trace: vec![TraceStep::Union {
            k,
            k_prime,
            element,
        }],
    };
    finish(certificate)
}

fn glue_with_labels(
    first: &NumericalSemigroup,
    k: i64,
    second: &NumericalSemigroup,
    k_prime: i64,
) -> Result<(NumericalSemigroup, i64)> {
    let glued = glue(first, second, k, k_prime, true)?;
    let element = k
        .checked_mul(k_prime)
        .ok_or(Error::Overflow("glued element"))?;
    Ok((glued, element))
}

fn index_of(semigroup: &NumericalSemigroup, value: i64) -> Result<usize> {
    semigroup
        .generator_index(value)
        .map(|i| i + 1)
        .ok_or_else(|| {
            Error::ConstructionVerification(format!("{value} is not a minimal generator"))
        })
}

fn finish(mut certificate: RealizationCertificate) -> Result<RealizationCertificate> {
    if certificate.check()? {
        certificate.verified = true;
        Ok(certificate)
    } else {
        Err(Error::ConstructionVerification(format!(
            "Δ_{} of <{}> does not match the input complex",
            certificate.element,
            join(&certificate.generators)
        )))
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Result of [`inflate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inflation {
    pub semigroup: NumericalSemigroup,
    pub element: i64,
    /// 1-based index of the new generator `b`.
    pub new_vertex: usize,
    /// `old_to_new[i]` is the 1-based index of `p * n_{i+1}` in the new semigroup.
    pub old_to_new: Vec<usize>,
    pub offset: i64,
}

/// `T = pS + b<1>` with `b = m - n_F`, and `M = pm`.
///
/// `Δ_M^T` is `Δ_m^S` with one extra vertex whose only facet is `F ∪ {b}`.
/// Requires `b` to be a nonzero non-generator element of `S`, `p` a prime
/// not dividing `b`, and `Δ_{n_F} = 2^F`.
pub fn inflate(semigroup: &NumericalSemigroup, m: i64, face: Face, p: i64) -> Result<Inflation> {
    let pre = |msg: String| Err(Error::Precondition(msg));
    if !semigroup.is_numerical() {
        return pre(format!("semigroup has gcd {}", semigroup.content()));
    }
    let d = semigroup.embedding_dimension();
    if !face.is_subset(Face::full(d)) {
        return pre(format!("face {face} is not a subset of [{d}]"));
    }
    let n_face = face_sum(semigroup, face)?;
    let b = m
        .checked_sub(n_face)
        .ok_or(Error::Overflow("inflation offset"))?;
    if b == 0 {
        return pre(format!("b = m - n_F = 0 for m = {m}"));
    }
    if !semigroup.contains(b) {
        return pre(format!(
            "b = {b} is not in the semigroup (F is not a face of Δ_{m})"
        ));
    }
    if semigroup.generator_index(b).is_some() {
        return pre(format!("b = {b} is a minimal generator"));
    }
    if !is_prime(p) {
        return pre(format!("p = {p} is not prime"));
    }
    if b % p == 0 {
        return pre(format!("p = {p} divides b = {b}"));
    }
    let attached = SimplicialComplex::from_faces(d, [face])?;
    if delta(semigroup, n_face)? != attached {
        return pre(format!("Δ_{n_face} is not the simplex on {face}"));
    }

    let mut gens = Vec::with_capacity(d + 1);
    for &n in semigroup.generators() {
        gens.push(p.checked_mul(n).ok_or(Error::Overflow("inflation"))?);
    }
    gens.push(b);
    let inflated = NumericalSemigroup::numerical(&gens)?;
    if inflated.embedding_dimension() != d + 1 {
        return Err(Error::ConstructionVerification(format!(
            "<{}> has embedding dimension {}",
            join(&gens),
            inflated.embedding_dimension()
        )));
    }
    let element = p.checked_mul(m).ok_or(Error::Overflow("inflation"))?;
    let old_to_new = gens[..d]
        .iter()
        .map(|&g| index_of(&inflated, g))
        .collect::<Result<Vec<_>>>()?;
    let new_vertex = index_of(&inflated, b)?;

    let map0: Vec<usize> = old_to_new.iter().map(|i| i - 1).collect();
    let before = delta(semigroup, m)?;
    let mut faces: Vec<Face> = before.facets().iter().map(|f| f.relabeled(&map0)).collect();
    faces.push(face.relabeled(&map0).with(new_vertex));
    let expected = SimplicialComplex::from_faces(d + 1, faces)?;
    let actual = delta(&inflated, element)?;
    if actual != expected {
        return Err(Error::ConstructionVerification(format!(
            "Δ_{element} of <{}> has facets {:?}, expected {:?}",
            join(inflated.generators()),
            actual.facet_lists(),
            expected.facet_lists()
        )));
    }
    Ok(Inflation {
        semigroup: inflated,
        element,
        new_vertex,
        old_to_new,
        offset: b,
    })
}

/// A semigroup element whose divisor complex is a full simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexRealization {
    pub semigroup: NumericalSemigroup,
    pub element: i64,
    /// Offset added to the family parameter to reach this instance.
    pub shift: i64,
}

/// Default simplex on `v` vertices: `(<1>, 2)` for one vertex, otherwise
/// generators `N + 2^(i-1)` with `N = v 2^v` and element `n_1 + ... + n_v + N + 1`.
pub fn realize_simplex(v: usize) -> Result<SimplexRealization> {
    realize_simplex_shifted(v, 0)
}

/// Member of the simplex family with its parameter raised by `shift`.
///
/// The result satisfies `Δ_m = 2^[v]`, every sum of distinct generators has a
/// unique factorization, and `m` exceeds the generator sum. Failing
/// parameters are skipped.
pub fn realize_simplex_shifted(v: usize, shift: i64) -> Result<SimplexRealization> {
    if v == 0 || v > SIMPLEX_CAP {
        return Err(Error::InvalidInput(format!(
            "simplex size {v} is outside 1..={SIMPLEX_CAP}"
        )));
    }
    if shift < 0 {
        return Err(Error::InvalidInput(format!("negative shift {shift}")));
    }
    if v == 1 {
        let semigroup = NumericalSemigroup::numerical(&[1])?;
        let element = shift
            .checked_add(2)
            .ok_or(Error::Overflow("simplex element"))?;
        return Ok(SimplexRealization {
            semigroup,
            element,
            shift,
        });
    }
    let base = (v as i64) << v;
    const ATTEMPTS: i64 = 1000;
    for extra in 0..ATTEMPTS {
        let n = base
            .checked_add(shift)
            .and_then(|x| x.checked_add(extra))
            .ok_or(Error::Overflow("simplex parameter"))?;
        let gens: Vec<i64> = (0..v).map(|i| n + (1i64 << i)).collect();
        let semigroup = NumericalSemigroup::numerical(&gens)?;
        if semigroup.embedding_dimension() != v {
            continue;
        }
        let total = semigroup.generator_sum()?;
        let element = total + n + 1;
        if delta(&semigroup, element)? != SimplicialComplex::simplex(v) {
            continue;
        }
        let counts = semigroup.factorization_counts(total)?;
        let unique = Face::full(v)
            .subsets()
            .all(|f| face_sum(&semigroup, f).is_ok_and(|s| counts[s as usize] == 1));
        if unique {
            return Ok(SimplexRealization {
                semigroup,
                element,
                shift: shift + extra,
            });
        }
    }
    Err(Error::RetryExhausted {
        attempts: ATTEMPTS as usize,
        last: format!("no simplex on {v} vertices near parameter {base}"),
    })
}

/// How inflation primes are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimeRule {
    /// Smallest prime `>= 3` not dividing `b` that leaves the later attach
    /// faces intact. Keeps the numbers small.
    #[default]
    SmallestCoprime,
    /// Smallest unused prime exceeding `b`. Elements grow doubly
    /// exponentially with the number of vertices.
    AboveOffset,
}

impl fmt::Display for PrimeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeRule::SmallestCoprime => write!(f, "smallest-coprime"),
            PrimeRule::AboveOffset => write!(f, "above-offset"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    pub retry_budget: usize,
    pub prime_rule: PrimeRule,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        Self {
            retry_budget: DEFAULT_RETRY_BUDGET,
            prime_rule: PrimeRule::default(),
        }
    }
}

/// A realized piece: semigroup, element, and the input vertex carried by each generator value.
struct Piece {
    semigroup: NumericalSemigroup,
    element: i64,
    labels: BTreeMap<i64, usize>,
}

/// Realizes a fat forest given as a list of trees on a common vertex set.
///
/// Trees are realized one after another. Each tree starts from a simplex on
/// its first facet and grows one vertex at a time by inflation; primes and
/// base parameters are chosen coprime to everything built so far, so the
/// pieces can be glued together at the end.
pub fn realize_fat_forest(
    trees: &[SimplicialComplex],
    options: RealizeOptions,
) -> Result<RealizationCertificate> {
    let forest = validate_forest(trees)?;
    let mut trace = Vec::new();
    let mut acc: Option<Piece> = None;
    let mut used_primes = Vec::new();
    for (index, tree) in trees.iter().enumerate() {
        let order = tree
            .fat_tree_order()
            .map_err(|_| Error::NotFatForest(format!("tree {} is not a fat tree", index + 1)))?;
        let avoid = acc.as_ref().map_or(1, |p| p.element);
        let piece = realize_tree(index, &order, avoid, options, &mut used_primes, &mut trace)?;
        acc = Some(match acc {
            None => piece,
            Some(prev) => {
                let (semigroup, element) = glue_with_labels(
                    &prev.semigroup,
                    prev.element,
                    &piece.semigroup,
                    piece.element,
                )?;
                let mut labels = BTreeMap::new();
                for (&value, &v) in &prev.labels {
                    labels.insert(value * piece.element, v);
                }
                for (&value, &v) in &piece.labels {
                    labels.insert(value * prev.element, v);
                }
                trace.push(TraceStep::Union {
                    k: prev.element,
                    k_prime: piece.element,
                    element,
                });
                Piece {
                    semigroup,
                    element,
                    labels,
                }
            }
        });
    }
    let piece = acc.expect("at least one tree");
    let mut vertex_map = BTreeMap::new();
    for (&value, &v) in &piece.labels {
        vertex_map.insert(v, index_of(&piece.semigroup, value)?);
    }
    finish(RealizationCertificate {
        generators: piece.semigroup.generators().to_vec(),
        element: piece.element,
        vertex_map,
        verified: false,
        complex: ComplexRecord::from(&forest),
        trace,
    })
}

/// Splits a complex into its connected components and realizes them.
pub fn realize_complex(
    complex: &SimplicialComplex,
    options: RealizeOptions,
) -> Result<RealizationCertificate> {
    realize_fat_forest(&complex.components(), options)
}

fn validate_forest(trees: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let first = trees
        .first()
        .ok_or_else(|| Error::InvalidInput("forest has no trees".into()))?;
    let d = first.num_vertices();
    let mut covered = Face::EMPTY;
    let mut facets = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        if tree.num_vertices() != d {
            return Err(Error::InvalidInput(format!(
                "tree {} lives on {} vertices, expected {d}",
                i + 1,
                tree.num_vertices()
            )));
        }
        let support = tree.vertex_support();
        if support.is_empty() {
            return Err(Error::NotFatForest(format!(
                "tree {} has no vertices",
                i + 1
            )));
        }
        if !support.intersection(covered).is_empty() {
            return Err(Error::NotFatForest(format!(
                "tree {} shares vertices with an earlier tree",
                i + 1
            )));
        }
        if !tree.is_connected() {
            return Err(Error::NotFatForest(format!(
                "tree {} is disconnected",
                i + 1
            )));
        }
        covered = covered.union(support);
        facets.extend_from_slice(tree.facets());
    }
    if covered != Face::full(d) {
        let missing = Face::full(d).difference(covered);
        return Err(Error::InvalidInput(format!(
            "vertices {missing} belong to no facet"
        )));
    }
    SimplicialComplex::from_faces(d, facets)
}

fn realize_tree(
    tree: usize,
    order: &[Face],
    avoid: i64,
    options: RealizeOptions,
    used_primes: &mut Vec<i64>,
    trace: &mut Vec<TraceStep>,
) -> Result<Piece> {
    let first = order[0];
    let simplex = realize_simplex(first.len())?;
    // Any element past the scan bound has the full simplex as divisor
    // complex. Staying above twice the generator sum keeps every offset of
    // the first inflation larger than any sum of distinct generators.
    let total = simplex.semigroup.generator_sum()?;
    let floor = scan_bound(&simplex.semigroup)?
        .max(2 * total)
        .checked_add(1)
        .ok_or(Error::Overflow("base element"))?;
    let mut shift = 0i64;
    let mut last = String::from("no attempt made");
    let mut family_first = gcd(simplex.element, avoid) == 1;
    for _ in 0..options.retry_budget.max(1) {
        let element = if std::mem::take(&mut family_first) {
            simplex.element
        } else {
            while gcd(floor + shift, avoid) != 1 {
                shift += 1;
            }
            let element = floor + shift;
            shift += 1;
            element
        };
        let base = SimplexRealization {
            semigroup: simplex.semigroup.clone(),
            element,
            shift: element - simplex.element,
        };
        let mut steps = vec![TraceStep::BaseSimplex {
            tree,
            vertices: first.vertices(),
            generators: base.semigroup.generators().to_vec(),
            element,
            shift: base.shift,
        }];
        let mut primes = used_primes.clone();
        match grow_tree(
            tree,
            order,
            base,
            avoid,
            options.prime_rule,
            &mut primes,
            &mut steps,
        ) {
            Ok(piece) => {
                trace.extend(steps);
                *used_primes = primes;
                return Ok(piece);
            }
            Err(e @ (Error::Precondition(_) | Error::ConstructionVerification(_))) => {
                last = e.to_string();
                trace.push(TraceStep::Retry {
                    tree,
                    shift: element - simplex.element,
                    reason: last.clone(),
                });
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryExhausted {
        attempts: options.retry_budget,
        last,
    })
}

fn grow_tree(
    tree: usize,
    order: &[Face],
    base: SimplexRealization,
    avoid: i64,
    rule: PrimeRule,
    used_primes: &mut Vec<i64>,
    steps: &mut Vec<TraceStep>,
) -> Result<Piece> {
    // Each new vertex with the face (input labels) it is attached along.
    let mut plan = Vec::new();
    let mut span = order[0];
    for &facet in &order[1..] {
        let mut attach = facet.intersection(span);
        for v in facet.difference(span).vertices() {
            plan.push((v, attach));
            attach = attach.with(v);
        }
        span = span.union(facet);
    }
    let mut labels: BTreeMap<i64, usize> = base
        .semigroup
        .generators()
        .iter()
        .zip(order[0].vertices())
        .map(|(&g, v)| (g, v))
        .collect();
    let mut semigroup = base.semigroup;
    let mut element = base.element;
    for (i, &(v, attach)) in plan.iter().enumerate() {
        let face = to_indices(&semigroup, &labels, attach)?;
        let b = element - face_sum(&semigroup, face)?;
        let later = &plan[i + 1..];
        let mut from = match rule {
            PrimeRule::SmallestCoprime => 3,
            PrimeRule::AboveOffset => b.checked_add(1).ok_or(Error::Overflow("prime search"))?,
        };
        let mut candidates = 0;
        let (p, step, next_labels) = loop {
            candidates += 1;
            let p = choose_prime(from, b, avoid, rule, used_primes)?;
            let step = inflate(&semigroup, element, face, p)?;
            let mut next_labels: BTreeMap<i64, usize> = labels
                .iter()
                .map(|(&value, &label)| (value * p, label))
                .collect();
            next_labels.insert(step.offset, v);
            // The later attach faces that already exist must stay simplices.
            if later_faces_intact(&step.semigroup, &next_labels, later)? {
                break (p, step, next_labels);
            }
            if p > b || candidates == PRIME_CANDIDATES {
                return Err(Error::Precondition(format!(
                    "no prime up to {p} keeps the later attach faces of vertex {v} intact"
                )));
            }
            from = p + 1;
        };
        used_primes.push(p);
        steps.push(TraceStep::Inflate {
            tree,
            vertex: v,
            attach: attach.vertices(),
            offset: step.offset,
            prime: p,
            element: step.element,
        });
        labels = next_labels;
        semigroup = step.semigroup;
        element = step.element;
    }
    Ok(Piece {
        semigroup,
        element,
        labels,
    })
}

/// Primes tried per inflation before the attempt is abandoned.
const PRIME_CANDIDATES: usize = 32;

/// Generator indices carrying the given input labels.
fn to_indices(
    semigroup: &NumericalSemigroup,
    labels: &BTreeMap<i64, usize>,
    face: Face,
) -> Result<Face> {
    let mut out = Face::EMPTY;
    for (&value, &label) in labels {
        if face.contains(label) {
            out = out.with(index_of(semigroup, value)?);
        }
    }
    Ok(out)
}

/// Whether `Δ_{n_F} = 2^F` for every later attach face `F` whose vertices all exist.
fn later_faces_intact(
    semigroup: &NumericalSemigroup,
    labels: &BTreeMap<i64, usize>,
    later: &[(usize, Face)],
) -> Result<bool> {
    let present = labels.values().fold(Face::EMPTY, |f, &v| f.with(v));
    let gens = semigroup.generators();
    for &(_, attach) in later {
        if !attach.is_subset(present) {
            continue;
        }
        let face = to_indices(semigroup, labels, attach)?;
        let total = face_sum(semigroup, face)?;
        let outside = Face::full(gens.len()).difference(face);
        if outside
            .vertices()
            .iter()
            .any(|&j| semigroup.contains(total - gens[j - 1]))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn choose_prime(from: i64, b: i64, avoid: i64, rule: PrimeRule, used: &[i64]) -> Result<i64> {
    let mut p = from;
    loop {
        p = next_prime(p)?;
        let fresh = rule == PrimeRule::SmallestCoprime || !used.contains(&p);
        if b % p != 0 && avoid % p != 0 && fresh {
            return Ok(p);
        }
        p = p.checked_add(1).ok_or(Error::Overflow("prime search"))?;
    }
}
