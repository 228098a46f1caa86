//! Brute-force oracles and test corpora shared by the integration tests.
//!
//! Nothing here calls into the library's Apéry tables or divisor-complex code:
//! membership comes from a plain sieve and complexes from checking all `2^d`
//! subsets.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sdc_core::{Face, NumericalSemigroup, SimplicialComplex};

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `sieve[x]` is true iff `x` is a nonnegative combination of `gens`.
pub fn sieve(gens: &[i64], bound: i64) -> Vec<bool> {
    let size = bound.max(0) as usize;
    let mut reach = vec![false; size + 1];
    reach[0] = true;
    for x in 1..=size {
        reach[x] = gens
            .iter()
            .any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach
}

pub fn in_sieve(reach: &[bool], x: i64) -> bool {
    x >= 0 && reach[x as usize]
}

/// Frobenius number by sieving up to a safe bound; `-1` when there are no gaps.
pub fn naive_frobenius(gens: &[i64]) -> i64 {
    let max = *gens.iter().max().unwrap();
    let min = *gens.iter().min().unwrap();
    let bound = min * max;
    let reach = sieve(gens, bound);
    (0..=bound)
        .rev()
        .find(|&x| !reach[x as usize])
        .unwrap_or(-1)
}

/// Gaps `x >= -1` with `x + s ∈ S` for every nonzero `s ∈ S`. Scanning from
/// `-1` only matters for `<1>`, where `F = -1`.
pub fn naive_pseudo_frobenius(gens: &[i64]) -> Vec<i64> {
    let f = naive_frobenius(gens);
    let reach = sieve(gens, 2 * f + 2);
    (-1..=f)
        .filter(|&x| !in_sieve(&reach, x))
        .filter(|&x| (1..=f + 1).all(|s| !reach[s as usize] || in_sieve(&reach, x + s)))
        .collect()
}

/// Drops every generator representable by the others, by sieve.
pub fn naive_minimal(gens: &[i64]) -> Vec<i64> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut kept: Vec<i64> = Vec::new();
    for &g in &sorted {
        if !in_sieve(&sieve(&kept, g), g) {
            kept.push(g);
        }
    }
    kept
}

/// Faces of `Δ_m` as bit masks, by testing all `2^d` subsets.
pub fn naive_faces(gens: &[i64], m: i64, reach: &[bool]) -> Vec<u64> {
    let d = gens.len();
    (0u64..1 << d)
        .filter(|mask| {
            let sum: i64 = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).sum();
            in_sieve(reach, m - sum)
        })
        .collect()
}

pub fn naive_euler(faces: &[u64]) -> i64 {
    faces
        .iter()
        .map(|f| if f.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum()
}

pub fn naive_delta(gens: &[i64], m: i64, reach: &[bool]) -> SimplicialComplex {
    let faces = naive_faces(gens, m, reach);
    SimplicialComplex::from_faces(gens.len(), faces.into_iter().map(Face::from_bits)).unwrap()
}

/// `sum χ(Δ_m) t^m` for `m <= bound`, straight from the definition.
pub fn naive_numerator(gens: &[i64], bound: i64) -> BTreeMap<u64, i64> {
    let total: i64 = gens.iter().sum();
    let reach = sieve(gens, bound + total);
    let mut out = BTreeMap::new();
    for m in 0..=bound {
        let chi = naive_euler(&naive_faces(gens, m, &reach));
        if chi != 0 {
            out.insert(m as u64, chi);
        }
    }
    out
}

fn subsets_of_size(
    universe: &[i64],
    k: usize,
    out: &mut Vec<Vec<i64>>,
    cur: &mut Vec<i64>,
    start: usize,
) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..universe.len() {
        cur.push(universe[i]);
        subsets_of_size(universe, k, out, cur, i + 1);
        cur.pop();
    }
}

/// Every numerical semigroup with embedding dimension `<= max_dim` and all
/// minimal generators `<= max_gen`, as generator lists.
pub fn exhaustive_corpus(max_dim: usize, max_gen: i64) -> Vec<Vec<i64>> {
    let universe: Vec<i64> = (1..=max_gen).collect();
    let mut out = Vec::new();
    for k in 1..=max_dim {
        let mut sets = Vec::new();
        subsets_of_size(&universe, k, &mut sets, &mut Vec::new(), 0);
        for set in sets {
            if set.iter().fold(0, |g, &n| gcd(g, n)) != 1 {
                continue;
            }
            if is_minimal(&set) {
                out.push(set);
            }
        }
    }
    out
}

fn is_minimal(set: &[i64]) -> bool {
    set.iter().enumerate().all(|(i, &g)| {
        let others: Vec<i64> = set[..i].to_vec();
        !in_sieve(&sieve(&others, g), g)
    })
}

/// `count` random numerical semigroups with exactly `dim` minimal generators in `2..=max_gen`.
pub fn random_corpus(seed: u64, dim: usize, max_gen: i64, count: usize) -> Vec<Vec<i64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut set: Vec<i64> = (0..dim).map(|_| rng.gen_range(2..=max_gen)).collect();
        set.sort_unstable();
        set.dedup();
        if set.len() != dim || set.iter().fold(0, |g, &n| gcd(g, n)) != 1 || !is_minimal(&set) {
            continue;
        }
        out.push(set);
    }
    out
}

pub fn semigroup(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::numerical(gens).unwrap()
}

/// Facet masks on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub n: usize,
    pub facets: Vec<u64>,
}

fn permute(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for (i, &j) in perm.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << j;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn maximal(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_unstable();
    faces.dedup();
    let kept: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && f & !g == 0))
        .collect();
    kept
}

fn canonical(n: usize, facets: &[u64], perms: &[Vec<usize>]) -> Shape {
    let best = perms
        .iter()
        .map(|p| {
            let mut v: Vec<u64> = facets.iter().map(|&f| permute(f, p)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap();
    Shape { n, facets: best }
}

/// Fat trees on at most `max_vertices` vertices with every facet of size at
/// most `max_facet`, up to isomorphism. Grown by attaching a new facet along
/// a nonempty face of an existing facet.
pub fn fat_trees(max_vertices: usize, max_facet: usize) -> Vec<Shape> {
    let perm_table: Vec<Vec<Vec<usize>>> = (0..=max_vertices).map(permutations).collect();
    let mut seen: BTreeSet<Shape> = BTreeSet::new();
    let mut frontier: Vec<Shape> = Vec::new();
    for s in 1..=max_facet.min(max_vertices) {
        let shape = Shape {
            n: s,
            facets: vec![(1u64 << s) - 1],
        };
        if seen.insert(shape.clone()) {
            frontier.push(shape);
        }
    }
    while let Some(shape) = frontier.pop() {
        for &facet in &shape.facets {
            // Nonempty faces of this facet.
            let mut sub = facet;
            while sub != 0 {
                let attach_size = sub.count_ones() as usize;
                for extra in 1..=max_facet.saturating_sub(attach_size) {
                    let n = shape.n + extra;
                    if n > max_vertices {
                        break;
                    }
                    let new_bits = ((1u64 << extra) - 1) << shape.n;
                    let mut facets = shape.facets.clone();
                    facets.push(sub | new_bits);
                    let facets = maximal(facets);
                    let canon = canonical(n, &facets, &perm_table[n]);
                    if seen.insert(canon.clone()) {
                        frontier.push(canon);
                    }
                }
                sub = (sub - 1) & facet;
            }
        }
    }
    seen.into_iter().collect()
}

/// Every fat forest on at most `max_vertices` vertices, as lists of trees on
/// a common vertex set, with trees in a canonical nondecreasing order.
pub fn fat_forests(max_vertices: usize, max_facet: usize) -> Vec<Vec<SimplicialComplex>> {
    let trees = fat_trees(max_vertices, max_facet);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        trees: &[Shape],
        start: usize,
        used: usize,
        max: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<SimplicialComplex>>,
    ) {
        if !stack.is_empty() {
            let total = used;
            let mut offset = 0;
            let mut forest = Vec::new();
            for &t in stack.iter() {
                let shape = &trees[t];
                let faces = shape.facets.iter().map(|&f| Face::from_bits(f << offset));
                forest.push(SimplicialComplex::from_faces(total, faces).unwrap());
                offset += shape.n;
            }
            out.push(forest);
        }
        for t in start..trees.len() {
            if used + trees[t].n <= max {
                stack.push(t);
                rec(trees, t, used + trees[t].n, max, stack, out);
                stack.pop();
            }
        }
    }
    rec(&trees, 0, 0, max_vertices, &mut stack, &mut out);
    out
}

/// Eight-vertex fat tree mixing triangles and edges.
pub fn eight_vertex_fixture() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        8,
        &[
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![4, 5],
            vec![3, 6, 7],
            vec![7, 8],
        ],
    )
    .unwrap()
}

/// Maps `f` over `items` on all available cores, keeping the input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = items.len().div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// The criterion-4 corpus: every semigroup with `d <= 4` and generators up to
/// 25, followed by 100 seeded random instances with `d = 5`.
pub fn oracle_corpus() -> Vec<Vec<i64>> {
    let mut corpus = exhaustive_corpus(4, 25);
    corpus.extend(random_corpus(0x5eed_d1f5, 5, 40, 100));
    corpus
}
