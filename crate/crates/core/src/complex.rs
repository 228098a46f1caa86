//! Simplicial complexes on the vertex set `{1, ..., d}`.
//!
//! Faces are bit masks (`d <= 63`); a complex is stored as its antichain of
//! facets. Two degenerate complexes are kept apart: the *void* complex has no
//! faces at all (it is the divisor complex of a non-element) and is stored as
//! an empty facet list, while `{∅}` is stored as the single facet `∅`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

/// A set of vertices, bit `i` standing for vertex `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    /// Face spanned by 1-based vertex labels.
    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::InvalidInput(format!("vertex {v} is out of range")));
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// The full simplex `{1, ..., d}`.
    pub fn full(d: usize) -> Self {
        if d >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << d) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        Face(1 << (v - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    /// Vertices `<= k`.
    pub fn at_most(self, k: usize) -> Face {
        self.intersection(Face::full(k))
    }

    /// Vertices `> k`.
    pub fn above(self, k: usize) -> Face {
        self.difference(Face::full(k))
    }

    /// Shifts every vertex label up by `offset`.
    pub fn shifted(self, offset: usize) -> Face {
        Face(self.0 << offset)
    }

    /// 1-based vertex labels, ascending.
    pub fn vertices(self) -> Vec<usize> {
        (0..64)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    /// Every subset of this face, including `∅` and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(Face(cur))
        })
    }

    /// Image of this face under a 0-based vertex map.
    pub fn relabeled(self, map: &[usize]) -> Face {
        let mut bits = 0u64;
        for v in self.vertices() {
            bits |= 1 << map[v - 1];
        }
        Face(bits)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `n_F`: the sum of the generators indexed by `face`.
pub fn face_sum(semigroup: &NumericalSemigroup, face: Face) -> Result<i64> {
    let gens = semigroup.generators();
    let mut total = 0i64;
    for v in face.vertices() {
        let n = gens.get(v - 1).ok_or_else(|| {
            Error::InvalidInput(format!(
                "vertex {v} exceeds embedding dimension {}",
                gens.len()
            ))
        })?;
        total = total.checked_add(*n).ok_or(Error::Overflow("face sum"))?;
    }
    Ok(total)
}

/// A finite simplicial complex described by its facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty_face(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            facets: vec![Face::EMPTY],
        }
    }

    /// The full simplex `2^[d]`.
    pub fn simplex(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            facets: vec![Face::full(num_vertices)],
        }
    }

    /// Builds a complex from 1-based vertex lists, pruning contained facets.
    pub fn from_facets(num_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let faces = facets
            .iter()
            .map(|f| {
                if let Some(&v) = f.iter().find(|&&v| v == 0 || v > num_vertices) {
                    Err(Error::InvalidInput(format!(
                        "vertex {v} is outside 1..={num_vertices}"
                    )))
                } else {
                    Face::from_vertices(f)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(num_vertices, faces)
    }

    /// Builds a complex from faces given as masks; any face list generates its
    /// downward closure.
    pub fn from_faces(num_vertices: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::InvalidInput(format!(
                "{num_vertices} vertices exceed the limit of {MAX_VERTICES}"
            )));
        }
        let mut faces: Vec<Face> = faces.into_iter().collect();
        if let Some(f) = faces
            .iter()
            .find(|f| !f.is_subset(Face::full(num_vertices)))
        {
            return Err(Error::InvalidInput(format!(
                "face {f} is outside 1..={num_vertices}"
            )));
        }
        faces.sort_by_key(|f| (std::cmp::Reverse(f.len()), f.bits()));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|f| (f.len(), f.bits()));
        Ok(Self {
            num_vertices,
            facets,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Facets in canonical order: by size, then by mask value.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Facets as 1-based vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Union of all facets.
    pub fn vertex_support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Every face, sorted by mask value.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// `sum over faces of (-1)^|F|`, the empty face included.
    ///
    /// Picks the cheapest exact route: testing every subset of the vertex
    /// support, inclusion-exclusion over facet intersections, or collecting
    /// the subsets of each facet.
    pub fn euler_characteristic(&self) -> i64 {
        if self.facets.is_empty() {
            return 0;
        }
        let cost = |exp: usize| 1u128.checked_shl(exp as u32).unwrap_or(u128::MAX);
        let by_support =
            cost(self.vertex_support().len()).saturating_mul(self.facets.len() as u128);
        let by_meets = cost(self.facets.len()).saturating_mul(self.facets.len() as u128);
        let by_subsets: u128 = self.facets.iter().map(|f| cost(f.len())).sum();
        if by_support <= by_meets && by_support <= by_subsets {
            self.euler_by_faces()
        } else if by_meets <= by_subsets {
            self.euler_by_intersections()
        } else {
            self.faces()
                .iter()
                .map(|f| if f.len() % 2 == 0 { 1 } else { -1 })
                .sum()
        }
    }

    pub(crate) fn euler_by_faces(&self) -> i64 {
        let support = self.vertex_support();
        support
            .subsets()
            .filter(|f| self.contains_face(*f))
            .map(|f| if f.len() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// A simplex `2^A` has Euler characteristic 1 if `A` is empty and 0 otherwise,
    /// so only facet families with empty common intersection contribute.
    pub(crate) fn euler_by_intersections(&self) -> i64 {
        let k = self.facets.len();
        assert!(k < 64, "inclusion-exclusion over {k} facets");
        let mut total = 0i64;
        for family in 1u64..(1 << k) {
            let meet = (0..k)
                .filter(|i| family >> i & 1 == 1)
                .fold(Face(u64::MAX), |acc, i| acc.intersection(self.facets[i]));
            if meet.is_empty() {
                total += if family.count_ones() % 2 == 1 { 1 } else { -1 };
            }
        }
        total
    }

    /// Connected components of the vertex graph, as subcomplexes on the same
    /// vertex set. The void complex and `{∅}` have no components.
    pub fn components(&self) -> Vec<SimplicialComplex> {
        let mut remaining: Vec<Face> = self
            .facets
            .iter()
            .copied()
            .filter(|f| !f.is_empty())
            .collect();
        let mut out = Vec::new();
        while let Some(seed) = remaining.pop() {
            let mut group = vec![seed];
            let mut span = seed;
            let mut queue: VecDeque<Face> = VecDeque::from([seed]);
            while queue.pop_front().is_some() {
                let (hit, rest): (Vec<Face>, Vec<Face>) = remaining
                    .iter()
                    .partition(|f| !f.intersection(span).is_empty());
                remaining = rest;
                for f in hit {
                    span = span.union(f);
                    group.push(f);
                    queue.push_back(f);
                }
            }
            out.push(
                SimplicialComplex::from_faces(self.num_vertices, group)
                    .expect("subset of a valid complex"),
            );
        }
        out.sort_by_key(|c| c.vertex_support().bits().trailing_zeros());
        out
    }

    /// Whether the 1-skeleton on the vertices present is connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union with `other`, whose vertices are shifted past ours.
    pub fn shifted_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let d = self.num_vertices;
        let faces = self
            .facets
            .iter()
            .copied()
            .chain(other.facets.iter().map(|f| f.shifted(d)));
        SimplicialComplex::from_faces(d + other.num_vertices, faces)
    }

    /// Image under a 0-based vertex map (`map[i]` is the new index of vertex `i + 1`).
    pub fn relabeled(&self, map: &[usize]) -> Result<SimplicialComplex> {
        if !is_bijection(map, self.num_vertices) {
            return Err(Error::InvalidInput("vertex map is not a bijection".into()));
        }
        SimplicialComplex::from_faces(
            self.num_vertices,
            self.facets.iter().map(|f| f.relabeled(map)),
        )
    }

    /// True iff mapping every facet of `self` through `map` yields the facets of `other`.
    pub fn equals_relabeled(&self, other: &SimplicialComplex, map: &[usize]) -> bool {
        if self.num_vertices != other.num_vertices {
            return false;
        }
        match self.relabeled(map) {
            Ok(image) => image.facets == other.facets,
            Err(_) => false,
        }
    }

    /// A facet order witnessing that this complex is a fat tree: every facet
    /// after the first meets the union of the earlier ones in a nonempty set
    /// that is a face of the earlier subcomplex.
    pub fn fat_tree_order(&self) -> Result<Vec<Face>> {
        let facets = &self.facets;
        if facets.is_empty() || facets.iter().all(|f| f.is_empty()) {
            return Err(Error::NotFatTree);
        }
        if facets.len() > 64 {
            return Err(Error::InvalidInput(
                "too many facets for the order search".into(),
            ));
        }
        let mut failed: HashSet<u64> = HashSet::new();
        for start in 0..facets.len() {
            let mut order = vec![start];
            if extend_order(
                facets,
                1u64 << start,
                facets[start],
                &mut order,
                &mut failed,
            ) {
                return Ok(order.into_iter().map(|i| facets[i]).collect());
            }
        }
        Err(Error::NotFatTree)
    }
}

fn extend_order(
    facets: &[Face],
    used: u64,
    span: Face,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if failed.contains(&used) {
        return false;
    }
    for j in 0..facets.len() {
        if used >> j & 1 == 1 {
            continue;
        }
        let meet = facets[j].intersection(span);
        let attaches = !meet.is_empty() && order.iter().any(|&i| meet.is_subset(facets[i]));
        if attaches {
            order.push(j);
            if extend_order(facets, used | 1 << j, span.union(facets[j]), order, failed) {
                return true;
            }
            order.pop();
        }
    }
    failed.insert(used);
    false
}

pub(crate) fn is_bijection(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &j in map {
        if j >= n || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

/// `skeleton(d, k)`: every subset of `[d]` of size at most `k`. `k = -1` gives
/// the void complex.
pub fn skeleton(num_vertices: usize, k: i64) -> Result<SimplicialComplex> {
    if k < -1 {
        return Err(Error::InvalidInput(format!(
            "skeleton dimension {k} is below -1"
        )));
    }
    if num_vertices > MAX_VERTICES {
        return Err(Error::InvalidInput(format!(
            "{num_vertices} vertices exceed the limit of {MAX_VERTICES}"
        )));
    }
    if k == -1 {
        return Ok(SimplicialComplex::void(num_vertices));
    }
    let size = (k as usize).min(num_vertices);
    let mut facets = Vec::new();
    for_each_subset_of_size(num_vertices, size, &mut |f| facets.push(f));
    SimplicialComplex::from_faces(num_vertices, facets)
}

fn for_each_subset_of_size(n: usize, k: usize, visit: &mut dyn FnMut(Face)) {
    fn rec(start: usize, n: usize, left: usize, acc: u64, visit: &mut dyn FnMut(Face)) {
        if left == 0 {
            visit(Face(acc));
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, acc | 1 << i, visit);
        }
    }
    rec(0, n, k, 0, visit);
}
