//! Cycle structure of a signed graph: strongly positive triangles and their
//! chains, weakly negative cycles (exactly one negative edge), exact
//! edge-disjoint packings of them, clusterability, the chordless-cycle
//! triangle condition, and the pairwise-adjacent triple condition.

use std::collections::{HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::{edge_key, Edge, Sign, SignedGraph};
use crate::unionfind::UnionFind;

/// A simple cycle, stored in canonical orientation: it starts at its smallest
/// vertex and proceeds towards the smaller of that vertex's two cycle
/// neighbors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    negative_count: usize,
}

impl Cycle {
    /// Builds a cycle from a closed vertex sequence (first vertex not repeated).
    /// Returns `None` unless the sequence is a simple cycle of `g` of length ≥ 3.
    pub fn from_vertices(g: &SignedGraph, seq: &[usize]) -> Option<Cycle> {
        let len = seq.len();
        if len < 3 {
            return None;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in seq {
            if v >= g.vertex_count() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        let mut negative_count = 0;
        for i in 0..len {
            match g.sign(seq[i], seq[(i + 1) % len])? {
                Sign::Negative => negative_count += 1,
                Sign::Positive => {}
            }
        }
        Some(Cycle {
            vertices: canonical_rotation(seq),
            negative_count,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.negative_count
    }

    pub fn is_weakly_negative(&self) -> bool {
        self.negative_count == 1
    }

    pub fn is_strongly_positive(&self) -> bool {
        self.negative_count == 0
    }

    /// Edges in walk order, each normalized.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| edge_key(self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }
}

fn canonical_rotation(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
    let next = seq[(start + 1) % len];
    let prev = seq[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|k| seq[(start + k) % len]).collect()
    } else {
        (0..len).map(|k| seq[(start + len - k) % len]).collect()
    }
}

/// All triangles whose three edges are positive, as sorted triples in
/// lexicographic order.
pub fn strongly_positive_triangles(g: &SignedGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        let higher: Vec<usize> = g.positive_neighbors(u).filter(|&v| v > u).collect();
        for (i, &v) in higher.iter().enumerate() {
            for &w in &higher[i + 1..] {
                if g.sign(v, w) == Some(Sign::Positive) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// Groups strongly positive triangles that share a vertex (directly or
/// through a chain of such triangles) and returns the vertex set of each group.
pub fn triangle_chain_components(g: &SignedGraph) -> Vec<Vec<usize>> {
    let triangles = strongly_positive_triangles(g);
    let mut uf = UnionFind::new(g.vertex_count());
    let mut covered = vec![false; g.vertex_count()];
    for [a, b, c] in &triangles {
        uf.union(*a, *b);
        uf.union(*a, *c);
        covered[*a] = true;
        covered[*b] = true;
        covered[*c] = true;
    }
    uf.groups()
        .into_iter()
        .filter(|grp| covered[grp[0]])
        .collect()
}

/// Every simple cycle of length at most `max_length` carrying exactly one
/// negative edge, sorted canonically.
///
/// Each such cycle is a negative edge `{u, v}` closed by an all-positive
/// `u`–`v` path, so it is found exactly once by walking positive paths out of
/// the smaller endpoint.
pub fn enumerate_weakly_negative_cycles(g: &SignedGraph, max_length: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if max_length < 3 {
        return out;
    }
    let mut on_path = vec![false; g.vertex_count()];
    for (u, v) in g.edges_with_sign(Sign::Negative) {
        let mut path = vec![u];
        on_path[u] = true;
        positive_paths(g, v, max_length, &mut path, &mut on_path, &mut out);
        on_path[u] = false;
    }
    out.sort();
    out
}

fn positive_paths(
    g: &SignedGraph,
    target: usize,
    max_length: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for w in g.positive_neighbors(last) {
        if on_path[w] {
            continue;
        }
        if w == target {
            path.push(w);
            out.push(Cycle {
                vertices: canonical_rotation(path),
                negative_count: 1,
            });
            path.pop();
            continue;
        }
        // a cycle through w still needs the edge into target
        if path.len() + 2 > max_length {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        positive_paths(g, target, max_length, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

/// Cycle length cap for enumeration-backed analyses.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CycleBound {
    pub max_length: usize,
    /// Accept a cap below the vertex count, knowing results may be partial.
    pub allow_truncated: bool,
}

impl CycleBound {
    /// A cap that cannot miss any cycle of `g`.
    pub fn complete(g: &SignedGraph) -> Self {
        CycleBound {
            max_length: g.vertex_count().max(3),
            allow_truncated: false,
        }
    }

    pub fn new(max_length: usize, allow_truncated: bool) -> Self {
        CycleBound {
            max_length,
            allow_truncated,
        }
    }

    pub fn check(&self, g: &SignedGraph) -> Result<()> {
        if self.max_length < 3 {
            return Err(Error::InvalidParameter(format!(
                "maximum cycle length must be at least 3, got {}",
                self.max_length
            )));
        }
        if self.max_length < g.vertex_count() && !self.allow_truncated {
            return Err(Error::EnumerationTruncated {
                max_length: self.max_length,
                n: g.vertex_count(),
            });
        }
        Ok(())
    }

    pub fn is_complete_for(&self, g: &SignedGraph) -> bool {
        self.max_length >= g.vertex_count()
    }
}

/// Maximum set of pairwise edge-disjoint weakly negative cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub size: usize,
    pub witness: Vec<Cycle>,
}

pub fn max_edge_disjoint_wnc_packing(g: &SignedGraph, bound: CycleBound) -> Result<Packing> {
    bound.check(g)?;
    let cycles = enumerate_weakly_negative_cycles(g, bound.max_length);
    Ok(pack_cycles(&cycles))
}

/// Edge masks over the edges that occur in at least one of `cycles`.
fn edge_masks(cycles: &[Cycle]) -> Vec<BitSet> {
    let mut index: HashMap<Edge, usize> = HashMap::new();
    for c in cycles {
        for e in c.edges() {
            let next = index.len();
            index.entry(e).or_insert(next);
        }
    }
    cycles
        .iter()
        .map(|c| {
            let mut m = BitSet::new(index.len());
            for e in c.edges() {
                m.insert(index[&e]);
            }
            m
        })
        .collect()
}

/// Exact maximum edge-disjoint sub-collection of `cycles`.
///
/// Memoized branching over the set of still-available cycles: take the
/// lowest edge used by any available cycle; an optimal packing either uses
/// exactly one available cycle through it or none.
pub fn pack_cycles(cycles: &[Cycle]) -> Packing {
    let packer = Packer::new(cycles);
    let all = BitSet::full(cycles.len());
    let mut memo = HashMap::new();
    let size = packer.best(&all, &mut memo);
    let mut witness = Vec::new();
    let mut alive = all;
    while let Some(next) = packer.choose(&alive, &mut memo) {
        witness.push(cycles[next].clone());
        alive = alive.difference(&packer.conflicts[next]);
    }
    debug_assert_eq!(witness.len(), size);
    Packing { size, witness }
}

struct Packer {
    masks: Vec<BitSet>,
    conflicts: Vec<BitSet>,
}

impl Packer {
    fn new(cycles: &[Cycle]) -> Self {
        let masks = edge_masks(cycles);
        let k = cycles.len();
        let conflicts = (0..k)
            .map(|i| {
                let mut c = BitSet::new(k);
                for j in 0..k {
                    if masks[i].intersects(&masks[j]) {
                        c.insert(j);
                    }
                }
                c
            })
            .collect();
        Packer { masks, conflicts }
    }

    fn pivot_edge(&self, alive: &BitSet) -> Option<usize> {
        alive.iter().filter_map(|i| self.masks[i].first()).min()
    }

    fn best(&self, alive: &BitSet, memo: &mut HashMap<BitSet, usize>) -> usize {
        let Some(e) = self.pivot_edge(alive) else {
            return 0;
        };
        if let Some(&v) = memo.get(alive) {
            return v;
        }
        let through: Vec<usize> = alive
            .iter()
            .filter(|&i| self.masks[i].contains(e))
            .collect();
        let mut without = alive.clone();
        let mut through_mask = BitSet::new(self.masks.len());
        for &i in &through {
            through_mask.insert(i);
        }
        without = without.difference(&through_mask);
        let mut value = self.best(&without, memo);
        for &i in &through {
            if value >= self.upper_bound(alive) {
                break;
            }
            let rest = alive.difference(&self.conflicts[i]);
            value = value.max(1 + self.best(&rest, memo));
        }
        memo.insert(alive.clone(), value);
        value
    }

    /// Trivial bound: every available cycle could be taken.
    fn upper_bound(&self, alive: &BitSet) -> usize {
        alive.iter().count()
    }

    /// The first cycle (in pivot order) that an optimal packing of `alive`
    /// can start with, or `None` if the optimum from here is reached without
    /// taking any more cycles.
    fn choose(&self, alive: &BitSet, memo: &mut HashMap<BitSet, usize>) -> Option<usize> {
        let mut alive = alive.clone();
        loop {
            let target = self.best(&alive, memo);
            if target == 0 {
                return None;
            }
            let e = self.pivot_edge(&alive)?;
            let through: Vec<usize> = alive
                .iter()
                .filter(|&i| self.masks[i].contains(e))
                .collect();
            for &i in &through {
                let rest = alive.difference(&self.conflicts[i]);
                if 1 + self.best(&rest, memo) == target {
                    return Some(i);
                }
            }
            let mut through_mask = BitSet::new(self.masks.len());
            for &i in &through {
                through_mask.insert(i);
            }
            alive = alive.difference(&through_mask);
        }
    }
}

/// Result of the clusterability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clusterability {
    /// Zero-disagreement clustering: the connected components of the positive subgraph.
    Clusterable(Clustering),
    /// A cycle with exactly one negative edge.
    Obstructed(Cycle),
}

impl Clusterability {
    pub fn is_clusterable(&self) -> bool {
        matches!(self, Clusterability::Clusterable(_))
    }
}

/// A signed graph can be clustered without disagreement iff no negative edge
/// joins two vertices of the same positive component.
pub fn is_clusterable(g: &SignedGraph) -> Clusterability {
    let components = g.positive_components();
    let mut comp = vec![0; g.vertex_count()];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    for (u, v) in g.edges_with_sign(Sign::Negative) {
        if comp[u] == comp[v] {
            let path = shortest_positive_path(g, u, v);
            let cycle = Cycle::from_vertices(g, &path).expect("positive path closes a cycle");
            return Clusterability::Obstructed(cycle);
        }
    }
    Clusterability::Clusterable(
        Clustering::from_clusters(g.vertex_count(), &components).expect("components partition V"),
    )
}

fn shortest_positive_path(g: &SignedGraph, from: usize, to: usize) -> Vec<usize> {
    let mut pred = vec![usize::MAX; g.vertex_count()];
    pred[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for w in g.positive_neighbors(x) {
            if pred[w] == usize::MAX {
                pred[w] = x;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = pred[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Outcome of the chordless-cycle scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCondition {
    pub holds: bool,
    /// Chordless cycles of length ≥ 4 with at most one negative edge.
    pub violations: Vec<Cycle>,
}

/// Checks that every chordless strongly positive or weakly negative cycle is
/// a triangle.
pub fn triangle_condition_check(g: &SignedGraph) -> TriangleCondition {
    let violations = chordless_cycles(g, 4, 1);
    TriangleCondition {
        holds: violations.is_empty(),
        violations,
    }
}

/// Chordless cycles of length at least `min_length` having at most
/// `max_negative` negative edges, sorted canonically.
pub fn chordless_cycles(g: &SignedGraph, min_length: usize, max_negative: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        let mut search = ChordlessSearch {
            g,
            start: s,
            min_length: min_length.max(3),
            max_negative,
            path: vec![s],
            on_path: &mut on_path,
            out: &mut out,
        };
        search.on_path[s] = true;
        search.extend(0);
        on_path[s] = false;
    }
    out.sort();
    out
}

struct ChordlessSearch<'a> {
    g: &'a SignedGraph,
    start: usize,
    min_length: usize,
    max_negative: usize,
    path: Vec<usize>,
    on_path: &'a mut Vec<bool>,
    out: &'a mut Vec<Cycle>,
}

impl ChordlessSearch<'_> {
    fn extend(&mut self, negatives: usize) {
        let g = self.g;
        let s = self.start;
        let last = *self.path.last().unwrap();
        for &(w, sign) in g.neighbors(last) {
            if w <= s || self.on_path[w] {
                continue;
            }
            let negatives = negatives + usize::from(sign.is_negative());
            if negatives > self.max_negative {
                continue;
            }
            if self.path.len() == 1 {
                self.push_and_extend(w, negatives);
                continue;
            }
            // w may touch only `last` among the interior path vertices
            let interior = &self.path[1..self.path.len() - 1];
            if interior.iter().any(|&x| g.has_edge(x, w)) {
                continue;
            }
            match g.sign(w, s) {
                Some(closing) => {
                    let total = negatives + usize::from(closing.is_negative());
                    let len = self.path.len() + 1;
                    if len >= self.min_length && total <= self.max_negative && self.path[1] < w {
                        let mut seq = self.path.clone();
                        seq.push(w);
                        self.out.push(Cycle {
                            vertices: canonical_rotation(&seq),
                            negative_count: total,
                        });
                    }
                }
                None => self.push_and_extend(w, negatives),
            }
        }
    }

    fn push_and_extend(&mut self, w: usize, negatives: usize) {
        self.path.push(w);
        self.on_path[w] = true;
        self.extend(negatives);
        self.on_path[w] = false;
        self.path.pop();
    }
}

/// Outcome of the pairwise-adjacent triple scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    /// True iff every three pairwise adjacent weakly negative cycles share an edge.
    pub holds: bool,
    pub witness: Option<[Cycle; 3]>,
}

pub fn condition_theorem_check(g: &SignedGraph, bound: CycleBound) -> Result<ConditionCheck> {
    bound.check(g)?;
    let cycles = enumerate_weakly_negative_cycles(g, bound.max_length);
    Ok(find_adjacent_triple(&cycles))
}

/// Scans `cycles` for three pairwise adjacent members (sharing at least one
/// edge pairwise) with no edge common to all three. Reports the first such
/// triple in index order.
pub fn find_adjacent_triple(cycles: &[Cycle]) -> ConditionCheck {
    let masks = edge_masks(cycles);
    let k = cycles.len();
    for i in 0..k {
        for j in i + 1..k {
            if !masks[i].intersects(&masks[j]) {
                continue;
            }
            for l in j + 1..k {
                if masks[i].intersects(&masks[l])
                    && masks[j].intersects(&masks[l])
                    && !masks[i].intersects3(&masks[j], &masks[l])
                {
                    return ConditionCheck {
                        holds: false,
                        witness: Some([cycles[i].clone(), cycles[j].clone(), cycles[l].clone()]),
                    };
                }
            }
        }
    }
    ConditionCheck {
        holds: true,
        witness: None,
    }
}
