//! Core digraph representation and structural queries.
//!
//! Digraphs are strict (at most one arc per ordered pair) and loopless;
//! digons (both `u->v` and `v->u`) are allowed. Adjacency is stored as one
//! `u64` bit vector per vertex, which caps the order at 63 vertices and
//! makes subset queries single-word operations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Hard ceiling of the single-word bitmask representation.
pub const MAX_VERTICES: usize = 63;

/// Default cap for routines that materialize a table over all 2^n subsets.
pub const DEFAULT_DP_LIMIT: usize = 20;

/// A subset of vertices as a bitmask over indices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet((1u64 << n) - 1)
    }

    #[inline]
    pub fn single(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest-index vertex, if any.
    #[inline]
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut mask = 0u64;
        for v in iter {
            mask |= 1 << v;
        }
        VertexSet(mask)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Out-degree, in-degree, and the distinct-neighbor count
/// `|N+(v) ∪ N-(v)|` of one vertex. A digon contributes one distinct
/// neighbor, so `underlying < out_degree + in_degree` exactly at vertices
/// that lie in a digon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeTriple {
    pub out_degree: usize,
    pub in_degree: usize,
    pub underlying: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    InvalidVertex { v: usize, n: usize },
    SelfLoop { v: usize },
    DuplicateArc { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the bitmask capacity of {MAX_VERTICES}")
            }
            GraphError::InvalidVertex { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::SelfLoop { v } => write!(f, "loop at vertex {v} (digraphs are loopless)"),
            GraphError::DuplicateArc { u, v } => write!(f, "duplicate arc {u} -> {v}"),
        }
    }
}

/// A size limit was exceeded before any work started.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityError {
    pub what: &'static str,
    pub limit: usize,
    pub requested: usize,
}

impl fmt::Display for CapacityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: requested {} exceeds limit {}",
            self.what, self.requested, self.limit
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

/// A strict loopless digraph on `n <= 63` vertices.
///
/// `in_adj` is kept as the exact transpose of `out_adj` at all times.
/// Values are immutable for callers once built; every operation is a pure
/// function of the structure.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<u64>,
    in_adj: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Digraph {
            n,
            out_adj: vec![0; n],
            in_adj: vec![0; n],
        })
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::InvalidVertex { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        if self.out_adj[u] >> v & 1 == 1 {
            return Err(GraphError::DuplicateArc { u, v });
        }
        self.out_adj[u] |= 1 << v;
        self.in_adj[v] |= 1 << u;
        Ok(())
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Copy of `self` with one arc removed (no-op if the arc is absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let mut d = self.clone();
        d.out_adj[u] &= !(1u64 << v);
        d.in_adj[v] &= !(1u64 << u);
        d
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out_adj[v])
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.in_adj[v])
    }

    #[inline]
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    pub fn degrees(&self, v: usize) -> DegreeTriple {
        DegreeTriple {
            out_degree: self.out_adj[v].count_ones() as usize,
            in_degree: self.in_adj[v].count_ones() as usize,
            underlying: (self.out_adj[v] | self.in_adj[v]).count_ones() as usize,
        }
    }

    /// Per-vertex (out, in, distinct-neighbor) degree triples.
    pub fn degree_sequence(&self) -> Vec<DegreeTriple> {
        (0..self.n).map(|v| self.degrees(v)).collect()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_arc(u, v) == self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_digon_free(&self) -> bool {
        (0..self.n).all(|v| self.out_adj[v] & self.in_adj[v] == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.out_adj[v] | self.in_adj[v] == 0)
    }

    /// Whether the induced subdigraph on `s` has no directed cycle,
    /// decided by repeatedly peeling vertices with no in-neighbor inside `s`.
    pub fn is_acyclic(&self, s: VertexSet) -> bool {
        let mut s = s.mask();
        while s != 0 {
            let mut removed = false;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.in_adj[v] & s == 0 {
                    s &= !(1u64 << v);
                    removed = true;
                }
            }
            if !removed {
                return false;
            }
        }
        true
    }

    /// Acyclicity of every subset at once: `table[s.mask()]` holds
    /// `is_acyclic(s)`. A set is acyclic iff it has a source vertex whose
    /// removal leaves an acyclic set, so the table fills in n * 2^n steps.
    pub fn acyclic_subset_table(&self) -> Result<Vec<bool>, CapacityError> {
        self.acyclic_subset_table_with_limit(DEFAULT_DP_LIMIT)
    }

    pub fn acyclic_subset_table_with_limit(
        &self,
        limit: usize,
    ) -> Result<Vec<bool>, CapacityError> {
        if self.n > limit || limit > MAX_VERTICES {
            return Err(CapacityError {
                what: "acyclic subset table",
                limit,
                requested: self.n,
            });
        }
        let mut table = vec![false; 1usize << self.n];
        table[0] = true;
        for s in 1u64..1 << self.n {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.in_adj[v] & s == 0 && table[(s & !(1 << v)) as usize] {
                    table[s as usize] = true;
                    break;
                }
            }
        }
        Ok(table)
    }

    /// Maximal strongly connected sets, in reverse topological order of the
    /// condensation (every arc between components points into an earlier
    /// entry of the returned list).
    pub fn strongly_connected_components(&self) -> Vec<VertexSet> {
        let mut state = TarjanState {
            d: self,
            index: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            on_stack: 0,
            stack: Vec::new(),
            next: 0,
            components: Vec::new(),
        };
        for v in 0..self.n {
            if state.index[v] == usize::MAX {
                state.visit(v);
            }
        }
        state.components
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().len() == 1
    }

    /// Length of the shortest directed cycle; `None` for acyclic digraphs.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.n {
            // BFS out of v; any in-neighbor of v reached at distance d
            // closes a cycle of length d + 1.
            let mut dist = vec![usize::MAX; self.n];
            dist[v] = 0;
            let mut queue = vec![v];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for w in self.out_neighbors(u).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push(w);
                    }
                }
            }
            for u in self.in_neighbors(v).iter() {
                if dist[u] != usize::MAX {
                    let len = dist[u] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        best
    }

    /// Whether the induced subdigraph on `s` is exactly one directed cycle.
    pub fn is_induced_cycle(&self, s: VertexSet) -> bool {
        if s.len() < 2 {
            return false;
        }
        let m = s.mask();
        for v in s.iter() {
            if (self.out_adj[v] & m).count_ones() != 1 || (self.in_adj[v] & m).count_ones() != 1 {
                return false;
            }
        }
        // In/out degrees are all 1, so the set is a disjoint union of
        // cycles; walking the unique successors must cover all of it.
        let start = s.lowest().unwrap();
        let mut cur = start;
        let mut steps = 0;
        loop {
            cur = (self.out_adj[cur] & m).trailing_zeros() as usize;
            steps += 1;
            if cur == start {
                break;
            }
            if steps > s.len() {
                return false;
            }
        }
        steps == s.len()
    }

    /// All vertex sets inducing exactly a directed cycle, sorted by mask.
    pub fn induced_cycles(&self) -> Vec<VertexSet> {
        self.induced_cycles_within(self.full_set())
    }

    /// Induced cycles lying inside `s`, sorted by mask. Uses the subset scan
    /// at small orders and rooted chordless-path extension above that.
    pub fn induced_cycles_within(&self, s: VertexSet) -> Vec<VertexSet> {
        if self.n <= DEFAULT_DP_LIMIT {
            self.induced_cycles_by_scan(s)
        } else {
            self.induced_cycles_by_extension(s)
        }
    }

    /// The induced cycle inside `s` with the smallest mask, if any.
    pub fn lowest_induced_cycle_within(&self, s: VertexSet) -> Option<VertexSet> {
        self.induced_cycles_within(s).into_iter().next()
    }

    fn induced_cycles_by_scan(&self, s: VertexSet) -> Vec<VertexSet> {
        let full = s.mask();
        let mut found = Vec::new();
        let mut sub = full;
        loop {
            if self.is_induced_cycle(VertexSet(sub)) {
                found.push(VertexSet(sub));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
        found.sort();
        found
    }

    pub(crate) fn induced_cycles_by_extension(&self, s: VertexSet) -> Vec<VertexSet> {
        let smask = s.mask();
        let mut found = Vec::new();
        // Digons first: pairs u < v with both arcs.
        for u in s.iter() {
            let mut digons = self.out_adj[u] & self.in_adj[u] & smask;
            digons &= !((1u64 << (u + 1)) - 1);
            for v in VertexSet(digons).iter() {
                found.push(VertexSet::single(u).with(v));
            }
        }
        // Longer cycles rooted at their minimum vertex: grow directed paths
        // whose induced subdigraph is exactly the path, then close to root.
        for root in s.iter() {
            let above = smask & !((1u64 << (root + 1)) - 1);
            let mut path = vec![root];
            self.extend_chordless(root, above, &mut path, 1u64 << root, &mut found);
        }
        found.sort();
        found
    }

    fn extend_chordless(
        &self,
        root: usize,
        allowed: u64,
        path: &mut Vec<usize>,
        path_mask: u64,
        found: &mut Vec<VertexSet>,
    ) {
        let last = *path.last().unwrap();
        let candidates = self.out_adj[last] & allowed & !path_mask;
        for w in VertexSet(candidates).iter() {
            // The only arc from the path into w must be last -> w.
            if self.in_adj[w] & path_mask != 1u64 << last {
                continue;
            }
            let back = self.out_adj[w] & path_mask;
            if back == 1u64 << root && path.len() >= 2 {
                found.push(VertexSet(path_mask | 1 << w));
            } else if back == 0 {
                path.push(w);
                self.extend_chordless(root, allowed, path, path_mask | 1 << w, found);
                path.pop();
            }
        }
    }

    /// New digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut d = Digraph::new(self.n).unwrap();
        for (u, v) in self.arcs() {
            d.add_arc(perm[u], perm[v]).unwrap();
        }
        d
    }

    /// Topological order of an acyclic digraph (sources first); `None` when
    /// a directed cycle exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut remaining = self.full_set().mask();
        let mut order = Vec::with_capacity(self.n);
        while remaining != 0 {
            let mut rest = remaining;
            let mut picked = None;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.in_adj[v] & remaining == 0 {
                    picked = Some(v);
                    break;
                }
            }
            let v = picked?;
            order.push(v);
            remaining &= !(1u64 << v);
        }
        Some(order)
    }

    /// Edge-list text: header `n m`, then one `u v` line per arc.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.arc_count());
        for (u, v) in self.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// DOT rendering; nodes always listed so isolated vertices survive.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!("  {u} -> {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("])")
    }
}

struct TarjanState<'a> {
    d: &'a Digraph,
    index: Vec<usize>,
    low: Vec<usize>,
    on_stack: u64,
    stack: Vec<usize>,
    next: usize,
    components: Vec<VertexSet>,
}

impl TarjanState<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = self.next;
        self.low[v] = self.next;
        self.next += 1;
        self.stack.push(v);
        self.on_stack |= 1 << v;
        for w in self.d.out_neighbors(v).iter() {
            if self.index[w] == usize::MAX {
                self.visit(w);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack >> w & 1 == 1 {
                self.low[v] = self.low[v].min(self.index[w]);
            }
        }
        if self.low[v] == self.index[v] {
            let mut comp = VertexSet::EMPTY;
            loop {
                let w = self.stack.pop().unwrap();
                self.on_stack &= !(1u64 << w);
                comp = comp.with(w);
                if w == v {
                    break;
                }
            }
            self.components.push(comp);
        }
    }
}

/// Parses the edge-list format: first non-comment line `n m`, then `m`
/// lines `u v` (0-based arc `u -> v`); lines starting with `#` and blank
/// lines are ignored. Errors name the offending 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(ParseError {
        line: 1,
        msg: "missing header line \"n m\"".to_string(),
    })?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(&mut parts, header_no, "vertex count")?;
    let m: usize = parse_field(&mut parts, header_no, "arc count")?;
    if parts.next().is_some() {
        return Err(ParseError {
            line: header_no,
            msg: "trailing tokens after \"n m\"".to_string(),
        });
    }

    let mut d = Digraph::new(n).map_err(|e| ParseError {
        line: header_no,
        msg: e.to_string(),
    })?;
    let mut seen = 0usize;
    for (line_no, line) in lines {
        if seen == m {
            return Err(ParseError {
                line: line_no,
                msg: format!("more than the declared {m} arcs"),
            });
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(&mut parts, line_no, "tail vertex")?;
        let v: usize = parse_field(&mut parts, line_no, "head vertex")?;
        if parts.next().is_some() {
            return Err(ParseError {
                line: line_no,
                msg: "trailing tokens after \"u v\"".to_string(),
            });
        }
        d.add_arc(u, v).map_err(|e| ParseError {
            line: line_no,
            msg: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(ParseError {
            line: 0,
            msg: format!("declared {m} arcs but found {seen}"),
        });
    }
    Ok(d)
}

fn parse_field<'a>(
    parts: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize, ParseError> {
    let tok = parts.next().ok_or_else(|| ParseError {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| ParseError {
        line,
        msg: format!("invalid {what} {tok:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn digon() -> Digraph {
        Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap()
    }

    fn transitive(n: usize) -> Digraph {
        let mut d = Digraph::new(n).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                d.add_arc(i, j).unwrap();
            }
        }
        d
    }

    #[test]
    fn parse_three_cycle() {
        let d = parse_edge_list("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(d, three_cycle());
    }

    #[test]
    fn parse_single_vertex() {
        let d = parse_edge_list("1 0").unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.arc_count(), 0);
    }

    #[test]
    fn parse_digon() {
        let d = parse_edge_list("2 2\n0 1\n1 0").unwrap();
        assert_eq!(d, digon());
        assert!(!d.is_digon_free());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(parse_edge_list("2 1\n0 0").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("2 1\n0 5").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("2 2\n0 1\n0 1").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("2 x\n0 1").unwrap_err().line, 1);
        assert!(parse_edge_list("2 2\n0 1").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn parse_skips_comments() {
        let d = parse_edge_list("# fixture\n3 3\n0 1\n# middle\n1 2\n2 0").unwrap();
        assert_eq!(d, three_cycle());
    }

    #[test]
    fn acyclicity_basics() {
        let c3 = three_cycle();
        assert!(!c3.is_acyclic(VertexSet::full(3)));
        assert!(c3.is_acyclic(VertexSet::from_mask(0b011)));
        assert!(!digon().is_acyclic(VertexSet::full(2)));
    }

    #[test]
    fn acyclic_table_three_cycle() {
        let table = three_cycle().acyclic_subset_table().unwrap();
        let bad: Vec<usize> = (0..8).filter(|&s| !table[s]).collect();
        assert_eq!(bad, vec![0b111]);
    }

    #[test]
    fn acyclic_table_transitive() {
        let table = transitive(4).acyclic_subset_table().unwrap();
        assert!(table.iter().all(|&b| b));
    }

    #[test]
    fn acyclic_table_digon_plus_isolated() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0)]).unwrap();
        let table = d.acyclic_subset_table().unwrap();
        for s in 0..8u64 {
            let has_digon = s & 0b011 == 0b011;
            assert_eq!(table[s as usize], !has_digon, "mask {s:b}");
        }
    }

    #[test]
    fn table_capacity_error() {
        let d = transitive(6);
        let err = d.acyclic_subset_table_with_limit(5).unwrap_err();
        assert_eq!(err.limit, 5);
    }

    #[test]
    fn scc_examples() {
        assert_eq!(
            three_cycle().strongly_connected_components(),
            vec![VertexSet::full(3)]
        );
        assert_eq!(transitive(3).strongly_connected_components().len(), 3);
    }

    #[test]
    fn scc_reverse_topological_order() {
        // 0 -> 1 -> {2,3 digon}; the digon is a sink component.
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 2)]).unwrap();
        let comps = d.strongly_connected_components();
        assert_eq!(comps.len(), 3);
        // Sink first: all arcs between components point to earlier entries.
        for (i, a) in comps.iter().enumerate() {
            for (j, b) in comps.iter().enumerate() {
                if i < j {
                    for u in a.iter() {
                        for v in b.iter() {
                            assert!(!d.has_arc(u, v), "arc from sink side {u}->{v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(digon().girth(), Some(2));
        let c5 = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), Some(5));
        assert_eq!(transitive(4).girth(), None);
    }

    #[test]
    fn induced_cycles_c5() {
        let c5 = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.induced_cycles(), vec![VertexSet::full(5)]);
    }

    #[test]
    fn induced_cycles_three_cycle() {
        assert_eq!(three_cycle().induced_cycles().len(), 1);
    }

    #[test]
    fn extension_matches_scan() {
        // Fixed mixed digraph with digons, triangles and longer cycles.
        let d = Digraph::from_arcs(
            6,
            &[
                (0, 1),
                (1, 0),
                (1, 2),
                (2, 3),
                (3, 1),
                (3, 4),
                (4, 5),
                (5, 3),
                (5, 0),
                (2, 5),
            ],
        )
        .unwrap();
        let scan = d.induced_cycles_by_scan(d.full_set());
        let ext = d.induced_cycles_by_extension(d.full_set());
        assert_eq!(scan, ext);
        assert!(!scan.is_empty());
    }

    #[test]
    fn degree_examples() {
        assert!(three_cycle().degree_sequence().iter().all(|t| *t
            == DegreeTriple {
                out_degree: 1,
                in_degree: 1,
                underlying: 2
            }));
        assert!(digon().degree_sequence().iter().all(|t| *t
            == DegreeTriple {
                out_degree: 1,
                in_degree: 1,
                underlying: 1
            }));
        assert_eq!(
            transitive(3).degrees(0),
            DegreeTriple {
                out_degree: 2,
                in_degree: 0,
                underlying: 2
            }
        );
    }

    #[test]
    fn dot_output() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert!(d.to_dot().contains("0 -> 1"));
        let single = Digraph::new(1).unwrap();
        let dot = single.to_dot();
        assert!(dot.contains("0;"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn edge_list_round_trip() {
        let d = three_cycle();
        assert_eq!(parse_edge_list(&d.to_edge_list()).unwrap(), d);
    }

    #[test]
    fn topological_order_sound() {
        let order = transitive(5).topological_order().unwrap();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        assert_eq!(three_cycle().topological_order(), None);
    }
}
