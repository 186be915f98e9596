//! Lower bounds on the digraph independence number alpha(D) (maximum
//! acyclic vertex set), the randomized extraction procedures behind them,
//! and an exact maximum-acyclic-set oracle.
//!
//! All degree-based bounds read d_i as the distinct-neighbor count
//! |N+(v) ∪ N-(v)|: with digons, out-degree plus in-degree would break the
//! probability identity Pr(A_i ∩ B_i) = 1/(1 + d_i) that the permutation
//! bound rests on.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;

use crate::digraph::{CapacityError, Digraph, VertexSet, DEFAULT_DP_LIMIT};

pub type BigRational = Ratio<BigInt>;

/// Which bound produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    CaroWeiDirected,
    CaroWeiUndirected,
    DegreeForm,
    Density,
    DigonFree,
    GirthCycle,
    TournamentTriangle,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::CaroWeiDirected => "caro_wei_directed",
            BoundKind::CaroWeiUndirected => "caro_wei_undirected",
            BoundKind::DegreeForm => "degree_form",
            BoundKind::Density => "density",
            BoundKind::DigonFree => "digon_free",
            BoundKind::GirthCycle => "girth_cycle",
            BoundKind::TournamentTriangle => "tournament_triangle",
        }
    }
}

/// One lower bound on alpha(D). `value` is absent (not zero) when the
/// bound's preconditions fail; `heuristic` marks regimes the formula is
/// evaluated in but not proved for (density bound with digons present).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub applicable: bool,
    pub value: Option<f64>,
    pub heuristic: bool,
}

impl BoundReport {
    fn inapplicable(kind: BoundKind) -> Self {
        BoundReport {
            kind,
            applicable: false,
            value: None,
            heuristic: false,
        }
    }

    fn value(kind: BoundKind, value: f64) -> Self {
        BoundReport {
            kind,
            applicable: true,
            value: Some(value),
            heuristic: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceError {
    NotTournament,
    NotAPermutation,
    InvalidProbability,
    ZeroSamples,
    Capacity(CapacityError),
}

impl fmt::Display for IndependenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndependenceError::NotTournament => write!(f, "input is not a tournament"),
            IndependenceError::NotAPermutation => write!(f, "ordering is not a permutation"),
            IndependenceError::InvalidProbability => write!(f, "probability must lie in [0, 1]"),
            IndependenceError::ZeroSamples => write!(f, "at least one sample is required"),
            IndependenceError::Capacity(e) => write!(f, "{e}"),
        }
    }
}

impl From<CapacityError> for IndependenceError {
    fn from(e: CapacityError) -> Self {
        IndependenceError::Capacity(e)
    }
}

/// alpha(D) >= sum_i 1/(1+d_i^+) + 1/(1+d_i^-) - 1/(1+d_i), the expected
/// size of the permutation-extracted acyclic set.
pub fn caro_wei_directed_bound(d: &Digraph) -> f64 {
    d.degree_sequence()
        .iter()
        .map(|t| {
            1.0 / (1.0 + t.out_degree as f64) + 1.0 / (1.0 + t.in_degree as f64)
                - 1.0 / (1.0 + t.underlying as f64)
        })
        .sum()
}

/// Same sum as exact rationals, for zero-tolerance soundness checks.
pub fn caro_wei_directed_bound_exact(d: &Digraph) -> BigRational {
    let mut acc = BigRational::zero();
    for t in d.degree_sequence() {
        acc += unit_fraction(t.out_degree) + unit_fraction(t.in_degree)
            - unit_fraction(t.underlying);
    }
    acc
}

fn unit_fraction(degree: usize) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(degree as u64 + 1))
}

/// The undirected Caro-Wei baseline sum_i 1/(1+d_i) over distinct-neighbor
/// degrees of the underlying graph.
pub fn caro_wei_undirected_bound(d: &Digraph) -> f64 {
    d.degree_sequence()
        .iter()
        .map(|t| 1.0 / (1.0 + t.underlying as f64))
        .sum()
}

/// alpha(D) >= sum_i (3 d_i + 2) / ((d_i + 1)(d_i + 2)) over underlying
/// degrees. The derivation needs d_i = d_i^+ + d_i^-, so the bound is only
/// proved for digon-free digraphs; it is still evaluated everywhere.
pub fn degree_form_bound(d: &Digraph) -> f64 {
    d.degree_sequence()
        .iter()
        .map(|t| {
            let deg = t.underlying as f64;
            (3.0 * deg + 2.0) / ((deg + 1.0) * (deg + 2.0))
        })
        .sum()
}

/// alpha(D) >= n / (2k/3 + 1) with k = m/n; applicable without isolated
/// vertices, and flagged heuristic when digons make sum d_i < 2m.
pub fn density_bound(d: &Digraph) -> BoundReport {
    if d.vertex_count() == 0 || d.has_isolated_vertex() {
        return BoundReport::inapplicable(BoundKind::Density);
    }
    let n = d.vertex_count() as f64;
    let k = d.arc_count() as f64 / n;
    let mut report = BoundReport::value(BoundKind::Density, n / (2.0 * k / 3.0 + 1.0));
    report.heuristic = !d.is_digon_free();
    report
}

/// alpha(D) >= n / (2 delta/3 + 1) with delta = max_v sqrt(d+(v) d-(v)),
/// for digon-free digraphs.
pub fn digon_free_bound(d: &Digraph) -> BoundReport {
    if d.vertex_count() == 0 || !d.is_digon_free() {
        return BoundReport::inapplicable(BoundKind::DigonFree);
    }
    let delta = d
        .degree_sequence()
        .iter()
        .map(|t| libm::sqrt((t.out_degree * t.in_degree) as f64))
        .fold(0.0f64, f64::max);
    let n = d.vertex_count() as f64;
    BoundReport::value(BoundKind::DigonFree, n / (2.0 * delta / 3.0 + 1.0))
}

/// alpha(D) >= ((g-1)/g) (n^g / (t g))^{1/(g-1)} with g the girth and t
/// the induced-cycle count; applicable when a cycle exists and t g >= n.
pub fn girth_cycle_bound(d: &Digraph) -> BoundReport {
    let g = match d.girth() {
        Some(g) => g,
        None => return BoundReport::inapplicable(BoundKind::GirthCycle),
    };
    let t = d.induced_cycles().len();
    let n = d.vertex_count();
    if t * g < n {
        return BoundReport::inapplicable(BoundKind::GirthCycle);
    }
    BoundReport::value(BoundKind::GirthCycle, girth_formula(n, g, t))
}

fn girth_formula(n: usize, g: usize, t: usize) -> f64 {
    // (g-1)/g * (n^g/(tg))^{1/(g-1)} written as n (g-1)/g * (n/(tg))^{1/(g-1)}
    // to keep the tight cases (base 1) exact in floating point.
    let base = n as f64 / (t * g) as f64;
    let p = libm::pow(base, 1.0 / (g as f64 - 1.0));
    (n * (g - 1)) as f64 * p / g as f64
}

/// Tournament specialization: alpha(T) >= (2/3) n sqrt(n/(3t)) with t the
/// directed-triangle count, applicable when 1 <= t and 3t >= n (so that
/// the deletion probability stays in [0, 1]).
pub fn tournament_triangle_bound(d: &Digraph) -> Result<BoundReport, IndependenceError> {
    if !d.is_tournament() {
        return Err(IndependenceError::NotTournament);
    }
    let t = count_triangles(d);
    let n = d.vertex_count();
    if t == 0 || 3 * t < n {
        return Ok(BoundReport::inapplicable(BoundKind::TournamentTriangle));
    }
    let value = 2.0 * n as f64 * libm::sqrt(n as f64 / (3 * t) as f64) / 3.0;
    Ok(BoundReport::value(BoundKind::TournamentTriangle, value))
}

/// Cyclic triples of a digraph (the induced directed triangles of a
/// tournament), by direct triple enumeration.
pub fn count_triangles(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = VertexSet::single(i).with(j).with(k);
                if !d.is_acyclic(s) && d.is_induced_cycle(s) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Every bound of this module evaluated on one digraph, in a fixed order.
pub fn all_bounds(d: &Digraph) -> Vec<BoundReport> {
    let mut out = vec![
        BoundReport::value(BoundKind::CaroWeiDirected, caro_wei_directed_bound(d)),
        BoundReport::value(BoundKind::CaroWeiUndirected, caro_wei_undirected_bound(d)),
        BoundReport::value(BoundKind::DegreeForm, degree_form_bound(d)),
        density_bound(d),
        digon_free_bound(d),
        girth_cycle_bound(d),
    ];
    out.push(match tournament_triangle_bound(d) {
        Ok(report) => report,
        Err(_) => BoundReport::inapplicable(BoundKind::TournamentTriangle),
    });
    out
}

/// The acyclic set S_sigma extracted from one vertex ordering: vertices
/// whose out-neighbors all come later, or whose in-neighbors all come
/// later. `perm[i]` is the vertex placed at position i.
pub fn permutation_acyclic_set(
    d: &Digraph,
    perm: &[usize],
) -> Result<VertexSet, IndependenceError> {
    let n = d.vertex_count();
    if perm.len() != n {
        return Err(IndependenceError::NotAPermutation);
    }
    let mut seen = VertexSet::EMPTY;
    for &v in perm {
        if v >= n || seen.contains(v) {
            return Err(IndependenceError::NotAPermutation);
        }
        seen = seen.with(v);
    }
    let mut before = 0u64;
    let mut s = VertexSet::EMPTY;
    for &v in perm {
        let out_ok = d.out_neighbors(v).mask() & before == 0;
        let in_ok = d.in_neighbors(v).mask() & before == 0;
        if out_ok || in_ok {
            s = s.with(v);
        }
        before |= 1 << v;
    }
    debug_assert!(d.is_acyclic(s), "permutation extraction yielded a cycle");
    Ok(s)
}

/// Largest S_sigma over `samples` uniformly random orderings.
pub fn best_of_permutations<R: Rng + ?Sized>(
    d: &Digraph,
    samples: u64,
    rng: &mut R,
) -> Result<VertexSet, IndependenceError> {
    if samples == 0 {
        return Err(IndependenceError::ZeroSamples);
    }
    let n = d.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = VertexSet::EMPTY;
    for _ in 0..samples {
        // Fisher-Yates
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let s = permutation_acyclic_set(d, &perm)?;
        if s.len() > best.len() {
            best = s;
        }
    }
    Ok(best)
}

/// Random-deletion extraction: keep each vertex with probability `p`, then
/// while the kept set has an induced cycle, delete the lowest-index vertex
/// of the lowest-mask induced cycle (a fixed tie-break for
/// reproducibility; the argument allows any choice).
pub fn random_deletion_acyclic_set<R: Rng + ?Sized>(
    d: &Digraph,
    p: f64,
    rng: &mut R,
) -> Result<VertexSet, IndependenceError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(IndependenceError::InvalidProbability);
    }
    let mut s = VertexSet::EMPTY;
    for v in 0..d.vertex_count() {
        if rng.gen_bool(p) {
            s = s.with(v);
        }
    }
    while let Some(cycle) = d.lowest_induced_cycle_within(s) {
        s = s.without(cycle.lowest().unwrap());
    }
    debug_assert!(d.is_acyclic(s));
    Ok(s)
}

/// A maximum-cardinality acyclic set (size alpha(D)): subset-table scan up
/// to the DP limit, branch and bound on cycle vertices above it.
pub fn exact_max_acyclic_set(d: &Digraph) -> Result<VertexSet, CapacityError> {
    let n = d.vertex_count();
    if n <= DEFAULT_DP_LIMIT {
        let table = d.acyclic_subset_table()?;
        let mut best = VertexSet::EMPTY;
        for s in 0..table.len() {
            if table[s] {
                let set = VertexSet::from_mask(s as u64);
                if set.len() > best.len() {
                    best = set;
                }
            }
        }
        Ok(best)
    } else {
        let mut best = VertexSet::EMPTY;
        branch_max_acyclic(d, d.full_set(), &mut best);
        Ok(best)
    }
}

fn branch_max_acyclic(d: &Digraph, s: VertexSet, best: &mut VertexSet) {
    if s.len() <= best.len() {
        return;
    }
    match find_cycle_within(d, s) {
        None => *best = s,
        Some(cycle) => {
            for v in cycle.iter() {
                branch_max_acyclic(d, s.without(v), best);
            }
        }
    }
}

/// Some directed cycle inside `s` (not necessarily induced), found by
/// peeling sources and walking predecessors in the leftover core.
fn find_cycle_within(d: &Digraph, s: VertexSet) -> Option<VertexSet> {
    let mut core = s.mask();
    loop {
        let mut removed = false;
        let mut rest = core;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if d.in_neighbors(v).mask() & core == 0 {
                core &= !(1u64 << v);
                removed = true;
            }
        }
        if !removed {
            break;
        }
        if core == 0 {
            return None;
        }
    }
    if core == 0 {
        return None;
    }
    // Every vertex in the core has an in-neighbor in the core; walking
    // predecessors must revisit a vertex, closing a cycle.
    let start = core.trailing_zeros() as usize;
    let mut trail: Vec<usize> = vec![start];
    let mut seen = VertexSet::single(start);
    loop {
        let cur = *trail.last().unwrap();
        let pred = (d.in_neighbors(cur).mask() & core).trailing_zeros() as usize;
        if seen.contains(pred) {
            let pos = trail.iter().position(|&v| v == pred).unwrap();
            return Some(trail[pos..].iter().copied().collect());
        }
        trail.push(pred);
        seen = seen.with(pred);
    }
}

/// alpha(D) itself.
pub fn independence_number(d: &Digraph) -> Result<usize, CapacityError> {
    Ok(exact_max_acyclic_set(d)?.len())
}

/// Exact-rational soundness of the directed Caro-Wei bound over all 1024
/// labeled tournaments of order 5 plus `samples` seeded random digraphs of
/// order <= 9, compared against the exact oracle with zero tolerance.
pub fn verify_caro_wei<R: Rng + ?Sized>(
    samples: u64,
    rng: &mut R,
) -> Result<crate::SuiteReport, CapacityError> {
    use alloc::format;
    use crate::families::TournamentCode;

    let mut report = crate::SuiteReport::new("caro-wei");
    for bits in 0u64..1 << 10 {
        let t = TournamentCode { n: 5, bits }.decode();
        report.cases += 1;
        let alpha = independence_number(&t)?;
        let bound = caro_wei_directed_bound_exact(&t);
        if bound > BigRational::from(BigInt::from(alpha)) {
            report
                .violations
                .push(format!("tournament bits={bits}: {bound} > alpha={alpha}"));
        }
    }
    for _ in 0..samples {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.9);
        let d = crate::families::random_digraph(n, p, rng).expect("order within limits");
        report.cases += 1;
        let alpha = independence_number(&d)?;
        let bound = caro_wei_directed_bound_exact(&d);
        if bound > BigRational::from(BigInt::from(alpha)) {
            report
                .violations
                .push(format!("digraph {d:?}: {bound} > alpha={alpha}"));
        }
    }
    Ok(report)
}
