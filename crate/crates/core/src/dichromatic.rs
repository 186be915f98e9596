//! Exact dichromatic polynomials P(D;x) (the number of proper k-colorings
//! as a polynomial in k), constrained same/different-color counts, closed
//! forms for the tournaments S_n and D_n, coefficient interpretation, and
//! exhaustive extremality verification over small strongly connected
//! tournaments. All arithmetic in this module is exact.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::coloring::{is_proper_coloring, ColoringAssignment};
use crate::digraph::{CapacityError, Digraph, VertexSet};
use crate::families::{d_tournament, enumerate_tournaments, find_isomorphism, FamilyError};
use crate::poly::{binomial, Polynomial};
use crate::SuiteReport;

/// Cap for the block-partition subset DP (work roughly 3^n).
pub const DICHROMATIC_DP_LIMIT: usize = 14;

/// Caps for the brute-force coloring counter.
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 8;
pub const BRUTE_FORCE_COLOR_LIMIT: u64 = 6;

/// a_j = number of partitions of the vertex set into exactly j nonempty
/// acyclic blocks; P(D;k) = sum_j a_j * k(k-1)...(k-j+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCounts {
    pub counts: Vec<u128>,
}

impl BlockCounts {
    /// Expands sum_j a_j x^(falling j) into coefficients.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (j, &a) in self.counts.iter().enumerate() {
            if a != 0 {
                acc = acc.add(&Polynomial::falling_factorial(j).scale(&BigInt::from(a)));
            }
        }
        acc
    }
}

/// Subset DP over the block containing the lowest vertex of each state.
/// `same_pair` restricts every block to contain both or neither of the two
/// given vertices, which counts the colorings where they share a color.
fn block_counts_inner(
    d: &Digraph,
    same_pair: Option<(usize, usize)>,
) -> Result<BlockCounts, CapacityError> {
    let n = d.vertex_count();
    if n > DICHROMATIC_DP_LIMIT {
        return Err(CapacityError {
            what: "dichromatic block-partition DP",
            limit: DICHROMATIC_DP_LIMIT,
            requested: n,
        });
    }
    let acyclic = d.acyclic_subset_table_with_limit(DICHROMATIC_DP_LIMIT)?;
    let pair_mask = same_pair.map(|(u, v)| 1u64 << u | 1u64 << v);
    let mut table: Vec<Vec<u128>> = vec![Vec::new(); 1 << n];
    table[0] = vec![1];
    for s in 1u64..1 << n {
        let v = 1u64 << s.trailing_zeros();
        let rest = s & !v;
        let mut counts = vec![0u128; (s.count_ones() + 1) as usize];
        let mut sub = rest;
        loop {
            let block = sub | v;
            let valid_pair = match pair_mask {
                Some(pm) => {
                    let hit = block & pm;
                    hit == 0 || hit == pm
                }
                None => true,
            };
            if valid_pair && acyclic[block as usize] {
                let prev = &table[(s & !block) as usize];
                for (j, &c) in prev.iter().enumerate() {
                    counts[j + 1] += c;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[s as usize] = counts;
    }
    Ok(BlockCounts {
        counts: core::mem::take(&mut table[(1u64 << n) as usize - 1]),
    })
}

/// Partition counts into exactly j acyclic blocks, j = 0..n.
pub fn block_counts(d: &Digraph) -> Result<BlockCounts, CapacityError> {
    block_counts_inner(d, None)
}

/// The dichromatic polynomial P(D;x), exact coefficients ascending.
pub fn dichromatic_polynomial(d: &Digraph) -> Result<Polynomial, CapacityError> {
    Ok(block_counts(d)?.to_polynomial())
}

/// Counts the proper k-colorings by direct enumeration with acyclicity
/// pruning (a prefix of a proper coloring keeps every class acyclic).
pub fn count_colorings_bruteforce(d: &Digraph, k: u64) -> Result<u64, CapacityError> {
    let n = d.vertex_count();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(CapacityError {
            what: "brute-force coloring count (vertices)",
            limit: BRUTE_FORCE_VERTEX_LIMIT,
            requested: n,
        });
    }
    if k > BRUTE_FORCE_COLOR_LIMIT {
        return Err(CapacityError {
            what: "brute-force coloring count (colors)",
            limit: BRUTE_FORCE_COLOR_LIMIT as usize,
            requested: k as usize,
        });
    }
    fn count(d: &Digraph, k: usize, v: usize, classes: &mut [VertexSet]) -> u64 {
        if v == d.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            let grown = classes[c].with(v);
            if d.is_acyclic(grown) {
                classes[c] = grown;
                total += count(d, k, v + 1, classes);
                classes[c] = grown.without(v);
            }
        }
        total
    }
    let mut classes = vec![VertexSet::EMPTY; k as usize];
    Ok(count(d, k as usize, 0, &mut classes))
}

/// (same, diff): proper k-colorings in which u, v receive equal colors and
/// different colors respectively; same + diff = P(D;k).
pub fn constrained_counts(
    d: &Digraph,
    u: usize,
    v: usize,
    k: u64,
) -> Result<(BigInt, BigInt), CapacityError> {
    assert!(u != v, "constrained counts need two distinct vertices");
    let total = dichromatic_polynomial(d)?.eval_u64(k);
    let same = block_counts_inner(d, Some((u, v)))?
        .to_polynomial()
        .eval_u64(k);
    let diff = &total - &same;
    Ok((same, diff))
}

/// P(S_n;x) = sum_{i=1..n} C(i, n-i) x (x-1)^{i-1}, cross-checked against
/// the recurrence f_n = (x-1)(f_{n-1} + f_{n-2}).
pub fn sn_closed_form(n: usize) -> Polynomial {
    assert!(n >= 1, "S_n needs n >= 1");
    let mut acc = Polynomial::zero();
    let mut power = Polynomial::constant(1); // (x-1)^{i-1}
    for i in 1..=n {
        let c = binomial(i, n - i);
        if c != BigInt::from(0) {
            acc = acc.add(&Polynomial::x().mul(&power).scale(&c));
        }
        power = power.mul(&Polynomial::x_plus(-1));
    }
    debug_assert_eq!(acc, sn_recurrence(n));
    acc
}

/// The recurrence route to P(S_n;x): f_1 = x, f_2 = x^2,
/// f_n = (x-1)(f_{n-1} + f_{n-2}).
pub fn sn_recurrence(n: usize) -> Polynomial {
    assert!(n >= 1, "S_n needs n >= 1");
    let mut prev = Polynomial::x(); // f_1
    if n == 1 {
        return prev;
    }
    let mut cur = Polynomial::x().mul(&Polynomial::x()); // f_2
    for _ in 3..=n {
        let next = Polynomial::x_plus(-1).mul(&cur.add(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// P(D_n;x) = x(x-1)^{n-2} + x^{n-1}(x-1), defined for n >= 3.
pub fn dn_closed_form(n: usize) -> Result<Polynomial, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall { min: 3, got: n });
    }
    let first = Polynomial::x().mul(&Polynomial::x_plus(-1).pow(n - 2));
    let second = Polynomial::x().pow(n - 1).mul(&Polynomial::x_plus(-1));
    Ok(first.add(&second))
}

/// Counts directed cycles of length exactly `len` (as cyclic sequences),
/// by DFS over paths rooted at each cycle's minimum vertex.
pub fn count_cycles_of_length(d: &Digraph, len: usize) -> u64 {
    if len < 2 {
        return 0;
    }
    fn extend(
        d: &Digraph,
        root: usize,
        cur: usize,
        remaining: usize,
        visited: VertexSet,
    ) -> u64 {
        if remaining == 0 {
            return u64::from(d.has_arc(cur, root));
        }
        let mut total = 0;
        for w in d.out_neighbors(cur).iter() {
            if w > root && !visited.contains(w) {
                total += extend(d, root, w, remaining - 1, visited.with(w));
            }
        }
        total
    }
    let mut total = 0;
    for root in 0..d.vertex_count() {
        total += extend(d, root, root, len - 1, VertexSet::single(root));
    }
    total
}

/// Coefficient interpretation for a digraph with girth g: the coefficients
/// of x^{n-1}..x^{n-g+2} vanish and the coefficient of x^{n-g+1} equals
/// minus the number of length-g cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub n: usize,
    pub girth: usize,
    /// Coefficients of x^{n-1} down to x^{n-g+2} (expected all zero).
    pub high_coefficients: Vec<BigInt>,
    /// Coefficient of x^{n-g+1}.
    pub girth_coefficient: BigInt,
    /// Independent count of directed cycles of length exactly g.
    pub girth_cycle_count: u64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientError {
    Acyclic,
    Capacity(CapacityError),
}

impl From<CapacityError> for CoefficientError {
    fn from(e: CapacityError) -> Self {
        CoefficientError::Capacity(e)
    }
}

pub fn coefficient_report(d: &Digraph) -> Result<CoefficientReport, CoefficientError> {
    let girth = d.girth().ok_or(CoefficientError::Acyclic)?;
    let n = d.vertex_count();
    let poly = dichromatic_polynomial(d)?;
    let high_coefficients: Vec<BigInt> = ((n - girth + 2)..n).rev().map(|i| poly.coeff(i)).collect();
    let girth_coefficient = poly.coeff(n - girth + 1);
    let girth_cycle_count = count_cycles_of_length(d, girth);
    let zero = BigInt::from(0);
    let passed = high_coefficients.iter().all(|c| *c == zero)
        && girth_coefficient == -BigInt::from(girth_cycle_count);
    Ok(CoefficientReport {
        n,
        girth,
        high_coefficients,
        girth_coefficient,
        girth_cycle_count,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    Family(FamilyError),
    Capacity(CapacityError),
}

impl From<FamilyError> for VerifyError {
    fn from(e: FamilyError) -> Self {
        VerifyError::Family(e)
    }
}

impl From<CapacityError> for VerifyError {
    fn from(e: CapacityError) -> Self {
        VerifyError::Capacity(e)
    }
}

/// Whether T and D_n are isomorphic as tournaments (unlabeled equality).
fn is_dn_isomorph(t: &Digraph, dn: &Digraph) -> bool {
    let mut st: Vec<usize> = (0..t.vertex_count())
        .map(|v| t.degrees(v).out_degree)
        .collect();
    let mut sd: Vec<usize> = (0..dn.vertex_count())
        .map(|v| dn.degrees(v).out_degree)
        .collect();
    st.sort_unstable();
    sd.sort_unstable();
    st == sd && find_isomorphism(t, dn, &[]).is_some()
}

/// P(T;k) < P(D_n;k) for every strongly connected tournament T not
/// isomorphic to D_n, with equality exactly on the D_n relabelings.
pub fn verify_dn_maximality(n: usize, ks: &[u64]) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport::new("dn-max");
    let dn = d_tournament(n)?;
    let dn_poly = dichromatic_polynomial(&dn)?;
    for t in enumerate_tournaments(n)? {
        if !t.is_strongly_connected() {
            continue;
        }
        let poly = dichromatic_polynomial(&t)?;
        let iso = is_dn_isomorph(&t, &dn);
        for &k in ks {
            report.cases += 1;
            let pt = poly.eval_u64(k);
            let pd = dn_poly.eval_u64(k);
            let ok = if iso { pt == pd } else { pt < pd };
            if !ok {
                report.violations.push(format!(
                    "n={n} k={k} tournament {t:?} (iso to D_n: {iso}): P(T)={pt}, P(D_n)={pd}"
                ));
            }
        }
    }
    Ok(report)
}

/// A strongly connected tournament has an arc lying on every directed
/// cycle iff it is a relabeling of D_n; the arc's removal then leaves an
/// acyclic tournament whose topological order exhibits T as D_n with the
/// arc mapped to v_n -> v_1.
pub fn verify_allcycle_lemma(n: usize) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport::new("allcycle");
    let dn = d_tournament(n)?;
    for t in enumerate_tournaments(n)? {
        if !t.is_strongly_connected() {
            continue;
        }
        report.cases += 1;
        let iso = is_dn_isomorph(&t, &dn);
        let mut special_arcs = Vec::new();
        for (u, v) in t.arcs() {
            let reduced = t.without_arc(u, v);
            if reduced.is_acyclic(t.full_set()) {
                special_arcs.push((u, v));
                // Relabeling by topological position must exhibit D_n with
                // the removed arc as v_n -> v_1.
                let order = reduced.topological_order().unwrap();
                let mut position = vec![0usize; n];
                for (pos, &vert) in order.iter().enumerate() {
                    position[vert] = pos;
                }
                if t.relabel(&position) != dn || position[u] != n - 1 || position[v] != 0 {
                    report.violations.push(format!(
                        "n={n} arc ({u},{v}) of {t:?}: removal acyclic but relabeling is not D_n"
                    ));
                }
            }
        }
        let expected = if !iso {
            0
        } else if n == 3 {
            3 // D_3 is the directed triangle; every arc lies on its one cycle.
        } else {
            1
        };
        if special_arcs.len() != expected {
            report.violations.push(format!(
                "n={n} tournament {t:?} (iso to D_n: {iso}): {} all-cycle arcs, expected {expected}",
                special_arcs.len()
            ));
        }
    }
    Ok(report)
}

/// P_{u != v}(T;k) <= k^{n-1}(k-1) over strongly connected tournaments,
/// with equality for k > 1 iff T maps isomorphically to D_n sending the
/// unordered pair {u, v} to {v_n, v_1}. (The count is symmetric in u and
/// v, so the extremality condition cannot distinguish the orientation;
/// at k = 1 both sides vanish for every pair.)
pub fn verify_puv_bound(n: usize, ks: &[u64]) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport::new("puv");
    let dn = d_tournament(n)?;
    for t in enumerate_tournaments(n)? {
        if !t.is_strongly_connected() {
            continue;
        }
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let extremal = find_isomorphism(&t, &dn, &[(u, n - 1), (v, 0)]).is_some()
                    || find_isomorphism(&t, &dn, &[(v, n - 1), (u, 0)]).is_some();
                for &k in ks {
                    report.cases += 1;
                    let (_, diff) = constrained_counts(&t, u, v, k)?;
                    let bound = BigInt::from(k).pow((n - 1) as u32) * BigInt::from(k - 1);
                    let ok = if k == 1 {
                        diff <= bound
                    } else if extremal {
                        diff == bound
                    } else {
                        diff < bound
                    };
                    if !ok {
                        report.violations.push(format!(
                            "n={n} k={k} ({u},{v}) of {t:?}: diff={diff}, bound={bound}, extremal={extremal}"
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Closed forms of S_n (both routes) and D_n against the subset DP.
pub fn verify_closed_forms(max_n: usize) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport::new("sn");
    for n in 1..=max_n {
        report.cases += 1;
        let closed = sn_closed_form(n);
        let recurrence = sn_recurrence(n);
        if closed != recurrence {
            report
                .violations
                .push(format!("S_{n}: binomial sum and recurrence disagree"));
        }
        let dp = dichromatic_polynomial(&crate::families::s_tournament(n)?)?;
        if closed != dp {
            report
                .violations
                .push(format!("S_{n}: closed form {closed:?} != DP {dp:?}"));
        }
        if n >= 3 {
            let dn = dn_closed_form(n)?;
            let dp = dichromatic_polynomial(&d_tournament(n)?)?;
            if dn != dp {
                report
                    .violations
                    .push(format!("D_{n}: closed form {dn:?} != DP {dp:?}"));
            }
        }
    }
    Ok(report)
}

/// Coefficient interpretation over every tournament of order up to
/// `max_tournament_n` plus `samples` seeded random digraphs of order <= 9;
/// acyclic digraphs are skipped (no girth, nothing to check).
pub fn verify_coefficients<R: rand::Rng + ?Sized>(
    max_tournament_n: usize,
    samples: u64,
    rng: &mut R,
) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport::new("coeff");
    for n in 3..=max_tournament_n {
        for t in enumerate_tournaments(n)? {
            match coefficient_report(&t) {
                Ok(r) => {
                    report.cases += 1;
                    if !r.passed {
                        report.violations.push(format!(
                            "tournament {t:?}: girth coeff {} vs {} cycles",
                            r.girth_coefficient, r.girth_cycle_count
                        ));
                    }
                }
                Err(CoefficientError::Acyclic) => {}
                Err(CoefficientError::Capacity(e)) => return Err(e.into()),
            }
        }
    }
    let mut sampled = 0;
    while sampled < samples {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.1..0.9);
        let d = crate::families::random_digraph(n, p, rng)?;
        match coefficient_report(&d) {
            Ok(r) => {
                sampled += 1;
                report.cases += 1;
                if !r.passed {
                    report.violations.push(format!(
                        "digraph {d:?}: girth coeff {} vs {} cycles",
                        r.girth_coefficient, r.girth_cycle_count
                    ));
                }
            }
            Err(CoefficientError::Acyclic) => {}
            Err(CoefficientError::Capacity(e)) => return Err(e.into()),
        }
    }
    Ok(report)
}

/// Brute-force constrained counts, enumeration oracle for the DP variant.
pub fn constrained_counts_bruteforce(
    d: &Digraph,
    u: usize,
    v: usize,
    k: u64,
) -> Result<(u64, u64), CapacityError> {
    let n = d.vertex_count();
    if n > BRUTE_FORCE_VERTEX_LIMIT || k > BRUTE_FORCE_COLOR_LIMIT {
        return Err(CapacityError {
            what: "brute-force constrained count",
            limit: BRUTE_FORCE_VERTEX_LIMIT,
            requested: n,
        });
    }
    let mut same = 0;
    let mut diff = 0;
    let mut assignment = vec![0u64; n];
    if n == 0 || k == 0 {
        return Ok((0, 0));
    }
    loop {
        let coloring =
            ColoringAssignment::from_colors(assignment.iter().map(|&c| c as usize).collect());
        if is_proper_coloring(d, &coloring) {
            if assignment[u] == assignment[v] {
                same += 1;
            } else {
                diff += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok((same, diff));
            }
            assignment[i] += 1;
            if assignment[i] < k {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}
