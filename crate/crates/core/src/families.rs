//! Constructors for named digraph families, seeded random generators,
//! the randomized K_{n,n} orientation search, and exhaustive tournament
//! enumeration with brute-force isomorphism testing.
//!
//! The conventional 1-based labels v_1..v_n map to 0-based indices by
//! v_i -> i - 1 everywhere in this module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::digraph::{CapacityError, Digraph, VertexSet, MAX_VERTICES};

/// Largest order accepted by `enumerate_tournaments` (2^15 codes at n = 6).
pub const ENUMERATION_LIMIT: usize = 6;

/// Largest order accepted by the brute-force isomorphism test.
pub const ISOMORPHISM_LIMIT: usize = 8;

/// Cap on C(n,t)^2 subset pairs verified per K_{n,n} orientation sample.
pub const KNN_VERIFICATION_BUDGET: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyError {
    ZeroOrder,
    OrderTooSmall { min: usize, got: usize },
    OrderTooLarge { limit: usize, got: usize },
    NotTournament,
    InvalidProbability,
    InvalidParameter(&'static str),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyError::ZeroOrder => write!(f, "order must be at least 1"),
            FamilyError::OrderTooSmall { min, got } => {
                write!(f, "order {got} below minimum {min}")
            }
            FamilyError::OrderTooLarge { limit, got } => {
                write!(f, "order {got} above limit {limit}")
            }
            FamilyError::NotTournament => write!(f, "input is not a tournament"),
            FamilyError::InvalidProbability => write!(f, "probability must lie in [0, 1]"),
            FamilyError::InvalidParameter(msg) => write!(f, "{msg}"),
        }
    }
}

/// Acyclic tournament: vertex i beats every j > i.
pub fn transitive_tournament(n: usize) -> Result<Digraph, FamilyError> {
    check_order(n, 1)?;
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        for j in i + 1..n {
            d.add_arc(i, j).unwrap();
        }
    }
    Ok(d)
}

/// The tournament S_n: the acyclic tournament whose out-neighbors of v_i
/// are v_1..v_{i-1}, with the Hamiltonian path v_n, v_{n-1}, ..., v_1
/// reversed. Its remaining arcs are i -> j for i > j + 1 plus the
/// reversed path arcs i -> i + 1.
pub fn s_tournament(n: usize) -> Result<Digraph, FamilyError> {
    check_order(n, 1)?;
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        for j in 0..i.saturating_sub(1) {
            d.add_arc(i, j).unwrap();
        }
    }
    for i in 0..n.saturating_sub(1) {
        d.add_arc(i, i + 1).unwrap();
    }
    Ok(d)
}

/// The tournament D_n: transitive with the single pair (v_1, v_n)
/// reoriented as v_n -> v_1. Strongly connected for n >= 3; for n <= 2 the
/// reversal arc does not exist and the result degenerates to the
/// transitive tournament.
pub fn d_tournament(n: usize) -> Result<Digraph, FamilyError> {
    check_order(n, 1)?;
    if n < 3 {
        return transitive_tournament(n);
    }
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        for j in i + 1..n {
            if i == 0 && j == n - 1 {
                d.add_arc(n - 1, 0).unwrap();
            } else {
                d.add_arc(i, j).unwrap();
            }
        }
    }
    Ok(d)
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; n = 2 is the digon.
pub fn directed_cycle(n: usize) -> Result<Digraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::OrderTooSmall { min: 2, got: n });
    }
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        d.add_arc(i, (i + 1) % n).unwrap();
    }
    Ok(d)
}

/// Uniform random tournament: every unordered pair oriented by a fair coin.
pub fn random_tournament<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Digraph, FamilyError> {
    check_order(n, 1)?;
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<bool>() {
                d.add_arc(i, j).unwrap();
            } else {
                d.add_arc(j, i).unwrap();
            }
        }
    }
    Ok(d)
}

/// Each ordered pair (u, v), u != v, carries the arc u -> v independently
/// with probability `p`; digons arise whenever both directions land.
pub fn random_digraph<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
) -> Result<Digraph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::InvalidProbability);
    }
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    Ok(d)
}

/// Digon-free random digraph: each unordered pair carries an edge with
/// probability `p`, oriented by a fair coin.
pub fn random_oriented_graph<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
) -> Result<Digraph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::InvalidProbability);
    }
    let mut d = Digraph::new(n).map_err(|_| FamilyError::OrderTooLarge {
        limit: MAX_VERTICES,
        got: n,
    })?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                if rng.gen::<bool>() {
                    d.add_arc(i, j).unwrap();
                } else {
                    d.add_arc(j, i).unwrap();
                }
            }
        }
    }
    Ok(d)
}

/// Orientation bits of the pairs (i, j), i < j, in lexicographic order;
/// bit 1 means the arc i -> j. Codes enumerate all labeled tournaments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TournamentCode {
    pub n: usize,
    pub bits: u64,
}

impl TournamentCode {
    pub fn decode(self) -> Digraph {
        let mut d = Digraph::new(self.n).unwrap();
        let mut idx = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits >> idx & 1 == 1 {
                    d.add_arc(i, j).unwrap();
                } else {
                    d.add_arc(j, i).unwrap();
                }
                idx += 1;
            }
        }
        d
    }

    pub fn encode(d: &Digraph) -> Result<Self, FamilyError> {
        if !d.is_tournament() {
            return Err(FamilyError::NotTournament);
        }
        let n = d.vertex_count();
        let mut bits = 0u64;
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if d.has_arc(i, j) {
                    bits |= 1 << idx;
                }
                idx += 1;
            }
        }
        Ok(TournamentCode { n, bits })
    }
}

/// All 2^{n(n-1)/2} labeled tournaments on n vertices, in code order.
pub fn enumerate_tournaments(
    n: usize,
) -> Result<impl Iterator<Item = Digraph>, FamilyError> {
    check_order(n, 1)?;
    if n > ENUMERATION_LIMIT {
        return Err(FamilyError::OrderTooLarge {
            limit: ENUMERATION_LIMIT,
            got: n,
        });
    }
    let count = 1u64 << (n * (n - 1) / 2);
    Ok((0..count).map(move |bits| TournamentCode { n, bits }.decode()))
}

/// Whether some vertex relabeling maps the arcs of `a` onto the arcs of
/// `b`. Brute-force backtracking with out-degree pruning; tournaments only.
pub fn tournaments_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool, FamilyError> {
    if !a.is_tournament() || !b.is_tournament() {
        return Err(FamilyError::NotTournament);
    }
    if a.vertex_count() != b.vertex_count() {
        return Ok(false);
    }
    if a.vertex_count() > ISOMORPHISM_LIMIT {
        return Err(FamilyError::OrderTooLarge {
            limit: ISOMORPHISM_LIMIT,
            got: a.vertex_count(),
        });
    }
    let mut sa: Vec<usize> = (0..a.vertex_count()).map(|v| a.degrees(v).out_degree).collect();
    let mut sb: Vec<usize> = (0..b.vertex_count()).map(|v| b.degrees(v).out_degree).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    Ok(find_isomorphism(a, b, &[]).is_some())
}

/// Searches for a permutation `p` with arc (u, v) in `a` iff arc
/// (p[u], p[v]) in `b`, honoring the `fixed` pre-assignments (u -> image).
/// Returns the full mapping when one exists.
pub fn find_isomorphism(
    a: &Digraph,
    b: &Digraph,
    fixed: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return None;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(u, img) in fixed {
        if image[u] != usize::MAX || used[img] {
            return None;
        }
        image[u] = img;
        used[img] = true;
    }
    fn extend(
        a: &Digraph,
        b: &Digraph,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = a.vertex_count();
        if v == n {
            return true;
        }
        if image[v] != usize::MAX {
            return consistent(a, b, image, v) && extend(a, b, image, used, v + 1);
        }
        for img in 0..n {
            if used[img] || a.degrees(v).out_degree != b.degrees(img).out_degree {
                continue;
            }
            image[v] = img;
            used[img] = true;
            if consistent(a, b, image, v) && extend(a, b, image, used, v + 1) {
                return true;
            }
            image[v] = usize::MAX;
            used[img] = false;
        }
        false
    }
    fn consistent(a: &Digraph, b: &Digraph, image: &[usize], v: usize) -> bool {
        for u in 0..a.vertex_count() {
            if u == v || image[u] == usize::MAX {
                continue;
            }
            if a.has_arc(u, v) != b.has_arc(image[u], image[v])
                || a.has_arc(v, u) != b.has_arc(image[v], image[u])
            {
                return false;
            }
        }
        true
    }
    if extend(a, b, &mut image, &mut used, 0) {
        Some(image)
    } else {
        None
    }
}

/// Bipartite orientation layout: left vertices 0..n, right vertices n..2n.
fn knn_budget(n: usize, t: usize) -> u64 {
    let c = binom_u64(n, t);
    c.saturating_mul(c)
}

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}

/// Exhaustively checks that every pair of t-subsets (I from the left side,
/// J from the right side) spans a directed cycle in `d`. The layout must be
/// the one produced by `search_knn_orientation`.
pub fn knn_orientation_satisfies(d: &Digraph, n: usize, t: usize) -> bool {
    let left_subsets = t_subsets(n, t);
    for &li in &left_subsets {
        for &rj in &left_subsets {
            let s = VertexSet::from_mask(li | rj << n);
            if d.is_acyclic(s) {
                return false;
            }
        }
    }
    true
}

fn t_subsets(n: usize, t: usize) -> Vec<u64> {
    // Gosper's hack over n-bit words.
    let mut out = Vec::new();
    if t == 0 || t > n {
        return out;
    }
    let mut mask = (1u64 << t) - 1;
    let top = 1u64 << n;
    while mask < top {
        out.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Samples uniform orientations of K_{n,n} (left 0..n, right n..2n) and
/// returns the first one in which every (I, J) pair of t-subsets spans a
/// directed cycle, or `None` after `attempts` samples.
pub fn search_knn_orientation<R: Rng + ?Sized>(
    n: usize,
    t: usize,
    attempts: u64,
    rng: &mut R,
) -> Result<Option<Digraph>, CapacityError> {
    if t == 0 || t > n {
        return Err(CapacityError {
            what: "K_{n,n} orientation search requires 1 <= t <= n",
            limit: n,
            requested: t,
        });
    }
    if 2 * n > MAX_VERTICES {
        return Err(CapacityError {
            what: "K_{n,n} orientation (2n vertices)",
            limit: MAX_VERTICES,
            requested: 2 * n,
        });
    }
    let budget = knn_budget(n, t);
    if budget > KNN_VERIFICATION_BUDGET {
        return Err(CapacityError {
            what: "K_{n,n} subset-pair verification budget",
            limit: KNN_VERIFICATION_BUDGET as usize,
            requested: budget as usize,
        });
    }
    for _ in 0..attempts {
        let mut d = Digraph::new(2 * n).unwrap();
        for i in 0..n {
            for j in 0..n {
                if rng.gen::<bool>() {
                    d.add_arc(i, n + j).unwrap();
                } else {
                    d.add_arc(n + j, i).unwrap();
                }
            }
        }
        if knn_orientation_satisfies(&d, n, t) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Orients the complete k-partite graph with equal parts so that every
/// cross-part block certifies the K_{t,t}-cycle property, by running the
/// bipartite search per block and gluing the witnesses. `None` if any
/// block search exhausts its attempts.
pub fn oriented_multipartite<R: Rng + ?Sized>(
    k: usize,
    part_size: usize,
    t: usize,
    attempts: u64,
    rng: &mut R,
) -> Result<Option<Digraph>, CapacityError> {
    let total = k * part_size;
    if total > MAX_VERTICES {
        return Err(CapacityError {
            what: "multipartite orientation (k * part_size vertices)",
            limit: MAX_VERTICES,
            requested: total,
        });
    }
    let mut d = Digraph::new(total).unwrap();
    for a in 0..k {
        for b in a + 1..k {
            let block = match search_knn_orientation(part_size, t, attempts, rng)? {
                Some(block) => block,
                None => return Ok(None),
            };
            for (u, v) in block.arcs() {
                let mu = if u < part_size {
                    a * part_size + u
                } else {
                    b * part_size + (u - part_size)
                };
                let mv = if v < part_size {
                    a * part_size + v
                } else {
                    b * part_size + (v - part_size)
                };
                d.add_arc(mu, mv).unwrap();
            }
        }
    }
    Ok(Some(d))
}

fn check_order(n: usize, min: usize) -> Result<(), FamilyError> {
    if n == 0 {
        Err(FamilyError::ZeroOrder)
    } else if n < min {
        Err(FamilyError::OrderTooSmall { min, got: n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn rng(seed: u64) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(seed)
    }

    #[test]
    fn transitive_basics() {
        assert_eq!(transitive_tournament(2).unwrap().arc_count(), 1);
        let t4 = transitive_tournament(4).unwrap();
        assert_eq!(t4.arc_count(), 6);
        assert_eq!(t4.girth(), None);
        assert_eq!(transitive_tournament(0).unwrap_err(), FamilyError::ZeroOrder);
    }

    #[test]
    fn s3_is_three_cycle() {
        let s3 = s_tournament(3).unwrap();
        let c3 = directed_cycle(3).unwrap();
        assert_eq!(s3, c3);
        assert_eq!(s_tournament(1).unwrap().vertex_count(), 1);
        assert!(s_tournament(2).unwrap().has_arc(0, 1));
    }

    #[test]
    fn sn_is_tournament() {
        for n in 1..=9 {
            assert!(s_tournament(n).unwrap().is_tournament(), "S_{n}");
        }
    }

    #[test]
    fn d3_is_three_cycle() {
        assert_eq!(d_tournament(3).unwrap(), directed_cycle(3).unwrap());
    }

    #[test]
    fn d4_triangles() {
        let d4 = d_tournament(4).unwrap();
        assert!(d4.is_strongly_connected());
        let mut triangles = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    let s = VertexSet::single(i).with(j).with(k);
                    if !d4.is_acyclic(s) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 2);
    }

    #[test]
    fn dn_strongly_connected() {
        for n in 3..=12 {
            assert!(d_tournament(n).unwrap().is_strongly_connected(), "D_{n}");
        }
    }

    #[test]
    fn dn_minus_special_arc_acyclic() {
        for n in 3..=10 {
            let d = d_tournament(n).unwrap();
            assert!(d.without_arc(n - 1, 0).is_acyclic(d.full_set()));
        }
    }

    #[test]
    fn cycle_basics() {
        assert_eq!(directed_cycle(2).unwrap().girth(), Some(2));
        assert_eq!(directed_cycle(5).unwrap().girth(), Some(5));
        assert!(directed_cycle(1).is_err());
    }

    #[test]
    fn random_tournament_is_tournament_and_deterministic() {
        let a = random_tournament(7, &mut rng(11)).unwrap();
        let b = random_tournament(7, &mut rng(11)).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tournament());
        assert!(a.is_digon_free());
        assert_eq!(a.arc_count(), 21);
    }

    #[test]
    fn random_tournament_triangle_mean() {
        // Each of the C(6,3) = 20 triples is cyclic with probability 1/4.
        let mut r = rng(5);
        let mut total = 0u64;
        let samples = 1000;
        for _ in 0..samples {
            let t = random_tournament(6, &mut r).unwrap();
            total += t
                .induced_cycles()
                .iter()
                .filter(|c| c.len() == 3)
                .count() as u64;
        }
        let mean = total as f64 / samples as f64;
        assert!((mean - 5.0).abs() < 0.5, "mean triangle count {mean}");
    }

    #[test]
    fn random_digraph_extremes() {
        let mut r = rng(3);
        assert_eq!(random_digraph(6, 0.0, &mut r).unwrap().arc_count(), 0);
        let full = random_digraph(6, 1.0, &mut r).unwrap();
        assert_eq!(full.arc_count(), 30);
        assert!(!full.is_digon_free());
        let a = random_digraph(8, 0.3, &mut rng(42)).unwrap();
        let b = random_digraph(8, 0.3, &mut rng(42)).unwrap();
        assert_eq!(a, b);
        assert!(random_digraph(4, 1.5, &mut r).is_err());
    }

    #[test]
    fn oriented_graph_is_digon_free() {
        let d = random_oriented_graph(9, 0.6, &mut rng(7)).unwrap();
        assert!(d.is_digon_free());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tournaments(1).unwrap().count(), 1);
        let n3: Vec<_> = enumerate_tournaments(3).unwrap().collect();
        assert_eq!(n3.len(), 8);
        assert_eq!(
            n3.iter().filter(|t| t.is_strongly_connected()).count(),
            2
        );
        let strong4 = enumerate_tournaments(4)
            .unwrap()
            .filter(|t| t.is_strongly_connected())
            .count();
        assert_eq!(strong4, 24);
        assert!(enumerate_tournaments(7).is_err());
    }

    #[test]
    fn enumeration_yields_tournaments() {
        for t in enumerate_tournaments(4).unwrap() {
            assert!(t.is_tournament());
            assert!(t.is_digon_free());
        }
    }

    #[test]
    fn code_round_trip() {
        for t in enumerate_tournaments(4).unwrap() {
            let code = TournamentCode::encode(&t).unwrap();
            assert_eq!(code.decode(), t);
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c3 = directed_cycle(3).unwrap();
        let relabeled = c3.relabel(&[1, 2, 0]);
        assert!(tournaments_isomorphic(&c3, &relabeled).unwrap());
        let t3 = transitive_tournament(3).unwrap();
        assert!(!tournaments_isomorphic(&t3, &c3).unwrap());
        let d4 = d_tournament(4).unwrap();
        let shuffled = d4.relabel(&[2, 0, 3, 1]);
        assert!(tournaments_isomorphic(&d4, &shuffled).unwrap());
        assert!(tournaments_isomorphic(&directed_cycle(2).unwrap(), &c3).is_err());
    }

    #[test]
    fn s3_d3_c3_pairwise_isomorphic() {
        let fams = [
            s_tournament(3).unwrap(),
            d_tournament(3).unwrap(),
            directed_cycle(3).unwrap(),
        ];
        for a in &fams {
            for b in &fams {
                assert!(tournaments_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn constrained_isomorphism() {
        let d4 = d_tournament(4).unwrap();
        // Identity respects any self-constraint on the special arc.
        assert!(find_isomorphism(&d4, &d4, &[(3, 3), (0, 0)]).is_some());
        // Forcing the special arc onto a transitive pair must fail.
        let t4 = transitive_tournament(4).unwrap();
        assert!(find_isomorphism(&d4, &t4, &[]).is_none());
    }

    #[test]
    fn knn_n2_t2_success_rate() {
        // Exactly 2 of the 16 orientations of K_{2,2} are cyclic, so the
        // per-attempt success probability is 1/8 and 4000 attempts make
        // failure astronomically unlikely.
        let witness = search_knn_orientation(2, 2, 4000, &mut rng(1)).unwrap();
        let w = witness.expect("K_{2,2} witness");
        assert!(knn_orientation_satisfies(&w, 2, 2));
        assert!(!w.is_acyclic(w.full_set()));
    }

    #[test]
    fn knn_all_orientations_n2() {
        // Independent oracle: enumerate all 16 orientations directly.
        let mut cyclic = 0;
        for bits in 0..16u32 {
            let mut d = Digraph::new(4).unwrap();
            let mut idx = 0;
            for i in 0..2 {
                for j in 0..2 {
                    if bits >> idx & 1 == 1 {
                        d.add_arc(i, 2 + j).unwrap();
                    } else {
                        d.add_arc(2 + j, i).unwrap();
                    }
                    idx += 1;
                }
            }
            if knn_orientation_satisfies(&d, 2, 2) {
                cyclic += 1;
            }
        }
        assert_eq!(cyclic, 2);
    }

    #[test]
    fn knn_preconditions() {
        assert!(search_knn_orientation(2, 3, 10, &mut rng(0)).is_err());
        assert!(search_knn_orientation(2, 0, 10, &mut rng(0)).is_err());
        assert!(search_knn_orientation(40, 2, 10, &mut rng(0)).is_err());
    }

    #[test]
    fn multipartite_single_part_is_edgeless() {
        let d = oriented_multipartite(1, 4, 2, 10, &mut rng(0))
            .unwrap()
            .unwrap();
        assert_eq!(d.arc_count(), 0);
        assert_eq!(d.vertex_count(), 4);
    }

    #[test]
    fn multipartite_blocks_verified() {
        // k = 2 with t = part_size = 2 reduces to one K_{2,2} block.
        let d = oriented_multipartite(2, 2, 2, 4000, &mut rng(9))
            .unwrap()
            .expect("block witness");
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.arc_count(), 4);
        assert!(!d.is_acyclic(d.full_set()));
    }
}
