//! Skein-relation evaluator for the unframed Kauffman polynomial L.
//!
//! Works directly on a diagram with the three-term relation
//! L+ + L- = x (L0 + Linf), splitting at the first crossing a fixed walk
//! enters on its under strand. Switching that crossing makes the walk pass
//! it descending, so the number of bad crossings drops and the recursion
//! terminates at descending diagrams, whose value is
//! delta^(components - 1) * a^(-self writhe). Kinks are pushed into
//! a^(+-1) factors and closed circles into delta factors as soon as they
//! appear, with states memoized on their crossing-slot incidence code.
//!
//! All of this is independent of the transfer-matrix formula, so agreement
//! between the two is a strong check on both.

use std::collections::{BTreeMap, HashMap};

use super::{orient, Crossing, DiagramError, Edge, EdgeKind, PlanarDiagram};
use crate::kauffman::delta;
use crate::laurent::LaurentPoly2;

/// Largest diagram the oracle accepts; the state space grows fast enough
/// that anything bigger deserves the matrix formula instead.
pub const MAX_ORACLE_CROSSINGS: usize = 14;

#[derive(Clone, PartialEq, Eq)]
struct State {
    /// Live crossings, slot -> edge id; slots as in `Crossing`.
    crossings: BTreeMap<u32, [u32; 4]>,
    /// Live edges, endpoints sorted; splices keep the smaller id.
    edges: BTreeMap<u32, [(u32, u8); 2]>,
}

/// Fixed traversal preferences, chosen once per top-level call. Keeping
/// them fixed across the whole recursion matters: a switched crossing is
/// then revisited by the identical walk and seen as good, which is the
/// termination argument.
struct WalkPolicy {
    rank: Vec<u32>,
    flip: Vec<bool>,
}

impl WalkPolicy {
    fn descending_ids(n: usize) -> Self {
        WalkPolicy {
            rank: (0..n as u32).collect(),
            flip: vec![false; n],
        }
    }

    fn shuffled(n: usize, seed: u64) -> Self {
        let mut s = seed;
        let mut rank: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = (splitmix64(&mut s) % (i as u64 + 1)) as usize;
            rank.swap(i, j);
        }
        let flip = (0..n).map(|_| splitmix64(&mut s) & 1 == 1).collect();
        WalkPolicy { rank, flip }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn sorted(mut ends: [(u32, u8); 2]) -> [(u32, u8); 2] {
    if ends[1] < ends[0] {
        ends.swap(0, 1);
    }
    ends
}

impl State {
    fn from_diagram(d: &PlanarDiagram) -> Self {
        let crossings = d
            .crossings
            .iter()
            .enumerate()
            .map(|(c, cr)| (c as u32, cr.slots.map(|e| e as u32)))
            .collect();
        let edges = d
            .edges
            .iter()
            .enumerate()
            .map(|(eid, e)| {
                (
                    eid as u32,
                    sorted(e.ends.map(|(c, s)| (c as u32, s))),
                )
            })
            .collect();
        State { crossings, edges }
    }

    fn far(&self, eid: u32, from: (u32, u8)) -> (u32, u8) {
        let ends = self.edges[&eid];
        if ends[0] == from {
            ends[1]
        } else {
            ends[0]
        }
    }

    /// Joins the strands at slots `s0`, `s1` of `c`, as the smoothing or
    /// kink removal that erases the crossing requires. Returns 1 when the
    /// joined strand closes into a free circle.
    fn splice(&mut self, c: u32, s0: u8, s1: u8) -> usize {
        let e0 = self.crossings[&c][s0 as usize];
        let e1 = self.crossings[&c][s1 as usize];
        if e0 == e1 {
            self.edges.remove(&e0);
            return 1;
        }
        let keep = e0.min(e1);
        let drop = e0.max(e1);
        let far0 = self.far(e0, (c, s0));
        let far1 = self.far(e1, (c, s1));
        self.edges.remove(&drop);
        self.edges.insert(keep, sorted([far0, far1]));
        for end in [far0, far1] {
            self.crossings.get_mut(&end.0).unwrap()[end.1 as usize] = keep;
        }
        0
    }

    /// Removes adjacent-slot loops (kinks, collecting a^(+-1) into the
    /// exponent) and the circles they close off, until none remain.
    fn simplify(&mut self) -> (i64, usize) {
        let mut a_exp = 0i64;
        let mut circles = 0usize;
        loop {
            let kink = self.edges.iter().find_map(|(&eid, &ends)| {
                let (c0, s0) = ends[0];
                let (c1, s1) = ends[1];
                if c0 != c1 {
                    return None;
                }
                // Sorted slot pairs: (0,1) and (2,3) are loops on the under
                // diagonal's side, positive kinks; (1,2) and (0,3) negative.
                match (s0, s1) {
                    (0, 1) | (2, 3) => Some((eid, c0, s0, s1, -1)),
                    (1, 2) | (0, 3) => Some((eid, c0, s0, s1, 1)),
                    _ => None,
                }
            });
            let Some((eid, c, s0, s1, exp)) = kink else {
                break;
            };
            a_exp += exp;
            self.edges.remove(&eid);
            let rest: Vec<u8> = (0..4).filter(|s| *s != s0 && *s != s1).collect();
            circles += self.splice(c, rest[0], rest[1]);
            self.crossings.remove(&c);
        }
        (a_exp, circles)
    }

    /// Erases crossing `c` joining the strands sideways (`slots` gives the
    /// two splice pairs). Returns circles closed.
    fn smooth(&mut self, c: u32, pairs: [(u8, u8); 2]) -> usize {
        let mut circles = 0;
        for (s0, s1) in pairs {
            circles += self.splice(c, s0, s1);
        }
        self.crossings.remove(&c);
        circles
    }

    /// Swaps over and under strands at `c` by rotating its slots one step
    /// counterclockwise; the physical diagram is otherwise unchanged.
    fn switch(&mut self, c: u32) {
        let old = self.crossings[&c];
        let mut eids = old.to_vec();
        eids.dedup();
        for eid in eids {
            let ends = self.edges[&eid];
            let moved = ends.map(|(cc, s)| if cc == c { (cc, (s + 3) % 4) } else { (cc, s) });
            self.edges.insert(eid, sorted(moved));
        }
        self.crossings
            .insert(c, [old[1], old[2], old[3], old[0]]);
    }

    /// First crossing the policy walk enters on its under strand, or None
    /// when the diagram is descending for this walk.
    fn first_bad(&self, policy: &WalkPolicy) -> Option<u32> {
        let mut visited_edges: BTreeMap<u32, ()> = BTreeMap::new();
        let mut visited_crossings: BTreeMap<u32, ()> = BTreeMap::new();
        while visited_edges.len() < self.edges.len() {
            let &start = self
                .edges
                .keys()
                .filter(|eid| !visited_edges.contains_key(eid))
                .min_by_key(|&&eid| policy.rank[eid as usize])
                .unwrap();
            let start_dir = if policy.flip[start as usize] { 0 } else { 1 };
            let (mut eid, mut dir) = (start, start_dir);
            loop {
                visited_edges.insert(eid, ());
                let arrive = self.edges[&eid][dir];
                if !visited_crossings.contains_key(&arrive.0) {
                    visited_crossings.insert(arrive.0, ());
                    if arrive.1 % 2 == 0 {
                        return Some(arrive.0);
                    }
                }
                let exit = (arrive.0, (arrive.1 + 2) % 4);
                let next = self.crossings[&exit.0][exit.1 as usize];
                let next_dir = usize::from(self.edges[&next][0] == exit);
                if (next, next_dir) == (start, start_dir) {
                    break;
                }
                (eid, dir) = (next, next_dir);
            }
        }
        None
    }

    /// Incidence code invariant under relabeling a crossing's strands
    /// (rotating slots by two), the only slot freedom left once the over
    /// diagonal is pinned to {1, 3}.
    fn canonical(&self) -> Vec<[u32; 4]> {
        let mut code: Vec<[u32; 4]> = self
            .crossings
            .values()
            .map(|&s| {
                let rot = [s[2], s[3], s[0], s[1]];
                if rot < s {
                    rot
                } else {
                    s
                }
            })
            .collect();
        code.sort_unstable();
        code
    }

    /// Rebuilds a `PlanarDiagram` (dense ids, generic edges) so the
    /// orientation and writhe machinery can run on a terminal state.
    fn to_diagram(&self) -> PlanarDiagram {
        let cid: BTreeMap<u32, usize> = self
            .crossings
            .keys()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut crossings = vec![
            Crossing {
                slots: [usize::MAX; 4]
            };
            cid.len()
        ];
        let mut edges = Vec::with_capacity(self.edges.len());
        for (eid, (_, &ends)) in self.edges.iter().enumerate() {
            let mapped = ends.map(|(c, s)| (cid[&c], s));
            for &(c, s) in &mapped {
                crossings[c].slots[s as usize] = eid;
            }
            edges.push(Edge {
                ends: mapped,
                kind: EdgeKind::Generic,
            });
        }
        PlanarDiagram {
            crossings,
            edges,
            free_circles: 0,
        }
    }
}

type Memo = HashMap<Vec<[u32; 4]>, LaurentPoly2>;

/// Value of a descending diagram: components pulled apart at the expense
/// of one negative kink per unit of self writhe.
fn descending_value(state: &State) -> LaurentPoly2 {
    let od = orient(&state.to_diagram());
    let ncomp = od.num_components;
    debug_assert!(ncomp >= 1);
    delta()
        .pow(ncomp as u32 - 1)
        .mul_monomial(1, -super::self_writhe(&od), 0)
}

fn eval_diagram(
    mut state: State,
    extra_circles: usize,
    memo: &mut Memo,
    policy: &WalkPolicy,
) -> LaurentPoly2 {
    let (a_exp, circ) = state.simplify();
    let circles = circ + extra_circles;
    if state.crossings.is_empty() {
        debug_assert!(circles >= 1, "evaluated an empty diagram");
        return delta().pow(circles as u32 - 1).mul_monomial(1, a_exp, 0);
    }
    let core = eval_core(state, memo, policy);
    core.mul_monomial(1, a_exp, 0) * delta().pow(circles as u32)
}

fn eval_core(state: State, memo: &mut Memo, policy: &WalkPolicy) -> LaurentPoly2 {
    let key = state.canonical();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let value = match state.first_bad(policy) {
        None => descending_value(&state),
        Some(c) => {
            let mut s0 = state.clone();
            let circ0 = s0.smooth(c, [(0, 1), (2, 3)]);
            let mut sinf = state.clone();
            let circinf = sinf.smooth(c, [(1, 2), (3, 0)]);
            let mut ssw = state.clone();
            ssw.switch(c);
            let l0 = eval_diagram(s0, circ0, memo, policy);
            let linf = eval_diagram(sinf, circinf, memo, policy);
            let lsw = eval_diagram(ssw, 0, memo, policy);
            (l0 + linf).mul_monomial(1, 0, 1) - lsw
        }
    };
    memo.insert(key, value.clone());
    value
}

fn run(d: &PlanarDiagram, policy: WalkPolicy) -> Result<LaurentPoly2, DiagramError> {
    if d.crossing_count() > MAX_ORACLE_CROSSINGS {
        return Err(DiagramError::CrossingLimit {
            count: d.crossing_count(),
            max: MAX_ORACLE_CROSSINGS,
        });
    }
    let mut memo = Memo::new();
    Ok(eval_diagram(
        State::from_diagram(d),
        d.free_circles,
        &mut memo,
        &policy,
    ))
}

/// Kauffman L of the diagram by direct skein resolution, refusing
/// diagrams with more than `MAX_ORACLE_CROSSINGS` crossings.
pub fn skein_kauffman_l(d: &PlanarDiagram) -> Result<LaurentPoly2, DiagramError> {
    run(d, WalkPolicy::descending_ids(d.edges.len()))
}

/// Same value computed with a seeded random walk order; agreement with
/// `skein_kauffman_l` across seeds exercises the claim that the result
/// does not depend on the resolution order.
pub fn skein_kauffman_l_seeded(d: &PlanarDiagram, seed: u64) -> Result<LaurentPoly2, DiagramError> {
    run(d, WalkPolicy::shuffled(d.edges.len(), seed))
}

#[cfg(test)]
mod tests {
    use super::super::{build_diagram, mirror_diagram};
    use super::*;
    use crate::fraction::TwistWord;
    use crate::kauffman::l_polynomial;

    fn l_of(entries: &[i64]) -> LaurentPoly2 {
        let w = TwistWord::new(entries.to_vec()).unwrap();
        skein_kauffman_l(&build_diagram(&w)).unwrap()
    }

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms)
    }

    #[test]
    fn unknot_diagram() {
        assert_eq!(
            skein_kauffman_l(&PlanarDiagram::unknot()).unwrap(),
            LaurentPoly2::one()
        );
    }

    #[test]
    fn one_and_two_twists() {
        assert_eq!(l_of(&[1]), p(&[(1, -1, 0)]));
        assert_eq!(
            l_of(&[2]),
            p(&[(1, 1, 1), (-1, 1, -1), (1, -1, 1), (-1, -1, -1), (1, 0, 0)])
        );
    }

    #[test]
    fn trefoil_diagram() {
        assert_eq!(
            l_of(&[3]),
            p(&[
                (-2, -1, 0),
                (1, -1, 2),
                (1, 0, 1),
                (-1, 1, 0),
                (1, 1, 2),
                (1, 2, 1)
            ])
        );
    }

    #[test]
    fn two_two_diagram() {
        assert_eq!(
            l_of(&[2, 2]),
            p(&[(1, -1, 1), (1, 0, 2), (-1, 0, 0), (1, 1, 1), (1, 2, 2), (-2, 2, 0)])
        );
    }

    #[test]
    fn split_closures_reduce_to_units() {
        assert_eq!(l_of(&[1, 1]), delta());
        assert_eq!(l_of(&[2, 1]), p(&[(1, -1, 0)]));
        assert_eq!(l_of(&[1, 2]), p(&[(1, -1, 0)]));
    }

    #[test]
    fn matches_matrix_formula_on_small_words() {
        let mut words = Vec::new();
        for sum in 1..=6i64 {
            compositions(sum, &mut Vec::new(), &mut words);
        }
        for entries in words {
            let w = TwistWord::new(entries.clone()).unwrap();
            assert_eq!(
                skein_kauffman_l(&build_diagram(&w)).unwrap(),
                l_polynomial(&w),
                "word ({w})"
            );
        }
    }

    fn compositions(rest: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for part in 1..=rest {
            prefix.push(part);
            compositions(rest - part, prefix, out);
            prefix.pop();
        }
    }

    #[test]
    fn mirror_inverts_a() {
        for entries in [vec![3], vec![2, 2], vec![2, 1, 2], vec![2, 2, 3]] {
            let w = TwistWord::new(entries).unwrap();
            let d = build_diagram(&w);
            assert_eq!(
                skein_kauffman_l(&mirror_diagram(&d)).unwrap(),
                skein_kauffman_l(&d).unwrap().substitute_a_inverse(),
                "word ({w})"
            );
        }
    }

    #[test]
    fn independent_of_walk_order() {
        for entries in [vec![2, 2, 3], vec![2, 1, 2], vec![4, 3]] {
            let w = TwistWord::new(entries).unwrap();
            let d = build_diagram(&w);
            let reference = skein_kauffman_l(&d).unwrap();
            for seed in 0..5 {
                assert_eq!(
                    skein_kauffman_l_seeded(&d, seed).unwrap(),
                    reference,
                    "word ({w}), seed {seed}"
                );
            }
        }
    }

    #[test]
    fn rejects_oversized_diagrams() {
        let w = TwistWord::new(vec![15]).unwrap();
        assert!(matches!(
            skein_kauffman_l(&build_diagram(&w)),
            Err(DiagramError::CrossingLimit { count: 15, max: 14 })
        ));
    }
}
