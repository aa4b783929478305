//! Planar diagrams of rational-form links: the alternating twist-box
//! template, component tracing, writhe, PD codes, and a brute-force skein
//! evaluator used as an independent oracle for the matrix formula.

mod skein;

use std::fmt::Write as _;

use thiserror::Error;

use crate::fraction::TwistWord;

pub use skein::{skein_kauffman_l, skein_kauffman_l_seeded, MAX_ORACLE_CROSSINGS};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("diagram has {count} crossings, the skein oracle accepts at most {max}")]
    CrossingLimit { count: usize, max: usize },
    #[error("malformed PD code at line {line}: {msg}")]
    PdParse { line: usize, msg: String },
}

/// Where an edge sits in the drawn template. The tags record enough of the
/// embedding to count vertical tangencies and to pick out reference edges
/// for orientation conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Connects consecutive crossings inside twist box `box_idx`, after
    /// crossing `pos`; `upper` distinguishes the two parallel strands.
    Box {
        box_idx: usize,
        pos: usize,
        upper: bool,
    },
    /// Runs along a horizontal rail between two boxes. Rails are numbered 1
    /// (bottom) to 4 (top); index counts segments left to right.
    Rail { rail: u8, index: usize },
    /// West cap joining rails 1 and 2.
    LeftCap,
    /// East cap joining rails 1 and 2 (odd number of boxes).
    RightCap12,
    /// East cap joining rails 2 and 3 (even number of boxes).
    RightCap23,
    /// Arc over rail 4 joining the two ends of rail 3.
    TopArc,
    /// Arc over rail 4 from the west end of rail 3 around to the east end of
    /// rail 1 (even number of boxes).
    BigArc,
    /// Loop under rail 1 joining the two ends of rail 2 (single box).
    BottomLoop,
    /// No embedding information (diagrams read from PD codes).
    Generic,
}

impl EdgeKind {
    /// Vertical tangencies the drawn edge contributes: 1 for a cap, 2 for
    /// an arc that turns around twice.
    pub fn tangencies(&self) -> u32 {
        match self {
            EdgeKind::LeftCap | EdgeKind::RightCap12 | EdgeKind::RightCap23 => 1,
            EdgeKind::TopArc | EdgeKind::BigArc | EdgeKind::BottomLoop => 2,
            _ => 0,
        }
    }
}

/// One crossing; `slots[s]` is the edge attached at slot `s`. Slots are
/// numbered counterclockwise 0 = SW, 1 = SE, 2 = NE, 3 = NW. The strand
/// through slots 1 and 3 (the descending diagonal) is the over strand; a
/// strand entering slot `s` leaves through slot `s + 2 mod 4`.
///
/// Making the descending strand the over one at every crossing is the front
/// projection rule (more negative slope lies over). It is pinned by the
/// requirement that a^writhe * L = 1 on the one-crossing unknot diagram and
/// cross-checked against the matrix formula on every small word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slots: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// The two (crossing, slot) endpoints. For template edges, end 0 is the
    /// geometric west end (for the top and big arcs: the rail-3 end).
    pub ends: [(usize, u8); 2],
    pub kind: EdgeKind,
}

/// An unoriented link diagram: crossings with cyclically ordered slots, and
/// edges joining slot pairs. `free_circles` counts crossing-free unknot
/// components (only the explicit unknot constructor produces any).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    pub edges: Vec<Edge>,
    pub free_circles: usize,
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            edges: Vec::new(),
            free_circles: 1,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sum of vertical tangencies over the drawn edges; 4 for every diagram
    /// built from a twist word, which is what makes the closure two-bridge.
    pub fn vertical_tangencies(&self) -> u32 {
        self.edges.iter().map(|e| e.kind.tangencies()).sum()
    }

    fn assert_consistent(&self) {
        let mut seen = vec![[false; 4]; self.crossings.len()];
        for e in &self.edges {
            for &(c, s) in &e.ends {
                assert!(
                    !seen[c][s as usize],
                    "slot ({c}, {s}) appears on two edges"
                );
                seen[c][s as usize] = true;
            }
        }
        for (c, cr) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                assert!(seen[c][s], "slot ({c}, {s}) not covered by any edge");
                let e = &self.edges[cr.slots[s]];
                assert!(
                    e.ends.contains(&(c, s as u8)),
                    "slot table disagrees with edge ends at ({c}, {s})"
                );
            }
        }
    }
}

/// Builds the template diagram for a twist word: boxes left to right, the
/// odd-numbered boxes (first, third, ...) twisting rails 2 and 3, the
/// even-numbered ones rails 1 and 2, closed off with caps at the sides and
/// an arc over the top. The closure depends on the parity of the number of
/// boxes, matching the two drawn templates.
pub fn build_diagram(word: &TwistWord) -> PlanarDiagram {
    let counts = word.entries();
    let n = counts.len();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0usize;
    for &a in counts {
        offsets.push(total);
        total += a as usize;
    }

    // The four ports of box bi: (crossing, slot) pairs on its two rails.
    let left_lo = |bi: usize| (offsets[bi], 0u8);
    let left_hi = |bi: usize| (offsets[bi], 3u8);
    let right_lo = |bi: usize| (offsets[bi] + counts[bi] as usize - 1, 1u8);
    let right_hi = |bi: usize| (offsets[bi] + counts[bi] as usize - 1, 2u8);
    let lo_rail = |bi: usize| if bi % 2 == 0 { 2u8 } else { 1u8 };

    let mut edges = Vec::new();
    // Strand pairs between consecutive crossings of a box.
    for (bi, &a) in counts.iter().enumerate() {
        for j in 0..(a as usize - 1) {
            let c = offsets[bi] + j;
            edges.push(Edge {
                ends: [(c, 1), (c + 1, 0)],
                kind: EdgeKind::Box {
                    box_idx: bi,
                    pos: j,
                    upper: false,
                },
            });
            edges.push(Edge {
                ends: [(c, 2), (c + 1, 3)],
                kind: EdgeKind::Box {
                    box_idx: bi,
                    pos: j,
                    upper: true,
                },
            });
        }
    }
    // Rail segments between consecutive boxes sharing a rail.
    let mut rail_ports: [Vec<((usize, u8), (usize, u8))>; 3] = Default::default();
    for bi in 0..n {
        let lo = lo_rail(bi);
        rail_ports[(lo - 1) as usize].push((left_lo(bi), right_lo(bi)));
        rail_ports[lo as usize].push((left_hi(bi), right_hi(bi)));
    }
    for (ri, ports) in rail_ports.iter().enumerate() {
        for (k, pair) in ports.windows(2).enumerate() {
            edges.push(Edge {
                ends: [pair[0].1, pair[1].0],
                kind: EdgeKind::Rail {
                    rail: ri as u8 + 1,
                    index: k,
                },
            });
        }
    }
    let rail_first = |r: u8| rail_ports[(r - 1) as usize].first().unwrap().0;
    let rail_last = |r: u8| rail_ports[(r - 1) as usize].last().unwrap().1;

    // Closure: the four tangency-carrying edges.
    if n == 1 {
        edges.push(Edge {
            ends: [rail_first(2), rail_last(2)],
            kind: EdgeKind::BottomLoop,
        });
        edges.push(Edge {
            ends: [rail_first(3), rail_last(3)],
            kind: EdgeKind::TopArc,
        });
    } else if n % 2 == 1 {
        edges.push(Edge {
            ends: [rail_first(1), rail_first(2)],
            kind: EdgeKind::LeftCap,
        });
        edges.push(Edge {
            ends: [rail_last(1), rail_last(2)],
            kind: EdgeKind::RightCap12,
        });
        edges.push(Edge {
            ends: [rail_first(3), rail_last(3)],
            kind: EdgeKind::TopArc,
        });
    } else {
        edges.push(Edge {
            ends: [rail_first(1), rail_first(2)],
            kind: EdgeKind::LeftCap,
        });
        edges.push(Edge {
            ends: [rail_last(2), rail_last(3)],
            kind: EdgeKind::RightCap23,
        });
        edges.push(Edge {
            ends: [rail_first(3), rail_last(1)],
            kind: EdgeKind::BigArc,
        });
    }

    let mut crossings = vec![
        Crossing {
            slots: [usize::MAX; 4]
        };
        total
    ];
    for (eid, e) in edges.iter().enumerate() {
        for &(c, s) in &e.ends {
            crossings[c].slots[s as usize] = eid;
        }
    }
    let d = PlanarDiagram {
        crossings,
        edges,
        free_circles: 0,
    };
    d.assert_consistent();
    debug_assert_eq!(d.vertical_tangencies(), 4);
    d
}

/// Direction choice for the second component of a two-component closure.
/// The first component (the one through the top or big arc) is always
/// directed along rail 4 west to east.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LinkOrientation {
    /// Direct the second component along its reference edge (the lowest,
    /// leftmost rail segment it owns, or its first box strand) west to east.
    #[default]
    TemplateLeftToRight,
    TemplateRightToLeft,
}

/// A diagram with every edge directed and assigned to a component.
#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    pub diagram: PlanarDiagram,
    /// True when the edge is traversed from `ends[0]` to `ends[1]`.
    pub edge_direction: Vec<bool>,
    pub edge_component: Vec<usize>,
    /// Edge ids in traversal order over all components; PD edge numbers
    /// follow this order.
    pub edge_order: Vec<usize>,
    pub num_components: usize,
}

/// Ranks candidate starting edges for components after the first: rail
/// segments bottom-to-top and left-to-right, then box strands, then
/// anything else by id. The winner's `ends[0]` is the west end, so forward
/// traversal is the template's left-to-right direction.
fn component_start_rank(eid: usize, e: &Edge) -> (u8, usize, usize, usize) {
    match e.kind {
        EdgeKind::Rail { rail, index } => (0, rail as usize, index, eid),
        EdgeKind::Box {
            box_idx,
            pos,
            upper,
        } => (1, box_idx, pos * 2 + upper as usize, eid),
        _ => (2, 0, 0, eid),
    }
}

pub fn orient(d: &PlanarDiagram) -> OrientedDiagram {
    orient_with(d, LinkOrientation::default())
}

pub fn orient_with(d: &PlanarDiagram, orientation: LinkOrientation) -> OrientedDiagram {
    let ne = d.edges.len();
    let mut direction = vec![true; ne];
    let mut component = vec![usize::MAX; ne];
    let mut order = Vec::with_capacity(ne);
    let mut comp = 0usize;
    while order.len() < ne {
        // First component: through the top or big arc, directed so rail 4 is
        // walked west to east (its end 0 sits on rail 3's west end).
        let start = if comp == 0 {
            d.edges
                .iter()
                .position(|e| matches!(e.kind, EdgeKind::TopArc | EdgeKind::BigArc))
                .unwrap_or(0)
        } else {
            (0..ne)
                .filter(|&eid| component[eid] == usize::MAX)
                .min_by_key(|&eid| component_start_rank(eid, &d.edges[eid]))
                .unwrap()
        };
        let forward = comp == 0 || orientation == LinkOrientation::TemplateLeftToRight;
        let mut eid = start;
        let mut fwd = forward;
        loop {
            component[eid] = comp;
            direction[eid] = fwd;
            order.push(eid);
            let arrive = d.edges[eid].ends[fwd as usize];
            let exit = (arrive.0, (arrive.1 + 2) % 4);
            let next = d.crossings[exit.0].slots[exit.1 as usize];
            let next_fwd = d.edges[next].ends[0] == exit;
            if next == start && next_fwd == forward {
                break;
            }
            debug_assert_eq!(component[next], usize::MAX, "walk re-entered an edge");
            eid = next;
            fwd = next_fwd;
        }
        comp += 1;
    }
    let od = OrientedDiagram {
        diagram: d.clone(),
        edge_direction: direction,
        edge_component: component,
        edge_order: order,
        num_components: comp + d.free_circles,
    };
    debug_assert!(od.degrees_consistent());
    od
}

impl OrientedDiagram {
    /// Slot at which each crossing's strands enter: `(under, over)` with
    /// under in {0, 2} and over in {1, 3}.
    fn incoming_slots(&self, c: usize) -> (u8, u8) {
        let mut under = None;
        let mut over = None;
        for s in 0..4u8 {
            let eid = self.diagram.crossings[c].slots[s as usize];
            let e = &self.diagram.edges[eid];
            let arrive = e.ends[self.edge_direction[eid] as usize];
            if arrive == (c, s) {
                if s % 2 == 0 {
                    under = Some(s);
                } else {
                    over = Some(s);
                }
            }
        }
        (
            under.expect("no incoming under strand"),
            over.expect("no incoming over strand"),
        )
    }

    fn degrees_consistent(&self) -> bool {
        (0..self.diagram.crossings.len()).all(|c| {
            let (u, o) = self.incoming_slots(c);
            u % 2 == 0 && o % 2 == 1
        })
    }

    /// Sign of crossing `c` under the right-hand convention.
    pub fn crossing_sign(&self, c: usize) -> i64 {
        let (u, o) = self.incoming_slots(c);
        // Rotating the under direction counterclockwise onto the over
        // direction: positive exactly when the over strand enters one slot
        // clockwise of the under entry.
        if (o + 4 - u) % 4 == 3 {
            1
        } else {
            -1
        }
    }

    /// True when both strands of crossing `c` belong to one component.
    pub fn is_self_crossing(&self, c: usize) -> bool {
        let (u, o) = self.incoming_slots(c);
        let under_edge = self.diagram.crossings[c].slots[u as usize];
        let over_edge = self.diagram.crossings[c].slots[o as usize];
        self.edge_component[under_edge] == self.edge_component[over_edge]
    }
}

/// Sum of crossing signs.
pub fn writhe(od: &OrientedDiagram) -> i64 {
    (0..od.diagram.crossings.len())
        .map(|c| od.crossing_sign(c))
        .sum()
}

/// Sum of signs over self-crossings only; this is what the kink relations
/// leave behind when a descending diagram is pulled apart.
pub fn self_writhe(od: &OrientedDiagram) -> i64 {
    (0..od.diagram.crossings.len())
        .filter(|&c| od.is_self_crossing(c))
        .map(|c| od.crossing_sign(c))
        .sum()
}

/// Flips every crossing by rotating its slots one step, which swaps the
/// over and under strands everywhere: the mirror image.
pub fn mirror_diagram(d: &PlanarDiagram) -> PlanarDiagram {
    let mut out = d.clone();
    for c in out.crossings.iter_mut() {
        c.slots = [c.slots[1], c.slots[2], c.slots[3], c.slots[0]];
    }
    for e in out.edges.iter_mut() {
        for end in e.ends.iter_mut() {
            end.1 = (end.1 + 3) % 4;
        }
    }
    out.assert_consistent();
    out
}

/// PD code: one `X(i,j,k,l)` line per crossing, edges numbered 1.. in
/// traversal order, listing each crossing's edges counterclockwise from the
/// incoming under strand.
pub fn pd_code(od: &OrientedDiagram) -> String {
    let mut number = vec![0usize; od.diagram.edges.len()];
    for (i, &eid) in od.edge_order.iter().enumerate() {
        number[eid] = i + 1;
    }
    let mut out = String::new();
    for c in 0..od.diagram.crossings.len() {
        let (u, _) = od.incoming_slots(c);
        let e = |s: u8| number[od.diagram.crossings[c].slots[(s % 4) as usize]];
        writeln!(out, "X({},{},{},{})", e(u), e(u + 1), e(u + 2), e(u + 3)).unwrap();
    }
    out
}

/// Parses a PD code: `X(i,j,k,l)` lines, one per crossing, each edge label
/// appearing exactly twice. The first listed edge of a crossing is taken as
/// its incoming under strand, so the under diagonal is slots {0, 2}.
pub fn from_pd_code(text: &str) -> Result<PlanarDiagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut labels: Vec<[usize; 4]> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| DiagramError::PdParse {
            line: ln + 1,
            msg: msg.to_string(),
        };
        let body = line
            .strip_prefix("X(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err("expected X(i,j,k,l)"))?;
        let nums: Result<Vec<usize>, _> = body.split(',').map(|p| p.trim().parse()).collect();
        let nums = nums.map_err(|_| err("expected four integers"))?;
        if nums.len() != 4 {
            return Err(err("expected four integers"));
        }
        labels.push([nums[0], nums[1], nums[2], nums[3]]);
        crossings.push(Crossing {
            slots: [usize::MAX; 4],
        });
    }
    let mut by_label: std::collections::BTreeMap<usize, Vec<(usize, u8)>> = Default::default();
    for (c, l) in labels.iter().enumerate() {
        for (s, &lab) in l.iter().enumerate() {
            by_label.entry(lab).or_default().push((c, s as u8));
        }
    }
    let mut edges = Vec::new();
    for (lab, ends) in by_label {
        if ends.len() != 2 {
            return Err(DiagramError::PdParse {
                line: 0,
                msg: format!("edge label {lab} appears {} times, expected 2", ends.len()),
            });
        }
        edges.push(Edge {
            ends: [ends[0], ends[1]],
            kind: EdgeKind::Generic,
        });
    }
    for (eid, e) in edges.iter().enumerate() {
        for &(c, s) in &e.ends {
            crossings[c].slots[s as usize] = eid;
        }
    }
    let d = PlanarDiagram {
        crossings,
        edges,
        free_circles: 0,
    };
    d.assert_consistent();
    Ok(d)
}
