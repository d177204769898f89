use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{CrossingKind, Editor, End, StuckDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "R1_add")]
    R1Add,
    #[serde(rename = "R1_remove")]
    R1Remove,
    #[serde(rename = "R2_add")]
    R2Add,
    #[serde(rename = "R2_remove")]
    R2Remove,
    R3,
    RigidSlide,
    Unstick,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
        MoveKind::RigidSlide,
        MoveKind::Unstick,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Add => "R1_add",
            MoveKind::R1Remove => "R1_remove",
            MoveKind::R2Add => "R2_add",
            MoveKind::R2Remove => "R2_remove",
            MoveKind::R3 => "R3",
            MoveKind::RigidSlide => "RigidSlide",
            MoveKind::Unstick => "Unstick",
        }
    }

    /// Change in crossing count.
    pub fn crossing_delta(self) -> i32 {
        match self {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            _ => 0,
        }
    }
}

/// One local move at a site of a specific diagram.
///
/// Removals, triangle moves and unsticks name their crossings. Additions name
/// darts: a dart `e` runs along the arc from `e` to its partner, and the new
/// crossings go on the face to its right. An `R1_add` with no dart acts on a
/// free loop. `under` says which pass (R1) or which dart's arc (R2) goes under.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossings: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub darts: Vec<End>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub under: Option<u8>,
}

impl Move {
    fn at(kind: MoveKind, crossings: Vec<usize>) -> Move {
        Move { kind, crossings, darts: vec![], under: None }
    }

    fn add(kind: MoveKind, darts: Vec<End>, under: u8) -> Move {
        Move { kind, crossings: vec![], darts, under: Some(under) }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.crossings.is_empty() {
            let cs: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
            write!(f, " c{}", cs.join(","))?;
        }
        if !self.darts.is_empty() {
            let ds: Vec<String> = self.darts.iter().map(|e| format!("{}.{}", e.crossing, e.slot)).collect();
            write!(f, " d{}", ds.join(","))?;
        } else if self.kind == MoveKind::R1Add {
            f.write_str(" loop")?;
        }
        if let Some(u) = self.under {
            write!(f, " under={u}")?;
        }
        Ok(())
    }
}

fn adjacent_loop(d: &StuckDiagram, c: usize) -> bool {
    (0..4).any(|s| {
        let p = d.partner(End::new(c, s));
        p.crossing == c && (p.slot + 4 - s) % 2 == 1
    })
}

/// Bigon faces on two distinct crossings whose arcs are over at both ends
/// and under at both ends. Yields the face's first end and the crossing pair.
pub(crate) fn r2_bigons(d: &StuckDiagram) -> Vec<(End, [usize; 2])> {
    let mut out = Vec::new();
    for face in d.faces() {
        if face.len() != 2 {
            continue;
        }
        let e = face[0];
        let p = d.partner(e);
        if e.crossing == p.crossing || e.slot % 2 != p.slot % 2 {
            continue;
        }
        let mut pair = [e.crossing, p.crossing];
        pair.sort_unstable();
        out.push((*face.iter().min().unwrap(), pair));
    }
    out
}

/// Triangle faces on three distinct crossings, as their three face darts.
fn triangles(d: &StuckDiagram) -> Vec<[End; 3]> {
    d.faces()
        .into_iter()
        .filter(|f| f.len() == 3)
        .filter(|f| {
            let cs: BTreeSet<usize> = f.iter().map(|e| e.crossing).collect();
            cs.len() == 3
        })
        .map(|f| {
            let k = (0..3).min_by_key(|&i| f[i]).unwrap();
            [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
        })
        .collect()
}

/// Whether the arc of face dart `e` is over at both ends or under at both.
fn monotone_edge(d: &StuckDiagram, e: End) -> bool {
    e.slot % 2 == d.partner(e).slot % 2
}

/// The move kind a triangle supports, if any.
fn triangle_kind(d: &StuckDiagram, tri: &[End; 3]) -> Option<MoveKind> {
    let stuck: Vec<usize> = (0..3).filter(|&i| d.kind(tri[i].crossing) == CrossingKind::Stuck).collect();
    match stuck.as_slice() {
        [] => tri.iter().any(|&e| monotone_edge(d, e)).then_some(MoveKind::R3),
        // dart k starts at the stuck vertex; dart k+1 runs along the opposite edge
        [k] => monotone_edge(d, tri[(k + 1) % 3]).then_some(MoveKind::RigidSlide),
        _ => None,
    }
}

pub(crate) fn moves_of_kind(d: &StuckDiagram, kind: MoveKind, max_crossings: usize) -> Vec<Move> {
    let n = d.crossing_count();
    let mut out = Vec::new();
    match kind {
        MoveKind::R1Add => {
            if n < max_crossings {
                for under in [1, 2] {
                    if d.free_loops() > 0 {
                        out.push(Move::add(kind, vec![], under));
                    }
                    for c in 0..n {
                        for s in 0..4 {
                            out.push(Move::add(kind, vec![End::new(c, s)], under));
                        }
                    }
                }
            }
        }
        MoveKind::R1Remove => {
            for c in d.classical_crossings() {
                if adjacent_loop(d, c) {
                    out.push(Move::at(kind, vec![c]));
                }
            }
        }
        MoveKind::R2Add => {
            if n + 2 <= max_crossings {
                for face in d.faces() {
                    for i in 0..face.len() {
                        for j in i + 1..face.len() {
                            let (a, b) = (face[i], face[j]);
                            if d.arc_tail(a) == d.arc_tail(b) {
                                continue;
                            }
                            for under in [1, 2] {
                                out.push(Move::add(kind, vec![a, b], under));
                            }
                        }
                    }
                }
            }
        }
        MoveKind::R2Remove => {
            let mut pairs = BTreeSet::new();
            for (_, pair) in r2_bigons(d) {
                if pair.iter().all(|&c| d.kind(c) == CrossingKind::Classical) {
                    pairs.insert(pair);
                }
            }
            out.extend(pairs.into_iter().map(|p| Move::at(kind, p.to_vec())));
        }
        MoveKind::R3 | MoveKind::RigidSlide => {
            for tri in triangles(d) {
                if triangle_kind(d, &tri) == Some(kind) {
                    let mut cs: Vec<usize> = tri.iter().map(|e| e.crossing).collect();
                    cs.sort_unstable();
                    out.push(Move { kind, crossings: cs, darts: vec![tri[0]], under: None });
                }
            }
        }
        MoveKind::Unstick => {
            out.extend(d.stuck_crossings().into_iter().map(|c| Move::at(kind, vec![c])));
        }
    }
    out
}

/// Every applicable move, sorted. Additions are offered only while the
/// result stays within `max_crossings`.
pub fn available_moves(d: &StuckDiagram, allow_unstick: bool, max_crossings: usize) -> Vec<Move> {
    let mut out: Vec<Move> = MoveKind::ALL
        .iter()
        .filter(|&&k| allow_unstick || k != MoveKind::Unstick)
        .flat_map(|&k| moves_of_kind(d, k, max_crossings))
        .collect();
    out.sort();
    out
}

/// Applies `m` after checking that it is available on `d`.
pub fn apply_move(d: &StuckDiagram, m: &Move) -> Result<StuckDiagram> {
    if !moves_of_kind(d, m.kind, usize::MAX).contains(m) {
        return Err(Error::InapplicableMove(m.to_string()));
    }
    apply_unchecked(d, m)
}

pub(crate) fn apply_unchecked(d: &StuckDiagram, m: &Move) -> Result<StuckDiagram> {
    let under = m.under.unwrap_or(1);
    match m.kind {
        MoveKind::R1Remove | MoveKind::R2Remove => Ok(d.erase_crossings(&m.crossings)),
        MoveKind::Unstick => d.unstick(m.crossings[0]),
        MoveKind::R1Add => match m.darts.first() {
            Some(&e) => Ok(add_kink(d, e, under)),
            None => Ok(kink_free_loop(d, under)),
        },
        MoveKind::R2Add => Ok(add_bigon(d, m.darts[0], m.darts[1], under)),
        MoveKind::R3 | MoveKind::RigidSlide => {
            let f0 = m.darts[0];
            let f1 = d.partner(f0).rotated(1);
            let f2 = d.partner(f1).rotated(1);
            flip_triangle(d, [f0, f1, f2]).map_err(|_| Error::InapplicableMove(m.to_string()))
        }
    }
}

/// Cyclic ends of a kink crossing, `[NE, NW, SW, SE]`, for a strand running
/// west to east along the top with its loop to the south (right side).
fn kink_ends(forward: bool) -> [(u8, bool); 4] {
    if forward {
        [(2, false), (1, true), (2, true), (1, false)]
    } else {
        [(1, true), (2, false), (1, false), (2, true)]
    }
}

fn add_kink(d: &StuckDiagram, p: End, under: u8) -> StuckDiagram {
    let q = d.partner(p);
    let mut ed = Editor::new(d);
    let [ne, nw, sw, se] = ed.add_crossing(CrossingKind::Classical, kink_ends(!d.is_incoming(p)), under);
    ed.connect(p, nw);
    ed.connect(se, sw);
    ed.connect(ne, q);
    ed.finish()
}

fn kink_free_loop(d: &StuckDiagram, under: u8) -> StuckDiagram {
    let mut ed = Editor::new(d);
    ed.free_loops -= 1;
    let [ne, nw, sw, se] = ed.add_crossing(CrossingKind::Classical, kink_ends(true), under);
    ed.connect(ne, nw);
    ed.connect(se, sw);
    ed.finish()
}

/// Pushes a finger of the arc of dart `d1` across the arc of dart `d2`
/// through their common face. Crossing `l` is met first along `d1`.
fn add_bigon(d: &StuckDiagram, d1: End, d2: End, under: u8) -> StuckDiagram {
    let (p1, q1, p2, q2) = (d1, d.partner(d1), d2, d.partner(d2));
    let f1 = !d.is_incoming(p1);
    let f2 = !d.is_incoming(p2);
    let mut ed = Editor::new(d);
    // cyclic order E, N, W, S
    let [le, ln, lw, ls] = ed.add_crossing(CrossingKind::Classical, [(2, f2), (1, f1), (2, !f2), (1, !f1)], under);
    let [re, rn, rw, rs] = ed.add_crossing(CrossingKind::Classical, [(2, f2), (1, !f1), (2, !f2), (1, f1)], under);
    ed.connect(p1, ln);
    ed.connect(ls, rs);
    ed.connect(rn, q1);
    ed.connect(p2, re);
    ed.connect(rw, le);
    ed.connect(lw, q2);
    ed.finish()
}

/// Reverses the order in which each strand of a triangle meets its two
/// crossings. Every crossing keeps its slots.
fn flip_triangle(d: &StuckDiagram, tri: [End; 3]) -> Result<StuckDiagram> {
    let mut ed = Editor::new(d);
    let mut port: HashMap<End, End> = HashMap::new();
    for &xi in &tri {
        let zi = d.partner(xi);
        let (xo, zo) = (xi.through(), zi.through());
        port.insert(xo, zi);
        port.insert(zo, xi);
        ed.connect(zo, xo);
    }
    for (&outer, &new) in &port {
        let ext = d.partner(outer);
        ed.connect(new, port.get(&ext).copied().unwrap_or(ext));
    }
    ed.finish_checked()
}

/// Seeded random walk over non-unstick moves.
pub fn fuzz_sequence(d: &StuckDiagram, length: usize, seed: u64, max_crossings: usize) -> (StuckDiagram, Vec<Move>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut applied = Vec::new();
    for _ in 0..length {
        let moves = available_moves(&cur, false, max_crossings);
        let Some(m) = moves.choose(&mut rng) else { break };
        cur = apply_unchecked(&cur, m).expect("generated moves apply");
        applied.push(m.clone());
    }
    (cur, applied)
}
